#include "cointerval/chaincat/context.hpp"

#include "cointerval/error.hpp"

namespace cointerval::chaincat {

ChainContext::ChainContext(Ring ring, std::size_t max_deg, long coeff_box, std::size_t cap)
    : ring_(std::move(ring)), max_deg_(max_deg), box_(coeff_box), cap_(cap) {
  if (coeff_box < 0) throw ConfigError("coefficient box must be non-negative");
  if (cap == 0) throw ConfigError("enumeration cap must be positive");
}

ChainContext::Colimit ChainContext::coproduct(const Object& X, const Object& Y) const {
  Coproduct c = coproduct_complexes(X, Y);
  return Colimit{c.object, c.in1, c.in2};
}

ChainContext::Colimit ChainContext::pushout(const Morphism& f, const Morphism& g) const {
  Pushout p = pushout_complexes(f, g);
  return Colimit{p.object, p.in_f, p.in_g};
}

ChainContext::Enumeration ChainContext::enumerate(const Object& X, const Object& Y) const {
  MapEnumeration e = enumerate_chain_maps(X, Y, box_, cap_);
  Enumeration out;
  out.exhaustive = e.exhaustive;
  out.coverage = {{"solution_rank", e.solution_rank},
                  {"coefficient_box", box_},
                  {"enumerated", e.maps.size()},
                  {"capped", e.capped},
                  {"exhaustive", e.exhaustive}};
  out.items = std::move(e.maps);
  return out;
}

nlohmann::json ChainContext::to_json(const Morphism& f) const { return map_to_json(f); }
nlohmann::json ChainContext::to_json(const Object& X) const { return complex_to_json(X); }

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

nlohmann::json complex_to_json(const ChainComplex& X) {
  nlohmann::json d = nlohmann::json::array();
  for (std::size_t n = 1; n < X.length(); ++n) d.push_back(matrix_to_json(X.d(n)));
  return {{"ring", X.ring().tag()}, {"ranks", X.ranks()}, {"differentials", d}};
}

nlohmann::json map_to_json(const ChainMap& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t n = 0; n < f.length(); ++n) comps.push_back(matrix_to_json(f.component(n)));
  return {{"source_ranks", f.source().ranks()},
          {"target_ranks", f.target().ranks()},
          {"components", comps}};
}

namespace {

// Accepts either a bare list of rows or {"rows", "cols", "entries"}.
Matrix matrix_from_json(const nlohmann::json& j, const Ring& ring, std::size_t rows,
                        std::size_t cols) {
  const nlohmann::json& e = j.is_object() ? j.at("entries") : j;
  if (!e.is_array()) throw ConfigError("matrix must be a list of rows");
  if (e.size() != rows)
    throw DimensionMismatch("matrix has " + std::to_string(e.size()) + " rows, expected " +
                            std::to_string(rows));
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : e) {
    if (!r.is_array() || r.size() != cols)
      throw DimensionMismatch("matrix row has wrong length, expected " + std::to_string(cols));
    std::vector<Scalar> row;
    for (const auto& v : r) {
      if (v.is_number_integer())
        row.emplace_back(v.get<long>());
      else if (v.is_string())
        row.emplace_back(v.get<std::string>());
      else
        throw ConfigError("matrix entries must be integers or rational strings");
    }
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(ring, cols, out);
}

}  // namespace

ChainComplex complex_from_json(const nlohmann::json& j, const Ring& ring) {
  std::vector<std::size_t> ranks = j.at("ranks").get<std::vector<std::size_t>>();
  std::vector<Matrix> d;
  if (j.contains("differentials")) {
    const auto& ds = j.at("differentials");
    for (std::size_t k = 0; k < ds.size(); ++k) {
      auto rk = [&](std::size_t n) { return n < ranks.size() ? ranks[n] : 0; };
      d.push_back(matrix_from_json(ds[k], ring, rk(k), rk(k + 1)));
    }
  }
  return ChainComplex(ring, ranks, d);
}

ChainMap map_from_json(const nlohmann::json& j, const ChainComplex& source,
                       const ChainComplex& target) {
  const nlohmann::json& comps = j.is_object() ? j.at("components") : j;
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < comps.size(); ++n)
    out.push_back(
        matrix_from_json(comps[n], source.ring(), target.rank(n), source.rank(n)));
  return ChainMap(source, target, out);
}

}  // namespace cointerval::chaincat
