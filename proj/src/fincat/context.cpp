#include "cointerval/fincat/context.hpp"

#include "cointerval/error.hpp"

namespace cointerval::fincat {

FinContext::FinContext(Limits limits, std::size_t enumeration_cap)
    : limits_(limits),
      cap_(enumeration_cap),
      unit_(terminal_category()),
      cache_(std::make_shared<Cache>()) {
  if (limits.depth_bound == 0) throw ConfigError("depth bound must be positive");
  if (limits.normal_form_cap == 0 || enumeration_cap == 0) throw ConfigError("caps must be positive");
}

FinContext::Object FinContext::tensor(const Object& X, const Object& Y) const {
  const auto key = std::make_pair(X->structural_hash(), Y->structural_hash());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [lo, hi] = cache_->products.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      // Factors match by identity: structurally equal categories may differ in
      // whether they are themselves products, which associators rely on.
      if (it->second[0] == X && it->second[1] == Y) return it->second[2];
  }
  CatPtr P = product(X, Y, limits_);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->products.emplace(key, std::array<CatPtr, 3>{X, Y, P});
  return P;
}

FinContext::Morphism FinContext::tensor(const Morphism& f, const Morphism& g) const {
  return product_map(f, g, tensor(f.source(), g.source()), tensor(f.target(), g.target()));
}

FinContext::Morphism FinContext::alpha(const Object& X, const Object& Y, const Object& Z) const {
  return associator(tensor(tensor(X, Y), Z), tensor(X, tensor(Y, Z)));
}

FinContext::Morphism FinContext::alpha_inv(const Object& X, const Object& Y,
                                           const Object& Z) const {
  return inverse_relabelling(alpha(X, Y, Z));
}

FinContext::Colimit FinContext::coproduct(const Object& X, const Object& Y) const {
  Cospan c = fincat::coproduct(X, Y);
  return Colimit{c.object, c.in_f, c.in_g};
}

FinContext::Colimit FinContext::pushout(const Morphism& f, const Morphism& g) const {
  Cospan c = fincat::pushout(f, g, limits_);
  return Colimit{c.object, c.in_f, c.in_g};
}

FinContext::Enumeration FinContext::enumerate(const Object& X, const Object& Y) const {
  Enumeration out;
  try {
    out.items = enumerate_functors(X, Y, cap_);
    out.exhaustive = true;
  } catch (const CapExceeded&) {
    out.items.clear();
  }
  out.coverage = {{"enumerated", out.items.size()},
                  {"cap", cap_},
                  {"exhaustive", out.exhaustive}};
  return out;
}

nlohmann::json FinContext::to_json(const Object& X) const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : X->generators())
    gens.push_back({{"name", g.name}, {"src", X->objects()[g.src]}, {"tgt", X->objects()[g.tgt]}});
  nlohmann::json rules = nlohmann::json::array();
  for (const Rule& r : X->rewriting().rules()) {
    const int s = X->generators()[r.lhs.front()].src;
    const int t = X->generators()[r.lhs.back()].tgt;
    rules.push_back({X->describe(Path{s, t, r.lhs}), X->describe(Path{s, t, r.rhs})});
  }
  nlohmann::json j = {{"name", X->name()},
                      {"objects", X->objects()},
                      {"generators", gens},
                      {"rules", rules}};
  if (X->finite()) j["morphisms"] = X->morphisms().size();
  return j;
}

nlohmann::json FinContext::to_json(const Morphism& f) const {
  const CatPtr& S = f.source();
  const CatPtr& T = f.target();
  nlohmann::json obj = nlohmann::json::object();
  for (int x = 0; x < int(S->objects().size()); ++x)
    obj[S->objects()[x]] = T->objects()[f.object(x)];
  nlohmann::json gens = nlohmann::json::object();
  for (int g = 0; g < int(S->generators().size()); ++g)
    gens[S->generators()[g].name] = T->describe(f.generator(g));
  return {{"source", S->name()}, {"target", T->name()}, {"objects", obj}, {"generators", gens}};
}

}  // namespace cointerval::fincat
