#pragma once

#include "cointerval/cocat/checks.hpp"

namespace cointerval::cocat {

/// Cells over B (x) I for cells phi : B (x) I -> A. A square here is a map
/// (B (x) I) (x) I -> A; its s-coordinate is the inner I, its t-coordinate
/// the outer one. vcomp over B (x) I composes squares along t.
template <MonoidalContext Ctx>
class Squares : public Cells<Ctx> {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;
  using Cells<Ctx>::c;
  using Cells<Ctx>::t;
  using Cells<Ctx>::id;
  using Cells<Ctx>::eq;
  using Cells<Ctx>::I;

  Squares(const Ctx& ctx, const Interval<Ctx>& interval, Object B)
      : Cells<Ctx>(ctx, interval), B_(std::move(B)), BI_(ctx.tensor(B_, interval.C1)) {}

  const Object& B() const { return B_; }
  const Object& BI() const { return BI_; }

  /// (b, x, y) -> phi(b, x meet y).
  Morphism flat(const Morphism& phi) const { return through(phi, lattice(this->interval().meet)); }
  /// (b, x, y) -> phi(b, x join y).
  Morphism sharp(const Morphism& phi) const { return through(phi, lattice(this->interval().join)); }
  /// (b, x, y) -> phi(b, y).
  Morphism natural(const Morphism& phi) const {
    const auto& I_ = this->interval();
    return c(phi, t(this->ctx().rho(B_), id(I())), t(t(id(B_), I_.i), id(I())));
  }

  /// 1_f => psi o phi along t; s-faces phi and psi o phi.
  Morphism theta(const Morphism& phi, const Morphism& psi) const {
    return this->vcomp(BI_, natural(phi), flat(psi));
  }
  /// phi => 1_h along t; s-faces psi o phi and psi.
  Morphism upsilon(const Morphism& phi, const Morphism& psi) const {
    return this->vcomp(BI_, sharp(phi), natural(psi));
  }

  /// Exchanges the s- and t-coordinates.
  Morphism swap() const {
    if (!swap_)
      swap_ = c(this->to_left(B_, I(), I()), t(id(B_), this->ctx().tau(I(), I())),
                this->to_right(B_, I(), I()));
    return *swap_;
  }
  /// theta1 then theta2 along s.
  Morphism comp_s(const Morphism& theta1, const Morphism& theta2) const {
    const Morphism S = swap();
    return c(this->vcomp(BI_, c(theta1, S), c(theta2, S)), S);
  }

  /// Restriction of a square to s = t_ (a cell along t).
  Morphism s_face(const Morphism& sq, const Morphism& t_) const {
    return c(sq, t(t(id(B_), t_), id(I())), t(this->ctx().rho_inv(B_), id(I())));
  }
  /// Restriction of a square to t = t_ (a cell along s).
  Morphism t_face(const Morphism& sq, const Morphism& t_) const {
    return c(sq, t(id(BI_), t_), this->ctx().rho_inv(BI_));
  }

  /// Phi: a square to its four edges (left, right, top, bottom) =
  /// (s = bot, s = top, t = bot, t = top).
  std::array<Morphism, 4> edges(const Morphism& sq) const {
    const auto& I_ = this->interval();
    return {s_face(sq, I_.bot), s_face(sq, I_.top), t_face(sq, I_.bot), t_face(sq, I_.top)};
  }
  /// Psi: the square with edges (left, right, top, bottom) when
  /// bottom o left = right o top.
  Morphism fill(const Morphism& left, const Morphism& right, const Morphism& top,
                const Morphism& bottom) const {
    return comp_s(theta(left, bottom), upsilon(top, right));
  }

 private:
  const Morphism& lattice(const std::optional<Morphism>& op) const {
    if (!op) throw MissingLattice(this->interval().name + " carries no meet and join");
    return *op;
  }
  Morphism through(const Morphism& phi, const Morphism& op) const {
    return c(phi, t(id(B_), op), this->to_right(B_, I(), I()));
  }

  Object B_, BI_;
  mutable std::optional<Morphism> swap_;
};

/// The theta/upsilon unit laws, both cocycle conditions and the mixed
/// square identity over every composable configuration drawn from `cells`
/// (all cells B (x) I -> A), up to `max_instances` per identity.
template <MonoidalContext Ctx>
CheckReport check_cocycle(const Ctx& ctx, const Interval<Ctx>& I, const typename Ctx::Object& B,
                          const std::vector<typename Ctx::Morphism>& cells,
                          std::size_t max_instances = 20000) {
  using Morphism = typename Ctx::Morphism;
  Squares<Ctx> sq(ctx, I, B);
  CheckReport r("cocycle");
  std::vector<Morphism> dom, cod;
  sq.guard(r, "faces", [&] {
    for (const auto& x : cells) {
      dom.push_back(sq.dom(B, x));
      cod.push_back(sq.cod(B, x));
    }
  });
  if (dom.size() != cells.size()) return r;
  const std::size_t n = cells.size();
  auto after = [&](std::size_t a, std::size_t b) { return sq.eq(cod[a], dom[b]); };
  auto vc = [&](std::size_t a, std::size_t b) { return sq.vcomp(B, cells[a], cells[b]); };
  nlohmann::json counts;

  auto run = [&](const std::string& name, const std::function<void(std::size_t&, bool&)>& body) {
    std::size_t count = 0;
    bool stopped = false;
    sq.guard(r, name, [&] {
      body(count, stopped);
      if (r.find(name) == nullptr) {
        if (stopped)
          r.inconclusive(name, "instance budget reached");
        else
          r.pass(name);
      }
    });
    counts[name] = count;
  };
  auto check = [&](const std::string& name, std::size_t& count, const Morphism& lhs,
                   const Morphism& rhs) {
    ++count;
    if (sq.eq(lhs, rhs)) return true;
    r.fail(name, sq.witness(lhs, rhs));
    return false;
  };

  run("theta-unit", [&](std::size_t& count, bool&) {
    for (std::size_t a = 0; a < n; ++a)
      if (!check("theta-unit", count, sq.theta(cells[a], sq.identity(B, cod[a])),
                 sq.natural(cells[a])))
        return;
  });
  run("upsilon-unit", [&](std::size_t& count, bool&) {
    for (std::size_t a = 0; a < n; ++a)
      if (!check("upsilon-unit", count, sq.upsilon(sq.identity(B, dom[a]), cells[a]),
                 sq.natural(cells[a])))
        return;
  });
  // Triples phi, psi, chi with cod phi = dom psi and cod psi = dom chi.
  auto triples = [&](const std::string& name, std::size_t& count, bool& stopped, auto&& f) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!after(a, b)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (!after(b, d)) continue;
          if (count >= max_instances) {
            stopped = true;
            return;
          }
          if (!f(a, b, d)) return;
        }
      }
    (void)name;
  };
  run("theta-cocycle", [&](std::size_t& count, bool& stopped) {
    triples("theta-cocycle", count, stopped, [&](std::size_t a, std::size_t b, std::size_t d) {
      const auto ba = vc(a, b);
      const auto lhs = sq.comp_s(sq.theta(cells[a], cells[b]), sq.theta(ba, cells[d]));
      return check("theta-cocycle", count, lhs, sq.theta(cells[a], vc(b, d)));
    });
  });
  run("upsilon-cocycle", [&](std::size_t& count, bool& stopped) {
    triples("upsilon-cocycle", count, stopped, [&](std::size_t a, std::size_t b, std::size_t d) {
      const auto lhs = sq.comp_s(sq.upsilon(cells[a], vc(b, d)), sq.upsilon(cells[b], cells[d]));
      return check("upsilon-cocycle", count, lhs, sq.upsilon(vc(a, b), cells[d]));
    });
  });
  // Grids: phi, delta, gamma, psi with delta o phi = psi o gamma, and
  // delta' with chi, gamma' such that delta' o psi = chi o gamma'.
  run("cocycle-square", [&](std::size_t& count, bool& stopped) {
    std::vector<std::vector<std::size_t>> next(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (after(a, b)) next[a].push_back(b);
    // Composites keyed by pair, reused across the search.
    std::map<std::pair<std::size_t, std::size_t>, Morphism> comp;
    auto composite = [&](std::size_t a, std::size_t b) -> const Morphism& {
      auto it = comp.find({a, b});
      if (it == comp.end()) it = comp.emplace(std::make_pair(a, b), vc(a, b)).first;
      return it->second;
    };
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t p : next[g])
        for (std::size_t f = 0; f < n; ++f) {
          if (!sq.eq(dom[f], dom[g])) continue;
          for (std::size_t d : next[f]) {
            if (!sq.eq(composite(f, d), composite(g, p))) continue;
            for (std::size_t d2 : next[p])
              for (std::size_t g2 = 0; g2 < n; ++g2) {
                if (!sq.eq(dom[g2], dom[p])) continue;
                for (std::size_t x : next[g2]) {
                  if (!sq.eq(composite(p, d2), composite(g2, x))) continue;
                  if (count >= max_instances) {
                    stopped = true;
                    return;
                  }
                  const auto lhs = sq.comp_s(sq.theta(composite(f, d), cells[d2]),
                                             sq.upsilon(cells[g], composite(g2, x)));
                  const auto rhs = sq.comp_s(sq.upsilon(cells[g], cells[p]),
                                             sq.theta(cells[p], cells[d2]));
                  if (!check("cocycle-square", count, lhs, rhs)) return;
                }
              }
          }
        }
  });
  r.info()["cells"] = n;
  r.info()["instances"] = counts;
  return r;
}

/// Round trip of edges/fill: every commuting square of `cells` is recovered
/// from its filler, and every square in `squares` from its edges.
template <MonoidalContext Ctx>
CheckReport check_phi_psi(const Ctx& ctx, const Interval<Ctx>& I, const typename Ctx::Object& B,
                          const std::vector<typename Ctx::Morphism>& cells,
                          const std::vector<typename Ctx::Morphism>& squares,
                          bool squares_exhaustive) {
  Squares<Ctx> sq(ctx, I, B);
  CheckReport r("phi-psi");
  std::size_t commuting = 0;
  sq.guard(r, "phi-after-psi", [&] {
    const std::size_t n = cells.size();
    std::vector<typename Ctx::Morphism> dom, cod;
    for (const auto& x : cells) {
      dom.push_back(sq.dom(B, x));
      cod.push_back(sq.cod(B, x));
    }
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t b = 0; b < n; ++b) {
        if (!sq.eq(cod[l], dom[b])) continue;
        for (std::size_t tp = 0; tp < n; ++tp) {
          if (!sq.eq(dom[tp], dom[l])) continue;
          for (std::size_t rt = 0; rt < n; ++rt) {
            if (!sq.eq(dom[rt], cod[tp]) || !sq.eq(cod[rt], cod[b])) continue;
            if (!sq.eq(sq.vcomp(B, cells[l], cells[b]), sq.vcomp(B, cells[tp], cells[rt])))
              continue;
            ++commuting;
            const auto e = sq.edges(sq.fill(cells[l], cells[rt], cells[tp], cells[b]));
            const std::array<typename Ctx::Morphism, 4> want{cells[l], cells[rt], cells[tp],
                                                             cells[b]};
            for (std::size_t k = 0; k < 4; ++k)
              if (!sq.eq(e[k], want[k])) {
                r.fail("phi-after-psi", {{"edge", k}, {"got", ctx.to_json(e[k])},
                                         {"expected", ctx.to_json(want[k])}});
                return;
              }
          }
        }
      }
    r.pass("phi-after-psi");
  });
  sq.guard(r, "psi-after-phi", [&] {
    for (const auto& s : squares) {
      const auto e = sq.edges(s);
      const auto back = sq.fill(e[0], e[1], e[2], e[3]);
      if (!sq.eq(back, s)) {
        r.fail("psi-after-phi", sq.witness(back, s));
        return;
      }
    }
    if (squares_exhaustive)
      r.pass("psi-after-phi");
    else
      r.inconclusive("psi-after-phi", "square enumeration is not exhaustive");
  });
  r.info()["cells"] = cells.size();
  r.info()["commuting_squares"] = commuting;
  r.info()["squares"] = squares.size();
  return r;
}

}  // namespace cointerval::cocat
