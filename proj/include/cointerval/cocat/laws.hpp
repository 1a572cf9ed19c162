#pragma once

#include "cointerval/cocat/algebra.hpp"

namespace cointerval::cocat {

/// Unit and associativity of vcomp and the interchange law, over every
/// composable configuration of `cells` (cells A (x) I -> A, so that
/// horizontal composites stay in the same family).
template <MonoidalContext Ctx>
CheckReport check_two_category(const Ctx& ctx, const Interval<Ctx>& I,
                               const typename Ctx::Object& A,
                               const std::vector<typename Ctx::Morphism>& cells) {
  using Morphism = typename Ctx::Morphism;
  Cells<Ctx> a(ctx, I);
  CheckReport r("two-category");
  const std::size_t n = cells.size();
  std::vector<Morphism> dom, cod;
  std::size_t units = 0, triples = 0, grids = 0;
  a.guard(r, "faces", [&] {
    for (const auto& c : cells) {
      dom.push_back(a.dom(A, c));
      cod.push_back(a.cod(A, c));
    }
  });
  if (dom.size() != n) return r;
  auto first_failure = [&](const std::string& name, const auto& body) {
    a.guard(r, name, [&] {
      if (body()) r.pass(name);
    });
  };
  auto same = [&](const std::string& name, const Morphism& lhs, const Morphism& rhs) {
    if (a.eq(lhs, rhs)) return true;
    r.fail(name, a.witness(lhs, rhs));
    return false;
  };
  first_failure("unit", [&] {
    for (std::size_t x = 0; x < n; ++x, ++units)
      if (!same("unit", a.vcomp(A, cells[x], a.identity(A, cod[x])), cells[x]) ||
          !same("unit", a.vcomp(A, a.identity(A, dom[x]), cells[x]), cells[x]))
        return false;
    return true;
  });
  first_failure("associativity", [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!a.eq(cod[x], dom[y])) continue;
        const Morphism xy = a.vcomp(A, cells[x], cells[y]);
        for (std::size_t z = 0; z < n; ++z) {
          if (!a.eq(cod[y], dom[z])) continue;
          ++triples;
          if (!same("associativity", a.vcomp(A, xy, cells[z]),
                    a.vcomp(A, cells[x], a.vcomp(A, cells[y], cells[z]))))
            return false;
        }
      }
    return true;
  });
  first_failure("interchange", [&] {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!a.eq(cod[x], dom[y])) continue;
        const Morphism xy = a.vcomp(A, cells[x], cells[y]);
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v) {
            if (!a.eq(cod[u], dom[v])) continue;
            ++grids;
            const Morphism lhs = a.hcomp(A, xy, a.vcomp(A, cells[u], cells[v]));
            const Morphism rhs =
                a.vcomp(A, a.hcomp(A, cells[x], cells[u]), a.hcomp(A, cells[y], cells[v]));
            if (!same("interchange", lhs, rhs)) return false;
          }
      }
    return true;
  });
  r.info()["cells"] = n;
  r.info()["unit_instances"] = units;
  r.info()["associativity_instances"] = triples;
  r.info()["interchange_instances"] = grids;
  return r;
}

}  // namespace cointerval::cocat
