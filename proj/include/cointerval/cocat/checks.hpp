#pragma once

#include <map>

#include "cointerval/cocat/algebra.hpp"

namespace cointerval::cocat {

/// The five axiom groups. C2 is compared with the context's own pushout of
/// (top, bot) through mutually inverse comparison maps; C3 is that pushout
/// of (up, down) with legs (Down, Up).
template <MonoidalContext Ctx>
CheckReport check_cocategory(const Ctx& ctx, const Cocategory<Ctx>& C) {
  Algebra<Ctx> a(ctx);
  CheckReport r("cocategory");
  const auto id0 = a.id(C.C0), id1 = a.id(C.C1), id2 = a.id(C.C2);

  a.guard(r, "pushout/commutes", [&] {
    a.expect_eq(r, "pushout/commutes", a.c(C.down, C.top), a.c(C.up, C.bot));
  });
  a.guard(r, "pushout/comparison", [&] {
    const auto P = ctx.pushout(C.top, C.bot);
    const auto to_C2 = a.pair(P.object, P.in_f, P.in_g, C.down, C.up);
    const auto from_C2 = a.pair(C.C2, C.down, C.up, P.in_f, P.in_g);
    a.expect_eq(r, "pushout/comparison", a.c(to_C2, from_C2), id2);
    a.expect_eq(r, "pushout/comparison-inverse", a.c(from_C2, to_C2), a.id(P.object));
  });
  a.guard(r, "coidentity/bot", [&] { a.expect_eq(r, "coidentity/bot", a.c(C.i, C.bot), id0); });
  a.guard(r, "coidentity/top", [&] { a.expect_eq(r, "coidentity/top", a.c(C.i, C.top), id0); });
  a.guard(r, "star/bot", [&] { a.expect_eq(r, "star/bot", a.c(C.star, C.bot), a.c(C.down, C.bot)); });
  a.guard(r, "star/top", [&] { a.expect_eq(r, "star/top", a.c(C.star, C.top), a.c(C.up, C.top)); });
  a.guard(r, "counit/left", [&] {
    const auto k = a.pair(C.C2, C.down, C.up, a.c(C.bot, C.i), id1);
    a.expect_eq(r, "counit/left", a.c(k, C.star), id1);
  });
  a.guard(r, "counit/right", [&] {
    const auto k = a.pair(C.C2, C.down, C.up, id1, a.c(C.top, C.i));
    a.expect_eq(r, "counit/right", a.c(k, C.star), id1);
  });
  a.guard(r, "coassociativity", [&] {
    const auto P3 = ctx.pushout(C.up, C.down);
    const auto& Dn = P3.in_f;
    const auto& Up = P3.in_g;
    const auto lhs = a.pair(C.C2, C.down, C.up, a.c(Dn, C.down), a.c(Up, C.star));
    const auto rhs = a.pair(C.C2, C.down, C.up, a.c(Dn, C.star), a.c(Up, C.up));
    a.expect_eq(r, "coassociativity", a.c(lhs, C.star), a.c(rhs, C.star));
  });
  return r;
}

/// check_cocategory plus C0 = U.
template <MonoidalContext Ctx>
CheckReport check_interval(const Ctx& ctx, const Interval<Ctx>& I) {
  CheckReport r = check_cocategory<Ctx>(ctx, I);
  r.expect("interval/unit", ctx.same_object(I.C0, ctx.unit()), {{"C0", "not the tensor unit"}});
  return r;
}

template <MonoidalContext Ctx>
CheckReport check_cogroupoid(const Ctx& ctx, const Cocategory<Ctx>& C,
                             const typename Ctx::Morphism& sigma) {
  Algebra<Ctx> a(ctx);
  CheckReport r("cogroupoid");
  const auto id1 = a.id(C.C1);
  a.guard(r, "sigma/bot", [&] { a.expect_eq(r, "sigma/bot", a.c(sigma, C.bot), C.top); });
  a.guard(r, "sigma/top", [&] { a.expect_eq(r, "sigma/top", a.c(sigma, C.top), C.bot); });
  a.guard(r, "coinverse/left", [&] {
    const auto k = a.pair(C.C2, C.down, C.up, sigma, id1);
    a.expect_eq(r, "coinverse/left", a.c(k, C.star), a.c(C.top, C.i));
  });
  a.guard(r, "coinverse/right", [&] {
    const auto k = a.pair(C.C2, C.down, C.up, id1, sigma);
    a.expect_eq(r, "coinverse/right", a.c(k, C.star), a.c(C.bot, C.i));
  });
  return r;
}

template <MonoidalContext Ctx>
struct Comonoid {
  typename Ctx::Morphism delta, counit;
};

/// Counit and coassociativity of (G, counit, delta).
template <MonoidalContext Ctx>
CheckReport check_comonoid(const Ctx& ctx, const typename Ctx::Object& G, const Comonoid<Ctx>& m) {
  Algebra<Ctx> a(ctx);
  CheckReport r("comonoid");
  const auto idG = a.id(G);
  a.guard(r, "counit/left", [&] {
    a.expect_eq(r, "counit/left", a.c(ctx.lambda(G), a.t(m.counit, idG), m.delta), idG);
  });
  a.guard(r, "counit/right", [&] {
    a.expect_eq(r, "counit/right", a.c(ctx.rho(G), a.t(idG, m.counit), m.delta), idG);
  });
  a.guard(r, "coassociativity", [&] {
    a.expect_eq(r, "coassociativity", a.c(a.to_right(G, G, G), a.t(m.delta, idG), m.delta),
                a.c(a.t(idG, m.delta), m.delta));
  });
  return r;
}

/// (Delta, i) from the cocategory structure, with its comonoid check.
template <MonoidalContext Ctx>
std::pair<Comonoid<Ctx>, CheckReport> comonoid_of(const Ctx& ctx, const Interval<Ctx>& I) {
  Cells<Ctx> cells(ctx, I);
  Comonoid<Ctx> m{cells.delta(), I.i};
  return {m, check_comonoid<Ctx>(ctx, I.C1, m)};
}

/// The diagonal comonoid on H (x) H: ((x1 x2)(y1 y2)) -> ((x1 y1)(x2 y2)).
template <MonoidalContext Ctx>
typename Ctx::Morphism interchange(const Ctx& ctx, const typename Ctx::Object& H) {
  Algebra<Ctx> a(ctx);
  const auto HH = a.t(H, H);
  const auto idH = a.id(H);
  return a.c(a.to_left(H, H, HH), a.t(idH, a.to_right(H, H, H)),
             a.t(idH, a.t(ctx.tau(H, H), idH)), a.t(idH, a.to_left(H, H, H)),
             a.to_right(H, H, HH));
}

/// Monoid laws, commutativity, the comonoid laws, and that the multiplication
/// and unit are comonoid homomorphisms (H (x) H carries the interchanged
/// diagonal comonoid, U the trivial one).
template <MonoidalContext Ctx>
CheckReport check_hopf(const Ctx& ctx, const typename Ctx::Object& H,
                       const typename Ctx::Morphism& mult, const typename Ctx::Morphism& unit,
                       const Comonoid<Ctx>& co) {
  Algebra<Ctx> a(ctx);
  CheckReport r("hopf");
  const auto idH = a.id(H);
  const auto U = ctx.unit();
  a.guard(r, "monoid/unit-right", [&] {
    a.expect_eq(r, "monoid/unit-right", a.c(mult, a.t(idH, unit), ctx.rho_inv(H)), idH);
  });
  a.guard(r, "monoid/unit-left", [&] {
    a.expect_eq(r, "monoid/unit-left", a.c(mult, a.t(unit, idH), ctx.lambda_inv(H)), idH);
  });
  a.guard(r, "monoid/associativity", [&] {
    a.expect_eq(r, "monoid/associativity", a.c(mult, a.t(mult, idH)),
                a.c(mult, a.t(idH, mult), a.to_right(H, H, H)));
  });
  a.guard(r, "monoid/commutativity", [&] {
    a.expect_eq(r, "monoid/commutativity", a.c(mult, ctx.tau(H, H)), mult);
  });
  r.merge(check_comonoid<Ctx>(ctx, H, co), "comonoid");
  a.guard(r, "mult/delta", [&] {
    const auto dHH = a.c(interchange<Ctx>(ctx, H), a.t(co.delta, co.delta));
    a.expect_eq(r, "mult/delta", a.c(co.delta, mult), a.c(a.t(mult, mult), dHH));
  });
  a.guard(r, "mult/counit", [&] {
    a.expect_eq(r, "mult/counit", a.c(co.counit, mult),
                a.c(ctx.lambda(U), a.t(co.counit, co.counit)));
  });
  a.guard(r, "unit/delta", [&] {
    a.expect_eq(r, "unit/delta", a.c(co.delta, unit), a.c(a.t(unit, unit), ctx.lambda_inv(U)));
  });
  a.guard(r, "unit/counit", [&] { a.expect_eq(r, "unit/counit", a.c(co.counit, unit), a.id(U)); });
  return r;
}

/// The lattice diagrams for I's meet and join over the comonoid (Delta, i),
/// the unit laws, and the four boundary conditions on meet and join.
template <MonoidalContext Ctx>
CheckReport check_lattice(const Ctx& ctx, const Interval<Ctx>& I) {
  if (!I.meet || !I.join) throw MissingLattice(I.name + " carries no meet and join");
  Cells<Ctx> a(ctx, I);
  CheckReport r("lattice");
  const auto& L = I.C1;
  const auto idL = a.id(L);
  const auto& meet = *I.meet;
  const auto& join = *I.join;
  const auto U = ctx.unit();
  const auto eps = I.i;
  struct Op {
    std::string name;
    const typename Ctx::Morphism& op;
  };
  const Op ops[2] = {{"meet", meet}, {"join", join}};

  std::optional<typename Ctx::Morphism> delta;
  a.guard(r, "delta", [&] { delta = a.delta(); });
  for (const Op& o : ops) {
    a.guard(r, o.name + "/associativity", [&] {
      a.expect_eq(r, o.name + "/associativity", a.c(o.op, a.t(o.op, idL)),
                  a.c(o.op, a.t(idL, o.op), a.to_right(L, L, L)));
    });
    a.guard(r, o.name + "/commutativity", [&] {
      a.expect_eq(r, o.name + "/commutativity", a.c(o.op, ctx.tau(L, L)), o.op);
    });
    if (delta)
      a.guard(r, o.name + "/idempotent", [&] {
        a.expect_eq(r, o.name + "/idempotent", a.c(o.op, *delta), idL);
      });
  }
  // join o Delta = [join o (bot (x) I) o l^-1, join o (I (x) top) o r^-1] o star
  //              = [1, top o i] o star = 1, one equation per step.
  a.guard(r, "idempotent-chain/step1", [&] {
    const auto left = a.c(join, a.t(I.bot, idL), ctx.lambda_inv(L));
    const auto right = a.c(join, a.t(idL, I.top), ctx.rho_inv(L));
    a.expect_eq(r, "idempotent-chain/step1", a.c(join, a.delta()),
                a.c(a.pair(I.C2, I.down, I.up, left, right), I.star));
    a.expect_eq(r, "idempotent-chain/step2-left", left, idL);
    a.expect_eq(r, "idempotent-chain/step2-right", right, a.c(I.top, I.i));
    a.expect_eq(r, "idempotent-chain/step3",
                a.c(a.pair(I.C2, I.down, I.up, idL, a.c(I.top, I.i)), I.star), idL);
  });
  if (delta) {
    const std::pair<const Op*, const Op*> absorb[2] = {{&ops[1], &ops[0]}, {&ops[0], &ops[1]}};
    for (auto [club, diamond] : absorb) {
      const std::string name = "absorption/" + diamond->name + "-" + club->name;
      a.guard(r, name, [&] {
        a.expect_eq(r, name,
                    a.c(diamond->op, a.t(idL, club->op), a.to_right(L, L, L), a.t(*delta, idL)),
                    a.c(ctx.rho(L), a.t(idL, eps)));
      });
    }
    for (auto [club, diamond] : absorb) {
      const std::string name = "distributivity/" + diamond->name + "-over-" + club->name;
      a.guard(r, name, [&] {
        const auto LL = a.t(L, L);
        const auto lhs = a.c(diamond->op, a.t(idL, club->op));
        const auto rhs = a.c(club->op, a.t(diamond->op, diamond->op), a.to_right(LL, L, L),
                             a.t(ctx.tau(L, LL), idL), a.t(a.to_right(L, L, L), idL),
                             a.to_left(LL, L, L), a.t(*delta, a.id(LL)));
        a.expect_eq(r, name, lhs, rhs);
      });
    }
  }
  const std::pair<const Op*, typename Ctx::Morphism> units[2] = {{&ops[0], I.top},
                                                                  {&ops[1], I.bot}};
  for (const auto& [o, u] : units) {
    a.guard(r, o->name + "/unit-left", [&] {
      a.expect_eq(r, o->name + "/unit-left", a.c(o->op, a.t(u, idL), ctx.lambda_inv(L)), idL);
    });
    a.guard(r, o->name + "/unit-right", [&] {
      a.expect_eq(r, o->name + "/unit-right", a.c(o->op, a.t(idL, u), ctx.rho_inv(L)), idL);
    });
  }
  const std::pair<const Op*, typename Ctx::Morphism> absorbing[2] = {{&ops[0], I.bot},
                                                                      {&ops[1], I.top}};
  for (const auto& [o, t] : absorbing) {
    a.guard(r, o->name + "/absorbing-left", [&] {
      a.expect_eq(r, o->name + "/absorbing-left", a.c(o->op, a.t(t, idL)),
                  a.c(t, eps, ctx.lambda(L)));
    });
    a.guard(r, o->name + "/absorbing-right", [&] {
      a.expect_eq(r, o->name + "/absorbing-right", a.c(o->op, a.t(idL, t)),
                  a.c(t, eps, ctx.rho(L)));
    });
  }
  // meet and meet o tau are cells bot o i => 1; join and join o tau are 1 => top o i.
  const auto bot_i = a.c(I.bot, I.i), top_i = a.c(I.top, I.i);
  auto cell = [&](const std::string& name, const auto& eta, const auto& from, const auto& to) {
    a.guard(r, name, [&] {
      a.expect_eq(r, name + "/domain", a.dom(L, eta), from);
      a.expect_eq(r, name + "/codomain", a.cod(L, eta), to);
    });
  };
  cell("boundary/meet", meet, bot_i, idL);
  cell("boundary/meet-tau", a.c(meet, ctx.tau(L, L)), bot_i, idL);
  cell("boundary/join", join, idL, top_i);
  cell("boundary/join-tau", a.c(join, ctx.tau(L, L)), idL, top_i);
  (void)U;
  return r;
}

/// A family of squares B (x) (I (x) I) -> A to probe for injective boundaries.
template <MonoidalContext Ctx>
struct SquareFamily {
  std::string label;
  typename Ctx::Object B;
  std::vector<typename Ctx::Morphism> squares;
  bool exhaustive = false;
  nlohmann::json coverage;
};

/// Every square B (x) (I (x) I) -> A the context can enumerate.
template <MonoidalContext Ctx>
SquareFamily<Ctx> all_squares(const Ctx& ctx, const Interval<Ctx>& I, const std::string& label,
                              const typename Ctx::Object& B, const typename Ctx::Object& A) {
  auto e = ctx.enumerate(ctx.tensor(B, ctx.tensor(I.C1, I.C1)), A);
  return SquareFamily<Ctx>{label, B, std::move(e.items), e.exhaustive, e.coverage};
}

/// Fails with the first pair of distinct squares sharing a boundary; a
/// family that was not enumerated exhaustively leaves the check inconclusive.
template <MonoidalContext Ctx>
CheckReport check_injective_boundaries(const Ctx& ctx, const Interval<Ctx>& I,
                                       const std::vector<SquareFamily<Ctx>>& families) {
  Algebra<Ctx> a(ctx);
  CheckReport r("injective-boundaries");
  nlohmann::json coverage = nlohmann::json::array();
  for (const auto& fam : families) {
    const std::string name = "family/" + fam.label;
    nlohmann::json cov = {{"label", fam.label}, {"squares", fam.squares.size()},
                          {"exhaustive", fam.exhaustive}};
    if (!fam.coverage.is_null()) cov["enumeration"] = fam.coverage;
    coverage.push_back(cov);
    a.guard(r, name, [&] {
      std::map<std::string, std::size_t> seen;
      for (std::size_t k = 0; k < fam.squares.size(); ++k) {
        const auto bd = boundary<Ctx>(ctx, I, fam.B, fam.squares[k]);
        nlohmann::json key = nlohmann::json::array();
        for (const auto& e : bd) key.push_back(ctx.to_json(e));
        auto [it, fresh] = seen.emplace(key.dump(), k);
        if (fresh) continue;
        const auto& other = fam.squares[it->second];
        if (a.eq(other, fam.squares[k])) continue;
        // Re-verify the witness edge by edge before reporting it.
        const auto bo = boundary<Ctx>(ctx, I, fam.B, other);
        bool same = true;
        for (std::size_t e = 0; e < 4; ++e) same = same && a.eq(bo[e], bd[e]);
        if (!same) continue;
        r.fail(name, {{"square_1", ctx.to_json(other)},
                      {"square_2", ctx.to_json(fam.squares[k])},
                      {"shared_boundary", key}},
               "distinct squares with equal boundaries");
        return;
      }
      if (fam.exhaustive)
        r.pass(name, "no two squares share a boundary");
      else
        r.inconclusive(name, "family is not exhaustive; no witness among the probes");
    });
  }
  r.info()["coverage"] = coverage;
  return r;
}

/// Every enumerated m : I (x) I -> I whose boundaries make m and m o tau
/// cells bot o i => 1 equals the meet; dually for 1 => top o i and the join.
/// Bounded evidence: inconclusive when the enumeration is not exhaustive.
template <MonoidalContext Ctx>
CheckReport check_lattice_uniqueness(const Ctx& ctx, const Interval<Ctx>& I) {
  if (!I.meet || !I.join) throw MissingLattice(I.name + " carries no meet and join");
  Cells<Ctx> a(ctx, I);
  CheckReport r("lattice-unique");
  const auto& L = I.C1;
  const auto idL = ctx.id(L), tau = ctx.tau(L, L);
  const auto bot_i = a.c(I.bot, I.i), top_i = a.c(I.top, I.i);
  const auto pool = ctx.enumerate(ctx.tensor(L, L), L);
  std::size_t meets = 0, joins = 0;
  auto is_cell = [&](const auto& m, const auto& from, const auto& to) {
    return a.eq(a.dom(L, m), from) && a.eq(a.cod(L, m), to);
  };
  a.guard(r, "solutions", [&] {
    std::optional<nlohmann::json> meet_bad, join_bad;
    for (const auto& m : pool.items) {
      const auto mt = a.c(m, tau);
      if (is_cell(m, bot_i, idL) && is_cell(mt, bot_i, idL)) {
        ++meets;
        if (!meet_bad && !a.eq(m, *I.meet)) meet_bad = a.witness(m, *I.meet);
      }
      if (is_cell(m, idL, top_i) && is_cell(mt, idL, top_i)) {
        ++joins;
        if (!join_bad && !a.eq(m, *I.join)) join_bad = a.witness(m, *I.join);
      }
    }
    const std::pair<const char*, std::optional<nlohmann::json>*> verdicts[2] = {
        {"meet", &meet_bad}, {"join", &join_bad}};
    for (const auto& [k, bad] : verdicts) {
      if (*bad)
        r.fail(k, **bad, "a second solution of the boundary conditions");
      else if (pool.exhaustive)
        r.pass(k, "unique among all maps");
      else
        r.inconclusive(k, "enumeration not exhaustive; no second solution among the probes");
    }
  });
  r.info()["candidates"] = pool.items.size();
  r.info()["meet_solutions"] = meets;
  r.info()["join_solutions"] = joins;
  return r;
}

/// Meet/join boundary conditions plus injective boundaries over `families`.
template <MonoidalContext Ctx>
CheckReport check_representable(const Ctx& ctx, const Interval<Ctx>& I,
                                const std::vector<SquareFamily<Ctx>>& families) {
  CheckReport r("representable");
  if (!I.meet || !I.join) {
    r.inconclusive("lattice", "no meet and join supplied");
  } else {
    CheckReport lat = check_lattice<Ctx>(ctx, I);
    for (const auto& item : lat.items())
      if (item.name.rfind("boundary/", 0) == 0) r.add(item);
  }
  r.merge(check_injective_boundaries<Ctx>(ctx, I, families), "injective-boundaries");
  const Status s = r.status();
  r.info()["verdict"] = s == Status::Pass   ? "representable (bounded evidence)"
                        : s == Status::Fail ? "not representable"
                                            : "inconclusive";
  return r;
}

}  // namespace cointerval::cocat
