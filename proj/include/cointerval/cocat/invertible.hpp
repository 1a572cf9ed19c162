#pragma once

#include "cointerval/cocat/checks.hpp"
#include "cointerval/cocat/examples.hpp"

namespace cointerval::cocat {

/// Outcome of a bounded existence search: found, ruled out exhaustively, or
/// neither.
enum class Found { Yes, No, Unknown };

inline nlohmann::json to_json(Found f) {
  return f == Found::Yes ? nlohmann::json(true) : f == Found::No ? nlohmann::json(false)
                                                                  : nlohmann::json();
}

namespace detail {

inline Found settle(bool found, bool exhaustive) {
  return found ? Found::Yes : exhaustive ? Found::No : Found::Unknown;
}

inline void record(CheckReport& r, const std::string& name, Found f, const std::string& what) {
  if (f == Found::Unknown)
    r.inconclusive(name, "search space not exhausted: " + what);
  else
    r.pass(name, (f == Found::Yes ? "holds: " : "fails: ") + what);
}

}  // namespace detail

/// Some sigma among `I.sigma` and all maps I -> I passing check_cogroupoid.
template <MonoidalContext Ctx>
std::pair<Found, std::optional<typename Ctx::Morphism>> find_coinverse(const Ctx& ctx,
                                                                       const Interval<Ctx>& I) {
  std::vector<typename Ctx::Morphism> cands;
  if (I.sigma) cands.push_back(*I.sigma);
  auto e = ctx.enumerate(I.C1, I.C1);
  cands.insert(cands.end(), e.items.begin(), e.items.end());
  for (const auto& s : cands)
    if (check_cogroupoid<Ctx>(ctx, I, s).passed()) return {Found::Yes, s};
  return {detail::settle(false, e.exhaustive), std::nullopt};
}

/// i : I -> U is an equivalence: some k : U -> I with invertible cells
/// k o i => 1_I and 1_U => i o k.
template <MonoidalContext Ctx>
std::pair<Found, std::optional<typename Ctx::Morphism>> find_quasi_inverse(
    const Ctx& ctx, const Interval<Ctx>& I) {
  Cells<Ctx> cells(ctx, I);
  const auto U = ctx.unit();
  const auto& L = I.C1;
  auto ks = ctx.enumerate(U, L);
  auto onL = ctx.enumerate(ctx.tensor(L, L), L);
  auto onU = ctx.enumerate(ctx.tensor(U, L), U);
  const bool exhaustive = ks.exhaustive && onL.exhaustive && onU.exhaustive;
  auto invertible_between = [&](const auto& A, const auto& pool, const auto& f, const auto& g) {
    for (const auto& x : pool)
      if (cells.eq(cells.dom(A, x), f) && cells.eq(cells.cod(A, x), g) &&
          cells.inverse_among(A, x, pool))
        return true;
    return false;
  };
  for (const auto& k : ks.items) {
    if (invertible_between(L, onL.items, cells.c(k, I.i), cells.id(L)) &&
        invertible_between(U, onU.items, cells.id(U), cells.c(I.i, k)))
      return {Found::Yes, k};
  }
  return {detail::settle(false, exhaustive), std::nullopt};
}

/// The four equivalent invertibility conditions, each decided by bounded
/// search, and whether they agree. info()["conditions"] holds true, false,
/// or null (undecided) per condition.
template <MonoidalContext Ctx>
CheckReport check_invertibility(const Ctx& ctx, const Interval<Ctx>& I) {
  Cells<Ctx> cells(ctx, I);
  CheckReport r("invertibility");
  const auto U = ctx.unit();
  const auto& L = I.C1;
  std::map<std::string, Found> got;

  cells.guard(r, "coinverse", [&] {
    got["coinverse"] = find_coinverse<Ctx>(ctx, I).first;
    detail::record(r, "coinverse", got["coinverse"], "a coinverse sigma exists");
  });
  cells.guard(r, "lambda-invertible", [&] {
    auto pool = ctx.enumerate(ctx.tensor(U, L), L);
    const bool found = cells.inverse_among(U, ctx.lambda(L), pool.items).has_value();
    got["lambda-invertible"] = detail::settle(found, pool.exhaustive);
    detail::record(r, "lambda-invertible", got["lambda-invertible"],
                   "lambda is an invertible cell bot => top");
  });
  cells.guard(r, "meet-invertible", [&] {
    if (!I.meet) {
      got["meet-invertible"] = Found::Unknown;
      r.inconclusive("meet-invertible", "no meet supplied");
      return;
    }
    auto pool = ctx.enumerate(ctx.tensor(L, L), L);
    const bool found = cells.inverse_among(L, *I.meet, pool.items).has_value();
    got["meet-invertible"] = detail::settle(found, pool.exhaustive);
    detail::record(r, "meet-invertible", got["meet-invertible"],
                   "meet is an invertible cell bot o i => 1");
  });
  cells.guard(r, "i-equivalence", [&] {
    got["i-equivalence"] = find_quasi_inverse<Ctx>(ctx, I).first;
    detail::record(r, "i-equivalence", got["i-equivalence"], "i is an equivalence");
  });

  nlohmann::json conds = nlohmann::json::object();
  for (const auto& [k, v] : got) conds[k] = to_json(v);
  r.info()["conditions"] = conds;
  bool any_yes = false, any_no = false, any_unknown = got.size() < 4;
  for (const auto& [k, v] : got) {
    any_yes |= v == Found::Yes;
    any_no |= v == Found::No;
    any_unknown |= v == Found::Unknown;
  }
  if (any_yes && any_no)
    r.fail("agreement", conds, "conditions disagree");
  else if (any_unknown)
    r.inconclusive("agreement", "some condition is undecided");
  else
    r.pass("agreement");
  r.info()["invertible"] = any_unknown || (any_yes && any_no) ? nlohmann::json() : nlohmann::json(any_yes);
  return r;
}

/// Checks that h : I -> K is a map of intervals (endpoints, counit,
/// composition through [down h, up h], and symmetry when both carry one).
template <MonoidalContext Ctx>
CheckReport check_interval_map(const Ctx& ctx, const Interval<Ctx>& I, const Interval<Ctx>& K,
                               const typename Ctx::Morphism& h) {
  Algebra<Ctx> a(ctx);
  CheckReport r("interval-map");
  a.guard(r, "bot", [&] { a.expect_eq(r, "bot", a.c(h, I.bot), K.bot); });
  a.guard(r, "top", [&] { a.expect_eq(r, "top", a.c(h, I.top), K.top); });
  a.guard(r, "counit", [&] { a.expect_eq(r, "counit", a.c(K.i, h), I.i); });
  a.guard(r, "star", [&] {
    const auto h2 = a.pair(I.C2, I.down, I.up, a.c(K.down, h), a.c(K.up, h));
    a.expect_eq(r, "star", a.c(h2, I.star), a.c(K.star, h));
  });
  if (I.sigma && K.sigma)
    a.guard(r, "sigma", [&] { a.expect_eq(r, "sigma", a.c(h, *I.sigma), a.c(*K.sigma, h)); });
  return r;
}

/// Searches an interval isomorphism I -> K with its inverse.
template <MonoidalContext Ctx>
CheckReport check_interval_iso(const Ctx& ctx, const Interval<Ctx>& I, const Interval<Ctx>& K) {
  Algebra<Ctx> a(ctx);
  CheckReport r("interval-iso");
  a.guard(r, "isomorphism", [&] {
    auto fw = ctx.enumerate(I.C1, K.C1);
    auto bw = ctx.enumerate(K.C1, I.C1);
    for (const auto& h : fw.items) {
      if (!check_interval_map<Ctx>(ctx, I, K, h).passed()) continue;
      for (const auto& g : bw.items)
        if (a.eq(a.c(g, h), a.id(I.C1)) && a.eq(a.c(h, g), a.id(K.C1))) {
          r.pass("isomorphism");
          r.info()["map"] = ctx.to_json(h);
          r.info()["inverse"] = ctx.to_json(g);
          return;
        }
    }
    if (fw.exhaustive && bw.exhaustive)
      r.fail("isomorphism", {{"candidates", fw.items.size()}}, "no interval isomorphism");
    else
      r.inconclusive("isomorphism", "enumeration not exhaustive");
  });
  return r;
}

/// The free invertible interval on I with its inclusion iota : I -> J.
/// `steps` records how meet and join were obtained.
template <QuotientContext Ctx>
struct FreeInvertible {
  Interval<Ctx> J;
  typename Ctx::Morphism iota;
  CheckReport steps{"free-invertible"};
};

namespace detail {

/// Every h in `pool` with h o e = v.
template <MonoidalContext Ctx>
std::vector<typename Ctx::Morphism> extensions(const Ctx& ctx,
                                               const std::vector<typename Ctx::Morphism>& pool,
                                               const typename Ctx::Morphism& e,
                                               const typename Ctx::Morphism& v) {
  std::vector<typename Ctx::Morphism> out;
  for (const auto& h : pool)
    if (ctx.equal(ctx.compose(h, e), v)) out.push_back(h);
  return out;
}

}  // namespace detail

/// K glues a reversed copy of I along the endpoints; J quotients K so that
/// the swap becomes a coinverse. Meet and join extend the ones on I in two
/// steps: first along I (x) iota, then, after a symmetry, along J (x) iota.
template <QuotientContext Ctx>
FreeInvertible<Ctx> free_invertible_interval(const Ctx& ctx, const Interval<Ctx>& I) {
  Algebra<Ctx> a(ctx);
  using Morphism = typename Ctx::Morphism;
  const auto U = ctx.unit();
  const auto c = ctx.coproduct(U, U);
  const auto f = a.pair(c.object, c.in_f, c.in_g, I.bot, I.top);
  const auto g = a.pair(c.object, c.in_f, c.in_g, I.top, I.bot);
  const auto Kc = ctx.pushout(f, g);
  const auto& K = Kc.object;
  const auto& k1 = Kc.in_f;
  const auto& k2 = Kc.in_g;
  const auto botK = a.c(k1, I.bot), topK = a.c(k1, I.top);
  const auto iK = a.pair(K, k1, k2, I.i, I.i);
  const auto sigmaK = a.pair(K, k1, k2, k2, k1);
  const auto K2 = ctx.pushout(topK, botK);
  const auto& dnK = K2.in_f;
  const auto& upK = K2.in_g;
  const auto fwd = a.c(a.pair(I.C2, I.down, I.up, a.c(dnK, k1), a.c(upK, k1)), I.star);
  const auto rev = a.c(a.pair(I.C2, I.down, I.up, a.c(upK, k2), a.c(dnK, k2)), I.star);
  const auto starK = a.pair(K, k1, k2, fwd, rev);
  const auto idK = a.id(K);
  const Morphism q = ctx.quotient(
      K, {{a.c(a.pair(K2.object, dnK, upK, sigmaK, idK), starK), a.c(topK, iK)},
          {a.c(a.pair(K2.object, dnK, upK, idK, sigmaK), starK), a.c(botK, iK)}});
  const auto Jo = ctx.target(q);

  const auto botJ = a.c(q, botK), topJ = a.c(q, topK);
  const auto J2 = ctx.pushout(topJ, botJ);
  const auto starJ = ctx.induced(
      Jo, {q}, {a.c(a.pair(K2.object, dnK, upK, a.c(J2.in_f, q), a.c(J2.in_g, q)), starK)});
  FreeInvertible<Ctx> out{
      Interval<Ctx>{{U, Jo, J2.object, botJ, topJ, ctx.induced(Jo, {q}, {iK}), J2.in_f, J2.in_g,
                     starJ},
                    "J(" + I.name + ")",
                    ctx.induced(Jo, {q}, {a.c(q, sigmaK)}),
                    std::nullopt,
                    std::nullopt},
      a.c(q, k1)};
  Interval<Ctx>& J = out.J;

  CheckReport& r = out.steps;
  r.info()["K"] = ctx.to_json(K);
  r.info()["J"] = ctx.to_json(Jo);
  if (!I.meet || !I.join) {
    r.inconclusive("lattice", "I carries no meet and join to extend");
    return out;
  }
  const auto& L = I.C1;
  const auto LJ = ctx.tensor(L, Jo), JJ = ctx.tensor(Jo, Jo);
  const auto poolLJ = ctx.enumerate(LJ, Jo);
  const auto poolJJ = ctx.enumerate(JJ, Jo);
  auto extend = [&](const std::string& name, const Morphism& op) -> std::optional<Morphism> {
    std::optional<Morphism> result;
    a.guard(r, name, [&] {
      const auto first = detail::extensions<Ctx>(ctx, poolLJ.items, a.t(a.id(L), out.iota),
                                                 a.c(out.iota, op));
      if (first.size() != 1) {
        const bool done = poolLJ.exhaustive;
        if (done) r.fail(name + "/first", {{"extensions", first.size()}}, "no unique extension");
        else r.inconclusive(name + "/first", "enumeration not exhaustive");
        return;
      }
      const auto second = detail::extensions<Ctx>(ctx, poolJJ.items, a.t(a.id(Jo), out.iota),
                                                  a.c(first[0], ctx.tau(Jo, L)));
      if (second.size() != 1) {
        const bool done = poolJJ.exhaustive;
        if (done) r.fail(name + "/second", {{"extensions", second.size()}}, "no unique extension");
        else r.inconclusive(name + "/second", "enumeration not exhaustive");
        return;
      }
      r.pass(name, "unique two-step extension");
      result = second[0];
    });
    return result;
  };
  J.meet = extend("meet", *I.meet);
  J.join = extend("join", *I.join);
  return out;
}

/// Extends a cell alpha : B (x) I -> A over iota when alpha is invertible;
/// otherwise certifies that no extension exists among the enumerated maps.
template <QuotientContext Ctx>
std::pair<std::optional<typename Ctx::Morphism>, CheckReport> extend_invertible_cell(
    const Ctx& ctx, const Interval<Ctx>& I, const FreeInvertible<Ctx>& F,
    const typename Ctx::Object& B, const typename Ctx::Object& A,
    const typename Ctx::Morphism& alpha) {
  Cells<Ctx> cells(ctx, I);
  CheckReport r("extension");
  std::optional<typename Ctx::Morphism> ext;
  cells.guard(r, "extension", [&] {
    const auto cellpool = ctx.enumerate(ctx.tensor(B, I.C1), A);
    const bool inv = cells.inverse_among(B, alpha, cellpool.items).has_value();
    const auto pool = ctx.enumerate(ctx.tensor(B, F.J.C1), A);
    const auto found =
        detail::extensions<Ctx>(ctx, pool.items, cells.t(cells.id(B), F.iota), alpha);
    r.info()["invertible"] = inv ? nlohmann::json(true)
                                 : cellpool.exhaustive ? nlohmann::json(false) : nlohmann::json();
    r.info()["extensions"] = found.size();
    if (inv) {
      if (found.size() == 1) {
        ext = found[0];
        r.pass("extension", "unique extension of an invertible cell");
      } else if (found.empty() && !pool.exhaustive) {
        r.inconclusive("extension", "enumeration not exhaustive");
      } else {
        r.fail("extension", {{"extensions", found.size()}}, "invertible cell without a unique extension");
      }
    } else if (!found.empty()) {
      r.fail("extension", {{"cell", ctx.to_json(alpha)}, {"extension", ctx.to_json(found[0])}},
             "non-invertible cell extends");
    } else if (pool.exhaustive && cellpool.exhaustive) {
      r.pass("extension", "not invertible; no extension exists");
    } else {
      r.inconclusive("extension", "enumeration not exhaustive");
    }
  });
  return {ext, r};
}

/// f : H -> H' preserves multiplication, unit, comultiplication and counit.
template <MonoidalContext Ctx>
CheckReport check_hopf_morphism(const Ctx& ctx, const typename Ctx::Morphism& f,
                                const typename Ctx::Morphism& m, const typename Ctx::Morphism& e,
                                const Comonoid<Ctx>& co, const typename Ctx::Morphism& m2,
                                const typename Ctx::Morphism& e2, const Comonoid<Ctx>& co2) {
  Algebra<Ctx> a(ctx);
  CheckReport r("hopf-morphism");
  a.guard(r, "mult", [&] { a.expect_eq(r, "mult", a.c(f, m), a.c(m2, a.t(f, f))); });
  a.guard(r, "unit", [&] { a.expect_eq(r, "unit", a.c(f, e), e2); });
  a.guard(r, "delta", [&] { a.expect_eq(r, "delta", a.c(co2.delta, f), a.c(a.t(f, f), co.delta)); });
  a.guard(r, "counit", [&] { a.expect_eq(r, "counit", a.c(co2.counit, f), co.counit); });
  return r;
}

/// A target for the freeness property: an interval H and xi : I -> H.
template <MonoidalContext Ctx>
struct FreenessTarget {
  Interval<Ctx> H;
  typename Ctx::Morphism xi;
};

/// The map J -> H through which xi factors; refused when H is not invertible.
template <QuotientContext Ctx>
CheckReport check_freeness(const Ctx& ctx, const FreeInvertible<Ctx>& F,
                           const FreenessTarget<Ctx>& T) {
  Algebra<Ctx> a(ctx);
  CheckReport r("freeness");
  const CheckReport inv = check_invertibility<Ctx>(ctx, T.H);
  const auto& verdict = inv.info().at("invertible");
  if (!verdict.is_boolean() || !verdict.get<bool>()) {
    r.fail("target-invertible", {{"conditions", inv.info().at("conditions")}},
           "refused: the target interval is not invertible");
    return r;
  }
  r.pass("target-invertible");
  a.guard(r, "factorization", [&] {
    const auto pool = ctx.enumerate(F.J.C1, T.H.C1);
    const auto found = detail::extensions<Ctx>(ctx, pool.items, F.iota, T.xi);
    if (found.size() != 1) {
      if (found.empty() && !pool.exhaustive)
        r.inconclusive("factorization", "enumeration not exhaustive");
      else
        r.fail("factorization", {{"factorizations", found.size()}}, "no unique factorization");
      return;
    }
    r.pass("factorization");
    r.merge(check_interval_map<Ctx>(ctx, F.J, T.H, found[0]), "interval-map");
    r.info()["xi_bar"] = ctx.to_json(found[0]);
    const auto back = ctx.enumerate(T.H.C1, F.J.C1);
    bool iso = false;
    for (const auto& g : back.items)
      iso = iso || (a.eq(a.c(g, found[0]), a.id(F.J.C1)) && a.eq(a.c(found[0], g), a.id(T.H.C1)));
    r.info()["xi_bar_iso"] = iso;
  });
  return r;
}

/// The checkable properties of J as a free Hopf interval.
template <QuotientContext Ctx>
CheckReport check_J_hopf(const Ctx& ctx, const Interval<Ctx>& I, const FreeInvertible<Ctx>& F,
                         const FreenessTarget<Ctx>* target = nullptr) {
  Algebra<Ctx> a(ctx);
  const auto& J = F.J;
  CheckReport r("J-hopf");
  r.merge(F.steps, "construction");
  a.guard(r, "cocategory", [&] { r.merge(check_interval<Ctx>(ctx, J), "cocategory"); });
  a.guard(r, "cogroupoid", [&] { r.merge(check_cogroupoid<Ctx>(ctx, J, *J.sigma), "cogroupoid"); });
  a.guard(r, "iota", [&] {
    CheckReport m = check_interval_map<Ctx>(ctx, I, J, F.iota);
    // iota commutes with sigma only when I has one; J's sigma is new.
    r.merge(m, "iota");
  });
  a.guard(r, "representable", [&] {
    const std::vector<SquareFamily<Ctx>> fams{
        all_squares<Ctx>(ctx, J, "U->J", ctx.unit(), J.C1),
        all_squares<Ctx>(ctx, J, "U->I", ctx.unit(), I.C1)};
    r.merge(check_representable<Ctx>(ctx, J, fams), "representable");
  });
  a.guard(r, "i-equivalence", [&] {
    const Found f = find_quasi_inverse<Ctx>(ctx, J).first;
    if (f == Found::Yes)
      r.pass("i-equivalence");
    else if (f == Found::No)
      r.fail("i-equivalence", {{"quasi_inverse", nullptr}}, "no quasi-inverse for i");
    else
      r.inconclusive("i-equivalence", "search space not exhausted");
  });
  if (!J.meet || !J.join) {
    r.fail("hopf", {{"error", "meet or join on J could not be constructed"}});
    return r;
  }
  a.guard(r, "hopf", [&] {
    const auto [co, rep] = comonoid_of<Ctx>(ctx, J);
    r.merge(rep, "comonoid");
    r.merge(check_hopf<Ctx>(ctx, J.C1, *J.meet, J.top, co), "hopf-meet");
    r.merge(check_hopf<Ctx>(ctx, J.C1, *J.join, J.bot, co), "hopf-join");
    const auto UU = coproduct_interval<Ctx>(ctx);
    const auto [couu, repuu] = comonoid_of<Ctx>(ctx, UU);
    const auto endpoints = a.pair(UU.C1, UU.bot, UU.top, J.bot, J.top);
    r.merge(check_hopf_morphism<Ctx>(ctx, endpoints, *UU.meet, UU.top, couu, *J.meet, J.top, co),
            "endpoints-meet");
    r.merge(check_hopf_morphism<Ctx>(ctx, endpoints, *UU.join, UU.bot, couu, *J.join, J.bot, co),
            "endpoints-join");
    const auto U = ctx.unit();
    const Comonoid<Ctx> trivial{ctx.lambda_inv(U), a.id(U)};
    r.merge(check_hopf_morphism<Ctx>(ctx, J.i, *J.meet, J.top, co, ctx.lambda(U), a.id(U), trivial),
            "counit-meet");
    r.merge(check_hopf_morphism<Ctx>(ctx, J.i, *J.join, J.bot, co, ctx.lambda(U), a.id(U), trivial),
            "counit-join");
  });
  if (target) r.merge(check_freeness<Ctx>(ctx, F, *target), "freeness");
  return r;
}

}  // namespace cointerval::cocat
