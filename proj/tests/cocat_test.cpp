#include "cointerval/chaincat/interval.hpp"
#include "cointerval/cocat/cocycle.hpp"
#include "cointerval/cocat/invertible.hpp"
#include "cointerval/error.hpp"
#include "cointerval/fincat/interval.hpp"
#include "doctest.h"

using namespace cointerval;
using namespace cointerval::cocat;
using fincat::FinContext;
using chaincat::ChainContext;
using chaincat::Matrix;
using chaincat::Ring;

namespace {

using FinInterval = Interval<FinContext>;
using Fun = fincat::Functor;

const CheckItem& item(const CheckReport& r, const std::string& name) {
  const CheckItem* it = r.find(name);
  REQUIRE_MESSAGE(it != nullptr, name);
  return *it;
}

std::vector<Fun> cells_of(const FinContext& ctx, const FinInterval& I, const fincat::CatPtr& A,
                          const fincat::CatPtr& B) {
  auto e = ctx.enumerate(ctx.tensor(A, I.C1), B);
  REQUIRE(e.exhaustive);
  return e.items;
}

// Squares U (x) (I (x) I) -> C from the counterexample's maps I (x) I -> C.
SquareFamily<ChainContext> counterexample_family(const ChainContext& ctx,
                                                 const Interval<ChainContext>& I) {
  const auto cx = chaincat::counterexample_C(ctx.ring());
  const auto lam = ctx.lambda(ctx.tensor(I.C1, I.C1));
  return {"counterexample", ctx.unit(), {ctx.compose(cx.phi, lam), ctx.compose(cx.psi, lam)},
          false, {}};
}

}  // namespace

TEST_CASE("cocategory axioms hold for the standard intervals") {
  FinContext fc;
  for (const FinInterval& I : {discrete_interval(fc), coproduct_interval(fc),
                               fincat::interval_two(fc), fincat::interval_iso(fc)}) {
    CAPTURE(I.name);
    const CheckReport r = check_interval(fc, I);
    CHECK(r.passed());
    CHECK(r.items().size() == 11);
  }
  for (const auto& ring : {Ring::integers(), Ring::integers_mod(5), Ring::rationals()}) {
    ChainContext cc(ring);
    CHECK(check_interval(cc, chaincat::interval_I(ring)).passed());
    CHECK(check_interval(cc, discrete_interval(cc)).passed());
  }
}

TEST_CASE("a corrupted star breaks a counit law with a witness") {
  const Ring ZZ = Ring::integers();
  ChainContext cc(ZZ);
  auto I = chaincat::interval_I(ZZ);
  const auto& star = I.star;
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n < star.length(); ++n) comps.push_back(star.component(n));
  // (x, y) -> (x, y, 0) in degree 0; degree 1 follows so the result is still
  // a chain map.
  comps[0] = Matrix::from_rows(ZZ, 2, {{1, 0}, {0, 1}, {0, 0}});
  comps[1] = I.down.component(1);
  I.star = chaincat::ChainMap(star.source(), star.target(), comps);
  const CheckReport r = check_cocategory(cc, I);
  CHECK(r.status() == Status::Fail);
  bool counit_failed = false;
  for (const auto& it : r.items())
    if (it.name.rfind("counit/", 0) == 0 && it.status == Status::Fail) {
      counit_failed = true;
      CHECK(it.witness.contains("lhs"));
      CHECK(it.witness["lhs"] != it.witness["rhs"]);
    }
  CHECK(counit_failed);
}

TEST_CASE("bounded-search errors are inconclusive, other errors fail") {
  FinContext fc;
  Algebra<FinContext> a(fc);
  CheckReport r;
  a.guard(r, "depth", [] { throw DepthExceeded("too deep"); });
  a.guard(r, "cap", [] { throw CapExceeded("too many"); });
  a.guard(r, "other", [] { throw NonComposable("bad"); });
  CHECK(item(r, "depth").status == Status::Inconclusive);
  CHECK(item(r, "cap").status == Status::Inconclusive);
  CHECK(item(r, "other").status == Status::Fail);
  CHECK(item(r, "other").witness["error"] == "bad");
}

TEST_CASE("cogroupoid") {
  FinContext fc;
  const auto iso = fincat::interval_iso(fc);
  const auto uu = coproduct_interval(fc);
  CHECK(check_cogroupoid(fc, iso, *iso.sigma).passed());
  CHECK(check_cogroupoid(fc, uu, *uu.sigma).passed());
  const auto I = chaincat::interval_I(Ring::integers());
  CHECK(check_cogroupoid(ChainContext(Ring::integers()), I, *I.sigma).passed());

  const auto two = fincat::interval_two(fc);
  const CheckReport r = check_cogroupoid(fc, two, fc.id(two.C1));
  CHECK(item(r, "sigma/bot").status == Status::Fail);
  CHECK(!item(r, "sigma/bot").witness.is_null());
}

TEST_CASE("comonoid structure") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto [co, rep] = comonoid_of(fc, two);
  CHECK(rep.passed());
  // The diagonal: x -> (x, x) with u -> (u, u).
  CHECK(co.delta.object_map() == std::vector<int>{0, 3});
  CHECK(two.C1->describe(fc.compose(*two.meet, co.delta).generator(0)) == "u");

  const auto d = discrete_interval(fc);
  const auto [dco, drep] = comonoid_of(fc, d);
  CHECK(drep.passed());
  CHECK(fc.equal(dco.delta, fc.lambda_inv(fc.unit())));
  CHECK(fc.equal(dco.delta, fc.rho_inv(fc.unit())));

  const Ring ZZ = Ring::integers();
  ChainContext cc(ZZ);
  const auto I = chaincat::interval_I(ZZ);
  const auto [cco, crep] = comonoid_of(cc, I);
  CHECK(crep.passed());
  // Degree 1: the generator goes to the sum of its two mixed-bidegree copies.
  const Matrix d1 = cco.delta.component(1);
  CHECK(d1.rows() == 4);
  CHECK(d1.cols() == 1);
}

TEST_CASE("2-category laws on functors 2 -> 2") {
  FinContext fc;
  for (const FinInterval& I : {fincat::interval_two(fc), fincat::interval_iso(fc)}) {
    CAPTURE(I.name);
    Cells<FinContext> cells(fc, I);
    const auto A = fincat::interval_two(fc).C1;
    const auto cs = cells_of(fc, I, A, A);
    std::vector<Fun> dom, cod;
    for (const auto& c : cs) {
      dom.push_back(cells.dom(A, c));
      cod.push_back(cells.cod(A, c));
    }
    std::size_t pairs = 0, triples = 0, grids = 0;
    for (std::size_t x = 0; x < cs.size(); ++x) {
      CHECK(fc.equal(cells.vcomp(A, cs[x], cells.identity(A, cod[x])), cs[x]));
      CHECK(fc.equal(cells.vcomp(A, cells.identity(A, dom[x]), cs[x]), cs[x]));
      for (std::size_t y = 0; y < cs.size(); ++y) {
        if (!fc.equal(cod[x], dom[y])) {
          CHECK_THROWS_AS(cells.vcomp(A, cs[x], cs[y]), BoundaryMismatch);
          continue;
        }
        ++pairs;
        const Fun xy = cells.vcomp(A, cs[x], cs[y]);
        if (I.name == "2") {
          const auto oracle = fincat::vertical(A, fincat::cell_components(cs[x]),
                                               fincat::cell_components(cs[y]));
          CHECK(fincat::cell_components(xy) == oracle);
        }
        for (std::size_t z = 0; z < cs.size(); ++z) {
          if (!fc.equal(cod[y], dom[z])) continue;
          ++triples;
          CHECK(fc.equal(cells.vcomp(A, xy, cs[z]),
                         cells.vcomp(A, cs[x], cells.vcomp(A, cs[y], cs[z]))));
        }
        // Interchange against every composable pair of cells on the right.
        for (std::size_t u = 0; u < cs.size(); ++u)
          for (std::size_t v = 0; v < cs.size(); ++v) {
            if (!fc.equal(cod[u], dom[v])) continue;
            ++grids;
            const Fun lhs = cells.hcomp(A, xy, cells.vcomp(A, cs[u], cs[v]));
            const Fun rhs =
                cells.vcomp(A, cells.hcomp(A, cs[x], cs[u]), cells.hcomp(A, cs[y], cs[v]));
            CHECK(fc.equal(lhs, rhs));
          }
      }
    }
    CHECK(pairs > 0);
    CHECK(triples > 0);
    CHECK(grids > 0);
  }
}

TEST_CASE("invertible cells exactly when a coinverse exists") {
  FinContext fc;
  const auto A = fincat::interval_two(fc).C1;
  for (const FinInterval& I : {fincat::interval_two(fc), fincat::interval_iso(fc)}) {
    CAPTURE(I.name);
    Cells<FinContext> cells(fc, I);
    const bool has_sigma = find_coinverse(fc, I).first == Found::Yes;
    bool all = true;
    for (const auto& B : {A, fincat::interval_iso(fc).C1}) {
      const auto cs = cells_of(fc, I, A, B);
      for (const auto& c : cs) all = all && cells.inverse_among(A, c, cs).has_value();
    }
    CHECK(all == has_sigma);
  }
}

TEST_CASE("boundaries") {
  const Ring ZZ = Ring::integers();
  ChainContext cc(ZZ);
  const auto I = chaincat::interval_I(ZZ);
  const auto fam = counterexample_family(cc, I);
  const auto b1 = boundary(cc, I, fam.B, fam.squares[0]);
  const auto b2 = boundary(cc, I, fam.B, fam.squares[1]);
  for (std::size_t k = 0; k < 4; ++k) CHECK(b1[k] == b2[k]);
  CHECK(!(fam.squares[0] == fam.squares[1]));

  // A constant square has four equal edges.
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto U = fc.unit();
  Algebra<FinContext> a(fc);
  const Fun constant = a.c(two.top, two.i, fc.lambda(two.C1), a.t(two.i, a.id(two.C1)),
                           fc.lambda(fc.tensor(two.C1, two.C1)));
  const auto e = boundary(fc, two, U, constant);
  for (std::size_t k = 1; k < 4; ++k) CHECK(fc.equal(e[k], e[0]));
}

TEST_CASE("injective boundaries") {
  const Ring ZZ = Ring::integers();
  ChainContext cc(ZZ);
  const auto I = chaincat::interval_I(ZZ);
  auto fam = counterexample_family(cc, I);
  const CheckReport r = check_injective_boundaries(cc, I, {fam});
  CHECK(r.status() == Status::Fail);
  const auto& w = item(r, "family/counterexample").witness;
  CHECK(w.contains("square_1"));
  CHECK(w["shared_boundary"].size() == 4);

  fam.squares = {fam.squares[0], fam.squares[0]};
  CHECK(check_injective_boundaries(cc, I, {fam}).status() == Status::Inconclusive);

  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto all = all_squares(fc, two, "U->2", fc.unit(), two.C1);
  CHECK(all.exhaustive);
  CHECK(check_injective_boundaries(fc, two, {all}).passed());
}

TEST_CASE("lattice and Hopf structures") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  for (const FinInterval& I : {two, fincat::interval_iso(fc), coproduct_interval(fc),
                               discrete_interval(fc)}) {
    CAPTURE(I.name);
    const CheckReport r = check_lattice(fc, I);
    CHECK(r.passed());
    CHECK(r.find("distributivity/meet-over-join") != nullptr);
    CHECK(r.find("idempotent-chain/step3") != nullptr);
  }
  for (const auto& ring : {Ring::integers(), Ring::integers_mod(5)}) {
    ChainContext cc(ring);
    CHECK(check_lattice(cc, chaincat::interval_I(ring)).passed());
  }

  const auto [co, rep] = comonoid_of(fc, two);
  CHECK(check_hopf(fc, two.C1, *two.join, two.bot, co).passed());
  CHECK(check_hopf(fc, two.C1, *two.meet, two.top, co).passed());
  const CheckReport wrong = check_hopf(fc, two.C1, *two.join, two.top, co);
  CHECK(item(wrong, "monoid/unit-right").status == Status::Fail);

  const auto U = fc.unit();
  const Comonoid<FinContext> trivial{fc.lambda_inv(U), fc.id(U)};
  CHECK(check_hopf(fc, U, fc.lambda(U), fc.id(U), trivial).passed());

  FinInterval bare = two;
  bare.meet.reset();
  CHECK_THROWS_AS(check_lattice(fc, bare), MissingLattice);
}

TEST_CASE("meet and join are the only solutions of their boundary conditions") {
  FinContext fc;
  for (const FinInterval& I : {fincat::interval_two(fc), fincat::interval_iso(fc),
                               coproduct_interval(fc), discrete_interval(fc)}) {
    CAPTURE(I.name);
    const CheckReport r = check_lattice_uniqueness(fc, I);
    CHECK(r.passed());
    CHECK(r.info()["meet_solutions"] == 1);
    CHECK(r.info()["join_solutions"] == 1);
  }
  // Swapping meet and join breaks the boundary conditions, so the supplied
  // operations are no longer among the solutions.
  FinInterval swapped = fincat::interval_two(fc);
  std::swap(swapped.meet, swapped.join);
  const CheckReport r = check_lattice_uniqueness(fc, swapped);
  CHECK(item(r, "meet").status == Status::Fail);
  CHECK(item(r, "join").status == Status::Fail);
}

TEST_CASE("representability") {
  FinContext fc;
  for (const FinInterval& I : {fincat::interval_two(fc), fincat::interval_iso(fc),
                               coproduct_interval(fc), discrete_interval(fc)}) {
    CAPTURE(I.name);
    const auto fam = all_squares(fc, I, "U->2", fc.unit(), fincat::interval_two(fc).C1);
    const CheckReport r = check_representable(fc, I, {fam});
    CHECK(r.passed());
    CHECK(r.info()["verdict"] == "representable (bounded evidence)");
    for (const char* b : {"boundary/meet/domain", "boundary/meet-tau/codomain",
                          "boundary/join/domain", "boundary/join-tau/codomain"})
      CHECK(item(r, b).status == Status::Pass);
  }
  const Ring ZZ = Ring::integers();
  ChainContext cc(ZZ);
  const auto I = chaincat::interval_I(ZZ);
  const CheckReport r = check_representable(cc, I, {counterexample_family(cc, I)});
  CHECK(r.status() == Status::Fail);
  CHECK(r.info()["verdict"] == "not representable");
  CHECK(item(r, "boundary/join-tau/codomain").status == Status::Pass);
}

TEST_CASE("flats, theta and upsilon") {
  FinContext fc;
  const auto d = discrete_interval(fc);
  const auto A = fincat::interval_two(fc).C1;
  Squares<FinContext> dsq(fc, d, A);
  for (const auto& phi : cells_of(fc, d, A, A)) {
    CHECK(fc.equal(dsq.flat(phi), dsq.natural(phi)));
    CHECK(fc.equal(dsq.sharp(phi), dsq.natural(phi)));
  }

  const auto two = fincat::interval_two(fc);
  const auto U = fc.unit();
  Squares<FinContext> sq(fc, two, U);
  const auto cs = cells_of(fc, two, U, A);
  REQUIRE(cs.size() == 3);
  for (const auto& phi : cs) {
    const auto f = sq.dom(U, phi), g = sq.cod(U, phi);
    const auto th = sq.theta(phi, sq.identity(U, g));
    CHECK(fc.equal(th, sq.natural(phi)));
    CHECK(fc.equal(sq.upsilon(sq.identity(U, f), phi), sq.natural(phi)));
    // theta : 1_f => phi along s, with s-faces phi and phi again.
    const auto e = sq.edges(th);
    CHECK(fc.equal(e[0], phi));
    CHECK(fc.equal(e[2], sq.identity(U, f)));
    CHECK(fc.equal(e[3], sq.identity(U, g)));
  }
  FinInterval nolat = two;
  nolat.join.reset();
  Squares<FinContext> nl(fc, nolat, U);
  CHECK_THROWS_AS(nl.sharp(cs[0]), MissingLattice);
}

TEST_CASE("cocycle identities and the edge/fill round trip") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto A = two.C1;
  for (const auto& B : {fc.unit(), A}) {
    const auto cs = cells_of(fc, two, B, A);
    const CheckReport r = check_cocycle(fc, two, B, cs);
    CHECK(r.passed());
    for (const char* k : {"theta-cocycle", "upsilon-cocycle", "cocycle-square"})
      CHECK(r.info()["instances"][k].get<std::size_t>() > 0);
    const auto sqs = fc.enumerate(fc.tensor(fc.tensor(B, two.C1), two.C1), A);
    const CheckReport pp = check_phi_psi(fc, two, B, cs, sqs.items, sqs.exhaustive);
    CHECK(pp.passed());
  }
  const auto U = fc.unit();
  CHECK(cells_of(fc, two, U, A).size() == 3);

  // Identity cells only: every identity holds trivially.
  Cells<FinContext> cells(fc, two);
  std::vector<Fun> ids;
  for (const auto& f : fc.enumerate(U, A).items) ids.push_back(cells.identity(U, f));
  CHECK(check_cocycle(fc, two, U, ids).passed());
}

TEST_CASE("invertibility conditions agree") {
  FinContext fc;
  auto conds = [&](const FinInterval& I) {
    const CheckReport r = check_invertibility(fc, I);
    CHECK(item(r, "agreement").status == Status::Pass);
    return r.info()["invertible"];
  };
  CHECK(conds(fincat::interval_two(fc)) == false);
  CHECK(conds(fincat::interval_iso(fc)) == true);
  CHECK(conds(discrete_interval(fc)) == true);
  CHECK(conds(coproduct_interval(fc)) == true);
}

TEST_CASE("free invertible interval") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto iso = fincat::interval_iso(fc);
  const auto F = free_invertible_interval(fc, two);
  CHECK(F.J.C1->objects().size() == 2);
  CHECK(F.J.C1->morphisms().size() == 4);
  CHECK(F.steps.passed());
  CHECK(check_interval_iso(fc, F.J, iso).passed());
  CHECK(check_interval_map(fc, two, F.J, F.iota).passed());
  CHECK(check_invertibility(fc, F.J).info()["invertible"] == true);

  const auto Fi = free_invertible_interval(fc, iso);
  CHECK(check_interval_iso(fc, Fi.J, iso).passed());
  CHECK(Fi.J.C1->morphisms().size() == iso.C1->morphisms().size());
  CHECK(fincat::inverse_relabelling(Fi.iota).source() == Fi.J.C1);

  const auto uu = coproduct_interval(fc);
  CHECK(check_interval_iso(fc, free_invertible_interval(fc, uu).J, uu).passed());
}

TEST_CASE("extension of invertible cells") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto iso = fincat::interval_iso(fc);
  const auto F = free_invertible_interval(fc, two);
  Cells<FinContext> cells(fc, two);
  const auto A = two.C1;

  const auto idcell = cells.identity(A, fc.id(A));
  auto [ext, r] = extend_invertible_cell(fc, two, F, A, A, idcell);
  CHECK(r.passed());
  REQUIRE(ext.has_value());
  CHECK(fc.equal(fc.compose(*ext, fc.tensor(fc.id(A), F.iota)), idcell));

  // id => const top: components u and id; its inverse would need top -> bot.
  const auto const_top = fc.compose(two.top, fc.compose(two.i, fc.id(A)));
  std::optional<Fun> to_top;
  for (const auto& c : cells_of(fc, two, A, A))
    if (fc.equal(cells.dom(A, c), fc.id(A)) && fc.equal(cells.cod(A, c), const_top)) to_top = c;
  REQUIRE(to_top.has_value());
  auto [none, r2] = extend_invertible_cell(fc, two, F, A, A, *to_top);
  CHECK(r2.passed());
  CHECK(!none.has_value());
  CHECK(r2.info()["invertible"] == false);

  std::size_t extended = 0;
  for (const auto& c : cells_of(fc, two, A, iso.C1)) {
    auto [e, rr] = extend_invertible_cell(fc, two, F, A, iso.C1, c);
    CHECK(rr.passed());
    extended += e.has_value();
  }
  CHECK(extended > 0);
}

TEST_CASE("J is a free Hopf interval") {
  FinContext fc;
  const auto two = fincat::interval_two(fc);
  const auto iso = fincat::interval_iso(fc);
  const auto F = free_invertible_interval(fc, two);
  CHECK(check_J_hopf(fc, two, F).passed());

  std::optional<Fun> xi;
  for (const auto& x : fc.enumerate(two.C1, iso.C1).items)
    if (check_interval_map(fc, two, iso, x).passed()) xi = x;
  REQUIRE(xi.has_value());
  const FreenessTarget<FinContext> good{iso, *xi};
  const CheckReport r = check_J_hopf(fc, two, F, &good);
  CHECK(r.passed());
  CHECK(r.info()["freeness"]["xi_bar_iso"] == true);

  const FreenessTarget<FinContext> bad{two, fc.id(two.C1)};
  const CheckReport refused = check_freeness(fc, F, bad);
  CHECK(item(refused, "target-invertible").status == Status::Fail);
  CHECK(refused.find("factorization") == nullptr);
}
