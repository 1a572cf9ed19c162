#include <random>

#include "cointerval/chaincat/interval.hpp"
#include "cointerval/error.hpp"
#include "doctest.h"

using namespace cointerval;
using namespace cointerval::chaincat;

namespace {

const Ring ZZ = Ring::integers();

Matrix M(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_rows(ZZ, cols, rows);
}

ChainComplex interval1() { return ChainComplex(ZZ, {2, 1}, {M(1, {{1}, {-1}})}); }

// Small probe complexes with ranks <= 2 per degree.
std::vector<ChainComplex> probes() {
  return {ChainComplex::unit(ZZ), interval1(), ChainComplex(ZZ, {1, 1}, {M(1, {{2}})}),
          ChainComplex(ZZ, {0, 1, 1}, {Matrix(ZZ, 0, 1), M(1, {{0}})}),
          ChainComplex(ZZ, {1, 2, 1}, {M(2, {{1, -1}}), M(1, {{1}, {1}})})};
}

ChainMap random_map(std::mt19937& rng, const ChainComplex& X, const ChainComplex& Y) {
  auto e = enumerate_chain_maps(X, Y, 2, 400);
  REQUIRE(!e.maps.empty());
  return e.maps[rng() % e.maps.size()];
}

}  // namespace

TEST_CASE("complex construction validates d*d = 0") {
  CHECK_THROWS_AS(ChainComplex(ZZ, {1, 1, 1}, {M(1, {{1}}), M(1, {{1}})}), InvalidMorphism);
  CHECK_THROWS_AS(ChainComplex(ZZ, {1, 1}, {M(2, {{1, 1}})}), DimensionMismatch);
  CHECK(ChainComplex(ZZ, {2, 0, 0}, {}).length() == 1);
  CHECK_THROWS_AS(ChainComplex(ZZ, std::vector<std::size_t>(12, 1), {}, 8), DimensionMismatch);
}

TEST_CASE("tensor of the interval with itself") {
  ChainComplex I = interval1();
  ChainComplex II = tensor_complexes(I, I);
  CHECK(II.ranks() == std::vector<std::size_t>{4, 4, 1});
  CHECK((II.d(1) * II.d(2)).is_zero());
  // Degree-1 basis (e(x)a0, e(x)a1, a0(x)e, a1(x)e), degree-0 basis (a_i (x) a_j).
  CHECK(II.d(1) == M(4, {{1, 0, 1, 0}, {0, 1, -1, 0}, {-1, 0, 0, 1}, {0, -1, 0, -1}}));
  CHECK(II.d(2) == M(1, {{-1}, {1}, {1}, {-1}}));
  CHECK(tensor_complexes(ChainComplex::unit(ZZ), I) == I);
  CHECK(tensor_complexes(I, ChainComplex::unit(ZZ)) == I);
}

TEST_CASE("structural isomorphisms are inverse and coherent") {
  auto ps = probes();
  for (const auto& X : ps) {
    CHECK(compose(left_unitor(X), left_unitor_inv(X)) == ChainMap::identity(X));
    CHECK(compose(right_unitor(X), right_unitor_inv(X)) == ChainMap::identity(X));
    for (const auto& Y : ps) {
      CHECK(compose(symmetry(Y, X), symmetry(X, Y)) == ChainMap::identity(tensor_complexes(X, Y)));
      // Triangle: (X (x) lambda) * alpha = rho (x) Y on (X (x) U) (x) Y.
      ChainComplex U = ChainComplex::unit(ZZ);
      CHECK(compose(tensor_maps(ChainMap::identity(X), left_unitor(Y)), associator(X, U, Y)) ==
            tensor_maps(right_unitor(X), ChainMap::identity(Y)));
    }
  }
  std::vector<ChainComplex> small = {ps[0], ps[1], ps[2], ps[3]};
  for (const auto& X : small)
    for (const auto& Y : small)
      for (const auto& Z : small) {
        ChainMap a = associator(X, Y, Z);
        CHECK(compose(associator_inv(X, Y, Z), a) == ChainMap::identity(a.source()));
        // Hexagon: alpha * tau_{X,Y(x)Z} * alpha = (Y (x) tau) * alpha * (tau (x) Z).
        ChainMap lhs = compose(associator(Y, Z, X),
                               compose(symmetry(X, tensor_complexes(Y, Z)), a));
        ChainMap rhs = compose(tensor_maps(ChainMap::identity(Y), symmetry(X, Z)),
                               compose(associator(Y, X, Z),
                                       tensor_maps(symmetry(X, Y), ChainMap::identity(Z))));
        CHECK(lhs == rhs);
        for (const auto& W : small) {
          // Pentagon.
          ChainComplex XY = tensor_complexes(X, Y), ZW = tensor_complexes(Z, W);
          ChainMap top = compose(associator(X, Y, ZW), associator(XY, Z, W));
          ChainMap bot = compose(
              tensor_maps(ChainMap::identity(X), associator(Y, Z, W)),
              compose(associator(X, tensor_complexes(Y, Z), W),
                      tensor_maps(associator(X, Y, Z), ChainMap::identity(W))));
          CHECK(top == bot);
        }
      }
}

TEST_CASE("tensor is functorial and tau is natural") {
  std::mt19937 rng(3);
  auto ps = probes();
  for (int trial = 0; trial < 40; ++trial) {
    const auto& A = ps[rng() % 4];
    const auto& B = ps[rng() % 4];
    const auto& C = ps[rng() % 4];
    const auto& D = ps[rng() % 4];
    ChainMap f = random_map(rng, A, B), g = random_map(rng, C, D);
    CHECK(compose(symmetry(B, D), tensor_maps(f, g)) ==
          compose(tensor_maps(g, f), symmetry(A, C)));
    ChainMap f2 = random_map(rng, B, A), g2 = random_map(rng, D, C);
    CHECK(tensor_maps(compose(f2, f), compose(g2, g)) ==
          compose(tensor_maps(f2, g2), tensor_maps(f, g)));
  }
  ChainComplex I = interval1();
  CHECK(tensor_maps(ChainMap::identity(I), ChainMap::identity(I)) ==
        ChainMap::identity(tensor_complexes(I, I)));
}

TEST_CASE("interval maps and pushouts") {
  auto I = interval_I(ZZ);
  CHECK(I.C1.ranks() == std::vector<std::size_t>{2, 1});
  auto p = pushout_complexes(I.top, I.bot);
  CHECK(p.object.ranks() == std::vector<std::size_t>{3, 2});
  CHECK(compose(p.in_f, I.top) == compose(p.in_g, I.bot));
  auto q = pushout_complexes(ChainMap::identity(I.C1), ChainMap::identity(I.C1));
  CHECK(q.object.ranks() == I.C1.ranks());
  // The factorization through the computed pushout agrees with the given I^2 legs.
  ChainMap cmp = induced_map(p.object, {p.in_f, p.in_g}, {I.down, I.up});
  ChainMap back = induced_map(I.C2, {I.down, I.up}, {p.in_f, p.in_g});
  CHECK(compose(cmp, back) == ChainMap::identity(I.C2));
  CHECK(compose(back, cmp) == ChainMap::identity(p.object));
  CHECK_THROWS_AS(induced_map(I.C2, {I.down, I.up}, {I.bot, I.top}), NonCommutingCocone);
  CHECK_THROWS_AS(induced_map(I.C2, {I.down, I.up}, {I.down, I.down}), NonCommutingCocone);
}

TEST_CASE("meet and join are the declared matrices and chain maps") {
  for (const Ring& r : {ZZ, Ring::integers_mod(5)}) {
    auto I = interval_I(r);
    REQUIRE(I.meet);
    CHECK(I.meet->component(1) == Matrix::from_rows(r, 4, {{0, 1, 0, 1}}));
    CHECK(I.join->component(0) == Matrix::from_rows(r, 4, {{1, 0, 0, 0}, {0, 1, 1, 1}}));
  }
}

TEST_CASE("counterexample complex") {
  auto cx = counterexample_C(ZZ);
  CHECK((cx.C.d(1) * cx.C.d(2)).is_zero());
  CHECK(cx.C.ranks() == std::vector<std::size_t>{4, 4, 2});
  CHECK_FALSE(cx.phi == cx.psi);
  CHECK(cx.phi.component(1) == cx.psi.component(1));
  CHECK(cx.phi.component(0) == cx.psi.component(0));
}

TEST_CASE("chain map enumeration") {
  ChainComplex I = interval1();
  // Maps U -> I are determined by a vector in degree 0: a rank-2 lattice.
  auto e = enumerate_chain_maps(ChainComplex::unit(ZZ), I, 1, 1000);
  CHECK(e.solution_rank == 2);
  CHECK(e.maps.size() == 9);
  CHECK_FALSE(e.exhaustive);
  auto f = enumerate_chain_maps(ChainComplex::unit(Ring::integers_mod(3)),
                                ChainComplex::unit(Ring::integers_mod(3)), 1, 1000);
  CHECK(f.exhaustive);
  CHECK(f.maps.size() == 3);
  auto g = enumerate_chain_maps(ChainComplex::unit(ZZ), I, 3, 5);
  CHECK(g.capped);
  CHECK(g.maps.size() == 5);
}

TEST_CASE("json round trip") {
  auto I = interval_I(ZZ);
  ChainComplex back = complex_from_json(complex_to_json(I.C2), ZZ);
  CHECK(back == I.C2);
  CHECK(map_from_json(map_to_json(I.star), I.C1, I.C2) == I.star);
}
