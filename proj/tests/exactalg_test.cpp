#include <random>

#include "cointerval/error.hpp"
#include "cointerval/exactalg/fpmodule.hpp"
#include "doctest.h"

using namespace cointerval;
using namespace cointerval::exactalg;

namespace {

const Ring ZZ = Ring::integers();
const Ring QQ = Ring::rationals();

void check_smith(const Matrix& M, const SmithForm& s) {
  CHECK(s.U * M * s.V == s.D);
  CHECK(s.U * s.Uinv == Matrix::identity(M.ring(), M.rows()));
  CHECK(s.V * s.Vinv == Matrix::identity(M.ring(), M.cols()));
  CHECK(s.D.is_diagonal());
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    CHECK(M.ring().divide(s.invariant(i + 1), s.invariant(i)).has_value());
}

Matrix random_matrix(std::mt19937& rng, const Ring& ring, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < r * c; ++i) e.emplace_back(d(rng));
  return Matrix(ring, r, c, e);
}

// Box search for A x = b with integer |x_i| <= 10; the oracle for "no solution".
bool box_solvable(const Matrix& A, const Matrix& b) {
  const std::size_t n = A.cols();
  std::vector<long> x(n, -10);
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < A.rows() && ok; ++r) {
      Scalar acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += A(r, c) * x[c];
      ok = acc == b(r, 0);
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < n && x[k] == 10) x[k++] = -10;
    if (k == n) return false;
    ++x[k];
  }
}

}  // namespace

TEST_CASE("ring parsing and residues") {
  CHECK(Ring::parse("Z") == ZZ);
  CHECK(Ring::parse("Zmod:5").modulus() == 5);
  CHECK_THROWS_AS(Ring::parse("Zmod:1"), UnsupportedRing);
  CHECK_THROWS_AS(Ring::parse("R"), ConfigError);
  Ring z5 = Ring::integers_mod(5);
  CHECK(z5.canonical(Scalar(-1)) == 4);
  CHECK(z5.inverse(Scalar(2)) == 3);
  CHECK_THROWS_AS(ZZ.canonical(Scalar(1, 2)), InvalidMorphism);
}

TEST_CASE("matrix shapes and products") {
  Matrix e(ZZ, 0, 3);
  CHECK((Matrix(ZZ, 2, 0) * e).is_zero());
  CHECK((Matrix(ZZ, 2, 0) * e).cols() == 3);
  CHECK(Matrix::identity(ZZ, 0).rows() == 0);
  Matrix a = Matrix::from_rows(ZZ, 2, {{1, 2}, {3, 4}});
  CHECK(Matrix::kronecker(Matrix::identity(ZZ, 1), a) == a);
  CHECK_THROWS_AS(a * Matrix(ZZ, 3, 1), DimensionMismatch);
  CHECK_THROWS_AS(a + Matrix::identity(QQ, 2), RingMismatch);
}

TEST_CASE("smith normal form examples") {
  Matrix I = Matrix::identity(ZZ, 2);
  CHECK(smith_normal_form(I).D == I);

  Matrix M = Matrix::from_rows(ZZ, 2, {{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(M);
  check_smith(M, s);
  CHECK(s.D == Matrix::from_rows(ZZ, 2, {{2, 0}, {0, 4}}));

  Matrix Z0(ZZ, 2, 3);
  CHECK(smith_normal_form(Z0).D == Z0);
  CHECK(smith_normal_form(Z0).rank == 0);

  CHECK_THROWS_AS(smith_normal_form(Matrix::identity(Ring::integers_mod(6), 2)), UnsupportedRing);
}

TEST_CASE("smith normal form is stable under re-running") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix M = random_matrix(rng, ZZ, 1 + trial % 3, 1 + (trial / 3) % 4);
    SmithForm s = smith_normal_form(M);
    check_smith(M, s);
    CHECK(smith_normal_form(s.D).D == s.D);
  }
  for (const Ring& ring : {QQ, Ring::integers_mod(7)})
    for (int trial = 0; trial < 50; ++trial) {
      Matrix M = random_matrix(rng, ring, 3, 3);
      check_smith(M, smith_normal_form(M));
    }
}

TEST_CASE("solve_linear examples") {
  Matrix B = Matrix::from_rows(ZZ, 3, {{1, -2, 0}, {5, 7, 9}});
  CHECK(*solve_linear(Matrix::identity(ZZ, 2), B) == B);
  CHECK_FALSE(solve_linear(Matrix::from_rows(ZZ, 1, {{2}}), Matrix::from_rows(ZZ, 1, {{3}})));
  auto q = solve_linear(Matrix::from_rows(QQ, 1, {{2}}), Matrix::from_rows(QQ, 1, {{3}}));
  REQUIRE(q);
  CHECK((*q)(0, 0) == Scalar(3, 2));
  CHECK_THROWS_AS(solve_linear(Matrix::identity(ZZ, 2), Matrix(ZZ, 3, 1)), DimensionMismatch);
}

TEST_CASE("solve_linear agrees with a brute-force box oracle") {
  std::mt19937 rng(11);
  int absent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Matrix A = random_matrix(rng, ZZ, 2, 1 + trial % 2);
    Matrix b = random_matrix(rng, ZZ, 2, 1);
    auto x = solve_linear(A, b);
    if (x) {
      CHECK(A * *x == b);
    } else {
      ++absent;
      CHECK_FALSE(box_solvable(A, b));
    }
  }
  CHECK(absent > 0);
}

TEST_CASE("kernel basis") {
  Matrix A = Matrix::from_rows(ZZ, 3, {{1, 2, 3}, {2, 4, 6}});
  Matrix K = kernel_basis(A);
  CHECK(K.cols() == 2);
  CHECK((A * K).is_zero());
  // Saturation: (2,-1,0) must be an integer combination of the basis.
  CHECK(solve_linear(K, Matrix::from_rows(ZZ, 1, {{2}, {-1}, {0}})).has_value());
}

TEST_CASE("module pushouts") {
  Matrix id = Matrix::identity(ZZ, 1);
  {
    ModulePushout p = pushout_modules(id, id);
    auto fb = p.P.free_basis();
    REQUIRE(fb);
    CHECK(fb->rank == 1);
    CHECK(p.P.equal(p.inB * id, p.inC * id));
  }
  {
    Matrix two = Matrix::from_rows(ZZ, 1, {{2}});
    ModulePushout p = pushout_modules(two, id);
    auto fb = p.P.free_basis();
    REQUIRE(fb);
    CHECK(fb->rank == 1);
    Matrix inB = fb->projection * p.inB, inC = fb->projection * p.inC;
    // Up to the sign of the chosen basis vector, inB = id and inC = 2.
    CHECK(abs(inB(0, 0)) == 1);
    CHECK(inC(0, 0) == 2 * inB(0, 0));
    CHECK(inB * two == inC * id);
  }
  {
    ModulePushout p = pushout_modules(Matrix(ZZ, 1, 0), Matrix(ZZ, 1, 0));
    CHECK(p.P.free_basis()->rank == 2);
  }
  {
    // Non-free: Z --2--> Z <--0-- Z gives Z/2 + Z.
    ModulePushout p = pushout_modules(Matrix::from_rows(ZZ, 1, {{2}}), Matrix(ZZ, 1, 1));
    CHECK_FALSE(p.P.free_basis());
    CHECK(p.P.invariant_factors() == std::vector<Scalar>{2});
  }
  CHECK_THROWS_AS(pushout_modules(id, Matrix(ZZ, 1, 2)), DimensionMismatch);
}

TEST_CASE("pushout factorization on probe cocones") {
  Matrix f = Matrix::from_rows(ZZ, 1, {{2}});
  Matrix g = Matrix::from_rows(ZZ, 1, {{1}});
  ModulePushout p = pushout_modules(f, g);
  auto fb = *p.P.free_basis();
  for (long h = -3; h <= 3; ++h) {
    Matrix hm = Matrix::from_rows(ZZ, 1, {{h}}), km = Matrix::from_rows(ZZ, 1, {{2 * h}});
    Matrix u = p.factor(hm, km) * fb.section;
    CHECK(u * fb.projection * p.inB == hm);
    CHECK(u * fb.projection * p.inC == km);
    // Uniqueness on the free quotient: any other factorization agrees after projection.
    auto other = solve_linear((fb.projection * Matrix::hstack(p.inB, p.inC)).transpose(),
                              Matrix::hstack(hm, km).transpose());
    REQUIRE(other);
    CHECK(other->transpose() == u);
  }
  CHECK_THROWS_AS(p.factor(Matrix::from_rows(ZZ, 1, {{1}}), Matrix::from_rows(ZZ, 1, {{1}})),
                  NonCommutingCocone);
}
