#include "cointerval/exactalg/linalg.hpp"

#include "cointerval/error.hpp"

namespace cointerval::exactalg {

namespace {

// Applies every elementary operation to D and mirrors it onto U/Uinv (rows)
// or V/Vinv (columns), keeping U*M*V = D and U*Uinv = V*Vinv = I.
struct Reducer {
  Matrix D, U, Uinv, V, Vinv;
  const Ring& ring;

  explicit Reducer(const Matrix& M)
      : D(M),
        U(Matrix::identity(M.ring(), M.rows())),
        Uinv(Matrix::identity(M.ring(), M.rows())),
        V(Matrix::identity(M.ring(), M.cols())),
        Vinv(Matrix::identity(M.ring(), M.cols())),
        ring(M.ring()) {}

  void row_add(std::size_t dst, std::size_t src, const Scalar& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Uinv.add_col_multiple(src, dst, ring.neg(k));
  }
  void col_add(std::size_t dst, std::size_t src, const Scalar& k) {
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vinv.add_row_multiple(src, dst, ring.neg(k));
  }
  void row_swap(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
  void row_scale(std::size_t r, const Scalar& u) {
    D.scale_row(r, u);
    U.scale_row(r, u);
    Uinv.scale_col(r, ring.inverse(u));
  }
};

}  // namespace

SmithForm smith_normal_form(const Matrix& M) {
  const Ring& ring = M.ring();
  if (!ring.is_pid())
    throw UnsupportedRing("Smith normal form needs Z, Q or Z/p; got " + ring.tag());
  Reducer red(M);
  Matrix& D = red.D;
  const std::size_t m = M.rows(), n = M.cols();
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    bool found = true;
    for (;;) {
      // Pivot: nonzero entry of least Euclidean size in the trailing block.
      std::size_t pi = m, pj = n;
      mpz_class best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          mpz_class s = ring.size(D(i, j));
          if (pi == m || s < best) pi = i, pj = j, best = s;
        }
      if (pi == m) {
        found = false;
        break;
      }
      red.row_swap(t, pi);
      red.col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        red.row_add(i, t, ring.neg(ring.euclid_quotient(D(i, t), D(t, t))));
        dirty = dirty || D(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        red.col_add(j, t, ring.neg(ring.euclid_quotient(D(t, j), D(t, t))));
        dirty = dirty || D(t, j) != 0;
      }
      if (dirty) continue;

      // Divisibility chain: fold an offending row into row t and retry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!ring.divide(D(i, j), D(t, t))) {
            red.row_add(t, i, Scalar(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (!found) break;
    const Scalar& p = D(t, t);
    if (ring.is_field()) {
      if (p != 1) red.row_scale(t, ring.inverse(p));
    } else if (p < 0) {
      red.row_scale(t, Scalar(-1));
    }
  }
  return SmithForm{std::move(red.U), std::move(red.D), std::move(red.V),
                   std::move(red.Uinv), std::move(red.Vinv), t};
}

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& B) {
  if (!(A.ring() == B.ring())) throw RingMismatch("solve_linear: rings differ");
  if (A.rows() != B.rows())
    throw DimensionMismatch("solve_linear: A has " + std::to_string(A.rows()) +
                            " rows, B has " + std::to_string(B.rows()));
  const Ring& ring = A.ring();
  SmithForm s = smith_normal_form(A);
  Matrix UB = s.U * B;
  Matrix Y(ring, A.cols(), B.cols());
  for (std::size_t i = 0; i < UB.rows(); ++i)
    for (std::size_t c = 0; c < UB.cols(); ++c) {
      if (i < s.rank) {
        auto q = ring.divide(UB(i, c), s.invariant(i));
        if (!q) return std::nullopt;
        Y.set(i, c, *q);
      } else if (UB(i, c) != 0) {
        return std::nullopt;
      }
    }
  return s.V * Y;
}

Matrix kernel_basis(const Matrix& A) {
  SmithForm s = smith_normal_form(A);
  return s.V.block(0, s.rank, A.cols(), A.cols() - s.rank);
}

}  // namespace cointerval::exactalg
