#pragma once

#include <optional>
#include <vector>

#include "cointerval/exactalg/matrix.hpp"

namespace cointerval::exactalg {

/// U * M * V = D with U, V invertible and D diagonal, d_1 | d_2 | ... .
/// Uinv and Vinv are maintained alongside so callers never need to invert.
struct SmithForm {
  Matrix U, D, V;
  Matrix Uinv, Vinv;
  std::size_t rank;  // number of nonzero diagonal entries (a prefix)

  Scalar invariant(std::size_t i) const { return D(i, i); }
};

/// Requires a PID: Z, Q or Z/p with p prime. Throws UnsupportedRing otherwise.
SmithForm smith_normal_form(const Matrix& M);

/// Canonical X with A * X = B, or nullopt. Free coordinates are set to zero in
/// the Smith basis, so the answer is deterministic.
std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& B);

/// Columns form a basis of { x : A x = 0 } (a saturated lattice over Z).
Matrix kernel_basis(const Matrix& A);

}  // namespace cointerval::exactalg
