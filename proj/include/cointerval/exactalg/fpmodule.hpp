#pragma once

#include <optional>

#include "cointerval/exactalg/linalg.hpp"

namespace cointerval::exactalg {

/// coker(relations): R^generators modulo the column span of `relations`.
class FpModule {
 public:
  FpModule(std::size_t generators, Matrix relations);

  /// The free module R^n (no relations).
  static FpModule free(const Ring& ring, std::size_t n);

  const Ring& ring() const { return relations_.ring(); }
  std::size_t generators() const { return generators_; }
  const Matrix& relations() const { return relations_; }

  /// Nonzero invariant factors of the relation matrix.
  std::vector<Scalar> invariant_factors() const;

  /// x, y are columns (generators x k); equal iff x - y lies in the relation span.
  bool equal(const Matrix& x, const Matrix& y) const;

  /// Present when the module is free: every nonzero invariant factor is a unit.
  /// `projection` maps generator coordinates onto a free basis of rank `rank`;
  /// `section` picks representatives, so projection * section = I.
  struct FreeBasis {
    std::size_t rank;
    Matrix projection;
    Matrix section;
  };
  std::optional<FreeBasis> free_basis() const;

 private:
  std::size_t generators_;
  Matrix relations_;
};

/// Pushout of f: A -> B and g: A -> C between free modules:
/// P = coker([f; -g]) on rank(B) + rank(C) generators, inB * f = inC * g in P.
struct ModulePushout {
  FpModule P;
  Matrix inB;
  Matrix inC;

  /// [h, k]: P -> X for a cocone h*f = k*g, as a matrix on P's generators.
  /// Throws NonCommutingCocone when the cocone does not commute.
  Matrix factor(const Matrix& h, const Matrix& k) const;

  Matrix f, g;
};

ModulePushout pushout_modules(const Matrix& f, const Matrix& g);

}  // namespace cointerval::exactalg
