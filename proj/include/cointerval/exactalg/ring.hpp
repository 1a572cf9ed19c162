#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cointerval::exactalg {

/// Ring elements are carried as exact rationals. Integer and residue rings
/// keep the denominator at 1; residues are canonical in [0, n).
using Scalar = mpq_class;

class Ring {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers_mod(const mpz_class& n);

  /// Parses "Z", "Q" or "Zmod:n".
  static Ring parse(const std::string& tag);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  std::string tag() const;

  bool is_field() const;
  /// Integers, rationals and prime residue rings; these admit Smith normal form.
  bool is_pid() const;

  /// Maps an arbitrary rational into the ring's canonical representative.
  /// Throws if the value has no image (a proper fraction in Z or Z/n).
  Scalar canonical(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return canonical(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canonical(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canonical(a * b); }
  Scalar neg(const Scalar& a) const { return canonical(-a); }

  bool is_zero(const Scalar& a) const { return a == 0; }
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  /// Exact quotient a / b when one exists in the ring.
  std::optional<Scalar> divide(const Scalar& a, const Scalar& b) const;

  /// Euclidean step used by Smith normal form: q with a - q*b "smaller" than b.
  /// For fields the remainder is always zero.
  Scalar euclid_quotient(const Scalar& a, const Scalar& b) const;

  /// Euclidean size: |a| over Z, 0/1 for fields.
  mpz_class size(const Scalar& a) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(Kind k, const mpz_class& n) : kind_(k), modulus_(n) {}

  Kind kind_;
  mpz_class modulus_;
};

std::string to_string(const Scalar& x);

}  // namespace cointerval::exactalg
