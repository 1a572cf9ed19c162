#include "cointerval/exactalg/ring.hpp"

#include "cointerval/error.hpp"

namespace cointerval::exactalg {

Ring Ring::integers_mod(const mpz_class& n) {
  if (n < 2) throw UnsupportedRing("Zmod requires modulus >= 2, got " + n.get_str());
  return Ring(Kind::IntegersMod, n);
}

Ring Ring::parse(const std::string& tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  const std::string prefix = "Zmod:";
  if (tag.rfind(prefix, 0) == 0) {
    const std::string digits = tag.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("invalid ring modulus in '" + tag + "'");
    return integers_mod(mpz_class(digits));
  }
  throw ConfigError("unknown ring '" + tag + "' (expected Z, Q or Zmod:n)");
}

std::string Ring::tag() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Zmod:" + modulus_.get_str();
  }
  return "?";
}

bool Ring::is_field() const {
  switch (kind_) {
    case Kind::Integers: return false;
    case Kind::Rationals: return true;
    case Kind::IntegersMod: return mpz_probab_prime_p(modulus_.get_mpz_t(), 30) > 0;
  }
  return false;
}

bool Ring::is_pid() const { return kind_ == Kind::Integers || is_field(); }

Scalar Ring::canonical(const Scalar& x) const {
  switch (kind_) {
    case Kind::Rationals: {
      Scalar y = x;
      y.canonicalize();
      return y;
    }
    case Kind::Integers: {
      if (x.get_den() != 1) throw InvalidMorphism("non-integer value " + to_string(x) + " in Z");
      return x;
    }
    case Kind::IntegersMod: {
      if (x.get_den() != 1)
        throw InvalidMorphism("non-integer value " + to_string(x) + " in " + tag());
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), modulus_.get_mpz_t());
      return Scalar(r);
    }
  }
  return x;
}

bool Ring::is_unit(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return a != 0;
    case Kind::Integers: return a == 1 || a == -1;
    case Kind::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw InvalidMorphism(to_string(a) + " is not a unit in " + tag());
  switch (kind_) {
    case Kind::Rationals: return Scalar(1) / a;
    case Kind::Integers: return a;
    case Kind::IntegersMod: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      return Scalar(r);
    }
  }
  return a;
}

std::optional<Scalar> Ring::divide(const Scalar& a, const Scalar& b) const {
  if (b == 0) {
    if (a == 0) return Scalar(0);
    return std::nullopt;
  }
  switch (kind_) {
    case Kind::Rationals: return canonical(a / b);
    case Kind::Integers: {
      if (!mpz_divisible_p(a.get_num_mpz_t(), b.get_num_mpz_t())) return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
      return Scalar(q);
    }
    case Kind::IntegersMod: {
      if (is_unit(b)) return mul(a, inverse(b));
      // Solve b*x = a (mod n): solvable iff gcd(b, n) | a.
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), b.get_num_mpz_t(), modulus_.get_mpz_t());
      if (!mpz_divisible_p(a.get_num_mpz_t(), g.get_mpz_t())) return std::nullopt;
      mpz_class n2 = modulus_ / g, b2 = b.get_num() / g, a2 = a.get_num() / g, inv;
      mpz_invert(inv.get_mpz_t(), b2.get_mpz_t(), n2.get_mpz_t());
      return canonical(Scalar(mpz_class(a2 * inv)));
    }
  }
  return std::nullopt;
}

Scalar Ring::euclid_quotient(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Integers) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return Scalar(q);
  }
  return mul(a, inverse(b));
}

mpz_class Ring::size(const Scalar& a) const {
  if (kind_ == Kind::Integers) return abs(a.get_num());
  return a == 0 ? 0 : 1;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace cointerval::exactalg
