#pragma once

#include "cointerval/chaincat/complex.hpp"
#include "cointerval/cocat/structures.hpp"

namespace cointerval::chaincat {

/// Ch_{>=0}(R) packaged for the generic layer.
class ChainContext {
 public:
  using Object = ChainComplex;
  using Morphism = ChainMap;
  struct Colimit {
    Object object;
    Morphism in_f, in_g;
  };
  struct Enumeration {
    std::vector<Morphism> items;
    bool exhaustive = false;
    nlohmann::json coverage;
  };

  explicit ChainContext(Ring ring, std::size_t max_deg = kDefaultMaxDeg, long coeff_box = 3,
                        std::size_t cap = 10000);

  const Ring& ring() const { return ring_; }
  std::string name() const { return "chaincat(" + ring_.tag() + ")"; }
  long coeff_box() const { return box_; }
  std::size_t cap() const { return cap_; }

  Object source(const Morphism& f) const { return f.source(); }
  Object target(const Morphism& f) const { return f.target(); }
  Morphism id(const Object& X) const { return ChainMap::identity(X); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return chaincat::compose(g, f); }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  bool same_object(const Object& X, const Object& Y) const { return X == Y; }

  Object tensor(const Object& X, const Object& Y) const { return tensor_complexes(X, Y); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return tensor_maps(f, g); }
  Object unit() const { return ChainComplex::unit(ring_, max_deg_); }

  Morphism lambda(const Object& X) const { return left_unitor(X); }
  Morphism lambda_inv(const Object& X) const { return left_unitor_inv(X); }
  Morphism rho(const Object& X) const { return right_unitor(X); }
  Morphism rho_inv(const Object& X) const { return right_unitor_inv(X); }
  Morphism alpha(const Object& X, const Object& Y, const Object& Z) const {
    return associator(X, Y, Z);
  }
  Morphism alpha_inv(const Object& X, const Object& Y, const Object& Z) const {
    return associator_inv(X, Y, Z);
  }
  Morphism tau(const Object& X, const Object& Y) const { return symmetry(X, Y); }

  Colimit coproduct(const Object& X, const Object& Y) const;
  Colimit pushout(const Morphism& f, const Morphism& g) const;
  Morphism induced(const Object& Q, const std::vector<Morphism>& legs,
                   const std::vector<Morphism>& maps) const {
    return induced_map(Q, legs, maps);
  }
  /// Chain maps X -> Y through the coefficient box; capped at cap().
  Enumeration enumerate(const Object& X, const Object& Y) const;

  nlohmann::json to_json(const Morphism& f) const;
  nlohmann::json to_json(const Object& X) const;

 private:
  Ring ring_;
  std::size_t max_deg_;
  long box_;
  std::size_t cap_;
};

static_assert(cocat::MonoidalContext<ChainContext>);

nlohmann::json complex_to_json(const ChainComplex& X);
nlohmann::json map_to_json(const ChainMap& f);
nlohmann::json matrix_to_json(const Matrix& m);
/// Reads {"ranks": [...], "differentials": [...]} over `ring`.
ChainComplex complex_from_json(const nlohmann::json& j, const Ring& ring);
/// Reads a list of per-degree matrices between the given complexes.
ChainMap map_from_json(const nlohmann::json& j, const ChainComplex& source,
                       const ChainComplex& target);

}  // namespace cointerval::chaincat
