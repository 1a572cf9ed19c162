#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "cointerval/cocat/structures.hpp"
#include "cointerval/fincat/constructions.hpp"
#include "cointerval/fincat/enumerate.hpp"

namespace cointerval::fincat {

/// Finitely presented categories under the cartesian product.
class FinContext {
 public:
  using Object = CatPtr;
  using Morphism = Functor;
  struct Colimit {
    Object object;
    Morphism in_f, in_g;
  };
  struct Enumeration {
    std::vector<Morphism> items;
    bool exhaustive = false;
    nlohmann::json coverage;
  };

  explicit FinContext(Limits limits = {}, std::size_t enumeration_cap = kDefaultEnumerationCap);

  const Limits& limits() const { return limits_; }
  std::size_t cap() const { return cap_; }
  std::string name() const { return "fincat"; }

  Object source(const Morphism& f) const { return f.source(); }
  Object target(const Morphism& f) const { return f.target(); }
  Morphism id(const Object& X) const { return Functor::identity(X); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return fincat::compose(g, f); }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  bool same_object(const Object& X, const Object& Y) const { return same_category(X, Y); }

  /// Products are memoized, so repeated tensors share one category.
  Object tensor(const Object& X, const Object& Y) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Object unit() const { return unit_; }

  Morphism lambda(const Object& X) const { return unitor_left(tensor(unit_, X), X); }
  Morphism lambda_inv(const Object& X) const { return unitor_left_inv(X, tensor(unit_, X)); }
  Morphism rho(const Object& X) const { return unitor_right(tensor(X, unit_), X); }
  Morphism rho_inv(const Object& X) const { return unitor_right_inv(X, tensor(X, unit_)); }
  Morphism alpha(const Object& X, const Object& Y, const Object& Z) const;
  Morphism alpha_inv(const Object& X, const Object& Y, const Object& Z) const;
  Morphism tau(const Object& X, const Object& Y) const { return swap(tensor(X, Y), tensor(Y, X)); }

  Colimit coproduct(const Object& X, const Object& Y) const;
  Colimit pushout(const Morphism& f, const Morphism& g) const;
  Morphism induced(const Object& Q, const std::vector<Morphism>& legs,
                   const std::vector<Morphism>& maps) const {
    return induced_functor(Q, legs, maps);
  }
  Morphism quotient(const Object& X,
                    const std::vector<std::pair<Morphism, Morphism>>& relations) const {
    return quotient_by_functors(X, relations, limits_);
  }
  /// All functors X -> Y; non-exhaustive (and empty) past the cap.
  Enumeration enumerate(const Object& X, const Object& Y) const;

  nlohmann::json to_json(const Morphism& f) const;
  nlohmann::json to_json(const Object& X) const;

 private:
  Limits limits_;
  std::size_t cap_;
  CatPtr unit_;
  struct Cache {
    std::mutex mutex;
    std::multimap<std::pair<std::size_t, std::size_t>, std::array<CatPtr, 3>> products;
  };
  std::shared_ptr<Cache> cache_;
};

static_assert(cocat::QuotientContext<FinContext>);

}  // namespace cointerval::fincat
