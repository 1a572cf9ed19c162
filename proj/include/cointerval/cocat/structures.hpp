#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cointerval::cocat {

/// What the generic layer needs from a symmetric monoidal category with
/// finite colimits. compose(g, f) is "g after f". induced(Q, legs, maps)
/// returns the unique m : Q -> T with m * legs[k] = maps[k], or throws
/// NonCommutingCocone; legs must come from a colimit with apex Q.
template <class C>
concept MonoidalContext = requires(const C& c, const typename C::Object& X,
                                   const typename C::Morphism& f,
                                   const std::vector<typename C::Morphism>& fs) {
  { c.source(f) } -> std::convertible_to<typename C::Object>;
  { c.target(f) } -> std::convertible_to<typename C::Object>;
  { c.id(X) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.equal(f, f) } -> std::convertible_to<bool>;
  { c.same_object(X, X) } -> std::convertible_to<bool>;
  { c.tensor(X, X) } -> std::convertible_to<typename C::Object>;
  { c.tensor(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.unit() } -> std::convertible_to<typename C::Object>;
  { c.lambda(X) } -> std::convertible_to<typename C::Morphism>;
  { c.lambda_inv(X) } -> std::convertible_to<typename C::Morphism>;
  { c.rho(X) } -> std::convertible_to<typename C::Morphism>;
  { c.rho_inv(X) } -> std::convertible_to<typename C::Morphism>;
  { c.alpha(X, X, X) } -> std::convertible_to<typename C::Morphism>;
  { c.alpha_inv(X, X, X) } -> std::convertible_to<typename C::Morphism>;
  { c.tau(X, X) } -> std::convertible_to<typename C::Morphism>;
  { c.coproduct(X, X) } -> std::convertible_to<typename C::Colimit>;
  { c.pushout(f, f) } -> std::convertible_to<typename C::Colimit>;
  { c.induced(X, fs, fs) } -> std::convertible_to<typename C::Morphism>;
  { c.enumerate(X, X) } -> std::convertible_to<typename C::Enumeration>;
  { c.to_json(f) } -> std::convertible_to<nlohmann::json>;
  { c.name() } -> std::convertible_to<std::string>;
};

/// Contexts that can also impose relations between parallel morphisms.
/// quotient(X, pairs) returns q : X -> X/~ coequalizing every pair.
template <class C>
concept QuotientContext =
    MonoidalContext<C> &&
    requires(const C& c, const typename C::Object& X,
             const std::vector<std::pair<typename C::Morphism, typename C::Morphism>>& rel) {
      { c.quotient(X, rel) } -> std::convertible_to<typename C::Morphism>;
    };

/// Coobjects C0, coarrows C1, cocomposable coarrows C2 with their maps.
template <class Ctx>
struct Cocategory {
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  Object C0, C1, C2;
  Morphism bot, top;  // C0 -> C1
  Morphism i;         // C1 -> C0
  Morphism down, up;  // C1 -> C2
  Morphism star;      // C1 -> C2
};

/// A cocategory with C0 = U, optionally carrying symmetry and lattice maps.
template <class Ctx>
struct Interval : Cocategory<Ctx> {
  using Morphism = typename Ctx::Morphism;

  std::string name;
  std::optional<Morphism> sigma;  // I -> I
  std::optional<Morphism> meet;   // I (x) I -> I
  std::optional<Morphism> join;   // I (x) I -> I
};

/// cell : A (x) I -> B restricting to src along bottom and tgt along top.
template <class Ctx>
struct Homotopy {
  typename Ctx::Morphism src, tgt, cell;
};

}  // namespace cointerval::cocat
