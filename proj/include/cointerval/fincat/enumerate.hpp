#pragma once

#include "cointerval/fincat/category.hpp"

namespace cointerval::fincat {

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

/// Every functor C -> D, ordered by object images then by generator images
/// (morphism indices of D). Throws CapExceeded when a category is not finite
/// or the count passes `cap`.
std::vector<Functor> enumerate_functors(const CatPtr& C, const CatPtr& D,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Every natural transformation F => G, ordered by component indices.
std::vector<NatTrans> enumerate_nat_trans(const Functor& F, const Functor& G,
                                          std::size_t cap = kDefaultEnumerationCap);

bool is_natural(const Functor& F, const Functor& G, const NatTrans& a);

/// a then b, componentwise.
NatTrans vertical(const CatPtr& D, const NatTrans& a, const NatTrans& b);

/// Components of a cell A x I -> B read along generator `g` of the factor I:
/// the component at x is the image of (id_x, g).
NatTrans cell_components(const Functor& cell, int g = 0);

/// Inverse of an isomorphism of categories. Generators hit letter for letter
/// are inverted directly, the rest through the source's morphism table.
/// Throws InvalidMorphism when F is not invertible.
Functor inverse_relabelling(const Functor& F);

}  // namespace cointerval::fincat
