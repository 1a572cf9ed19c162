#pragma once

#include "cointerval/fincat/category.hpp"

namespace cointerval::fincat {

/// The terminal category: one object, no generators.
CatPtr terminal_category();

/// Cartesian product of two finite categories. Objects (x, y) are numbered
/// x * |B| + y; generators (a, y) come first, then (x, b). The rewriting system
/// is read off the composition table, so it is complete by construction.
/// Throws CapExceeded when a factor is not finite.
CatPtr product(const CatPtr& A, const CatPtr& B, const Limits& limits = {});

int product_object(const Category& P, int x, int y);
int left_generator(const Category& P, int a, int y);   // (a, id_y)
int right_generator(const Category& P, int x, int b);  // (id_x, b)

Functor product_map(const Functor& F, const Functor& G, const CatPtr& source, const CatPtr& target);
Functor unitor_left(const CatPtr& UX, const CatPtr& X);        // U x X -> X
Functor unitor_left_inv(const CatPtr& X, const CatPtr& UX);    // X -> U x X
Functor unitor_right(const CatPtr& XU, const CatPtr& X);       // X x U -> X
Functor unitor_right_inv(const CatPtr& X, const CatPtr& XU);   // X -> X x U
/// (X x Y) x Z -> X x (Y x Z), both given as products with recorded factors.
Functor associator(const CatPtr& XY_Z, const CatPtr& X_YZ);
Functor swap(const CatPtr& XY, const CatPtr& YX);

struct Cospan {
  CatPtr object;
  Functor in_f, in_g;
};

/// Disjoint union.
Cospan coproduct(const CatPtr& A, const CatPtr& B);

/// Pushout of f : A -> B and g : A -> C by presentation and completion:
/// objects glued along A, generators B + C, relations of both plus f(a) = g(a).
/// in_f * f = in_g * g. Throws DepthExceeded if completion fails.
Cospan pushout(const Functor& f, const Functor& g, const Limits& limits = {});

/// Adds parallel word relations and recompletes; returns the quotient functor.
/// Throws NonParallel when a pair is not parallel.
Functor quotient_by_paths(const CatPtr& C, const std::vector<std::pair<Path, Path>>& relations,
                          const Limits& limits = {});

/// Coequalizes each pair F_k, G_k : S_k -> C. Pairs must agree on objects.
Functor quotient_by_functors(const CatPtr& C,
                             const std::vector<std::pair<Functor, Functor>>& pairs,
                             const Limits& limits = {});

/// The unique M : Q -> T with M * legs[k] = maps[k]. Every object and
/// generator of Q needs a preimage under some leg. Throws NonCommutingCocone
/// when the data does not define a functor or the triangles fail.
Functor induced_functor(const CatPtr& Q, const std::vector<Functor>& legs,
                        const std::vector<Functor>& maps);

/// Functor into a category whose hom-sets between the chosen objects are
/// singletons, determined by its object map.
Functor thin_functor(const CatPtr& source, const CatPtr& target, std::vector<int> objects);

}  // namespace cointerval::fincat
