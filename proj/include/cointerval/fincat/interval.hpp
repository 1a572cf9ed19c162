#pragma once

#include "cointerval/fincat/context.hpp"

namespace cointerval::fincat {

/// The arrow category bot -> top with its meet and join; no symmetry.
cocat::Interval<FinContext> interval_two(const FinContext& ctx);

/// The free groupoid on one arrow u : bot -> top (inverse d), with the
/// symmetry swapping bot and top and the same meet and join on objects.
cocat::Interval<FinContext> interval_iso(const FinContext& ctx);

/// The pushout of top and bot, whose apex is the object of cocomposable coarrows.
FinContext::Colimit cocomposable(const FinContext& ctx, const CatPtr& I, int bot, int top);

/// Interval on I with the given endpoints; `star` sends each generator of I to
/// a path in two.object. `star_objects` defaults to bot -> lower bot, every
/// other object -> its upper copy. Meet and join are attached when thin_lattice applies.
cocat::Interval<FinContext> make_interval(const FinContext& ctx, const CatPtr& I,
                                          const std::string& name, int bot, int top,
                                          const FinContext::Colimit& two,
                                          const std::vector<Path>& star,
                                          std::vector<int> star_objects = {});

/// Meet and join on a category whose hom-sets are singletons wherever the
/// object-level lattice needs an arrow: (s, t) goes to top iff both are top
/// (meet), to bot iff both are bot (join).
std::pair<Functor, Functor> thin_lattice(const FinContext& ctx, const CatPtr& I, int bot, int top);

}  // namespace cointerval::fincat
