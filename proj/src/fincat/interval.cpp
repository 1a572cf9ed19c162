#include "cointerval/fincat/interval.hpp"

#include "cointerval/error.hpp"

namespace cointerval::fincat {

namespace {

Functor point(const FinContext& ctx, const CatPtr& I, int obj) {
  return Functor(ctx.unit(), I, {obj}, {});
}

Functor bang(const FinContext& ctx, const CatPtr& I) {
  return Functor(I, ctx.unit(), std::vector<int>(I->objects().size(), 0),
                 std::vector<Path>(I->generators().size(), Path{0, 0, {}}));
}

}  // namespace

FinContext::Colimit cocomposable(const FinContext& ctx, const CatPtr& I, int bot, int top) {
  return ctx.pushout(point(ctx, I, top), point(ctx, I, bot));
}

cocat::Interval<FinContext> make_interval(const FinContext& ctx, const CatPtr& I,
                                          const std::string& name, int bot, int top,
                                          const FinContext::Colimit& two,
                                          const std::vector<Path>& star,
                                          std::vector<int> obj) {
  if (obj.empty())
    for (int x = 0; x < int(I->objects().size()); ++x)
      obj.push_back(x == bot ? two.in_f.object(x) : two.in_g.object(x));
  cocat::Interval<FinContext> out{{ctx.unit(), I, two.object, point(ctx, I, bot), point(ctx, I, top),
                                   bang(ctx, I), two.in_f, two.in_g,
                                   Functor(I, two.object, obj, star)},
                                  name, std::nullopt, std::nullopt, std::nullopt};
  try {
    auto [meet, join] = thin_lattice(ctx, I, bot, top);
    out.meet = meet;
    out.join = join;
  } catch (const MissingLattice&) {
  }
  return out;
}

std::pair<Functor, Functor> thin_lattice(const FinContext& ctx, const CatPtr& I, int bot, int top) {
  if (I->objects().size() != 2) throw MissingLattice(I->name() + " does not have two objects");
  CatPtr II = ctx.tensor(I, I);
  std::vector<int> meet(4), join(4);
  for (int s : {bot, top})
    for (int t : {bot, top}) {
      const int o = product_object(*II, s, t);
      meet[o] = (s == top && t == top) ? top : bot;
      join[o] = (s == bot && t == bot) ? bot : top;
    }
  try {
    return {thin_functor(II, I, meet), thin_functor(II, I, join)};
  } catch (const InvalidMorphism& e) {
    throw MissingLattice(std::string("no thin lattice on ") + I->name() + ": " + e.what());
  }
}

cocat::Interval<FinContext> interval_two(const FinContext& ctx) {
  CatPtr I = Category::presented("2", {"bot", "top"}, {{"u", 0, 1}}, {}, ctx.limits());
  FinContext::Colimit two = cocomposable(ctx, I, 0, 1);
  // C2 generators: u.1 (lower half), u.2 (upper half).
  return make_interval(ctx, I, "2", 0, 1, two, {Path{0, 2, {0, 1}}});
}

cocat::Interval<FinContext> interval_iso(const FinContext& ctx) {
  CatPtr I = Category::presented("I", {"bot", "top"}, {{"u", 0, 1}, {"d", 1, 0}},
                                 {{Path{0, 0, {0, 1}}, Path{0, 0, {}}},
                                  {Path{1, 1, {1, 0}}, Path{1, 1, {}}}},
                                 ctx.limits());
  FinContext::Colimit two = cocomposable(ctx, I, 0, 1);
  // C2 generators: u.1, d.1 (lower), u.2, d.2 (upper).
  cocat::Interval<FinContext> out =
      make_interval(ctx, I, "I", 0, 1, two, {Path{0, 2, {0, 2}}, Path{2, 0, {3, 1}}});
  out.sigma = Functor(I, I, {1, 0}, {Path{1, 0, {1}}, Path{0, 1, {0}}});
  return out;
}

}  // namespace cointerval::fincat
