#pragma once

#include "cointerval/cocat/structures.hpp"

namespace cointerval::cocat {

/// Everything U and the identity; meet and join are lambda_U.
template <MonoidalContext Ctx>
Interval<Ctx> discrete_interval(const Ctx& ctx) {
  const auto U = ctx.unit();
  const auto id = ctx.id(U);
  return Interval<Ctx>{{U, U, U, id, id, id, id, id, id}, "discrete", id, ctx.lambda(U),
                       ctx.lambda(U)};
}

/// The initial interval U + U with bot, top the two injections. Meet and
/// join are read off the four injections of (U + U) (x) (U + U).
template <MonoidalContext Ctx>
Interval<Ctx> coproduct_interval(const Ctx& ctx) {
  const auto U = ctx.unit();
  const auto X = ctx.coproduct(U, U);
  const auto& in1 = X.in_f;
  const auto& in2 = X.in_g;
  const auto P = ctx.pushout(in2, in1);
  const std::vector legs{in1, in2};
  Interval<Ctx> I{{U, X.object, P.object, in1, in2,
                   ctx.induced(X.object, legs, {ctx.id(U), ctx.id(U)}), P.in_f, P.in_g,
                   ctx.induced(X.object, legs,
                               {ctx.compose(P.in_f, in1), ctx.compose(P.in_g, in2)})},
                  "U+U",
                  ctx.induced(X.object, legs, {in2, in1}),
                  std::nullopt,
                  std::nullopt};
  const auto XX = ctx.tensor(X.object, X.object);
  std::vector<typename Ctx::Morphism> quad;
  for (const auto* a : {&in1, &in2})
    for (const auto* b : {&in1, &in2})
      quad.push_back(ctx.compose(ctx.tensor(*a, *b), ctx.lambda_inv(U)));
  I.meet = ctx.induced(XX, quad, {in1, in1, in1, in2});
  I.join = ctx.induced(XX, quad, {in1, in2, in2, in2});
  return I;
}

}  // namespace cointerval::cocat
