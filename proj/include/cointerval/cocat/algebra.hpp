#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cointerval/cocat/report.hpp"
#include "cointerval/cocat/structures.hpp"
#include "cointerval/error.hpp"

namespace cointerval::cocat {

/// Composites used throughout the generic layer. Associators are named by
/// direction: to_right is (X Y) Z -> X (Y Z), to_left the reverse.
template <MonoidalContext Ctx>
class Algebra {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;

  explicit Algebra(const Ctx& ctx) : ctx_(ctx) {}
  const Ctx& ctx() const { return ctx_; }

  /// f_n after ... after f_1, written right to left as in c(f_n, ..., f_1).
  template <class... Ms>
  Morphism c(const Morphism& g, const Morphism& f, const Ms&... rest) const {
    if constexpr (sizeof...(rest) == 0)
      return ctx_.compose(g, f);
    else
      return ctx_.compose(g, c(f, rest...));
  }
  Morphism t(const Morphism& f, const Morphism& g) const { return ctx_.tensor(f, g); }
  Object t(const Object& X, const Object& Y) const { return ctx_.tensor(X, Y); }
  Morphism id(const Object& X) const { return ctx_.id(X); }
  bool eq(const Morphism& f, const Morphism& g) const { return ctx_.equal(f, g); }

  Morphism to_right(const Object& X, const Object& Y, const Object& Z) const {
    return ctx_.alpha(X, Y, Z);
  }
  Morphism to_left(const Object& X, const Object& Y, const Object& Z) const {
    return ctx_.alpha_inv(X, Y, Z);
  }

  /// [h, k] out of a colimit apex Q along its two legs.
  Morphism pair(const Object& Q, const Morphism& leg_f, const Morphism& leg_g, const Morphism& h,
                const Morphism& k) const {
    return ctx_.induced(Q, {leg_f, leg_g}, {h, k});
  }

  nlohmann::json witness(const Morphism& lhs, const Morphism& rhs) const {
    return {{"lhs", ctx_.to_json(lhs)}, {"rhs", ctx_.to_json(rhs)}};
  }
  void expect_eq(CheckReport& r, const std::string& name, const Morphism& lhs,
                 const Morphism& rhs) const {
    const bool ok = eq(lhs, rhs);
    r.expect(name, ok, ok ? nlohmann::json() : witness(lhs, rhs));
  }

  /// Runs `body`, turning bounded-search failures into inconclusive items and
  /// any other library error into a failed item named `name`.
  void guard(CheckReport& r, const std::string& name, const std::function<void()>& body) const {
    try {
      body();
    } catch (const DepthExceeded& e) {
      r.inconclusive(name, e.what());
    } catch (const CapExceeded& e) {
      r.inconclusive(name, e.what());
    } catch (const Error& e) {
      r.fail(name, {{"error", e.what()}});
    }
  }

 private:
  const Ctx& ctx_;
};

/// The induced 2-category structure on maps A -> B.
template <MonoidalContext Ctx>
class Cells : public Algebra<Ctx> {
 public:
  using Object = typename Ctx::Object;
  using Morphism = typename Ctx::Morphism;
  using Algebra<Ctx>::c;
  using Algebra<Ctx>::t;
  using Algebra<Ctx>::id;
  using Algebra<Ctx>::eq;

  Cells(const Ctx& ctx, const Interval<Ctx>& I) : Algebra<Ctx>(ctx), I_(I) {}
  const Interval<Ctx>& interval() const { return I_; }
  const Object& I() const { return I_.C1; }

  /// A -> A (x) I -> B restricted along t = bot or top.
  Morphism face(const Object& A, const Morphism& cell, const Morphism& t_) const {
    return c(cell, t(id(A), t_), this->ctx().rho_inv(A));
  }
  Morphism dom(const Object& A, const Morphism& cell) const { return face(A, cell, I_.bot); }
  Morphism cod(const Object& A, const Morphism& cell) const { return face(A, cell, I_.top); }

  /// The identity cell on f : A -> B.
  Morphism identity(const Object& A, const Morphism& f) const {
    return c(f, this->ctx().rho(A), t(id(A), I_.i));
  }

  /// eta then gamma, via [eta, gamma] o (A (x) star). Throws BoundaryMismatch.
  Morphism vcomp(const Object& A, const Morphism& eta, const Morphism& gamma) const {
    if (!eq(cod(A, eta), dom(A, gamma)))
      throw BoundaryMismatch("vertical composite: codomain of the first cell is not the domain of the second");
    const Object A2 = t(A, I_.C2);
    const Morphism h = this->pair(A2, t(id(A), I_.down), t(id(A), I_.up), eta, gamma);
    return c(h, t(id(A), I_.star));
  }

  /// gamma * eta for eta on A -> B and gamma on B -> C:
  /// gamma o (eta (x) I) o alpha o (A (x) Delta).
  Morphism hcomp(const Object& A, const Morphism& eta, const Morphism& gamma) const {
    return c(gamma, t(eta, id(I())), this->to_left(A, I(), I()), t(id(A), delta()));
  }

  /// Delta = [(bot (x) I) o lambda^-1, (I (x) top) o rho^-1] o star.
  Morphism delta() const {
    if (!delta_) {
      const Morphism left = c(t(I_.bot, id(I())), this->ctx().lambda_inv(I()));
      const Morphism right = c(t(id(I()), I_.top), this->ctx().rho_inv(I()));
      delta_ = c(this->pair(I_.C2, I_.down, I_.up, left, right), I_.star);
    }
    return *delta_;
  }

  /// A vcomp inverse of `cell` among `candidates`, if any.
  std::optional<Morphism> inverse_among(const Object& A, const Morphism& cell,
                                        const std::vector<Morphism>& candidates) const {
    const Morphism f = dom(A, cell), g = cod(A, cell);
    const Morphism one_f = identity(A, f), one_g = identity(A, g);
    for (const Morphism& x : candidates) {
      if (!eq(dom(A, x), g) || !eq(cod(A, x), f)) continue;
      if (eq(vcomp(A, cell, x), one_f) && eq(vcomp(A, x, cell), one_g)) return x;
    }
    return std::nullopt;
  }

 private:
  const Interval<Ctx>& I_;
  mutable std::optional<Morphism> delta_;
};

/// The four edges of a square phi : B (x) (I (x) I) -> A in the order
/// (left-bot, left-top, right-bot, right-top).
template <MonoidalContext Ctx>
std::vector<typename Ctx::Morphism> boundary(const Ctx& ctx, const Interval<Ctx>& I,
                                             const typename Ctx::Object& B,
                                             const typename Ctx::Morphism& phi) {
  Algebra<Ctx> a(ctx);
  const auto& X = I.C1;
  const auto idB = ctx.id(B), idI = ctx.id(X);
  auto left = [&](const auto& t) {
    return a.c(phi, a.t(idB, a.t(t, idI)), a.t(idB, ctx.lambda_inv(X)));
  };
  auto right = [&](const auto& t) {
    return a.c(phi, a.t(idB, a.t(idI, t)), a.t(idB, ctx.rho_inv(X)));
  };
  return {left(I.bot), left(I.top), right(I.bot), right(I.top)};
}

}  // namespace cointerval::cocat
