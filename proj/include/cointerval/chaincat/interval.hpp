#pragma once

#include "cointerval/chaincat/context.hpp"

namespace cointerval::chaincat {

/// The interval with I^0 = R, I^1 = (R -> R^2), I^2 = (R^2 -> R^3), carrying
/// its symmetry and the meet/join maps.
cocat::Interval<ChainContext> interval_I(const Ring& ring);

/// Two 2-cells glued along one square of 1-cells. phi and psi: I (x) I -> C
/// are the identity below degree 2 and differ only in degree 2.
struct Counterexample {
  ChainComplex C;
  ChainMap phi, psi;
};
Counterexample counterexample_C(const Ring& ring);

}  // namespace cointerval::chaincat
