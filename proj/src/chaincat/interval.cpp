#include "cointerval/chaincat/interval.hpp"

namespace cointerval::chaincat {

namespace {

Matrix M(const Ring& r, std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  return Matrix::from_rows(r, cols, rows);
}

}  // namespace

cocat::Interval<ChainContext> interval_I(const Ring& r) {
  ChainComplex I0 = ChainComplex::unit(r);
  ChainComplex I1(r, {2, 1}, {M(r, 1, {{1}, {-1}})});
  ChainComplex I2(r, {3, 2}, {M(r, 2, {{1, 0}, {-1, 1}, {0, -1}})});
  ChainComplex II = tensor_complexes(I1, I1);

  cocat::Interval<ChainContext> I{
      {I0, I1, I2,
       ChainMap(I0, I1, {M(r, 1, {{1}, {0}})}),
       ChainMap(I0, I1, {M(r, 1, {{0}, {1}})}),
       ChainMap(I1, I0, {M(r, 2, {{1, 1}})}),
       ChainMap(I1, I2, {M(r, 2, {{1, 0}, {0, 1}, {0, 0}}), M(r, 1, {{1}, {0}})}),
       ChainMap(I1, I2, {M(r, 2, {{0, 0}, {1, 0}, {0, 1}}), M(r, 1, {{0}, {1}})}),
       ChainMap(I1, I2, {M(r, 2, {{1, 0}, {0, 0}, {0, 1}}), M(r, 1, {{1}, {1}})})},
      "I",
      ChainMap(I1, I1, {M(r, 2, {{0, 1}, {1, 0}}), M(r, 1, {{-1}})}),
      // Degree 1 of I (x) I is (e(x)a0, e(x)a1, a0(x)e, a1(x)e) = (x, y, v, w).
      ChainMap(II, I1, {M(r, 4, {{1, 1, 1, 0}, {0, 0, 0, 1}}), M(r, 4, {{0, 1, 0, 1}})}),
      ChainMap(II, I1, {M(r, 4, {{1, 0, 0, 0}, {0, 1, 1, 1}}), M(r, 4, {{1, 0, 1, 0}})}),
  };
  return I;
}

Counterexample counterexample_C(const Ring& r) {
  ChainComplex C(r, {4, 4, 2},
                 {M(r, 4, {{1, 0, 1, 0}, {0, 1, -1, 0}, {-1, 0, 0, 1}, {0, -1, 0, -1}}),
                  M(r, 2, {{1, 1}, {-1, -1}, {-1, -1}, {1, 1}})});
  ChainComplex I1(r, {2, 1}, {M(r, 1, {{1}, {-1}})});
  ChainComplex II = tensor_complexes(I1, I1);
  Matrix id4 = Matrix::identity(r, 4);
  // Degree 2 carries a sign: d(e(x)e) = -(1,-1,-1,1) under the Koszul rule.
  return Counterexample{C, ChainMap(II, C, {id4, id4, M(r, 1, {{-1}, {0}})}),
                        ChainMap(II, C, {id4, id4, M(r, 1, {{0}, {-1}})})};
}

}  // namespace cointerval::chaincat
