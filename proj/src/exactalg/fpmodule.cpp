#include "cointerval/exactalg/fpmodule.hpp"

#include "cointerval/error.hpp"

namespace cointerval::exactalg {

FpModule::FpModule(std::size_t generators, Matrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_)
    throw DimensionMismatch("relation matrix has " + std::to_string(relations_.rows()) +
                            " rows for " + std::to_string(generators_) + " generators");
}

FpModule FpModule::free(const Ring& ring, std::size_t n) { return FpModule(n, Matrix(ring, n, 0)); }

std::vector<Scalar> FpModule::invariant_factors() const {
  SmithForm s = smith_normal_form(relations_);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.invariant(i));
  return out;
}

bool FpModule::equal(const Matrix& x, const Matrix& y) const {
  Matrix diff = x - y;
  if (diff.is_zero()) return true;
  return solve_linear(relations_, diff).has_value();
}

std::optional<FpModule::FreeBasis> FpModule::free_basis() const {
  const Ring& r = ring();
  SmithForm s = smith_normal_form(relations_);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!r.is_unit(s.invariant(i))) return std::nullopt;
  const std::size_t n = generators_ - s.rank;
  return FreeBasis{n, s.U.block(s.rank, 0, n, generators_),
                   s.Uinv.block(0, s.rank, generators_, n)};
}

Matrix ModulePushout::factor(const Matrix& h, const Matrix& k) const {
  if (h.rows() != k.rows()) throw DimensionMismatch("cocone legs have different targets");
  if (!(h * f == k * g)) throw NonCommutingCocone("h*f != k*g");
  return Matrix::hstack(h, k);
}

ModulePushout pushout_modules(const Matrix& f, const Matrix& g) {
  if (f.cols() != g.cols())
    throw DimensionMismatch("pushout legs have different sources: " + std::to_string(f.cols()) +
                            " vs " + std::to_string(g.cols()));
  if (!(f.ring() == g.ring())) throw RingMismatch("pushout legs over different rings");
  const Ring& ring = f.ring();
  const std::size_t b = f.rows(), c = g.rows();
  Matrix inB(ring, b + c, b), inC(ring, b + c, c);
  inB.set_block(0, 0, Matrix::identity(ring, b));
  inC.set_block(b, 0, Matrix::identity(ring, c));
  return ModulePushout{FpModule(b + c, Matrix::vstack(f, -g)), std::move(inB), std::move(inC), f,
                       g};
}

}  // namespace cointerval::exactalg
