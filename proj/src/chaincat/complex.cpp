#include "cointerval/chaincat/complex.hpp"

#include <algorithm>

#include "cointerval/error.hpp"

namespace cointerval::chaincat {

namespace {

std::string ranks_str(const std::vector<std::size_t>& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("complexes over " + a.tag() + " and " + b.tag());
}

std::size_t tensor_offset(const ChainComplex& X, const ChainComplex& Y, std::size_t p,
                          std::size_t q) {
  const std::size_t n = p + q;
  std::size_t off = 0;
  for (std::size_t pp = n + 1; pp-- > p + 1;) off += X.rank(pp) * Y.rank(n - pp);
  return off;
}

std::size_t tensor_rank(const ChainComplex& X, const ChainComplex& Y, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t p = 0; p <= n; ++p) r += X.rank(p) * Y.rank(n - p);
  return r;
}

}  // namespace

ChainComplex::ChainComplex(Ring ring, std::vector<std::size_t> ranks,
                           std::vector<Matrix> differentials, std::size_t max_deg) {
  const std::vector<std::size_t> given = ranks;
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
  if (!ranks.empty() && ranks.size() - 1 > max_deg)
    throw DimensionMismatch("complex " + ranks_str(given) + " exceeds maxDeg " +
                            std::to_string(max_deg));
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const Matrix& m = differentials[k];
    auto rk = [&](std::size_t n) { return n < given.size() ? given[n] : 0; };
    if (m.rows() != rk(k) || m.cols() != rk(k + 1))
      throw DimensionMismatch("d_" + std::to_string(k + 1) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              " for ranks " + ranks_str(given));
    if (!(m.ring() == ring)) throw RingMismatch("differential over " + m.ring().tag());
  }
  std::vector<Matrix> d;
  for (std::size_t n = 1; n < ranks.size(); ++n)
    d.push_back(n - 1 < differentials.size() ? differentials[n - 1]
                                             : Matrix(ring, ranks[n - 1], ranks[n]));
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (!(d[k] * d[k + 1]).is_zero())
      throw InvalidMorphism("d_" + std::to_string(k + 1) + " * d_" + std::to_string(k + 2) +
                            " != 0");
  data_ = std::make_shared<const Data>(Data{std::move(ring), std::move(ranks), std::move(d), max_deg});
}

ChainComplex ChainComplex::unit(const Ring& ring, std::size_t max_deg) {
  return ChainComplex(ring, {1}, {}, max_deg);
}

ChainComplex ChainComplex::zero(const Ring& ring, std::size_t max_deg) {
  return ChainComplex(ring, {}, {}, max_deg);
}

Matrix ChainComplex::d(std::size_t n) const {
  if (n >= 1 && n < length()) return data_->d[n - 1];
  return Matrix(ring(), n == 0 ? 0 : rank(n - 1), rank(n));
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.ring() == b.ring() && a.ranks() == b.ranks() && a.data_->d == b.data_->d;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_ring(source_.ring(), target_.ring());
  const std::size_t L = length();
  if (components.size() > L) {
    for (std::size_t n = L; n < components.size(); ++n)
      if (components[n].rows() != 0 || components[n].cols() != 0)
        throw DimensionMismatch("chain map component beyond the complexes' length");
    components.resize(L, Matrix(source_.ring(), 0, 0));
  }
  for (std::size_t n = 0; n < L; ++n) {
    if (n >= components.size()) {
      components_.emplace_back(source_.ring(), target_.rank(n), source_.rank(n));
      continue;
    }
    const Matrix& m = components[n];
    if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n))
      throw DimensionMismatch("component " + std::to_string(n) + " has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected " + std::to_string(target_.rank(n)) + "x" +
                              std::to_string(source_.rank(n)));
    components_.push_back(m);
  }
  for (std::size_t n = 1; n < L; ++n)
    if (!(target_.d(n) * components_[n] == components_[n - 1] * source_.d(n)))
      throw InvalidMorphism("chain map square fails in degree " + std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& X) {
  std::vector<Matrix> c;
  for (std::size_t n = 0; n < X.length(); ++n) c.push_back(Matrix::identity(X.ring(), X.rank(n)));
  return ChainMap(X, X, std::move(c));
}

ChainMap ChainMap::zero(const ChainComplex& X, const ChainComplex& Y) { return ChainMap(X, Y, {}); }

Matrix ChainMap::component(std::size_t n) const {
  if (n < components_.size()) return components_[n];
  return Matrix(source_.ring(), target_.rank(n), source_.rank(n));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(g.source() == f.target()))
    throw NonComposable("chain maps: target " + ranks_str(f.target().ranks()) +
                        " does not match source " + ranks_str(g.source().ranks()));
  std::vector<Matrix> c;
  const std::size_t L = std::max(f.source().length(), g.target().length());
  for (std::size_t n = 0; n < L; ++n) c.push_back(g.component(n) * f.component(n));
  return ChainMap(f.source(), g.target(), std::move(c));
}

std::vector<TensorBlock> tensor_blocks(const ChainComplex& X, const ChainComplex& Y,
                                       std::size_t n) {
  std::vector<TensorBlock> out;
  std::size_t off = 0;
  for (std::size_t p = n + 1; p-- > 0;) {
    const std::size_t q = n - p;
    const std::size_t size = X.rank(p) * Y.rank(q);
    if (size) out.push_back({p, q, off});
    off += size;
  }
  return out;
}

std::size_t tensor_index(const ChainComplex& X, const ChainComplex& Y, std::size_t p,
                         std::size_t i, std::size_t q, std::size_t j) {
  return tensor_offset(X, Y, p, q) + i * Y.rank(q) + j;
}

ChainComplex tensor_complexes(const ChainComplex& X, const ChainComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  const std::size_t max_deg = std::max(X.max_deg(), Y.max_deg());
  if (X.length() == 0 || Y.length() == 0) return ChainComplex::zero(ring, max_deg);
  const std::size_t L = X.length() + Y.length() - 1;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n < L; ++n) ranks.push_back(tensor_rank(X, Y, n));
  std::vector<Matrix> d;
  for (std::size_t n = 1; n < L; ++n) {
    Matrix m(ring, ranks[n - 1], ranks[n]);
    for (const TensorBlock& b : tensor_blocks(X, Y, n)) {
      if (b.p >= 1 && X.rank(b.p - 1) && Y.rank(b.q))
        m.set_block(tensor_offset(X, Y, b.p - 1, b.q), b.offset,
                    Matrix::kronecker(X.d(b.p), Matrix::identity(ring, Y.rank(b.q))));
      if (b.q >= 1 && X.rank(b.p) && Y.rank(b.q - 1)) {
        Matrix k = Matrix::kronecker(Matrix::identity(ring, X.rank(b.p)), Y.d(b.q));
        m.set_block(tensor_offset(X, Y, b.p, b.q - 1), b.offset, b.p % 2 ? -k : k);
      }
    }
    d.push_back(std::move(m));
  }
  return ChainComplex(ring, std::move(ranks), std::move(d), max_deg);
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g) {
  const ChainComplex S = tensor_complexes(f.source(), g.source());
  const ChainComplex T = tensor_complexes(f.target(), g.target());
  std::vector<Matrix> comps;
  const std::size_t L = std::max(S.length(), T.length());
  for (std::size_t n = 0; n < L; ++n) {
    Matrix m(S.ring(), T.rank(n), S.rank(n));
    for (std::size_t p = 0; p <= n; ++p) {
      const std::size_t q = n - p;
      if (!f.source().rank(p) || !g.source().rank(q) || !f.target().rank(p) ||
          !g.target().rank(q))
        continue;
      m.set_block(tensor_offset(f.target(), g.target(), p, q),
                  tensor_offset(f.source(), g.source(), p, q),
                  Matrix::kronecker(f.component(p), g.component(q)));
    }
    comps.push_back(std::move(m));
  }
  return ChainMap(S, T, std::move(comps));
}

namespace {

// A chain map that sends basis vectors to signed basis vectors.
template <class Fn>
ChainMap signed_permutation(const ChainComplex& S, const ChainComplex& T, Fn&& fill) {
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n < std::max(S.length(), T.length()); ++n)
    comps.emplace_back(S.ring(), T.rank(n), S.rank(n));
  fill(comps);
  return ChainMap(S, T, std::move(comps));
}

}  // namespace

ChainMap left_unitor(const ChainComplex& X) {
  ChainComplex UX = tensor_complexes(ChainComplex::unit(X.ring(), X.max_deg()), X);
  return signed_permutation(UX, X, [&](std::vector<Matrix>& c) {
    for (std::size_t n = 0; n < X.length(); ++n) c[n] = Matrix::identity(X.ring(), X.rank(n));
  });
}

ChainMap left_unitor_inv(const ChainComplex& X) {
  ChainComplex UX = tensor_complexes(ChainComplex::unit(X.ring(), X.max_deg()), X);
  return signed_permutation(X, UX, [&](std::vector<Matrix>& c) {
    for (std::size_t n = 0; n < X.length(); ++n) c[n] = Matrix::identity(X.ring(), X.rank(n));
  });
}

ChainMap right_unitor(const ChainComplex& X) {
  ChainComplex XU = tensor_complexes(X, ChainComplex::unit(X.ring(), X.max_deg()));
  return signed_permutation(XU, X, [&](std::vector<Matrix>& c) {
    for (std::size_t n = 0; n < X.length(); ++n) c[n] = Matrix::identity(X.ring(), X.rank(n));
  });
}

ChainMap right_unitor_inv(const ChainComplex& X) {
  ChainComplex XU = tensor_complexes(X, ChainComplex::unit(X.ring(), X.max_deg()));
  return signed_permutation(X, XU, [&](std::vector<Matrix>& c) {
    for (std::size_t n = 0; n < X.length(); ++n) c[n] = Matrix::identity(X.ring(), X.rank(n));
  });
}

namespace {

template <class Fn>
void for_each_triple(const ChainComplex& X, const ChainComplex& Y, const ChainComplex& Z,
                     Fn&& fn) {
  for (std::size_t p = 0; p < X.length(); ++p)
    for (std::size_t q = 0; q < Y.length(); ++q)
      for (std::size_t r = 0; r < Z.length(); ++r)
        for (std::size_t i = 0; i < X.rank(p); ++i)
          for (std::size_t j = 0; j < Y.rank(q); ++j)
            for (std::size_t k = 0; k < Z.rank(r); ++k) fn(p, i, q, j, r, k);
}

}  // namespace

ChainMap associator(const ChainComplex& X, const ChainComplex& Y, const ChainComplex& Z) {
  ChainComplex XY = tensor_complexes(X, Y), YZ = tensor_complexes(Y, Z);
  ChainComplex S = tensor_complexes(XY, Z), T = tensor_complexes(X, YZ);
  return signed_permutation(S, T, [&](std::vector<Matrix>& c) {
    for_each_triple(X, Y, Z, [&](auto p, auto i, auto q, auto j, auto r, auto k) {
      std::size_t s = tensor_index(XY, Z, p + q, tensor_index(X, Y, p, i, q, j), r, k);
      std::size_t t = tensor_index(X, YZ, p, i, q + r, tensor_index(Y, Z, q, j, r, k));
      c[p + q + r].set(t, s, Scalar(1));
    });
  });
}

ChainMap associator_inv(const ChainComplex& X, const ChainComplex& Y, const ChainComplex& Z) {
  ChainComplex XY = tensor_complexes(X, Y), YZ = tensor_complexes(Y, Z);
  ChainComplex S = tensor_complexes(X, YZ), T = tensor_complexes(XY, Z);
  return signed_permutation(S, T, [&](std::vector<Matrix>& c) {
    for_each_triple(X, Y, Z, [&](auto p, auto i, auto q, auto j, auto r, auto k) {
      std::size_t t = tensor_index(XY, Z, p + q, tensor_index(X, Y, p, i, q, j), r, k);
      std::size_t s = tensor_index(X, YZ, p, i, q + r, tensor_index(Y, Z, q, j, r, k));
      c[p + q + r].set(t, s, Scalar(1));
    });
  });
}

ChainMap symmetry(const ChainComplex& X, const ChainComplex& Y) {
  ChainComplex S = tensor_complexes(X, Y), T = tensor_complexes(Y, X);
  return signed_permutation(S, T, [&](std::vector<Matrix>& c) {
    for (std::size_t p = 0; p < X.length(); ++p)
      for (std::size_t q = 0; q < Y.length(); ++q)
        for (std::size_t i = 0; i < X.rank(p); ++i)
          for (std::size_t j = 0; j < Y.rank(q); ++j)
            c[p + q].set(tensor_index(Y, X, q, j, p, i), tensor_index(X, Y, p, i, q, j),
                         Scalar((p * q) % 2 ? -1 : 1));
  });
}

Coproduct coproduct_complexes(const ChainComplex& X, const ChainComplex& Y) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  const std::size_t L = std::max(X.length(), Y.length());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> d;
  for (std::size_t n = 0; n < L; ++n) ranks.push_back(X.rank(n) + Y.rank(n));
  for (std::size_t n = 1; n < L; ++n) {
    Matrix m(ring, ranks[n - 1], ranks[n]);
    m.set_block(0, 0, X.d(n));
    m.set_block(X.rank(n - 1), X.rank(n), Y.d(n));
    d.push_back(std::move(m));
  }
  ChainComplex S(ring, ranks, d, std::max(X.max_deg(), Y.max_deg()));
  std::vector<Matrix> c1, c2;
  for (std::size_t n = 0; n < L; ++n) {
    Matrix a(ring, ranks[n], X.rank(n)), b(ring, ranks[n], Y.rank(n));
    a.set_block(0, 0, Matrix::identity(ring, X.rank(n)));
    b.set_block(X.rank(n), 0, Matrix::identity(ring, Y.rank(n)));
    c1.push_back(std::move(a));
    c2.push_back(std::move(b));
  }
  return Coproduct{S, ChainMap(X, S, std::move(c1)), ChainMap(Y, S, std::move(c2))};
}

Pushout pushout_complexes(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()))
    throw DimensionMismatch("pushout legs have different sources");
  require_same_ring(f.source().ring(), g.source().ring());
  const ChainComplex& B = f.target();
  const ChainComplex& C = g.target();
  const Ring& ring = B.ring();
  const std::size_t L = std::max({B.length(), C.length(), f.source().length()});
  std::vector<exactalg::FpModule::FreeBasis> basis;
  for (std::size_t n = 0; n < L; ++n) {
    exactalg::ModulePushout mp = exactalg::pushout_modules(f.component(n), g.component(n));
    auto fb = mp.P.free_basis();
    if (!fb) throw NotFree("pushout is not free in degree " + std::to_string(n));
    basis.push_back(std::move(*fb));
  }
  std::vector<std::size_t> ranks;
  for (const auto& b : basis) ranks.push_back(b.rank);
  std::vector<Matrix> d;
  for (std::size_t n = 1; n < L; ++n) {
    Matrix sum(ring, B.rank(n - 1) + C.rank(n - 1), B.rank(n) + C.rank(n));
    sum.set_block(0, 0, B.d(n));
    sum.set_block(B.rank(n - 1), B.rank(n), C.d(n));
    d.push_back(basis[n - 1].projection * sum * basis[n].section);
  }
  ChainComplex P(ring, ranks, d, std::max(B.max_deg(), C.max_deg()));
  std::vector<Matrix> cf, cg;
  for (std::size_t n = 0; n < L; ++n) {
    const Matrix& pi = basis[n].projection;
    cf.push_back(pi.block(0, 0, pi.rows(), B.rank(n)));
    cg.push_back(pi.block(0, B.rank(n), pi.rows(), C.rank(n)));
  }
  return Pushout{P, ChainMap(B, P, std::move(cf)), ChainMap(C, P, std::move(cg))};
}

ChainMap induced_map(const ChainComplex& Q, const std::vector<ChainMap>& legs,
                     const std::vector<ChainMap>& maps) {
  if (legs.empty() || legs.size() != maps.size())
    throw DimensionMismatch("induced_map needs matching, nonempty legs and maps");
  const ChainComplex& T = maps.front().target();
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!(legs[k].target() == Q)) throw NonComposable("leg does not land in the colimit object");
    if (!(maps[k].target() == T)) throw NonCommutingCocone("cocone maps have different targets");
    if (!(legs[k].source() == maps[k].source()))
      throw NonCommutingCocone("cocone map source differs from its leg");
  }
  const Ring& ring = Q.ring();
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n < Q.length(); ++n) {
    Matrix L(ring, Q.rank(n), 0), M(ring, T.rank(n), 0);
    for (std::size_t k = 0; k < legs.size(); ++k) {
      L = Matrix::hstack(L, legs[k].component(n));
      M = Matrix::hstack(M, maps[k].component(n));
    }
    exactalg::SmithForm s = exactalg::smith_normal_form(L);
    bool surjective = s.rank == Q.rank(n);
    for (std::size_t i = 0; i < s.rank && surjective; ++i)
      surjective = ring.is_unit(s.invariant(i));
    if (!surjective)
      throw NonCommutingCocone("legs are not jointly surjective in degree " + std::to_string(n));
    auto X = exactalg::solve_linear(L.transpose(), M.transpose());
    if (!X) throw NonCommutingCocone("cocone does not commute in degree " + std::to_string(n));
    comps.push_back(X->transpose());
  }
  return ChainMap(Q, T, std::move(comps));
}

MapEnumeration enumerate_chain_maps(const ChainComplex& X, const ChainComplex& Y, long box,
                                    std::size_t cap) {
  require_same_ring(X.ring(), Y.ring());
  const Ring& ring = X.ring();
  const std::size_t L = std::max(X.length(), Y.length());
  // Unknowns: entries of every component, degree-major then row-major.
  std::vector<std::size_t> base(L + 1, 0);
  for (std::size_t n = 0; n < L; ++n) base[n + 1] = base[n] + Y.rank(n) * X.rank(n);
  const std::size_t N = base[L];
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t n = 1; n < L; ++n) {
    const Matrix dY = Y.d(n), dX = X.d(n);
    for (std::size_t a = 0; a < Y.rank(n - 1); ++a)
      for (std::size_t b = 0; b < X.rank(n); ++b) {
        std::vector<Scalar> row(N, Scalar(0));
        for (std::size_t k = 0; k < Y.rank(n); ++k)
          row[base[n] + k * X.rank(n) + b] += dY(a, k);
        for (std::size_t k = 0; k < X.rank(n - 1); ++k)
          row[base[n - 1] + a * X.rank(n - 1) + k] -= dX(k, b);
        rows.push_back(std::move(row));
      }
  }
  Matrix constraints = Matrix::from_rows(ring, N, rows);
  Matrix K = exactalg::kernel_basis(constraints);

  MapEnumeration out;
  out.solution_rank = K.cols();
  std::vector<Scalar> values;  // coefficient alphabet, small magnitudes first
  if (ring.kind() == Ring::Kind::IntegersMod) {
    for (long v = 0; v < ring.modulus().get_si(); ++v) values.emplace_back(v);
    out.exhaustive = true;
  } else {
    values.emplace_back(0);
    for (long v = 1; v <= box; ++v) values.emplace_back(v), values.emplace_back(-v);
    out.exhaustive = K.cols() == 0;
  }
  std::vector<std::size_t> digit(K.cols(), 0);
  for (;;) {
    if (out.maps.size() == cap) {
      out.capped = true;
      out.exhaustive = false;
      break;
    }
    Matrix coeff(ring, K.cols(), 1);
    for (std::size_t c = 0; c < K.cols(); ++c) coeff.set(c, 0, values[digit[c]]);
    Matrix x = K * coeff;
    std::vector<Matrix> comps;
    for (std::size_t n = 0; n < L; ++n) {
      std::vector<Scalar> e(x.entries().begin() + base[n], x.entries().begin() + base[n + 1]);
      comps.emplace_back(ring, Y.rank(n), X.rank(n), std::move(e));
    }
    out.maps.emplace_back(X, Y, std::move(comps));
    std::size_t c = 0;
    while (c < digit.size() && digit[c] + 1 == values.size()) digit[c++] = 0;
    if (c == digit.size()) break;
    ++digit[c];
  }
  return out;
}

}  // namespace cointerval::chaincat
