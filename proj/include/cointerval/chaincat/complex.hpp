#pragma once

#include <memory>
#include <vector>

#include "cointerval/exactalg/fpmodule.hpp"

namespace cointerval::chaincat {

using exactalg::Matrix;
using exactalg::Ring;
using exactalg::Scalar;

inline constexpr std::size_t kDefaultMaxDeg = 8;

/// Bounded complex of finitely generated free modules. Ranks are trimmed so
/// the last listed degree is nonzero; d(n) has shape rank(n-1) x rank(n).
class ChainComplex {
 public:
  /// differentials[k] is d_{k+1}. Missing trailing differentials are zero.
  /// Throws DimensionMismatch on bad shapes and InvalidMorphism if d*d != 0.
  ChainComplex(Ring ring, std::vector<std::size_t> ranks, std::vector<Matrix> differentials,
               std::size_t max_deg = kDefaultMaxDeg);

  /// The tensor unit: R concentrated in degree 0.
  static ChainComplex unit(const Ring& ring, std::size_t max_deg = kDefaultMaxDeg);
  static ChainComplex zero(const Ring& ring, std::size_t max_deg = kDefaultMaxDeg);

  const Ring& ring() const { return data_->ring; }
  std::size_t max_deg() const { return data_->max_deg; }
  /// One past the highest degree with nonzero rank.
  std::size_t length() const { return data_->ranks.size(); }
  std::size_t rank(std::size_t n) const { return n < length() ? data_->ranks[n] : 0; }
  const std::vector<std::size_t>& ranks() const { return data_->ranks; }
  /// d_n for n >= 1.
  Matrix d(std::size_t n) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  struct Data {
    Ring ring;
    std::vector<std::size_t> ranks;
    std::vector<Matrix> d;  // d[k] = d_{k+1}
    std::size_t max_deg;
  };
  std::shared_ptr<const Data> data_;
};

/// Degreewise matrices commuting with the differentials.
class ChainMap {
 public:
  /// components[n] : source_n -> target_n; missing trailing components are zero.
  /// Throws InvalidMorphism when a square fails to commute.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components);

  static ChainMap identity(const ChainComplex& X);
  static ChainMap zero(const ChainComplex& X, const ChainComplex& Y);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  Matrix component(std::size_t n) const;
  std::size_t length() const { return std::max(source_.length(), target_.length()); }

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex source_, target_;
  std::vector<Matrix> components_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

// Tensor product with basis order: in degree n, blocks X_p (x) Y_{n-p} for
// p = n down to 0, and inside a block index i * rank(Y_q) + j.
struct TensorBlock {
  std::size_t p, q, offset;
};
std::vector<TensorBlock> tensor_blocks(const ChainComplex& X, const ChainComplex& Y,
                                       std::size_t n);
/// Position of e_i (deg p) (x) e_j (deg q) in (X (x) Y)_{p+q}.
std::size_t tensor_index(const ChainComplex& X, const ChainComplex& Y, std::size_t p,
                         std::size_t i, std::size_t q, std::size_t j);

ChainComplex tensor_complexes(const ChainComplex& X, const ChainComplex& Y);
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g);

ChainMap left_unitor(const ChainComplex& X);       // U (x) X -> X
ChainMap left_unitor_inv(const ChainComplex& X);   // X -> U (x) X
ChainMap right_unitor(const ChainComplex& X);      // X (x) U -> X
ChainMap right_unitor_inv(const ChainComplex& X);  // X -> X (x) U
/// (X (x) Y) (x) Z -> X (x) (Y (x) Z) and its inverse.
ChainMap associator(const ChainComplex& X, const ChainComplex& Y, const ChainComplex& Z);
ChainMap associator_inv(const ChainComplex& X, const ChainComplex& Y, const ChainComplex& Z);
/// x (x) y |-> (-1)^{|x||y|} y (x) x.
ChainMap symmetry(const ChainComplex& X, const ChainComplex& Y);

struct Coproduct {
  ChainComplex object;
  ChainMap in1, in2;
};
Coproduct coproduct_complexes(const ChainComplex& X, const ChainComplex& Y);

/// Degreewise pushout, normalized to a free basis. Throws NotFree when some
/// degree has a non-unit invariant factor.
struct Pushout {
  ChainComplex object;
  ChainMap in_f, in_g;
};
Pushout pushout_complexes(const ChainMap& f, const ChainMap& g);

/// The unique M : Q -> T with M * legs[k] = maps[k]. Legs must share the
/// target Q and be jointly surjective in every degree; throws
/// NonCommutingCocone when no such M exists.
ChainMap induced_map(const ChainComplex& Q, const std::vector<ChainMap>& legs,
                     const std::vector<ChainMap>& maps);

/// Result of enumerating chain maps through a lattice basis of the solution space.
struct MapEnumeration {
  std::vector<ChainMap> maps;
  std::size_t solution_rank = 0;
  bool exhaustive = false;  // every chain map X -> Y is listed
  bool capped = false;      // the box was truncated at `cap`
};
/// Integer coefficients in [-box, box] on a kernel basis (all residues over Z/p).
MapEnumeration enumerate_chain_maps(const ChainComplex& X, const ChainComplex& Y, long box,
                                    std::size_t cap);

}  // namespace cointerval::chaincat
