#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cointerval/fincat/rewriting.hpp"

namespace cointerval::fincat {

struct Generator {
  std::string name;
  int src, tgt;
};

/// A morphism as a composable word; the empty word is the identity at src.
struct Path {
  int src = 0, tgt = 0;
  Word word;
  bool is_identity() const { return word.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

class Category;
using CatPtr = std::shared_ptr<const Category>;

inline constexpr std::size_t kDefaultDepthBound = 12;
inline constexpr std::size_t kDefaultNormalFormCap = 10000;

struct Limits {
  std::size_t depth_bound = kDefaultDepthBound;
  std::size_t normal_form_cap = kDefaultNormalFormCap;
};

/// Factors recorded for categories built as products, so the structural
/// functors can address generators (a, y) and (x, b) directly.
struct ProductInfo {
  CatPtr left, right;
};

/// Finitely presented category with a complete rewriting system.
class Category {
 public:
  /// Completes `relations` (parallel paths) by Knuth-Bendix.
  static CatPtr presented(std::string name, std::vector<std::string> objects,
                          std::vector<Generator> generators,
                          const std::vector<std::pair<Path, Path>>& relations,
                          const Limits& limits = {});
  /// Takes a rewriting system the caller knows to be complete.
  static CatPtr from_complete(std::string name, std::vector<std::string> objects,
                              std::vector<Generator> generators, RewriteSystem rules,
                              const Limits& limits = {}, std::optional<ProductInfo> product = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const RewriteSystem& rewriting() const { return rules_; }
  const Limits& limits() const { return limits_; }
  const std::optional<ProductInfo>& product() const { return product_; }
  int object_index(const std::string& name) const;  // -1 when absent
  int generator_index(const std::string& name) const;

  Path identity(int obj) const;
  Path generator(int g) const;
  /// f then g (diagrammatic order); throws NonComposable.
  Path then(const Path& f, const Path& g) const;
  /// g after f.
  Path compose(const Path& g, const Path& f) const { return then(f, g); }
  /// Throws NonComposable for ill-typed words, DepthExceeded past the budget.
  Path normalize(const Path& p) const;
  bool equal(const Path& a, const Path& b) const { return normalize(a) == normalize(b); }

  /// True when the normal forms number at most the normal-form cap.
  bool finite() const;
  /// Every morphism in normal form. Throws CapExceeded when not finite().
  const std::vector<Path>& morphisms() const;
  /// Indices into morphisms() of the arrows x -> y.
  const std::vector<std::size_t>& hom(int x, int y) const;
  std::size_t morphism_index(const Path& normal) const;

  std::string describe(const Path& p) const;

  /// Same objects count, generator typing and rewriting rules (names ignored).
  bool same_as(const Category& other) const;
  std::size_t structural_hash() const { return hash_; }

 private:
  Category(std::string name, std::vector<std::string> objects, std::vector<Generator> generators,
           RewriteSystem rules, Limits limits, std::optional<ProductInfo> product);
  void materialize() const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Generator> generators_;
  RewriteSystem rules_;
  Limits limits_;
  std::optional<ProductInfo> product_;
  std::size_t hash_ = 0;

  mutable std::once_flag table_once_;
  mutable bool finite_ = false;
  mutable std::vector<Path> table_;
  mutable std::vector<std::vector<std::vector<std::size_t>>> hom_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

/// Functor given on objects and generators; generator images are normal forms.
class Functor {
 public:
  /// Validates typing and that every rewriting rule is preserved.
  Functor(CatPtr source, CatPtr target, std::vector<int> objects, std::vector<Path> generators);

  static Functor identity(const CatPtr& C);
  /// Skips validation; for composites of functors already known to be valid.
  static Functor unchecked(CatPtr source, CatPtr target, std::vector<int> objects,
                           std::vector<Path> generators);

  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  int object(int x) const { return objects_.at(x); }
  const std::vector<int>& object_map() const { return objects_; }
  const Path& generator(int g) const { return generators_.at(g); }
  const std::vector<Path>& generator_map() const { return generators_; }
  Path apply(const Path& p) const;

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  Functor() = default;

  CatPtr source_, target_;
  std::vector<int> objects_;
  std::vector<Path> generators_;
};

/// G after F.
Functor compose(const Functor& G, const Functor& F);

/// The first source rule whose two sides have different images, if any.
std::optional<Rule> first_violated_rule(const CatPtr& source, const CatPtr& target,
                                        const std::vector<int>& objects,
                                        const std::vector<Path>& generators);

/// Components per source object, for functors F, G : C -> D.
struct NatTrans {
  std::vector<Path> components;
  friend bool operator==(const NatTrans&, const NatTrans&) = default;
};

}  // namespace cointerval::fincat
