#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cointerval::fincat {

/// Generator indices composed left to right ("f;g" is f then g).
using Word = std::vector<int>;

/// Length first, then lexicographic by generator index.
bool shortlex_less(const Word& a, const Word& b);

/// Oriented rule lhs -> rhs with rhs shortlex-smaller than lhs.
struct Rule {
  Word lhs, rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A finite string rewriting system. Normal forms are computed by leftmost
/// innermost rewriting; they are unique when the system is complete.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }

  /// Throws DepthExceeded after `step_budget` rewrite steps.
  Word normalize(const Word& w, std::size_t step_budget) const;
  /// True when no rule's left side ends at the last letter of w.
  bool suffix_irreducible(const Word& w) const;
  bool irreducible(const Word& w) const;

 private:
  // Leftmost rule occurrence in w at or after `from`: (position, rule index).
  std::pair<std::size_t, std::size_t> find_redex(const Word& w, std::size_t from) const;

  std::vector<Rule> rules_;
  std::unordered_map<int, std::vector<std::size_t>> by_first_;
  std::unordered_map<int, std::vector<std::size_t>> by_last_;
  std::size_t max_lhs_ = 0;
};

struct CompletionLimits {
  std::size_t depth_bound = 12;  // longest admissible rule left side
  std::size_t max_rules = 4000;
  std::size_t max_rounds = 64;
};

/// Knuth-Bendix completion of the given equations under shortlex order.
/// The result is interreduced and every critical pair is joinable. Throws
/// DepthExceeded when a limit is hit before the system stabilizes.
RewriteSystem complete(const std::vector<std::pair<Word, Word>>& equations,
                       const CompletionLimits& limits);

/// Every critical pair of `sys` that does not rejoin; empty for a complete system.
std::vector<std::pair<Word, Word>> unjoinable_critical_pairs(const RewriteSystem& sys,
                                                             std::size_t step_budget);

}  // namespace cointerval::fincat
