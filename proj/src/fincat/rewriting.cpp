#include "cointerval/fincat/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "cointerval/error.hpp"

namespace cointerval::fincat {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RewriteSystem::RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    by_first_[rules_[k].lhs.front()].push_back(k);
    by_last_[rules_[k].lhs.back()].push_back(k);
    max_lhs_ = std::max(max_lhs_, rules_[k].lhs.size());
  }
}

std::pair<std::size_t, std::size_t> RewriteSystem::find_redex(const Word& w,
                                                             std::size_t from) const {
  for (std::size_t pos = from; pos < w.size(); ++pos) {
    auto it = by_first_.find(w[pos]);
    if (it == by_first_.end()) continue;
    for (std::size_t k : it->second) {
      const Word& l = rules_[k].lhs;
      if (pos + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + pos))
        return {pos, k};
    }
  }
  return {w.size(), 0};
}

Word RewriteSystem::normalize(const Word& w, std::size_t step_budget) const {
  Word cur = w;
  std::size_t steps = 0;
  std::size_t from = 0;
  for (;;) {
    auto [pos, k] = find_redex(cur, from);
    if (pos == cur.size()) return cur;
    if (++steps > step_budget)
      throw DepthExceeded("normalization exceeded " + std::to_string(step_budget) + " steps");
    const Rule& r = rules_[k];
    Word next(cur.begin(), cur.begin() + pos);
    next.insert(next.end(), r.rhs.begin(), r.rhs.end());
    next.insert(next.end(), cur.begin() + pos + r.lhs.size(), cur.end());
    cur = std::move(next);
    // Only positions that can see the replaced segment may hold a new redex.
    from = pos + 1 > max_lhs_ ? pos + 1 - max_lhs_ : 0;
  }
}

bool RewriteSystem::suffix_irreducible(const Word& w) const {
  if (w.empty()) return true;
  auto it = by_last_.find(w.back());
  if (it == by_last_.end()) return true;
  for (std::size_t k : it->second) {
    const Word& l = rules_[k].lhs;
    if (l.size() <= w.size() && std::equal(l.begin(), l.end(), w.end() - l.size())) return false;
  }
  return true;
}

bool RewriteSystem::irreducible(const Word& w) const { return find_redex(w, 0).first == w.size(); }

namespace {

bool contains(const Word& hay, const Word& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

// Overlaps of l1's suffix with l2's prefix, as the pair of one-step reducts.
template <class Fn>
void for_each_critical_pair(const std::vector<Rule>& rules, Fn&& fn) {
  for (const Rule& a : rules)
    for (const Rule& b : rules)
      for (std::size_t k = 1; k < a.lhs.size() && k < b.lhs.size(); ++k) {
        if (!std::equal(a.lhs.end() - k, a.lhs.end(), b.lhs.begin())) continue;
        Word w1 = a.rhs;
        w1.insert(w1.end(), b.lhs.begin() + k, b.lhs.end());
        Word w2(a.lhs.begin(), a.lhs.end() - k);
        w2.insert(w2.end(), b.rhs.begin(), b.rhs.end());
        fn(std::move(w1), std::move(w2));
      }
}

std::size_t budget_for(std::size_t depth, std::size_t len) {
  return std::max<std::size_t>(4096, depth * (len + 1) * (len + 1));
}

}  // namespace

RewriteSystem complete(const std::vector<std::pair<Word, Word>>& equations,
                       const CompletionLimits& limits) {
  std::vector<Rule> rules;
  std::deque<std::pair<Word, Word>> todo(equations.begin(), equations.end());
  auto nf = [&](const Word& w) {
    return RewriteSystem(rules).normalize(w, budget_for(limits.depth_bound, w.size()));
  };

  for (std::size_t round = 0;; ++round) {
    while (!todo.empty()) {
      auto [a, b] = todo.front();
      todo.pop_front();
      a = nf(a);
      b = nf(b);
      if (a == b) continue;
      if (shortlex_less(a, b)) std::swap(a, b);
      if (a.size() > limits.depth_bound)
        throw DepthExceeded("completion produced a rule of length " + std::to_string(a.size()) +
                            " > depth bound " + std::to_string(limits.depth_bound));
      std::vector<Rule> kept;
      for (Rule& r : rules) {
        if (contains(r.lhs, a))
          todo.emplace_back(r.lhs, r.rhs);
        else
          kept.push_back(std::move(r));
      }
      kept.push_back({a, b});
      rules = std::move(kept);
      RewriteSystem sys(rules);
      for (Rule& r : rules)
        if (!(r.lhs == a)) r.rhs = sys.normalize(r.rhs, budget_for(limits.depth_bound, r.rhs.size()));
      if (rules.size() > limits.max_rules)
        throw DepthExceeded("completion exceeded " + std::to_string(limits.max_rules) + " rules");
    }
    RewriteSystem sys(rules);
    for_each_critical_pair(rules, [&](Word w1, Word w2) {
      std::size_t budget = budget_for(limits.depth_bound, std::max(w1.size(), w2.size()));
      Word n1 = sys.normalize(w1, budget), n2 = sys.normalize(w2, budget);
      if (n1 != n2) todo.emplace_back(std::move(n1), std::move(n2));
    });
    if (todo.empty()) break;
    if (round + 1 >= limits.max_rounds)
      throw DepthExceeded("completion did not stabilize within " +
                          std::to_string(limits.max_rounds) + " rounds");
  }
  std::sort(rules.begin(), rules.end(), [](const Rule& x, const Rule& y) {
    return shortlex_less(x.lhs, y.lhs);
  });
  return RewriteSystem(std::move(rules));
}

std::vector<std::pair<Word, Word>> unjoinable_critical_pairs(const RewriteSystem& sys,
                                                             std::size_t step_budget) {
  std::vector<std::pair<Word, Word>> out;
  for_each_critical_pair(sys.rules(), [&](Word w1, Word w2) {
    Word n1 = sys.normalize(w1, step_budget), n2 = sys.normalize(w2, step_budget);
    if (n1 != n2) out.emplace_back(std::move(w1), std::move(w2));
  });
  return out;
}

}  // namespace cointerval::fincat
