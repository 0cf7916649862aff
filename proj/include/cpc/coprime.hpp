#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cpc/group.hpp"
#include "cpc/kernels.hpp"

namespace cpc {

enum class CoprimeFamily { gamma_star, delta_star };

const char* to_string(CoprimeFamily f);

/// Union of the cyclic subgroups <s>, s in s_set.
ElementSet power_closure(const ElementSet& s);

/**
 * Coprime commutator value sets of one group, built level by level and
 * memoized.
 *
 * gamma_star: level 1 is G; level k >= 2 is {[a,b] : a a power of a level
 * k-1 element, b in G, gcd(|a|,|b|) = 1}.
 *
 * delta_star: level 0 is G; level k >= 1 is {[a,b] : a, b powers of level
 * k-1 elements, gcd(|a|,|b|) = 1}. Both entries are drawn from the same pool.
 *
 * The identity belongs to every level ([1,1] with coprime trivial orders).
 * Not thread-safe while levels are being added; a fully built chain is
 * read-only.
 */
class CoprimeChain {
 public:
  CoprimeChain(GroupPtr group, CoprimeFamily family, std::uint64_t pair_budget = kDefaultPairBudget);

  CoprimeFamily family() const { return family_; }
  const GroupTable& group() const { return *group_; }
  /// Smallest valid level: 1 for gamma_star, 0 for delta_star.
  int first_level() const { return family_ == CoprimeFamily::gamma_star ? 1 : 0; }

  /// The commutator set at level k. Throws PreconditionError below
  /// first_level() and BudgetExceeded when pair enumeration is too large.
  const ElementSet& level(int k);
  /// Powers of level-k elements.
  const ElementSet& powers(int k);
  /// Subgroup generated by level(k).
  const ElementSet& subgroup(int k);

  /// Number of levels computed so far.
  std::size_t computed_levels() const { return levels_.size(); }

 private:
  void extend_to(int k);
  std::size_t slot(int k) const;

  GroupPtr group_;
  CoprimeFamily family_;
  std::uint64_t pair_budget_;
  std::vector<ElementSet> levels_;
  std::vector<ElementSet> powers_;
  std::vector<std::optional<ElementSet>> subgroups_;
};

/// One-shot helpers; each builds a fresh chain.
ElementSet gamma_star_set(const GroupPtr& g, int k);
ElementSet delta_star_set(const GroupPtr& g, int k);
ElementSet gamma_star_subgroup(const GroupPtr& g, int k);
ElementSet delta_star_subgroup(const GroupPtr& g, int k);

/// Left-normed [x, y_1, ..., y_m].
ElementId left_normed_commutator(const GroupTable& g, ElementId x,
                                 const std::vector<ElementId>& ys);

}  // namespace cpc
