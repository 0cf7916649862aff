#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpc/coprime.hpp"
#include "cpc/group.hpp"
#include "cpc/kernels.hpp"
#include "cpc/words.hpp"

namespace cpc {

enum class Statement {
  theorem_a,
  theorem_b,
  delta1_corollary,
  prop_gamma_residual,
  lemma_delta_fitting,
  thm_fitting_delta,
  thm_pi_elements,
  baumslag_wiegold,
  counterexample_s3,
  counterexample_a5,
  invstar,
};

const std::vector<Statement>& all_statements();
const char* to_string(Statement s);
std::optional<Statement> parse_statement(std::string_view name);

enum class Outcome { pass, fail, vacuous, skipped, informational };

const char* to_string(Outcome o);

/// A coprime-order pair (a, b) with |ab| != |a||b|.
struct Witness {
  Permutation a;
  Permutation b;
  std::uint64_t order_a = 0;
  std::uint64_t order_b = 0;
  std::uint64_t order_ab = 0;
};

/**
 * Result of checking one statement on one group.
 *
 * For equivalences, left_side and right_side are the two sides and
 * `equivalent` is their agreement. For implications, left_side is the
 * hypothesis and `equivalent` means the implication holds. For subgroup
 * equalities, the sides are the two inclusions.
 */
struct Verdict {
  std::string group_name;
  std::uint64_t group_order = 0;
  Statement statement = Statement::theorem_a;
  std::optional<int> parameter_k;
  std::optional<PrimeSet> pi;
  bool left_side = false;
  bool right_side = false;
  bool equivalent = false;
  /// Theorem B only: the condition on the commutators without their powers.
  std::optional<bool> left_side_unpowered;
  std::optional<Witness> witness;
  Outcome outcome = Outcome::pass;
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

struct OrderCheck {
  bool pass = true;
  std::optional<Witness> witness;
};

/// |ab| = |a||b| for every coprime-order pair of members of s. A failure
/// carries the first offending pair in ascending (a, b) id order; the
/// witness is re-checked on the permutations before it is returned.
OrderCheck order_multiplicative(const ElementSet& s, Exec exec = default_exec());

/**
 * Lazily computed structure of one group, shared by all statements checked
 * on it. Not thread-safe; use one context per thread.
 */
class GroupContext {
 public:
  GroupContext(std::string name, GroupPtr group, std::uint64_t pair_budget = kDefaultPairBudget);

  const std::string& name() const { return name_; }
  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  CoprimeChain& gamma_star() { return gamma_; }
  CoprimeChain& delta_star() { return delta_; }

  const SeriesReport& lower_central();
  const SeriesReport& derived();
  const SeriesReport& lower_fitting();
  bool soluble();
  bool nilpotent();
  /// Nullopt for non-soluble groups.
  std::optional<std::size_t> fitting_height();
  const ElementSet& o_pi(const PrimeSet& pi);

 private:
  std::string name_;
  GroupPtr group_;
  CoprimeChain gamma_;
  CoprimeChain delta_;
  std::optional<SeriesReport> lower_central_;
  std::optional<SeriesReport> derived_;
  std::optional<SeriesReport> lower_fitting_;
  std::map<PrimeSet, ElementSet> o_pi_;
};

Verdict theorem_a_verdict(GroupContext& ctx, int k);
/// k = 1 is outside the theorem's range; it is reported as informational.
Verdict theorem_b_verdict(GroupContext& ctx, int k);
Verdict delta1_corollary_verdict(GroupContext& ctx);
Verdict prop_gamma_residual_verdict(GroupContext& ctx, int k);
Verdict lemma_delta_fitting_verdict(GroupContext& ctx, int k);
Verdict thm_fitting_delta_verdict(GroupContext& ctx, int k);
Verdict thm_pi_elements_verdict(GroupContext& ctx, int k, const PrimeSet& pi);
Verdict baumslag_wiegold_verdict(GroupContext& ctx);
/// Word w with all nontrivial values of order 2 yet w(G) = G non-nilpotent.
Verdict word_counterexample_verdict(GroupContext& ctx, Statement statement, const WordSpec& w);
/// Every involution lies in the delta-star level n for n = 0..n_max. When a
/// level exceeds the pair budget the verdict is skipped and parameter_k holds
/// the highest level verified.
Verdict invstar_verdict(GroupContext& ctx, int n_max);

/// Every subset of the prime divisors of |G| with at most max_size primes,
/// in size-then-lexicographic order (starting with the empty set).
std::vector<PrimeSet> prime_subsets(const GroupTable& g, std::size_t max_size = 2);

}  // namespace cpc
