#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cpc/group.hpp"
#include "cpc/kernels.hpp"

namespace cpc {

/**
 * The word shapes whose value sets the library evaluates.
 *
 *   lower_central(k)  gamma_k = [x_1, ..., x_k]        text "gamma:k"
 *   engel(k)          [x, y, ..., y] (k copies of y)   text "engel:k"
 *   power(m)          x^m                              text "pow:m"
 *   a5_counterexample [x, y^10, y^10, y^10]            text "a5word"
 */
struct WordSpec {
  enum class Kind { lower_central, engel, power, a5_counterexample };

  Kind kind;
  int parameter = 1;

  static WordSpec lower_central(int k);
  static WordSpec engel(int k);
  static WordSpec power(int m);
  static WordSpec a5_counterexample() { return {Kind::a5_counterexample, 1}; }

  /// Number of free variables.
  int arity() const;

  friend bool operator==(const WordSpec&, const WordSpec&) = default;
};

std::string to_string(const WordSpec& w);
/// Inverse of to_string; throws ParseError.
WordSpec parse_word(std::string_view text);

inline constexpr std::uint64_t kDefaultWordPairBudget = 1'000'000;

/// Exact value set of w in g. Two-variable words enumerate all |G|^2 pairs
/// and throw BudgetExceeded beyond pair_budget.
ElementSet word_values(const GroupTable& g, const WordSpec& w,
                       std::uint64_t pair_budget = kDefaultWordPairBudget,
                       Exec exec = default_exec());

ElementSet verbal_subgroup(const GroupTable& g, const WordSpec& w,
                           std::uint64_t pair_budget = kDefaultWordPairBudget);

}  // namespace cpc
