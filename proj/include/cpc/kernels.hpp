#pragma once

// Pair-enumeration kernels. Every kernel has a serial reference and an
// OpenMP variant selected by Exec; both must return identical results.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpc/group.hpp"

namespace cpc {

enum class Exec { serial, parallel };

/// Policy used when a caller does not pass one explicitly.
Exec default_exec();
void set_default_exec(Exec e);

/// Total pairs a single kernel call may visit before BudgetExceeded.
inline constexpr std::uint64_t kDefaultPairBudget = 50'000'000;

struct PairWitness {
  ElementId a;
  ElementId b;
};

namespace kernels {

/// {f(a,b) : a in as, b in bs, keep(a,b)} as a set of g.
template <class Keep, class Map>
ElementSet pair_image_serial(const GroupTable& g, const std::vector<ElementId>& as,
                             const std::vector<ElementId>& bs, Keep keep, Map map) {
  ElementSet out(g);
  for (ElementId a : as) {
    for (ElementId b : bs) {
      if (keep(a, b)) out.insert(map(a, b));
    }
  }
  return out;
}

template <class Keep, class Map>
ElementSet pair_image_parallel(const GroupTable& g, const std::vector<ElementId>& as,
                               const std::vector<ElementId>& bs, Keep keep, Map map) {
  ElementSet out(g);
  auto& words = out.words();
  const long long n = static_cast<long long>(as.size());
#pragma omp parallel
  {
    ElementSet local(g);
#pragma omp for schedule(dynamic, 8) nowait
    for (long long i = 0; i < n; ++i) {
      const ElementId a = as[static_cast<std::size_t>(i)];
      for (ElementId b : bs) {
        if (keep(a, b)) local.insert(map(a, b));
      }
    }
#pragma omp critical(cpc_pair_image_merge)
    {
      const auto& lw = local.words();
      for (std::size_t w = 0; w < words.size(); ++w) words[w] |= lw[w];
    }
  }
  return out;
}

template <class Keep, class Map>
ElementSet pair_image(const GroupTable& g, const std::vector<ElementId>& as,
                      const std::vector<ElementId>& bs, Keep keep, Map map, Exec exec) {
  if (exec == Exec::serial) return pair_image_serial(g, as, bs, keep, map);
  return pair_image_parallel(g, as, bs, keep, map);
}

}  // namespace kernels

/// Throws BudgetExceeded when |as| * |bs| exceeds budget.
void check_pair_budget(std::size_t na, std::size_t nb, std::uint64_t budget);

/// {[a,b] : a in as, b in bs} with no order condition.
ElementSet commutator_set(const GroupTable& g, const std::vector<ElementId>& as,
                          const std::vector<ElementId>& bs, Exec exec = default_exec());

/// {[a,b] : a in as, b in bs, gcd(|a|,|b|) = 1}.
ElementSet coprime_commutator_set(const GroupTable& g, const std::vector<ElementId>& as,
                                  const std::vector<ElementId>& bs,
                                  Exec exec = default_exec());

/// First pair (a,b) of members of s, in ascending (a,b) order, with coprime
/// orders and |ab| != |a||b|; nullopt when the condition holds throughout.
std::optional<PairWitness> first_order_violation(const ElementSet& s,
                                                 Exec exec = default_exec());

/// Cayley table rows for elements [0, n) computed by composition + lookup.
std::vector<ElementId> build_cayley_table(const std::vector<Permutation>& elements,
                                          const std::unordered_map<Permutation, ElementId,
                                                                   PermutationHash>& index,
                                          Exec exec = default_exec());

}  // namespace cpc
