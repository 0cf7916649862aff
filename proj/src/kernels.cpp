#include "cpc/kernels.hpp"

#include <atomic>
#include <limits>
#include <numeric>

#include "cpc/error.hpp"

namespace cpc {

namespace {

std::atomic<Exec> g_default_exec{Exec::parallel};

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

}  // namespace

Exec default_exec() { return g_default_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec e) { g_default_exec.store(e, std::memory_order_relaxed); }

void check_pair_budget(std::size_t na, std::size_t nb, std::uint64_t budget) {
  const auto pairs = static_cast<std::uint64_t>(na) * static_cast<std::uint64_t>(nb);
  if (pairs > budget) {
    throw BudgetExceeded("pair enumeration of " + std::to_string(pairs) +
                         " pairs exceeds budget " + std::to_string(budget));
  }
}

ElementSet commutator_set(const GroupTable& g, const std::vector<ElementId>& as,
                          const std::vector<ElementId>& bs, Exec exec) {
  return kernels::pair_image(
      g, as, bs, [](ElementId, ElementId) { return true; },
      [&g](ElementId a, ElementId b) { return g.comm(a, b); }, exec);
}

ElementSet coprime_commutator_set(const GroupTable& g, const std::vector<ElementId>& as,
                                  const std::vector<ElementId>& bs, Exec exec) {
  const auto& ord = g.element_orders();
  return kernels::pair_image(
      g, as, bs, [&ord](ElementId a, ElementId b) { return coprime(ord[a], ord[b]); },
      [&g](ElementId a, ElementId b) { return g.comm(a, b); }, exec);
}

namespace {

// Position in `ms` of the first b violating multiplicativity against a.
std::size_t first_violation_for(const GroupTable& g, const std::vector<ElementId>& ms,
                                ElementId a) {
  const auto& ord = g.element_orders();
  const std::uint64_t oa = ord[a];
  for (std::size_t j = 0; j < ms.size(); ++j) {
    const ElementId b = ms[j];
    const std::uint64_t ob = ord[b];
    if (!coprime(oa, ob)) continue;
    if (ord[g.mul(a, b)] != oa * ob) return j;
  }
  return ms.size();
}

}  // namespace

std::optional<PairWitness> first_order_violation(const ElementSet& s, Exec exec) {
  const GroupTable& g = s.parent();
  const std::vector<ElementId> ms = s.members();
  const std::size_t n = ms.size();

  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = first_violation_for(g, ms, ms[i]);
      if (j < n) return PairWitness{ms[i], ms[j]};
    }
    return std::nullopt;
  }

  // Rows are scanned independently; the smallest failing row wins, which
  // reproduces the serial enumeration order.
  std::atomic<std::size_t> best_row{std::numeric_limits<std::size_t>::max()};
  std::vector<std::size_t> first_col(n, n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i > best_row.load(std::memory_order_relaxed)) continue;
    std::size_t j = first_violation_for(g, ms, ms[i]);
    first_col[i] = j;
    if (j < n) {
      std::size_t cur = best_row.load(std::memory_order_relaxed);
      while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const std::size_t row = best_row.load();
  if (row >= n) return std::nullopt;
  return PairWitness{ms[row], ms[first_col[row]]};
}

std::vector<ElementId> build_cayley_table(
    const std::vector<Permutation>& elements,
    const std::unordered_map<Permutation, ElementId, PermutationHash>& index, Exec exec) {
  const std::size_t n = elements.size();
  std::vector<ElementId> table(n * n);
  auto row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at(compose(elements[i], elements[j]));
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) row(i);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) row(static_cast<std::size_t>(i));
  }
  return table;
}

}  // namespace cpc
