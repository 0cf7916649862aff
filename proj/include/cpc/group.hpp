#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "cpc/perm.hpp"

namespace cpc {

using ElementId = std::uint32_t;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

inline constexpr std::size_t kDefaultElementBudget = 200'000;

/// Groups at most this large get a full Cayley table; larger ones multiply
/// through permutation composition and hash lookup.
inline constexpr std::size_t kCayleyTableLimit = 2048;

/**
 * A finite permutation group materialized as its full element list.
 *
 * Elements are enumerated breadth-first from the identity, applying the
 * generators in the order given, so element 0 is always the identity and the
 * numbering is reproducible. Tables are immutable once built and may be
 * shared freely between threads.
 */
class GroupTable {
 public:
  /// Closure of the generators; throws BudgetExceeded past element_budget.
  static GroupPtr close(std::size_t degree, const std::vector<Permutation>& generators,
                        std::size_t element_budget = kDefaultElementBudget);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// Element ids of the generators, aligned with generators().
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  static constexpr ElementId identity() { return 0; }
  const Permutation& element(ElementId id) const { return elements_[id]; }
  /// Id of p, or nullopt when p is not in the group (or has another degree).
  std::optional<ElementId> find(const Permutation& p) const;
  /// Id of p; throws PreconditionError when absent.
  ElementId id_of(const Permutation& p) const;

  ElementId mul(ElementId a, ElementId b) const {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  ElementId inv(ElementId a) const { return inverses_[a]; }
  std::uint64_t order_of(ElementId a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const { return orders_; }
  ElementId pow(ElementId a, long long e) const;
  /// a^-1 b^-1 a b
  ElementId comm(ElementId a, ElementId b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }

  /// Prime divisors of |G|, ascending.
  std::vector<std::uint64_t> prime_divisors() const;

  bool has_cayley_table() const { return !cayley_.empty(); }

 private:
  GroupTable() = default;
  ElementId mul_slow(ElementId a, ElementId b) const;
  void build_tables();

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementId> cayley_;
};

/**
 * A subset of one group's elements, stored as a bitset over element ids.
 *
 * Sets are tied to their parent table; combining sets of different parents is
 * a programming error and throws PreconditionError.
 */
class ElementSet {
 public:
  explicit ElementSet(const GroupTable& parent);
  ElementSet(const GroupTable& parent, const std::vector<ElementId>& ids);

  static ElementSet whole(const GroupTable& g);
  static ElementSet trivial(const GroupTable& g);

  const GroupTable& parent() const { return *parent_; }

  bool contains(ElementId id) const { return (bits_[id >> 6] >> (id & 63)) & 1ULL; }
  void insert(ElementId id) { bits_[id >> 6] |= 1ULL << (id & 63); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// True for exactly {identity}.
  bool is_trivial() const;
  bool is_whole() const { return size() == parent_->order(); }

  /// Member ids, ascending.
  std::vector<ElementId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        int bit = __builtin_ctzll(word);
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b);

  const std::vector<std::uint64_t>& words() const { return bits_; }
  std::vector<std::uint64_t>& words() { return bits_; }

 private:
  void check_same_parent(const ElementSet& other) const;

  const GroupTable* parent_;
  std::vector<std::uint64_t> bits_;
};

enum class SeriesKind { lower_central, derived, lower_fitting };

const char* to_string(SeriesKind kind);

/**
 * A descending chain of subgroups starting at the group (or subgroup) it was
 * computed for. Iteration stops at the first repeated term, so chains of
 * non-nilpotent or non-soluble groups terminate at their stable term.
 */
struct SeriesReport {
  SeriesKind kind;
  std::vector<ElementSet> terms;
  /// Last two terms coincide or the last term is trivial.
  bool stabilized = false;
  /// Index of the first trivial term, when the chain reaches 1. This is the
  /// nilpotency class, derived length or Fitting height depending on kind.
  std::optional<std::size_t> length_to_trivial;

  /// terms[i], or the stable last term for i past the end.
  const ElementSet& term(std::size_t i) const {
    return i < terms.size() ? terms[i] : terms.back();
  }
};

bool is_subgroup(const ElementSet& s);
bool is_normal(const ElementSet& h);
/// h is normalized by the element x of the parent group.
bool is_normalized_by(const ElementSet& h, ElementId x);
bool is_abelian(const ElementSet& h);

ElementSet cyclic_subgroup(const GroupTable& g, ElementId x);
ElementSet subgroup_generated(const ElementSet& s);
/// Smallest subgroup normal in the whole parent group containing s.
ElementSet normal_closure(const ElementSet& s);
/// Union of the conjugacy classes (under the whole group) of members of s.
ElementSet conjugation_closure(const ElementSet& s);
/// {g^-1 x g : g in G} for the whole parent G.
ElementSet conjugacy_class(const GroupTable& g, ElementId x);
/// Class representatives (smallest id per class), ascending.
std::vector<ElementId> conjugacy_class_representatives(const GroupTable& g);

/// <[a,b] : a in A, b in B>.
ElementSet commutator_subgroup(const ElementSet& a, const ElementSet& b);
ElementSet center(const ElementSet& h);
/// C_H(x) = {h in H : hx = xh}.
ElementSet centralizer(const ElementSet& h, ElementId x);

/// Lower central series of the subgroup h: h, [h,h], [[h,h],h], ...
SeriesReport lower_central_series(const ElementSet& h);
SeriesReport lower_central_series(const GroupTable& g);
SeriesReport derived_series(const ElementSet& h);
SeriesReport derived_series(const GroupTable& g);
/// N_0 = h, N_{i+1} = nilpotent residual of N_i.
SeriesReport lower_fitting_series(const ElementSet& h);
SeriesReport lower_fitting_series(const GroupTable& g);

bool is_nilpotent(const ElementSet& h);
bool is_nilpotent(const GroupTable& g);
bool is_soluble(const ElementSet& h);
bool is_soluble(const GroupTable& g);
/// Stable term of the lower central series.
ElementSet nilpotent_residual(const ElementSet& h);
ElementSet nilpotent_residual(const GroupTable& g);
/// Throws NotSoluble for non-soluble input. The trivial group has height 0.
std::size_t fitting_height(const GroupTable& g);
std::size_t fitting_height(const ElementSet& h);

/// F(G): elements whose normal closure is nilpotent.
ElementSet fitting_subgroup(const GroupTable& g);

using PrimeSet = std::set<std::uint64_t>;

bool is_pi_number(std::uint64_t n, const PrimeSet& pi);
/// O_pi(G): elements whose normal closure is a pi-group.
ElementSet o_pi(const GroupTable& g, const PrimeSet& pi);

struct Quotient {
  GroupPtr group;
  /// projection[x] is the id in `group` of the coset of x.
  std::vector<ElementId> projection;
  /// section[y] is the smallest id of G projecting to y.
  std::vector<ElementId> section;
};

/// G/N realized as the right-multiplication action on the cosets Nx.
/// Throws NotNormal if n is not a normal subgroup.
Quotient quotient(const ElementSet& n, std::size_t element_budget = kDefaultElementBudget);

/// Image of s under a quotient projection, as a set of the quotient group.
ElementSet project(const Quotient& q, const ElementSet& s);

/**
 * For an abelian subgroup n normalized by x with gcd(|x|, |n|) = 1, checks
 * n = [n,x] x C_n(x) (trivial intersection, product equal to n) and
 * [[n,x],x] = [n,x]. Throws PreconditionError when the hypotheses fail.
 */
bool coprime_action_decomposition_check(const ElementSet& n, ElementId x);

/// Subgroup [N, x] = <n^-1 n^x : n in N>.
ElementSet commutator_with(const ElementSet& n, ElementId x);

}  // namespace cpc
