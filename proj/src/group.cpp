#include "cpc/group.hpp"

#include <algorithm>
#include <numeric>

#include "cpc/error.hpp"
#include "cpc/kernels.hpp"

namespace cpc {

// ---------------------------------------------------------------------------
// GroupTable

GroupPtr GroupTable::close(std::size_t degree, const std::vector<Permutation>& generators,
                           std::size_t element_budget) {
  std::shared_ptr<GroupTable> g(new GroupTable());
  g->degree_ = degree;
  g->generators_ = generators;
  for (const auto& p : generators) {
    if (p.degree() != degree) {
      throw PreconditionError("generator " + to_cycle_string(p) + " has degree " +
                              std::to_string(p.degree()) + ", expected " +
                              std::to_string(degree));
    }
  }

  g->elements_.push_back(Permutation::identity(degree));
  g->index_.emplace(g->elements_.back(), 0);
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(g->elements_[head], gen);
      if (g->index_.contains(next)) continue;
      if (g->elements_.size() >= element_budget) {
        throw BudgetExceeded("group closure exceeds element budget of " +
                             std::to_string(element_budget));
      }
      g->index_.emplace(next, static_cast<ElementId>(g->elements_.size()));
      g->elements_.push_back(std::move(next));
    }
  }
  for (const auto& gen : generators) g->generator_ids_.push_back(g->index_.at(gen));
  g->build_tables();
  return g;
}

void GroupTable::build_tables() {
  const std::size_t n = elements_.size();
  if (n <= kCayleyTableLimit) cayley_ = build_cayley_table(elements_, index_);
  inverses_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverses_[i] = index_.at(inverse(elements_[i]));
    orders_[i] = cpc::order(elements_[i]);
  }
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw PreconditionError("permutation " + to_cycle_string(p) + " is not in the group");
  return *id;
}

ElementId GroupTable::mul_slow(ElementId a, ElementId b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

ElementId GroupTable::pow(ElementId a, long long e) const {
  ElementId base = e < 0 ? inv(a) : a;
  unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  n %= orders_[a];
  ElementId result = identity();
  while (n != 0) {
    if (n & 1ULL) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> GroupTable::prime_divisors() const {
  std::vector<std::uint64_t> out;
  std::uint64_t n = order();
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(const GroupTable& parent)
    : parent_(&parent), bits_((parent.order() + 63) / 64, 0) {}

ElementSet::ElementSet(const GroupTable& parent, const std::vector<ElementId>& ids)
    : ElementSet(parent) {
  for (ElementId id : ids) {
    if (id >= parent.order()) throw PreconditionError("element id out of range");
    insert(id);
  }
}

ElementSet ElementSet::whole(const GroupTable& g) {
  ElementSet s(g);
  for (ElementId i = 0; i < g.order(); ++i) s.insert(i);
  return s;
}

ElementSet ElementSet::trivial(const GroupTable& g) {
  ElementSet s(g);
  s.insert(GroupTable::identity());
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool ElementSet::is_trivial() const { return size() == 1 && contains(GroupTable::identity()); }

std::vector<ElementId> ElementSet::members() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for_each([&](ElementId id) { out.push_back(id); });
  return out;
}

void ElementSet::check_same_parent(const ElementSet& other) const {
  if (parent_ != other.parent_) throw PreconditionError("element sets belong to different groups");
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_parent(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_same_parent(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_same_parent(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
  return *this;
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  a.check_same_parent(b);
  return a.bits_ == b.bits_;
}

const char* to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_fitting: return "lower_fitting";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

ElementSet closure_of(const GroupTable& g, const std::vector<ElementId>& gens) {
  ElementSet out = ElementSet::trivial(g);
  std::vector<ElementId> queue{GroupTable::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementId s : gens) {
      ElementId y = g.mul(queue[head], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

struct Generated {
  ElementSet group;
  std::vector<ElementId> gens;
};

// Greedy generating set: each member not yet generated becomes a generator.
Generated generate(const ElementSet& s) {
  const GroupTable& g = s.parent();
  Generated r{ElementSet::trivial(g), {}};
  s.for_each([&](ElementId x) {
    if (r.group.contains(x)) return;
    r.gens.push_back(x);
    r.group = closure_of(g, r.gens);
  });
  return r;
}

std::vector<ElementId> generators_of(const ElementSet& h) { return generate(h).gens; }

}  // namespace

bool is_subgroup(const ElementSet& s) {
  if (!s.contains(GroupTable::identity())) return false;
  const GroupTable& g = s.parent();
  const auto ms = s.members();
  for (ElementId a : ms) {
    if (!s.contains(g.inv(a))) return false;
    for (ElementId b : ms) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normalized_by(const ElementSet& h, ElementId x) {
  const GroupTable& g = h.parent();
  bool ok = true;
  h.for_each([&](ElementId y) {
    if (ok && !h.contains(g.conj(y, x))) ok = false;
  });
  return ok;
}

bool is_normal(const ElementSet& h) {
  for (ElementId x : h.parent().generator_ids()) {
    if (!is_normalized_by(h, x)) return false;
  }
  return true;
}

bool is_abelian(const ElementSet& h) {
  const GroupTable& g = h.parent();
  const auto gens = generators_of(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

ElementSet cyclic_subgroup(const GroupTable& g, ElementId x) {
  ElementSet out(g);
  ElementId y = GroupTable::identity();
  do {
    out.insert(y);
    y = g.mul(y, x);
  } while (y != GroupTable::identity());
  return out;
}

ElementSet subgroup_generated(const ElementSet& s) { return generate(s).group; }

ElementSet conjugation_closure(const ElementSet& s) {
  const GroupTable& g = s.parent();
  ElementSet out = s;
  std::vector<ElementId> queue = s.members();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementId t : g.generator_ids()) {
      ElementId y = g.conj(queue[head], t);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

ElementSet conjugacy_class(const GroupTable& g, ElementId x) {
  ElementSet s(g);
  s.insert(x);
  return conjugation_closure(s);
}

std::vector<ElementId> conjugacy_class_representatives(const GroupTable& g) {
  std::vector<ElementId> reps;
  ElementSet seen(g);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen.contains(x)) continue;
    reps.push_back(x);
    seen |= conjugacy_class(g, x);
  }
  return reps;
}

ElementSet normal_closure(const ElementSet& s) {
  ElementSet seed = conjugation_closure(s);
  seed.insert(GroupTable::identity());
  return subgroup_generated(seed);
}

ElementSet commutator_subgroup(const ElementSet& a, const ElementSet& b) {
  ElementSet values = commutator_set(a.parent(), a.members(), b.members());
  return subgroup_generated(values);
}

ElementSet centralizer(const ElementSet& h, ElementId x) {
  const GroupTable& g = h.parent();
  ElementSet out(g);
  h.for_each([&](ElementId y) {
    if (g.mul(y, x) == g.mul(x, y)) out.insert(y);
  });
  return out;
}

ElementSet center(const ElementSet& h) {
  const GroupTable& g = h.parent();
  const auto gens = generators_of(h);
  ElementSet out(g);
  h.for_each([&](ElementId y) {
    for (ElementId t : gens) {
      if (g.mul(y, t) != g.mul(t, y)) return;
    }
    out.insert(y);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Series

namespace {

template <class Step>
SeriesReport iterate_series(SeriesKind kind, const ElementSet& start, Step step) {
  SeriesReport r{kind, {start}, false, std::nullopt};
  while (!r.terms.back().is_trivial()) {
    ElementSet next = step(r.terms.back());
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.stabilized = true;
  if (r.terms.back().is_trivial()) r.length_to_trivial = r.terms.size() - 1;
  return r;
}

}  // namespace

SeriesReport lower_central_series(const ElementSet& h) {
  return iterate_series(SeriesKind::lower_central, h,
                        [&h](const ElementSet& t) { return commutator_subgroup(t, h); });
}

SeriesReport derived_series(const ElementSet& h) {
  return iterate_series(SeriesKind::derived, h,
                        [](const ElementSet& t) { return commutator_subgroup(t, t); });
}

ElementSet nilpotent_residual(const ElementSet& h) { return lower_central_series(h).terms.back(); }

SeriesReport lower_fitting_series(const ElementSet& h) {
  return iterate_series(SeriesKind::lower_fitting, h,
                        [](const ElementSet& t) { return nilpotent_residual(t); });
}

bool is_nilpotent(const ElementSet& h) { return nilpotent_residual(h).is_trivial(); }
bool is_soluble(const ElementSet& h) { return derived_series(h).terms.back().is_trivial(); }

std::size_t fitting_height(const ElementSet& h) {
  auto series = lower_fitting_series(h);
  if (!series.length_to_trivial) throw NotSoluble("Fitting height undefined: group is not soluble");
  return *series.length_to_trivial;
}

SeriesReport lower_central_series(const GroupTable& g) {
  return lower_central_series(ElementSet::whole(g));
}
SeriesReport derived_series(const GroupTable& g) { return derived_series(ElementSet::whole(g)); }
SeriesReport lower_fitting_series(const GroupTable& g) {
  return lower_fitting_series(ElementSet::whole(g));
}
bool is_nilpotent(const GroupTable& g) { return is_nilpotent(ElementSet::whole(g)); }
bool is_soluble(const GroupTable& g) { return is_soluble(ElementSet::whole(g)); }
ElementSet nilpotent_residual(const GroupTable& g) {
  return nilpotent_residual(ElementSet::whole(g));
}
std::size_t fitting_height(const GroupTable& g) { return fitting_height(ElementSet::whole(g)); }

// ---------------------------------------------------------------------------
// Characteristic subgroups via single-class normal closures

namespace {

// Union of the conjugacy classes whose normal closure satisfies pred. The
// per-class scan is independent and runs in parallel.
template <class Pred>
ElementSet classes_with_normal_closure(const GroupTable& g, Pred pred) {
  const auto reps = conjugacy_class_representatives(g);
  std::vector<char> keep(reps.size(), 0);
  if (default_exec() == Exec::serial) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      keep[i] = pred(normal_closure(ElementSet(g, {reps[i]}))) ? 1 : 0;
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(reps.size()); ++i) {
      const auto k = static_cast<std::size_t>(i);
      keep[k] = pred(normal_closure(ElementSet(g, {reps[k]}))) ? 1 : 0;
    }
  }
  ElementSet out(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (keep[i]) out |= conjugacy_class(g, reps[i]);
  }
  return subgroup_generated(out);
}

}  // namespace

ElementSet fitting_subgroup(const GroupTable& g) {
  return classes_with_normal_closure(g, [](const ElementSet& n) { return is_nilpotent(n); });
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  for (std::uint64_t p : pi) {
    if (p < 2) continue;
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

ElementSet o_pi(const GroupTable& g, const PrimeSet& pi) {
  return classes_with_normal_closure(
      g, [&pi](const ElementSet& n) { return is_pi_number(n.size(), pi); });
}

// ---------------------------------------------------------------------------
// Quotients

Quotient quotient(const ElementSet& n, std::size_t element_budget) {
  const GroupTable& g = n.parent();
  if (!is_subgroup(n) || !is_normal(n)) throw NotNormal("quotient: subgroup is not normal");

  constexpr ElementId unset = ~ElementId{0};
  std::vector<ElementId> coset_of(g.order(), unset);
  std::vector<ElementId> reps;
  const auto ns = n.members();
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unset) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (ElementId y : ns) coset_of[g.mul(y, x)] = c;
  }
  const std::size_t m = reps.size();
  if (m > 65535) throw BudgetExceeded("quotient: index exceeds maximum permutation degree");

  auto action = [&](ElementId x) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c) images[c] = static_cast<Point>(coset_of[g.mul(reps[c], x)]);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElementId t : g.generator_ids()) gens.push_back(action(t));
  Quotient q;
  q.group = GroupTable::close(m, gens, element_budget);

  // Elements in one coset share an image; only class representatives need
  // their action computed.
  std::vector<ElementId> image_of_coset(m);
  for (std::size_t c = 0; c < m; ++c) image_of_coset[c] = q.group->id_of(action(reps[c]));
  q.projection.resize(g.order());
  q.section.assign(q.group->order(), unset);
  for (ElementId x = 0; x < g.order(); ++x) {
    ElementId y = image_of_coset[coset_of[x]];
    q.projection[x] = y;
    if (q.section[y] == unset) q.section[y] = x;
  }
  return q;
}

ElementSet project(const Quotient& q, const ElementSet& s) {
  ElementSet out(*q.group);
  s.for_each([&](ElementId x) { out.insert(q.projection[x]); });
  return out;
}

// ---------------------------------------------------------------------------
// Coprime action

ElementSet commutator_with(const ElementSet& n, ElementId x) {
  const GroupTable& g = n.parent();
  ElementSet values(g);
  n.for_each([&](ElementId y) { values.insert(g.comm(y, x)); });
  return subgroup_generated(values);
}

bool coprime_action_decomposition_check(const ElementSet& n, ElementId x) {
  const GroupTable& g = n.parent();
  if (x >= g.order()) throw PreconditionError("element id out of range");
  if (!is_subgroup(n)) throw PreconditionError("N is not a subgroup");
  if (!is_abelian(n)) throw PreconditionError("N is not abelian");
  if (!is_normalized_by(n, x)) throw PreconditionError("x does not normalize N");
  if (std::gcd(g.order_of(x), std::uint64_t{n.size()}) != 1) {
    throw PreconditionError("orders of x and N are not coprime");
  }

  const ElementSet nx = commutator_with(n, x);
  const ElementSet cn = centralizer(n, x);
  if (!(nx & cn).is_trivial()) return false;
  ElementSet product(g);
  nx.for_each([&](ElementId a) { cn.for_each([&](ElementId c) { product.insert(g.mul(a, c)); }); });
  if (!(product == n)) return false;
  return commutator_with(nx, x) == nx;
}

}  // namespace cpc
