#include "cpc/coprime.hpp"

#include "cpc/error.hpp"

namespace cpc {

const char* to_string(CoprimeFamily f) {
  return f == CoprimeFamily::gamma_star ? "gamma_star" : "delta_star";
}

ElementSet power_closure(const ElementSet& s) {
  const GroupTable& g = s.parent();
  ElementSet out = ElementSet::trivial(g);
  // out is always a union of cyclic subgroups, so x in out implies <x> <= out.
  s.for_each([&](ElementId x) {
    if (out.contains(x)) return;
    for (ElementId y = x; y != GroupTable::identity(); y = g.mul(y, x)) out.insert(y);
  });
  return out;
}

CoprimeChain::CoprimeChain(GroupPtr group, CoprimeFamily family, std::uint64_t pair_budget)
    : group_(std::move(group)), family_(family), pair_budget_(pair_budget) {
  levels_.push_back(ElementSet::whole(*group_));
  powers_.push_back(ElementSet::whole(*group_));
  subgroups_.emplace_back(ElementSet::whole(*group_));
}

std::size_t CoprimeChain::slot(int k) const {
  if (k < first_level()) {
    throw PreconditionError(std::string(to_string(family_)) + " level must be >= " +
                            std::to_string(first_level()) + ", got " + std::to_string(k));
  }
  return static_cast<std::size_t>(k - first_level());
}

void CoprimeChain::extend_to(int k) {
  const std::size_t want = slot(k);
  const GroupTable& g = *group_;
  const std::vector<ElementId> everything = ElementSet::whole(g).members();
  while (levels_.size() <= want) {
    const std::vector<ElementId> pool = powers_.back().members();
    const std::vector<ElementId>& right =
        family_ == CoprimeFamily::gamma_star ? everything : pool;
    check_pair_budget(pool.size(), right.size(), pair_budget_);
    ElementSet next = coprime_commutator_set(g, pool, right);
    powers_.push_back(power_closure(next));
    levels_.push_back(std::move(next));
    subgroups_.emplace_back(std::nullopt);
  }
}

const ElementSet& CoprimeChain::level(int k) {
  extend_to(k);
  return levels_[slot(k)];
}

const ElementSet& CoprimeChain::powers(int k) {
  extend_to(k);
  return powers_[slot(k)];
}

const ElementSet& CoprimeChain::subgroup(int k) {
  extend_to(k);
  auto& s = subgroups_[slot(k)];
  if (!s) s = subgroup_generated(levels_[slot(k)]);
  return *s;
}

ElementSet gamma_star_set(const GroupPtr& g, int k) {
  CoprimeChain c(g, CoprimeFamily::gamma_star);
  return c.level(k);
}

ElementSet delta_star_set(const GroupPtr& g, int k) {
  CoprimeChain c(g, CoprimeFamily::delta_star);
  return c.level(k);
}

ElementSet gamma_star_subgroup(const GroupPtr& g, int k) {
  CoprimeChain c(g, CoprimeFamily::gamma_star);
  return c.subgroup(k);
}

ElementSet delta_star_subgroup(const GroupPtr& g, int k) {
  CoprimeChain c(g, CoprimeFamily::delta_star);
  return c.subgroup(k);
}

ElementId left_normed_commutator(const GroupTable& g, ElementId x,
                                 const std::vector<ElementId>& ys) {
  for (ElementId y : ys) x = g.comm(x, y);
  return x;
}

}  // namespace cpc
