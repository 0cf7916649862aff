#include <doctest.h>

#include <random>

#include "cpc/corpus.hpp"
#include "cpc/error.hpp"
#include "cpc/group.hpp"
#include "cpc/kernels.hpp"
#include "support/oracle.hpp"

using namespace cpc;

namespace {

ElementId id(const GroupTable& g, const char* cycles) {
  return g.id_of(parse_cycles(cycles, g.degree()));
}

ElementSet set_of(const GroupTable& g, std::initializer_list<const char*> cycles) {
  ElementSet s(g);
  for (const char* c : cycles) s.insert(id(g, c));
  return s;
}

std::vector<std::size_t> orders(const SeriesReport& r) {
  std::vector<std::size_t> out;
  for (const auto& t : r.terms) out.push_back(t.size());
  return out;
}

ElementSet v4_in(const GroupTable& g) {
  return set_of(g, {"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
}

}  // namespace

TEST_CASE("close") {
  CHECK(GroupTable::close(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)})->order() == 6);
  auto a5 = GroupTable::close(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  CHECK(a5->order() == 60);
  auto trivial = GroupTable::close(4, {});
  CHECK(trivial->order() == 1);
  CHECK(trivial->element(0).is_identity());
  CHECK(a5->element(GroupTable::identity()).is_identity());
  CHECK_THROWS_AS(GroupTable::close(6, {parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5 6)", 6)}, 100),
                  BudgetExceeded);
  CHECK(a5->generator_ids().size() == 2);
  CHECK_FALSE(a5->find(parse_cycles("(1 2)", 5)).has_value());
  CHECK_THROWS_AS(a5->id_of(parse_cycles("(1 2)", 5)), PreconditionError);
}

TEST_CASE("enumeration is deterministic") {
  auto a = make_symmetric(4);
  auto b = make_symmetric(4);
  REQUIRE(a->order() == b->order());
  for (ElementId i = 0; i < a->order(); ++i) CHECK(a->element(i) == b->element(i));
}

TEST_CASE("table arithmetic matches permutation arithmetic") {
  auto s5 = make_symmetric(5);
  for (ElementId a = 0; a < s5->order(); a += 7) {
    CHECK(s5->order_of(a) == order(s5->element(a)));
    CHECK(s5->element(s5->inv(a)) == inverse(s5->element(a)));
    for (ElementId b = 0; b < s5->order(); b += 11) {
      CHECK(s5->element(s5->mul(a, b)) == compose(s5->element(a), s5->element(b)));
      CHECK(s5->element(s5->comm(a, b)) == commutator(s5->element(a), s5->element(b)));
    }
  }
  CHECK(s5->prime_divisors() == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("subgroup_generated") {
  auto s3 = make_symmetric(3);
  CHECK(subgroup_generated(ElementSet::trivial(*s3)).is_trivial());
  CHECK(subgroup_generated(set_of(*s3, {"(1 2 3)"})).size() == 3);
  auto s4 = make_symmetric(4);
  auto all = ElementSet::whole(*s4).members();
  auto comms = commutator_set(*s4, all, all, Exec::serial);
  CHECK(subgroup_generated(comms).size() == 12);
}

TEST_CASE("normal_closure") {
  auto s3 = make_symmetric(3);
  CHECK(normal_closure(set_of(*s3, {"(1 2)"})).is_whole());
  CHECK(normal_closure(set_of(*s3, {"(1 2 3)"})).size() == 3);
  CHECK(normal_closure(ElementSet::trivial(*s3)).is_trivial());
}

TEST_CASE("commutator_subgroup") {
  auto s3 = make_symmetric(3);
  CHECK(commutator_subgroup(ElementSet::whole(*s3), ElementSet::trivial(*s3)).is_trivial());
  CHECK(commutator_subgroup(ElementSet::whole(*s3), ElementSet::whole(*s3)).size() == 3);
  auto a5 = make_alternating(5);
  CHECK(commutator_subgroup(ElementSet::whole(*a5), ElementSet::whole(*a5)).is_whole());
}

TEST_CASE("lower central series") {
  auto c6 = make_cyclic(6);
  auto r = lower_central_series(*c6);
  CHECK(orders(r) == std::vector<std::size_t>{6, 1});
  CHECK(r.length_to_trivial == 1);

  auto s4 = make_symmetric(4);
  r = lower_central_series(*s4);
  CHECK(r.stabilized);
  CHECK_FALSE(r.length_to_trivial.has_value());
  CHECK(r.terms.back().size() == 12);
  CHECK(r.term(10).size() == 12);

  auto d4 = make_dihedral(4);
  r = lower_central_series(*d4);
  CHECK(r.length_to_trivial == 2);
}

TEST_CASE("derived series") {
  auto s4 = make_symmetric(4);
  auto r = derived_series(*s4);
  CHECK(orders(r) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(r.length_to_trivial == 3);
  CHECK(is_soluble(*s4));

  auto a5 = make_alternating(5);
  r = derived_series(*a5);
  CHECK(orders(r) == std::vector<std::size_t>{60});
  CHECK_FALSE(is_soluble(*a5));

  CHECK(orders(derived_series(*make_cyclic(6))) == std::vector<std::size_t>{6, 1});
}

TEST_CASE("nilpotency and the nilpotent residual") {
  CHECK(is_nilpotent(*make_dihedral(4)));
  CHECK_FALSE(is_nilpotent(*make_symmetric(3)));
  CHECK(is_nilpotent(*direct_product(*make_cyclic(2), *make_cyclic(3))));
  CHECK(nilpotent_residual(*make_quaternion8()).is_trivial());
  CHECK(nilpotent_residual(*make_symmetric(3)).size() == 3);
  CHECK(nilpotent_residual(*make_symmetric(4)).size() == 12);
}

TEST_CASE("lower Fitting series and height") {
  CHECK(orders(lower_fitting_series(*make_symmetric(3))) == std::vector<std::size_t>{6, 3, 1});
  CHECK(orders(lower_fitting_series(*make_symmetric(4))) == std::vector<std::size_t>{24, 12, 4, 1});
  auto a5 = lower_fitting_series(*make_alternating(5));
  CHECK(a5.stabilized);
  CHECK(a5.terms.back().size() == 60);

  CHECK(fitting_height(*make_cyclic(5)) == 1);
  CHECK(fitting_height(*make_dihedral(8)) == 1);
  CHECK(fitting_height(*make_symmetric(4)) == 3);
  CHECK(fitting_height(*make_cyclic(1)) == 0);
  CHECK_THROWS_AS(fitting_height(*make_alternating(5)), NotSoluble);
}

TEST_CASE("Fitting subgroup and O_pi") {
  auto q8 = make_quaternion8();
  CHECK(fitting_subgroup(*q8).is_whole());
  auto s4 = make_symmetric(4);
  CHECK(fitting_subgroup(*s4) == v4_in(*s4));
  CHECK(fitting_subgroup(*make_alternating(5)).is_trivial());

  CHECK(o_pi(*s4, {2, 3}).is_whole());
  CHECK(o_pi(*s4, {2}) == v4_in(*s4));
  CHECK(o_pi(*make_symmetric(3), {2}).is_trivial());
  CHECK(o_pi(*s4, {}).is_trivial());
  CHECK(is_pi_number(12, {2, 3}));
  CHECK_FALSE(is_pi_number(10, {2, 3}));
  CHECK(is_pi_number(1, {}));
}

TEST_CASE("quotient") {
  auto s4 = make_symmetric(4);
  auto whole = quotient(ElementSet::whole(*s4));
  CHECK(whole.group->order() == 1);
  auto regular = quotient(ElementSet::trivial(*s4));
  CHECK(regular.group->order() == 24);
  CHECK(regular.group->degree() == 24);

  auto q = quotient(v4_in(*s4));
  CHECK(q.group->order() == 6);
  CHECK_FALSE(is_abelian(ElementSet::whole(*q.group)));
  for (ElementId y = 0; y < q.group->order(); ++y) CHECK(q.projection[q.section[y]] == y);

  auto s3 = make_symmetric(3);
  CHECK_THROWS_AS(quotient(set_of(*s3, {"()", "(1 2)"})), NotNormal);
  CHECK_THROWS_AS(quotient(set_of(*s3, {"(1 2)"})), NotNormal);
}

TEST_CASE("coprime action decomposition") {
  auto a4 = make_alternating(4);
  auto v4 = v4_in(*a4);
  CHECK(coprime_action_decomposition_check(v4, GroupTable::identity()));
  CHECK(commutator_with(v4, GroupTable::identity()).is_trivial());
  const auto x = id(*a4, "(1 2 3)");
  CHECK(coprime_action_decomposition_check(v4, x));
  CHECK(commutator_with(v4, x) == v4);
  CHECK(centralizer(v4, x).is_trivial());

  auto s3 = make_symmetric(3);
  auto c3 = set_of(*s3, {"()", "(1 2 3)", "(1 3 2)"});
  const auto t = id(*s3, "(1 2)");
  CHECK(coprime_action_decomposition_check(c3, t));
  CHECK(commutator_with(c3, t) == c3);

  auto s4 = make_symmetric(4);
  CHECK_THROWS_AS(coprime_action_decomposition_check(v4_in(*s4), id(*s4, "(1 2)")),
                  PreconditionError);
  CHECK_THROWS_AS(coprime_action_decomposition_check(ElementSet::whole(*s3), t),
                  PreconditionError);
}

TEST_CASE("Lagrange and normality of series terms across the corpus") {
  for (const auto& entry : builtin_corpus()) {
    if (entry.expected_order > 200) continue;
    CAPTURE(entry.name);
    auto g = entry.build();
    for (const auto& r : {lower_central_series(*g), derived_series(*g), lower_fitting_series(*g)}) {
      CHECK(r.terms.front().is_whole());
      for (std::size_t i = 0; i < r.terms.size(); ++i) {
        CHECK(is_subgroup(r.terms[i]));
        CHECK(g->order() % r.terms[i].size() == 0);
        CHECK(is_normal(r.terms[i]));
        if (i > 0) CHECK(r.terms[i].is_subset_of(r.terms[i - 1]));
      }
    }
    const auto t = lower_central_series(*g).terms.back();
    CHECK(commutator_subgroup(t, ElementSet::whole(*g)) == t);
    CHECK(is_nilpotent(*g) == nilpotent_residual(*g).is_trivial());

    auto f = fitting_subgroup(*g);
    CHECK(is_subgroup(f));
    CHECK(is_normal(f));
    CHECK(is_nilpotent(f));
    for (ElementId x = 0; x < g->order(); ++x) {
      auto n = normal_closure(ElementSet(*g, {x}));
      if (is_nilpotent(n)) CHECK(n.is_subset_of(f));
    }

    if (is_soluble(*g) && g->order() > 1) {
      const auto h = fitting_height(*g);
      CHECK(lower_fitting_series(*g).length_to_trivial == h);
      auto q = quotient(f);
      CHECK(fitting_height(*q.group) == h - 1);
    }
  }
}

TEST_CASE("quotient projection is a homomorphism with kernel N") {
  std::mt19937 rng(7);
  for (const char* name : {"S4", "C3xA4", "SL(2,3)", "D6", "S3xS3"}) {
    CAPTURE(name);
    auto g = corpus_entry(name).build();
    for (const auto& n : {fitting_subgroup(*g), nilpotent_residual(*g),
                          derived_series(*g).term(1), ElementSet::trivial(*g)}) {
      auto q = quotient(n);
      CHECK(q.group->order() * n.size() == g->order());
      for (ElementId x = 0; x < g->order(); ++x) {
        CHECK((q.projection[x] == GroupTable::identity()) == n.contains(x));
      }
      for (int trial = 0; trial < 200; ++trial) {
        const ElementId a = rng() % g->order();
        const ElementId b = rng() % g->order();
        CHECK(q.projection[g->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
      }
    }
  }
}

TEST_CASE("o_pi contains every normal pi-closure of a class") {
  for (const char* name : {"S4", "C7:C3", "D6", "SL(2,3)", "C2xS3"}) {
    CAPTURE(name);
    auto g = corpus_entry(name).build();
    for (const PrimeSet& pi : std::vector<PrimeSet>{{2}, {3}, {2, 3}, {7}, {3, 7}}) {
      auto o = o_pi(*g, pi);
      CHECK(is_normal(o));
      CHECK(is_pi_number(o.size(), pi));
      for (auto rep : conjugacy_class_representatives(*g)) {
        auto n = normal_closure(ElementSet(*g, {rep}));
        if (is_pi_number(n.size(), pi)) CHECK(n.is_subset_of(o));
      }
    }
  }
}

TEST_CASE("conjugacy classes partition the group") {
  auto s5 = make_symmetric(5);
  auto reps = conjugacy_class_representatives(*s5);
  CHECK(reps.size() == 7);
  std::size_t total = 0;
  for (auto r : reps) total += conjugacy_class(*s5, r).size();
  CHECK(total == 120);
  CHECK(center(ElementSet::whole(*s5)).is_trivial());
  CHECK(center(ElementSet::whole(*make_quaternion8())).size() == 2);
}

TEST_CASE("element sets reject mixed parents") {
  auto a = make_symmetric(3);
  auto b = make_symmetric(3);
  ElementSet x = ElementSet::whole(*a);
  CHECK_THROWS_AS(x |= ElementSet::whole(*b), PreconditionError);
}

TEST_CASE("subgroup lattice oracle agrees on small groups") {
  auto s4 = make_symmetric(4);
  const auto subs = oracle::all_subgroups(*s4);
  CHECK(subs.size() == 30);
  const auto g = oracle::elements(*s4);
  CHECK(oracle::fitting(subs, g).size() == 4);
}
