#include <doctest.h>

#include <numeric>

#include "cpc/corpus.hpp"
#include "cpc/error.hpp"
#include "cpc/verify.hpp"

using namespace cpc;

namespace {

GroupContext context(const char* name) { return GroupContext(name, corpus_entry(name).build()); }

void check_witness(const Witness& w) {
  CHECK(std::gcd(w.order_a, w.order_b) == 1);
  CHECK(w.order_a == order(w.a));
  CHECK(w.order_b == order(w.b));
  CHECK(w.order_ab == order(compose(w.a, w.b)));
  CHECK(w.order_ab != w.order_a * w.order_b);
}

}  // namespace

TEST_CASE("statement names") {
  for (auto s : all_statements()) CHECK(parse_statement(to_string(s)) == s);
  CHECK_FALSE(parse_statement("bogus").has_value());
  CHECK(all_statements().size() == 11);
}

TEST_CASE("order_multiplicative") {
  auto c6 = make_cyclic(6);
  CHECK(order_multiplicative(ElementSet::whole(*c6)).pass);
  auto s3 = make_symmetric(3);
  CHECK(order_multiplicative(ElementSet::trivial(*s3)).pass);
  auto check = order_multiplicative(ElementSet::whole(*s3), Exec::serial);
  REQUIRE_FALSE(check.pass);
  REQUIRE(check.witness.has_value());
  check_witness(*check.witness);
  CHECK(check.witness->order_ab == 2);
  CHECK(check.witness->order_a * check.witness->order_b == 6);
  const auto again = order_multiplicative(ElementSet::whole(*s3), Exec::parallel);
  CHECK(again.witness->a == check.witness->a);
  CHECK(again.witness->b == check.witness->b);
}

TEST_CASE("theorem A") {
  auto s3 = context("S3");
  auto v = theorem_a_verdict(s3, 2);
  CHECK(v.left_side);
  CHECK(v.right_side);
  CHECK(v.outcome == Outcome::pass);

  auto s4 = context("S4");
  v = theorem_a_verdict(s4, 2);
  CHECK_FALSE(v.left_side);
  CHECK_FALSE(v.right_side);
  CHECK(v.equivalent);
  REQUIRE(v.witness.has_value());
  check_witness(*v.witness);

  auto c6 = context("C6");
  v = theorem_a_verdict(c6, 3);
  CHECK(v.left_side);
  CHECK(v.right_side);
  CHECK_THROWS_AS(theorem_a_verdict(c6, 1), PreconditionError);
}

TEST_CASE("theorem B") {
  auto s4 = context("S4");
  auto v = theorem_b_verdict(s4, 2);
  CHECK(v.right_side);
  CHECK(v.left_side);
  CHECK(v.outcome == Outcome::pass);
  REQUIRE(v.left_side_unpowered.has_value());

  auto a5 = context("A5");
  v = theorem_b_verdict(a5, 2);
  CHECK_FALSE(v.right_side);
  CHECK_FALSE(v.left_side);
  CHECK(v.equivalent);
  REQUIRE(v.witness.has_value());
  check_witness(*v.witness);

  auto q8 = context("Q8");
  for (int k = 2; k <= 3; ++k) {
    v = theorem_b_verdict(q8, k);
    CHECK(v.left_side);
    CHECK(v.right_side);
  }

  v = theorem_b_verdict(s4, 1);
  CHECK(v.outcome == Outcome::informational);
}

TEST_CASE("delta_1 corollary") {
  auto s4 = context("S4");
  auto v = delta1_corollary_verdict(s4);
  CHECK_FALSE(v.right_side);
  CHECK_FALSE(v.left_side);
  for (const char* name : {"S3", "D5"}) {
    auto ctx = context(name);
    v = delta1_corollary_verdict(ctx);
    CHECK(v.left_side);
    CHECK(v.right_side);
  }
}

TEST_CASE("gamma-star subgroup equals the nilpotent residual") {
  auto s4 = context("S4");
  CHECK(prop_gamma_residual_verdict(s4, 2).equivalent);
  auto a5 = context("A5");
  CHECK(prop_gamma_residual_verdict(a5, 3).equivalent);
  auto c12 = context("C12");
  auto v = prop_gamma_residual_verdict(c12, 2);
  CHECK(v.equivalent);
  CHECK(c12.gamma_star().subgroup(2).is_trivial());
}

TEST_CASE("delta-star subgroup equals the lower Fitting term") {
  auto s4 = context("S4");
  CHECK(lemma_delta_fitting_verdict(s4, 2).equivalent);
  CHECK(s4.delta_star().subgroup(2).size() == 4);
  auto a5 = context("A5");
  auto v = lemma_delta_fitting_verdict(a5, 0);
  CHECK(v.equivalent);
  v = lemma_delta_fitting_verdict(a5, 3);
  CHECK(v.equivalent);
  CHECK_FALSE(v.note.empty());
  auto s3 = context("S3");
  CHECK(lemma_delta_fitting_verdict(s3, 2).equivalent);
  CHECK(s3.delta_star().subgroup(2).is_trivial());
}

TEST_CASE("trivial delta-star subgroup and Fitting height") {
  auto s3 = context("S3");
  auto v = thm_fitting_delta_verdict(s3, 2);
  CHECK(v.left_side);
  CHECK(v.right_side);
  auto s4 = context("S4");
  v = thm_fitting_delta_verdict(s4, 2);
  CHECK_FALSE(v.left_side);
  CHECK_FALSE(v.right_side);
  CHECK(thm_fitting_delta_verdict(s4, 3).left_side);
  auto a5 = context("A5");
  v = thm_fitting_delta_verdict(a5, 5);
  CHECK_FALSE(v.left_side);
  CHECK_FALSE(v.right_side);
  CHECK(v.equivalent);
}

TEST_CASE("pi-element criterion") {
  auto s3 = context("S3");
  auto v = thm_pi_elements_verdict(s3, 1, {3});
  CHECK(v.left_side);
  CHECK(v.right_side);
  CHECK(v.outcome == Outcome::pass);

  auto s4 = context("S4");
  v = thm_pi_elements_verdict(s4, 1, {2, 3});
  CHECK(v.left_side);
  CHECK(v.outcome == Outcome::pass);

  auto a5 = context("A5");
  v = thm_pi_elements_verdict(a5, 1, {2, 3});
  CHECK_FALSE(v.left_side);
  CHECK(v.outcome == Outcome::vacuous);
  CHECK(v.equivalent);

  CHECK_THROWS_AS(thm_pi_elements_verdict(a5, 1, {2, 3, 5}), PreconditionError);
  CHECK(prime_subsets(a5.group()).size() == 7);
  CHECK(prime_subsets(a5.group()).front().empty());
}

TEST_CASE("order condition on all elements") {
  auto c6 = context("C6");
  auto v = baumslag_wiegold_verdict(c6);
  CHECK(v.left_side);
  CHECK(v.right_side);
  auto s3 = context("S3");
  v = baumslag_wiegold_verdict(s3);
  CHECK_FALSE(v.left_side);
  CHECK_FALSE(v.right_side);
  REQUIRE(v.witness.has_value());
  check_witness(*v.witness);
  auto d4 = context("D4");
  v = baumslag_wiegold_verdict(d4);
  CHECK(v.left_side);
  CHECK(v.right_side);
}

TEST_CASE("word counterexamples") {
  auto s3 = context("S3");
  auto v = word_counterexample_verdict(s3, Statement::counterexample_s3, WordSpec::power(3));
  CHECK(v.left_side);
  CHECK(v.right_side);
  CHECK(v.outcome == Outcome::pass);
  auto a5 = context("A5");
  v = word_counterexample_verdict(a5, Statement::counterexample_a5, WordSpec::a5_counterexample());
  CHECK(v.outcome == Outcome::pass);
  auto c6 = context("C6");
  v = word_counterexample_verdict(c6, Statement::counterexample_s3, WordSpec::power(3));
  CHECK(v.outcome == Outcome::fail);
}

TEST_CASE("involutions are delta-star commutators") {
  auto a5 = context("A5");
  auto v = invstar_verdict(a5, 2);
  CHECK(v.outcome == Outcome::pass);
  auto psl27 = context("PSL(2,7)");
  CHECK(invstar_verdict(psl27, 1).outcome == Outcome::pass);
  CHECK(invstar_verdict(a5, 0).outcome == Outcome::pass);
}

TEST_CASE("budget overruns become skipped verdicts") {
  GroupContext ctx("S5", corpus_entry("S5").build(), 1000);
  auto v = theorem_a_verdict(ctx, 2);
  CHECK(v.outcome == Outcome::skipped);
  v = invstar_verdict(ctx, 2);
  CHECK(v.outcome == Outcome::skipped);
  REQUIRE(v.parameter_k.has_value());
  CHECK(*v.parameter_k == 0);
}

TEST_CASE("verdicts are deterministic") {
  for (const char* name : {"S4", "A5", "SL(2,5)"}) {
    auto a = context(name);
    auto b = context(name);
    for (int k = 2; k <= 3; ++k) {
      auto va = theorem_b_verdict(a, k);
      auto vb = theorem_b_verdict(b, k);
      CHECK(va.left_side == vb.left_side);
      CHECK(va.witness.has_value() == vb.witness.has_value());
      if (va.witness && vb.witness) {
        CHECK(va.witness->a == vb.witness->a);
        CHECK(va.witness->b == vb.witness->b);
      }
    }
  }
}
