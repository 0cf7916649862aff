#include <doctest.h>

#include "cpc/error.hpp"
#include "cpc/report.hpp"

using namespace cpc;

namespace {

CampaignConfig small_config() {
  CampaignConfig c;
  c.statements = {Statement::theorem_a, Statement::baumslag_wiegold, Statement::thm_pi_elements};
  c.groups = {"S3", "S4", "C6"};
  c.stable = true;
  return c;
}

}  // namespace

TEST_CASE("k ranges") {
  CHECK(parse_k_range("2..3") == KRange{2, 3});
  CHECK(parse_k_range("4") == KRange{4, 4});
  CHECK(parse_k_range("0..0") == KRange{0, 0});
  CHECK_THROWS_AS(parse_k_range("3..2"), ParseError);
  CHECK_THROWS_AS(parse_k_range("a..b"), ParseError);
  CHECK_THROWS_AS(parse_k_range("2..."), ParseError);
  CHECK_THROWS_AS(parse_k_range(""), ParseError);
}

TEST_CASE("config validation") {
  CampaignConfig c;
  c.statements = {Statement::theorem_a};
  c.k_range = KRange{1, 3};
  CHECK_THROWS_AS(validate(c), PreconditionError);
  c.k_range = KRange{2, 3};
  CHECK_NOTHROW(validate(c));
  c.jobs = 0;
  CHECK_THROWS_AS(validate(c), PreconditionError);
  c.jobs = 1;
  c.statements = {Statement::lemma_delta_fitting};
  c.k_range = KRange{0, 2};
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("statement applicability") {
  CHECK(applies_to(Statement::counterexample_s3, corpus_entry("S3")));
  CHECK_FALSE(applies_to(Statement::counterexample_s3, corpus_entry("S4")));
  CHECK(applies_to(Statement::counterexample_a5, corpus_entry("A5")));
  CHECK(applies_to(Statement::invstar, corpus_entry("PSL(2,8)")));
  CHECK_FALSE(applies_to(Statement::invstar, corpus_entry("A6")));
  CHECK(applies_to(Statement::theorem_a, corpus_entry("C1")));
  CHECK(min_k(Statement::theorem_a) == 2);
  CHECK(min_k(Statement::lemma_delta_fitting) == 0);
  CHECK_FALSE(uses_k(Statement::baumslag_wiegold));
}

TEST_CASE("entry selection") {
  CampaignConfig c;
  c.max_order = 24;
  for (const auto& e : select_entries(c)) CHECK(e.expected_order <= 24);
  c.groups = {"A5", "s3"};
  const auto named = select_entries(c);
  REQUIRE(named.size() == 2);
  CHECK(named[0].name == "A5");
  CHECK(named[1].name == "S3");
  c.groups = {"nope"};
  CHECK_THROWS_AS(select_entries(c), PreconditionError);
}

TEST_CASE("campaign report shape") {
  auto c = small_config();
  auto report = run_campaign(select_entries(c), c);
  CHECK(exit_code(report) == 0);
  const auto s = tally(report.verdicts);
  CHECK(s.total() == report.verdicts.size());
  CHECK(report.summary.pass == s.pass);
  CHECK(report.summary.vacuous == s.vacuous);

  // ordered by statement, then group, then k
  REQUIRE(report.verdicts.size() >= 6);
  CHECK(report.verdicts[0].statement == Statement::theorem_a);
  CHECK(report.verdicts[0].group_name == "S3");
  CHECK(report.verdicts[0].parameter_k == 2);
  CHECK(report.verdicts[1].parameter_k == 3);
  CHECK(report.verdicts[2].group_name == "S4");

  const auto j = to_json(report);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["config"]["groups"].size() == 3);
  CHECK(j["summary"]["total"] == report.verdicts.size());
  CHECK_FALSE(j.contains("total_elapsed_ms"));
  for (const auto& v : j["verdicts"]) {
    CHECK(v.contains("group"));
    CHECK(v.contains("statement"));
    CHECK(v.contains("equivalent"));
    CHECK(v.contains("witness_found"));
    CHECK_FALSE(v.contains("elapsed_ms"));
    CHECK_FALSE(v.contains("witness"));
  }

  const auto md = to_markdown(report);
  CHECK(md.find("| group | \\|G\\| | k | left | right | equivalent | outcome | witness |") != std::string::npos);
  CHECK(md.find("theorem_a") != std::string::npos);
}

TEST_CASE("witness details and timings on request") {
  auto c = small_config();
  c.witnesses = true;
  c.stable = false;
  auto j = to_json(run_campaign(select_entries(c), c));
  CHECK(j.contains("total_elapsed_ms"));
  bool saw_witness = false;
  for (const auto& v : j["verdicts"]) {
    CHECK(v.contains("elapsed_ms"));
    if (v["witness_found"].get<bool>()) {
      REQUIRE(v.contains("witness"));
      CHECK(v["witness"].contains("order_ab"));
      saw_witness = true;
    }
  }
  CHECK(saw_witness);
}

TEST_CASE("stable output is reproducible and independent of jobs") {
  auto c = small_config();
  c.statements = all_statements();
  c.groups = {"S3", "S4", "A5", "Q8", "PSL(2,7)"};
  const auto first = to_json(run_campaign(select_entries(c), c)).dump();
  const auto second = to_json(run_campaign(select_entries(c), c)).dump();
  CHECK(first == second);
  c.jobs = 4;
  auto parallel = to_json(run_campaign(select_entries(c), c));
  parallel["config"]["jobs"] = 1;
  CHECK(parallel.dump() == first);
}

TEST_CASE("exit codes") {
  CampaignReport r;
  CHECK(exit_code(r) == 0);
  Verdict v;
  v.outcome = Outcome::vacuous;
  r.verdicts.push_back(v);
  r.summary = tally(r.verdicts);
  CHECK(exit_code(r) == 0);
  v.outcome = Outcome::skipped;
  r.verdicts.push_back(v);
  r.summary = tally(r.verdicts);
  CHECK(exit_code(r) == 3);
  v.outcome = Outcome::fail;
  r.verdicts.push_back(v);
  r.summary = tally(r.verdicts);
  CHECK(exit_code(r) == 1);
}

TEST_CASE("budget overruns are reported as skips") {
  CampaignConfig c;
  c.statements = {Statement::theorem_a};
  c.groups = {"S5"};
  c.pair_budget = 1000;
  auto report = run_campaign(select_entries(c), c);
  CHECK(report.summary.skipped == report.verdicts.size());
  CHECK(exit_code(report) == 3);
}

TEST_CASE("analysis") {
  auto j = analyze("S4", corpus_entry("S4").build(), 3);
  CHECK(j["order"] == 24);
  CHECK(j["fitting_height"] == 3);
  CHECK(j["nilpotent_residual_order"] == 12);
  CHECK(j["fitting_subgroup_order"] == 4);
  CHECK(j["soluble"] == true);
  const auto text = analysis_text(j);
  CHECK(text.find("Fitting height") != std::string::npos);

  j = analyze("A5", corpus_entry("A5").build(), 2);
  CHECK(j["soluble"] == false);
  CHECK(j["fitting_height"].is_null());
  CHECK(j["nilpotent_residual_order"] == 60);

  j = analyze("C6", corpus_entry("C6").build(), 2);
  CHECK(j["nilpotent"] == true);
  CHECK(j["nilpotency_class"] == 1);
}
