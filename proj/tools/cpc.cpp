// cpc: structural analysis of permutation groups and theorem campaigns over
// the builtin corpus.
//
//   cpc list
//   cpc analyze S4 [--k 3] [--format text|json]
//   cpc analyze --file group.json
//   cpc verify theorem_a theorem_b --k 2..3 --max-order 700 --format md
//
// Exit status: 0 all verdicts pass, 1 some verdict fails, 2 usage error,
// 3 skips (budget) without failures.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpc/corpus.hpp"
#include "cpc/report.hpp"

namespace {

constexpr int kExitUsage = 2;

// Commas inside parentheses belong to names such as "PSL(2,7)".
std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::string part;
    int depth = 0;
    for (char c : item) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!part.empty()) out.push_back(part);
        part.clear();
      } else {
        part += c;
      }
    }
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string tag_text(const std::set<cpc::Tag>& tags) {
  std::string out;
  for (auto t : tags) out += (out.empty() ? "" : ",") + std::string(cpc::to_string(t));
  return out.empty() ? "-" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coprime commutator calculus and theorem checks on finite permutation groups"};
  app.set_version_flag("--version", std::string(cpc::kToolVersion));
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the builtin corpus");

  auto* analyze = app.add_subcommand("analyze", "Structural report for one group");
  std::string group_ref;
  std::string analyze_file;
  int analyze_k = 3;
  std::string analyze_format = "text";
  analyze->add_option("group", group_ref, "Builtin group name or path to a group JSON file");
  analyze->add_option("--file", analyze_file, "Group JSON file");
  analyze->add_option("--k", analyze_k, "Highest gamma*/delta* level to report")->check(CLI::Range(1, 16));
  analyze->add_option("--format", analyze_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Check theorem statements over a corpus");
  std::vector<std::string> statements_pos;
  std::vector<std::string> statements_opt;
  std::string k_text;
  cpc::CampaignConfig config;
  std::vector<std::string> groups;
  std::string format = "md";
  verify->add_option("statement", statements_pos, "Statement identifiers (default: all)");
  verify->add_option("--statements", statements_opt, "Comma-separated statement identifiers");
  verify->add_option("--k", k_text, "k range A..B applied to every parameterized statement");
  verify->add_option("--max-order", config.max_order, "Skip builtin groups larger than this");
  verify->add_option("--groups", groups, "Comma-separated builtin group names");
  verify->add_option("--file", config.files, "Additional group JSON files");
  verify->add_flag("--no-builtin", "Only check groups loaded with --file");
  verify->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  verify->add_flag("--witnesses", config.witnesses, "Include witness pairs");
  verify->add_flag("--stable", config.stable, "Omit timings for reproducible output");
  verify->add_option("--jobs", config.jobs, "Groups processed in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--pair-budget", config.pair_budget, "Pair enumeration budget per level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto& e : cpc::builtin_corpus()) {
        std::cout << e.name << "\torder " << e.expected_order << "\tdegree " << e.degree << "\t"
                  << tag_text(e.tags) << "\n";
      }
      return 0;
    }

    if (analyze->parsed()) {
      if (group_ref.empty() == analyze_file.empty()) {
        std::cerr << "analyze: give exactly one of a group name or --file\n";
        return kExitUsage;
      }
      cpc::CorpusEntry entry;
      if (!analyze_file.empty()) {
        entry = cpc::load_group_file(analyze_file);
      } else if (group_ref.ends_with(".json")) {
        entry = cpc::load_group_file(group_ref);
      } else {
        try {
          entry = cpc::corpus_entry(group_ref);
        } catch (const cpc::PreconditionError& e) {
          std::cerr << "analyze: " << e.what() << "\n";
          return kExitUsage;
        }
      }
      auto report = cpc::analyze(entry.name, entry.build(), analyze_k);
      if (analyze_format == "json") {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << cpc::analysis_text(report);
      }
      return 0;
    }

    if (verify->parsed()) {
      std::vector<std::string> names = statements_pos;
      for (const auto& s : split_commas(statements_opt)) names.push_back(s);
      for (const auto& name : names) {
        auto st = cpc::parse_statement(name);
        if (!st) {
          std::cerr << "verify: unknown statement '" << name << "'\n";
          return kExitUsage;
        }
        config.statements.push_back(*st);
      }
      if (config.statements.empty()) config.statements = cpc::all_statements();
      if (!k_text.empty()) config.k_range = cpc::parse_k_range(k_text);
      config.groups = split_commas(groups);
      config.include_builtin = verify->count("--no-builtin") == 0;
      try {
        cpc::validate(config);
      } catch (const cpc::PreconditionError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
      }
      std::vector<cpc::CorpusEntry> entries;
      try {
        entries = cpc::select_entries(config);
      } catch (const cpc::PreconditionError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
      }
      auto report = cpc::run_campaign(entries, config);
      if (format == "json") {
        std::cout << cpc::to_json(report).dump(2) << "\n";
      } else {
        std::cout << cpc::to_markdown(report);
      }
      return cpc::exit_code(report);
    }
  } catch (const cpc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cpc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cpc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
