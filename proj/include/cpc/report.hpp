#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpc/corpus.hpp"
#include "cpc/verify.hpp"

namespace cpc {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

struct KRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const KRange&, const KRange&) = default;
};

/// "A..B" or a single integer "A". Throws ParseError.
KRange parse_k_range(std::string_view text);

/// Whether the statement is parameterized by k (or n for invstar).
bool uses_k(Statement s);
int min_k(Statement s);
KRange default_k_range(Statement s);
/// S3-only and A5-only counterexamples, minimal-simple-only invstar.
bool applies_to(Statement s, const CorpusEntry& entry);

struct CampaignConfig {
  std::vector<Statement> statements;
  /// Overrides every statement's default range when set.
  std::optional<KRange> k_range;
  std::uint64_t max_order = 1000;
  /// Builtin names to include; empty means the whole builtin corpus.
  std::vector<std::string> groups;
  std::vector<std::string> files;
  bool include_builtin = true;
  bool witnesses = false;
  bool stable = false;
  int jobs = 1;
  std::uint64_t pair_budget = kDefaultPairBudget;
};

/// Throws PreconditionError when the k range is below a selected
/// statement's minimum or reversed.
void validate(const CampaignConfig& config);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
  std::size_t informational = 0;
  std::size_t total() const { return pass + fail + vacuous + skipped + informational; }
};

struct CampaignReport {
  std::string tool_version = kToolVersion;
  CampaignConfig config;
  std::vector<Verdict> verdicts;
  Summary summary;
  std::chrono::nanoseconds total_elapsed{0};
};

Summary tally(const std::vector<Verdict>& verdicts);

/// Builtin entries (filtered by config.groups and max_order) followed by the
/// loaded files.
std::vector<CorpusEntry> select_entries(const CampaignConfig& config);

/// Runs every selected statement on every entry. Groups are processed in
/// parallel (config.jobs); verdicts come back ordered by statement, then
/// entry, then k, then pi, regardless of scheduling.
CampaignReport run_campaign(const std::vector<CorpusEntry>& entries, const CampaignConfig& config);

/// 0 all pass, 1 any fail, 3 skips without failures.
int exit_code(const CampaignReport& report);

nlohmann::json to_json(const Verdict& v, bool witnesses, bool stable);
nlohmann::json to_json(const CampaignReport& report);
std::string to_markdown(const CampaignReport& report);

/// Structural summary of one group.
nlohmann::json analyze(const std::string& name, const GroupPtr& group, int k_max);
std::string analysis_text(const nlohmann::json& analysis);

}  // namespace cpc
