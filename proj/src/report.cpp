#include "cpc/report.hpp"

#include <charconv>
#include <sstream>

namespace cpc {

using nlohmann::json;

KRange parse_k_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("bad k range '" + std::string(text) + "' (expected A..B)");
    }
    return value;
  };
  auto dots = text.find("..");
  KRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw ParseError("empty k range '" + std::string(text) + "'");
  return r;
}

bool uses_k(Statement s) {
  switch (s) {
    case Statement::delta1_corollary:
    case Statement::baumslag_wiegold:
    case Statement::counterexample_s3:
    case Statement::counterexample_a5:
      return false;
    default:
      return true;
  }
}

int min_k(Statement s) {
  switch (s) {
    case Statement::theorem_a:
    case Statement::prop_gamma_residual:
      return 2;
    case Statement::theorem_b:
    case Statement::thm_fitting_delta:
    case Statement::thm_pi_elements:
      return 1;
    default:
      return 0;
  }
}

KRange default_k_range(Statement s) {
  switch (s) {
    case Statement::theorem_a: return {2, 3};
    case Statement::theorem_b: return {2, 3};
    case Statement::prop_gamma_residual: return {2, 4};
    case Statement::lemma_delta_fitting: return {0, 3};
    case Statement::thm_fitting_delta: return {1, 4};
    case Statement::thm_pi_elements: return {1, 2};
    case Statement::invstar: return {0, 2};
    default: return {0, 0};
  }
}

bool applies_to(Statement s, const CorpusEntry& entry) {
  switch (s) {
    case Statement::counterexample_s3: return entry.name == "S3";
    case Statement::counterexample_a5: return entry.name == "A5";
    case Statement::invstar: return entry.has(Tag::minimal_simple);
    default: return true;
  }
}

void validate(const CampaignConfig& config) {
  if (config.jobs < 1) throw PreconditionError("--jobs must be >= 1");
  if (!config.k_range) return;
  if (config.k_range->lo > config.k_range->hi) throw PreconditionError("empty k range");
  for (Statement s : config.statements) {
    if (uses_k(s) && config.k_range->lo < min_k(s)) {
      throw PreconditionError(std::string(to_string(s)) + " needs k >= " +
                              std::to_string(min_k(s)));
    }
  }
}

Summary tally(const std::vector<Verdict>& verdicts) {
  Summary s;
  for (const auto& v : verdicts) {
    switch (v.outcome) {
      case Outcome::pass: ++s.pass; break;
      case Outcome::fail: ++s.fail; break;
      case Outcome::vacuous: ++s.vacuous; break;
      case Outcome::skipped: ++s.skipped; break;
      case Outcome::informational: ++s.informational; break;
    }
  }
  return s;
}

std::vector<CorpusEntry> select_entries(const CampaignConfig& config) {
  std::vector<CorpusEntry> out;
  if (config.include_builtin) {
    if (config.groups.empty()) {
      for (const auto& e : builtin_corpus()) {
        if (e.expected_order <= config.max_order) out.push_back(e);
      }
    } else {
      for (const auto& name : config.groups) out.push_back(corpus_entry(name));
    }
  }
  for (const auto& f : config.files) out.push_back(load_group_file(f));
  return out;
}

namespace {

std::vector<Verdict> run_statement(GroupContext& ctx, const CorpusEntry& entry, Statement s,
                                   const CampaignConfig& config) {
  std::vector<Verdict> out;
  if (!applies_to(s, entry)) return out;
  const KRange range = config.k_range.value_or(default_k_range(s));
  switch (s) {
    case Statement::theorem_a:
      for (int k = range.lo; k <= range.hi; ++k) out.push_back(theorem_a_verdict(ctx, k));
      break;
    case Statement::theorem_b:
      for (int k = range.lo; k <= range.hi; ++k) out.push_back(theorem_b_verdict(ctx, k));
      break;
    case Statement::delta1_corollary:
      out.push_back(delta1_corollary_verdict(ctx));
      break;
    case Statement::prop_gamma_residual:
      for (int k = range.lo; k <= range.hi; ++k) out.push_back(prop_gamma_residual_verdict(ctx, k));
      break;
    case Statement::lemma_delta_fitting:
      for (int k = range.lo; k <= range.hi; ++k) out.push_back(lemma_delta_fitting_verdict(ctx, k));
      break;
    case Statement::thm_fitting_delta:
      for (int k = range.lo; k <= range.hi; ++k) out.push_back(thm_fitting_delta_verdict(ctx, k));
      break;
    case Statement::thm_pi_elements:
      for (int k = range.lo; k <= range.hi; ++k) {
        for (const auto& pi : prime_subsets(ctx.group())) {
          out.push_back(thm_pi_elements_verdict(ctx, k, pi));
        }
      }
      break;
    case Statement::baumslag_wiegold:
      out.push_back(baumslag_wiegold_verdict(ctx));
      break;
    case Statement::counterexample_s3:
      out.push_back(word_counterexample_verdict(ctx, s, WordSpec::power(3)));
      break;
    case Statement::counterexample_a5:
      out.push_back(word_counterexample_verdict(ctx, s, WordSpec::a5_counterexample()));
      break;
    case Statement::invstar:
      out.push_back(invstar_verdict(ctx, range.hi));
      break;
  }
  return out;
}

Verdict skipped_verdict(const CorpusEntry& entry, Statement s, const std::string& why) {
  Verdict v;
  v.group_name = entry.name;
  v.group_order = entry.expected_order;
  v.statement = s;
  v.outcome = Outcome::skipped;
  v.note = why;
  return v;
}

}  // namespace

CampaignReport run_campaign(const std::vector<CorpusEntry>& entries, const CampaignConfig& config) {
  validate(config);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t ns = config.statements.size();
  // results[e][s] holds the verdicts of statement s on entry e.
  std::vector<std::vector<std::vector<Verdict>>> results(
      entries.size(), std::vector<std::vector<Verdict>>(ns));

  auto run_entry = [&](std::size_t e) {
    const CorpusEntry& entry = entries[e];
    GroupPtr group;
    try {
      group = entry.build();
    } catch (const BudgetExceeded& ex) {
      for (std::size_t s = 0; s < ns; ++s) {
        if (applies_to(config.statements[s], entry)) {
          results[e][s].push_back(skipped_verdict(entry, config.statements[s], ex.what()));
        }
      }
      return;
    }
    GroupContext ctx(entry.name, group, config.pair_budget);
    for (std::size_t s = 0; s < ns; ++s) {
      results[e][s] = run_statement(ctx, entry, config.statements[s], config);
    }
  };

  if (config.jobs <= 1) {
    for (std::size_t e = 0; e < entries.size(); ++e) run_entry(e);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs)
    for (long long e = 0; e < static_cast<long long>(entries.size()); ++e) {
      try {
        run_entry(static_cast<std::size_t>(e));
      } catch (...) {
#pragma omp critical(cpc_campaign_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  CampaignReport report;
  report.config = config;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      for (auto& v : results[e][s]) report.verdicts.push_back(std::move(v));
    }
  }
  report.summary = tally(report.verdicts);
  report.total_elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

int exit_code(const CampaignReport& report) {
  if (report.summary.fail > 0) return 1;
  if (report.summary.skipped > 0) return 3;
  return 0;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

json witness_json(const Witness& w) {
  return json{{"a", to_cycle_string(w.a)},
              {"b", to_cycle_string(w.b)},
              {"order_a", w.order_a},
              {"order_b", w.order_b},
              {"order_ab", w.order_ab}};
}

std::string pi_text(const PrimeSet& pi) {
  std::string out = "{";
  for (auto p : pi) {
    if (out.size() > 1) out += ",";
    out += std::to_string(p);
  }
  return out + "}";
}

}  // namespace

json to_json(const Verdict& v, bool witnesses, bool stable) {
  json j;
  j["group"] = v.group_name;
  j["group_order"] = v.group_order;
  j["statement"] = to_string(v.statement);
  j["k"] = v.parameter_k ? json(*v.parameter_k) : json(nullptr);
  j["pi"] = v.pi ? json(std::vector<std::uint64_t>(v.pi->begin(), v.pi->end())) : json(nullptr);
  j["left_side"] = v.left_side;
  j["right_side"] = v.right_side;
  j["equivalent"] = v.equivalent;
  j["outcome"] = to_string(v.outcome);
  if (v.left_side_unpowered) j["left_side_unpowered"] = *v.left_side_unpowered;
  j["witness_found"] = v.witness.has_value();
  if (witnesses && v.witness) j["witness"] = witness_json(*v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  if (!stable) j["elapsed_ms"] = millis(v.elapsed);
  return j;
}

json to_json(const CampaignReport& report) {
  const auto& c = report.config;
  json statements = json::array();
  for (auto s : c.statements) statements.push_back(to_string(s));
  json config{{"statements", statements},
              {"k_range", c.k_range ? json{c.k_range->lo, c.k_range->hi} : json(nullptr)},
              {"max_order", c.max_order},
              {"groups", c.groups},
              {"files", c.files},
              {"builtin", c.include_builtin},
              {"witnesses", c.witnesses},
              {"stable", c.stable},
              {"jobs", c.jobs},
              {"pair_budget", c.pair_budget}};
  json verdicts = json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(to_json(v, c.witnesses, c.stable));
  json j{{"schema_version", kReportSchemaVersion},
         {"tool_version", report.tool_version},
         {"config", config},
         {"verdicts", verdicts},
         {"summary",
          {{"pass", report.summary.pass},
           {"fail", report.summary.fail},
           {"vacuous", report.summary.vacuous},
           {"skipped", report.summary.skipped},
           {"informational", report.summary.informational},
           {"total", report.summary.total()}}}};
  if (!c.stable) j["total_elapsed_ms"] = millis(report.total_elapsed);
  return j;
}

std::string to_markdown(const CampaignReport& report) {
  std::ostringstream os;
  const auto& c = report.config;
  os << "# Verification report\n\n";
  os << "tool version " << report.tool_version << ", max order " << c.max_order;
  if (c.k_range) os << ", k " << c.k_range->lo << ".." << c.k_range->hi;
  os << "\n";
  std::optional<Statement> current;
  for (const auto& v : report.verdicts) {
    if (!current || *current != v.statement) {
      current = v.statement;
      os << "\n## " << to_string(v.statement) << "\n\n";
      os << "| group | \\|G\\| | k | left | right | equivalent | outcome | witness |\n";
      os << "|---|---|---|---|---|---|---|---|\n";
    }
    std::string k = v.parameter_k ? std::to_string(*v.parameter_k) : "-";
    if (v.pi) k += " pi=" + pi_text(*v.pi);
    std::string witness = "-";
    if (v.witness) {
      witness = "yes";
      if (c.witnesses) {
        const auto& w = *v.witness;
        witness = "a=" + to_cycle_string(w.a) + " b=" + to_cycle_string(w.b) + " \\|a\\|=" +
                  std::to_string(w.order_a) + " \\|b\\|=" + std::to_string(w.order_b) +
                  " \\|ab\\|=" + std::to_string(w.order_ab);
      }
    }
    os << "| " << v.group_name << " | " << v.group_order << " | " << k << " | "
       << (v.left_side ? "true" : "false") << " | " << (v.right_side ? "true" : "false") << " | "
       << (v.equivalent ? "true" : "false") << " | " << to_string(v.outcome) << " | " << witness
       << " |\n";
  }
  const auto& s = report.summary;
  os << "\n**Summary:** " << s.pass << " pass, " << s.fail << " fail, " << s.vacuous
     << " vacuous, " << s.skipped << " skipped, " << s.informational << " informational\n";
  if (!c.stable) os << "\nTotal time " << millis(report.total_elapsed) << " ms\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Analysis

namespace {

json orders_of(const SeriesReport& r) {
  json out = json::array();
  for (const auto& t : r.terms) out.push_back(t.size());
  return out;
}

}  // namespace

json analyze(const std::string& name, const GroupPtr& group, int k_max) {
  const GroupTable& g = *group;
  GroupContext ctx(name, group);
  const ElementSet whole = ElementSet::whole(g);
  json j;
  j["name"] = name;
  j["order"] = g.order();
  j["degree"] = g.degree();
  j["primes"] = g.prime_divisors();
  j["abelian"] = is_abelian(whole);
  j["nilpotent"] = ctx.nilpotent();
  j["soluble"] = ctx.soluble();
  j["perfect"] = commutator_subgroup(whole, whole).is_whole();
  j["nilpotency_class"] = ctx.nilpotent() ? json(*ctx.lower_central().length_to_trivial) : json(nullptr);
  j["derived_length"] = ctx.soluble() ? json(*ctx.derived().length_to_trivial) : json(nullptr);
  const auto h = ctx.fitting_height();
  j["fitting_height"] = h ? json(*h) : json(nullptr);
  j["nilpotent_residual_order"] = ctx.lower_central().terms.back().size();
  j["fitting_subgroup_order"] = fitting_subgroup(g).size();
  j["center_order"] = center(whole).size();
  j["series"] = {{"lower_central", orders_of(ctx.lower_central())},
                 {"derived", orders_of(ctx.derived())},
                 {"lower_fitting", orders_of(ctx.lower_fitting())}};
  json gamma = json::array();
  for (int k = 1; k <= std::max(1, k_max); ++k) {
    gamma.push_back({{"k", k},
                     {"set_size", ctx.gamma_star().level(k).size()},
                     {"subgroup_order", ctx.gamma_star().subgroup(k).size()}});
  }
  json delta = json::array();
  for (int k = 0; k <= std::max(0, k_max); ++k) {
    delta.push_back({{"k", k},
                     {"set_size", ctx.delta_star().level(k).size()},
                     {"subgroup_order", ctx.delta_star().subgroup(k).size()}});
  }
  j["gamma_star"] = gamma;
  j["delta_star"] = delta;
  return j;
}

std::string analysis_text(const json& a) {
  std::ostringstream os;
  auto flag = [](const json& v) { return v.get<bool>() ? "yes" : "no"; };
  auto list = [](const json& arr) {
    std::string out;
    for (const auto& x : arr) {
      if (!out.empty()) out += " > ";
      out += std::to_string(x.get<std::uint64_t>());
    }
    return out;
  };
  os << "group:              " << a["name"].get<std::string>() << "\n";
  os << "order:              " << a["order"] << "\n";
  os << "degree:             " << a["degree"] << "\n";
  std::string primes;
  for (const auto& p : a["primes"]) primes += (primes.empty() ? "" : ", ") + std::to_string(p.get<std::uint64_t>());
  os << "primes:             {" << primes << "}\n";
  os << "abelian:            " << flag(a["abelian"]) << "\n";
  os << "nilpotent:          " << flag(a["nilpotent"]);
  if (!a["nilpotency_class"].is_null()) os << " (class " << a["nilpotency_class"] << ")";
  os << "\n";
  os << "soluble:            " << flag(a["soluble"]);
  if (!a["derived_length"].is_null()) os << " (derived length " << a["derived_length"] << ")";
  os << "\n";
  os << "perfect:            " << flag(a["perfect"]) << "\n";
  os << "Fitting height:     "
     << (a["fitting_height"].is_null() ? std::string("undefined (not soluble)")
                                       : a["fitting_height"].dump())
     << "\n";
  os << "|gamma_inf(G)|:     " << a["nilpotent_residual_order"] << "\n";
  os << "|F(G)|:             " << a["fitting_subgroup_order"] << "\n";
  os << "|Z(G)|:             " << a["center_order"] << "\n";
  os << "lower central:      " << list(a["series"]["lower_central"]) << "\n";
  os << "derived:            " << list(a["series"]["derived"]) << "\n";
  os << "lower Fitting:      " << list(a["series"]["lower_fitting"]) << "\n";
  for (const auto& e : a["gamma_star"]) {
    os << "gamma*_" << e["k"] << ":           " << e["set_size"] << " commutators, subgroup order "
       << e["subgroup_order"] << "\n";
  }
  for (const auto& e : a["delta_star"]) {
    os << "delta*_" << e["k"] << ":           " << e["set_size"] << " commutators, subgroup order "
       << e["subgroup_order"] << "\n";
  }
  return os.str();
}

}  // namespace cpc
