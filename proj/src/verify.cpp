#include "cpc/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "cpc/error.hpp"

namespace cpc {

namespace {

constexpr std::array<std::pair<Statement, const char*>, 11> kStatementNames{{
    {Statement::theorem_a, "theorem_a"},
    {Statement::theorem_b, "theorem_b"},
    {Statement::delta1_corollary, "delta1_corollary"},
    {Statement::prop_gamma_residual, "prop_gamma_residual"},
    {Statement::lemma_delta_fitting, "lemma_delta_fitting"},
    {Statement::thm_fitting_delta, "thm_fitting_delta"},
    {Statement::thm_pi_elements, "thm_pi_elements"},
    {Statement::baumslag_wiegold, "baumslag_wiegold"},
    {Statement::counterexample_s3, "counterexample_s3"},
    {Statement::counterexample_a5, "counterexample_a5"},
    {Statement::invstar, "invstar"},
}};

}  // namespace

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> v;
    for (const auto& [s, name] : kStatementNames) v.push_back(s);
    return v;
  }();
  return all;
}

const char* to_string(Statement s) {
  for (const auto& [st, name] : kStatementNames) {
    if (st == s) return name;
  }
  return "?";
}

std::optional<Statement> parse_statement(std::string_view name) {
  for (const auto& [st, n] : kStatementNames) {
    if (name == n) return st;
  }
  return std::nullopt;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::vacuous: return "vacuous";
    case Outcome::skipped: return "skipped";
    case Outcome::informational: return "informational";
  }
  return "?";
}

OrderCheck order_multiplicative(const ElementSet& s, Exec exec) {
  auto found = first_order_violation(s, exec);
  if (!found) return {};
  const GroupTable& g = s.parent();
  Witness w{g.element(found->a), g.element(found->b), 0, 0, 0};
  // Recomputed from the permutations, independent of the cached tables.
  w.order_a = order(w.a);
  w.order_b = order(w.b);
  w.order_ab = order(compose(w.a, w.b));
  if (std::gcd(w.order_a, w.order_b) != 1 || w.order_ab == w.order_a * w.order_b) {
    throw std::logic_error("order_multiplicative produced an invalid witness");
  }
  return {false, std::move(w)};
}

// ---------------------------------------------------------------------------

GroupContext::GroupContext(std::string name, GroupPtr group, std::uint64_t pair_budget)
    : name_(std::move(name)),
      group_(std::move(group)),
      gamma_(group_, CoprimeFamily::gamma_star, pair_budget),
      delta_(group_, CoprimeFamily::delta_star, pair_budget) {}

const SeriesReport& GroupContext::lower_central() {
  if (!lower_central_) lower_central_ = lower_central_series(*group_);
  return *lower_central_;
}

const SeriesReport& GroupContext::derived() {
  if (!derived_) derived_ = derived_series(*group_);
  return *derived_;
}

const SeriesReport& GroupContext::lower_fitting() {
  if (!lower_fitting_) lower_fitting_ = lower_fitting_series(*group_);
  return *lower_fitting_;
}

bool GroupContext::soluble() { return derived().terms.back().is_trivial(); }
bool GroupContext::nilpotent() { return lower_central().terms.back().is_trivial(); }

std::optional<std::size_t> GroupContext::fitting_height() {
  if (!soluble()) return std::nullopt;
  return lower_fitting().length_to_trivial;
}

const ElementSet& GroupContext::o_pi(const PrimeSet& pi) {
  auto it = o_pi_.find(pi);
  if (it == o_pi_.end()) it = o_pi_.emplace(pi, cpc::o_pi(*group_, pi)).first;
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

Verdict start(GroupContext& ctx, Statement s, std::optional<int> k) {
  Verdict v;
  v.group_name = ctx.name();
  v.group_order = ctx.group().order();
  v.statement = s;
  v.parameter_k = k;
  return v;
}

// Runs body, stamps elapsed time and turns budget overruns into skips.
template <class Body>
Verdict timed(Verdict v, Body body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const BudgetExceeded& e) {
    v.outcome = Outcome::skipped;
    v.note = e.what();
  }
  v.elapsed = std::chrono::steady_clock::now() - t0;
  return v;
}

void settle_iff(Verdict& v) {
  v.equivalent = v.left_side == v.right_side;
  v.outcome = v.equivalent ? Outcome::pass : Outcome::fail;
}

void settle_equality(Verdict& v) {
  v.equivalent = v.left_side && v.right_side;
  v.outcome = v.equivalent ? Outcome::pass : Outcome::fail;
}

void require_k(int k, int min, Statement s) {
  if (k < min) {
    throw PreconditionError(std::string(to_string(s)) + " needs k >= " + std::to_string(min));
  }
}

}  // namespace

Verdict theorem_a_verdict(GroupContext& ctx, int k) {
  require_k(k, 2, Statement::theorem_a);
  return timed(start(ctx, Statement::theorem_a, k), [&](Verdict& v) {
    auto check = order_multiplicative(ctx.gamma_star().level(k));
    v.left_side = check.pass;
    v.witness = std::move(check.witness);
    v.right_side = is_nilpotent(ctx.gamma_star().subgroup(k));
    settle_iff(v);
  });
}

Verdict theorem_b_verdict(GroupContext& ctx, int k) {
  require_k(k, 1, Statement::theorem_b);
  return timed(start(ctx, Statement::theorem_b, k), [&](Verdict& v) {
    auto powered = order_multiplicative(ctx.delta_star().powers(k));
    auto plain = order_multiplicative(ctx.delta_star().level(k));
    v.left_side = powered.pass;
    v.left_side_unpowered = plain.pass;
    v.witness = powered.witness ? std::move(powered.witness) : std::move(plain.witness);
    v.right_side = is_nilpotent(ctx.delta_star().subgroup(k));
    settle_iff(v);
    if (v.left_side != plain.pass) v.note = "powers change the condition";
    if (k < 2) {
      v.outcome = Outcome::informational;
      if (v.note.empty()) v.note = "k = 1: powered and unpowered conditions agree";
    }
  });
}

Verdict delta1_corollary_verdict(GroupContext& ctx) {
  return timed(start(ctx, Statement::delta1_corollary, 1), [&](Verdict& v) {
    auto check = order_multiplicative(ctx.delta_star().level(1));
    v.left_side = check.pass;
    v.witness = std::move(check.witness);
    v.right_side = is_nilpotent(ctx.lower_central().terms.back());
    settle_iff(v);
  });
}

Verdict prop_gamma_residual_verdict(GroupContext& ctx, int k) {
  require_k(k, 2, Statement::prop_gamma_residual);
  return timed(start(ctx, Statement::prop_gamma_residual, k), [&](Verdict& v) {
    const ElementSet& star = ctx.gamma_star().subgroup(k);
    const ElementSet& residual = ctx.lower_central().terms.back();
    v.left_side = star.is_subset_of(residual);
    v.right_side = residual.is_subset_of(star);
    settle_equality(v);
  });
}

Verdict lemma_delta_fitting_verdict(GroupContext& ctx, int k) {
  require_k(k, 0, Statement::lemma_delta_fitting);
  return timed(start(ctx, Statement::lemma_delta_fitting, k), [&](Verdict& v) {
    const ElementSet& star = ctx.delta_star().subgroup(k);
    const SeriesReport& series = ctx.lower_fitting();
    const ElementSet& term = series.term(static_cast<std::size_t>(k));
    v.left_side = star.is_subset_of(term);
    v.right_side = term.is_subset_of(star);
    settle_equality(v);
    if (static_cast<std::size_t>(k) >= series.terms.size()) {
      v.note = "compared with the stable term N_" + std::to_string(series.terms.size() - 1);
    }
  });
}

Verdict thm_fitting_delta_verdict(GroupContext& ctx, int k) {
  require_k(k, 1, Statement::thm_fitting_delta);
  return timed(start(ctx, Statement::thm_fitting_delta, k), [&](Verdict& v) {
    v.left_side = ctx.delta_star().subgroup(k).is_trivial();
    const auto h = ctx.fitting_height();
    v.right_side = h.has_value() && *h <= static_cast<std::size_t>(k);
    settle_iff(v);
    v.note = h ? "fitting height " + std::to_string(*h) : "not soluble";
  });
}

Verdict thm_pi_elements_verdict(GroupContext& ctx, int k, const PrimeSet& pi) {
  require_k(k, 1, Statement::thm_pi_elements);
  if (pi.size() > 2) throw PreconditionError("thm_pi_elements takes at most two primes");
  Verdict base = start(ctx, Statement::thm_pi_elements, k);
  base.pi = pi;
  return timed(std::move(base), [&](Verdict& v) {
    const GroupTable& g = ctx.group();
    bool hypothesis = true;
    ctx.delta_star().level(k).for_each([&](ElementId x) {
      if (hypothesis && !is_pi_number(g.order_of(x), pi)) hypothesis = false;
    });
    v.left_side = hypothesis;
    if (hypothesis) {
      v.right_side = ctx.soluble() && ctx.delta_star().subgroup(k).is_subset_of(ctx.o_pi(pi));
      v.equivalent = v.right_side;
      v.outcome = v.equivalent ? Outcome::pass : Outcome::fail;
    } else {
      v.right_side = false;
      v.equivalent = true;
      v.outcome = Outcome::vacuous;
    }
  });
}

Verdict baumslag_wiegold_verdict(GroupContext& ctx) {
  return timed(start(ctx, Statement::baumslag_wiegold, std::nullopt), [&](Verdict& v) {
    auto check = order_multiplicative(ElementSet::whole(ctx.group()));
    v.left_side = check.pass;
    v.witness = std::move(check.witness);
    v.right_side = ctx.nilpotent();
    settle_iff(v);
  });
}

Verdict word_counterexample_verdict(GroupContext& ctx, Statement statement, const WordSpec& w) {
  return timed(start(ctx, statement, std::nullopt), [&](Verdict& v) {
    const GroupTable& g = ctx.group();
    const ElementSet values = word_values(g, w);
    bool all_involutions = true;
    values.for_each([&](ElementId x) {
      if (x != GroupTable::identity() && g.order_of(x) != 2) all_involutions = false;
    });
    v.left_side = all_involutions;
    v.right_side = subgroup_generated(values).is_whole();
    const bool nilpotent = ctx.nilpotent();
    v.equivalent = v.left_side && v.right_side && !nilpotent;
    v.outcome = v.equivalent ? Outcome::pass : Outcome::fail;
    v.note = to_string(w) + ": " + std::to_string(values.size() - 1) + " nontrivial values";
  });
}

Verdict invstar_verdict(GroupContext& ctx, int n_max) {
  require_k(n_max, 0, Statement::invstar);
  Verdict v = start(ctx, Statement::invstar, n_max);
  const auto t0 = std::chrono::steady_clock::now();
  const GroupTable& g = ctx.group();
  ElementSet involutions(g);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (g.order_of(x) == 2) involutions.insert(x);
  }
  v.right_side = true;
  v.left_side = true;
  int verified = -1;
  try {
    for (int n = 0; n <= n_max; ++n) {
      if (!involutions.is_subset_of(ctx.delta_star().level(n))) {
        v.left_side = false;
        v.note = "involution missing at level " + std::to_string(n);
        break;
      }
      verified = n;
    }
    v.equivalent = v.left_side;
    v.outcome = v.equivalent ? Outcome::pass : Outcome::fail;
  } catch (const BudgetExceeded& e) {
    v.parameter_k = verified;
    v.equivalent = v.left_side;
    v.outcome = Outcome::skipped;
    v.note = "verified up to n = " + std::to_string(verified) + "; " + e.what();
  }
  v.elapsed = std::chrono::steady_clock::now() - t0;
  return v;
}

std::vector<PrimeSet> prime_subsets(const GroupTable& g, std::size_t max_size) {
  const auto primes = g.prime_divisors();
  std::vector<PrimeSet> out{{}};
  if (max_size >= 1) {
    for (auto p : primes) out.push_back({p});
  }
  if (max_size >= 2) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) out.push_back({primes[i], primes[j]});
    }
  }
  return out;
}

}  // namespace cpc
