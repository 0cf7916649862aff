#include "cpc/words.hpp"

#include <charconv>

#include "cpc/error.hpp"

namespace cpc {

WordSpec WordSpec::lower_central(int k) {
  if (k < 1) throw PreconditionError("gamma word needs k >= 1");
  return {Kind::lower_central, k};
}

WordSpec WordSpec::engel(int k) {
  if (k < 1) throw PreconditionError("engel word needs k >= 1");
  return {Kind::engel, k};
}

WordSpec WordSpec::power(int m) {
  if (m < 1) throw PreconditionError("power word needs m >= 1");
  return {Kind::power, m};
}

int WordSpec::arity() const {
  switch (kind) {
    case Kind::lower_central: return parameter;
    case Kind::engel: return 2;
    case Kind::power: return 1;
    case Kind::a5_counterexample: return 2;
  }
  return 0;
}

std::string to_string(const WordSpec& w) {
  switch (w.kind) {
    case WordSpec::Kind::lower_central: return "gamma:" + std::to_string(w.parameter);
    case WordSpec::Kind::engel: return "engel:" + std::to_string(w.parameter);
    case WordSpec::Kind::power: return "pow:" + std::to_string(w.parameter);
    case WordSpec::Kind::a5_counterexample: return "a5word";
  }
  return "?";
}

WordSpec parse_word(std::string_view text) {
  if (text == "a5word") return WordSpec::a5_counterexample();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown word '" + std::string(text) + "'");
  std::string_view head = text.substr(0, colon);
  std::string_view tail = text.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || value < 1) {
    throw ParseError("bad word parameter '" + std::string(tail) + "'");
  }
  if (head == "gamma") return WordSpec::lower_central(value);
  if (head == "engel") return WordSpec::engel(value);
  if (head == "pow") return WordSpec::power(value);
  throw ParseError("unknown word '" + std::string(text) + "'");
}

ElementSet word_values(const GroupTable& g, const WordSpec& w, std::uint64_t pair_budget,
                       Exec exec) {
  const std::vector<ElementId> all = ElementSet::whole(g).members();
  switch (w.kind) {
    case WordSpec::Kind::power: {
      ElementSet out(g);
      for (ElementId x : all) out.insert(g.pow(x, w.parameter));
      return out;
    }
    case WordSpec::Kind::lower_central: {
      // V_1 = G, V_{i+1} = {[v, g] : v in V_i, g in G}; each step is bounded
      // by |G|^2 pairs.
      ElementSet values = ElementSet::whole(g);
      for (int i = 1; i < w.parameter; ++i) {
        const auto vs = values.members();
        check_pair_budget(vs.size(), all.size(), pair_budget);
        values = commutator_set(g, vs, all, exec);
      }
      return values;
    }
    case WordSpec::Kind::engel: {
      check_pair_budget(all.size(), all.size(), pair_budget);
      const int k = w.parameter;
      return kernels::pair_image(
          g, all, all, [](ElementId, ElementId) { return true; },
          [&g, k](ElementId x, ElementId y) {
            for (int i = 0; i < k; ++i) x = g.comm(x, y);
            return x;
          },
          exec);
    }
    case WordSpec::Kind::a5_counterexample: {
      check_pair_budget(all.size(), all.size(), pair_budget);
      std::vector<ElementId> tenth(g.order());
      for (ElementId y : all) tenth[y] = g.pow(y, 10);
      return kernels::pair_image(
          g, all, all, [](ElementId, ElementId) { return true; },
          [&g, &tenth](ElementId x, ElementId y) {
            const ElementId z = tenth[y];
            return g.comm(g.comm(g.comm(x, z), z), z);
          },
          exec);
    }
  }
  throw PreconditionError("unknown word kind");
}

ElementSet verbal_subgroup(const GroupTable& g, const WordSpec& w, std::uint64_t pair_budget) {
  return subgroup_generated(word_values(g, w, pair_budget));
}

}  // namespace cpc
