#include "cpc/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cpc/field.hpp"

namespace cpc {

const char* to_string(Tag t) {
  switch (t) {
    case Tag::abelian: return "abelian";
    case Tag::nilpotent: return "nilpotent";
    case Tag::soluble: return "soluble";
    case Tag::simple: return "simple";
    case Tag::minimal_simple: return "minimal_simple";
    case Tag::perfect: return "perfect";
  }
  return "?";
}

namespace {

Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

// n-cycle on the points [first, first+len) of a degree-n domain.
Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t len) {
  return from_map(degree, [&](std::size_t i) {
    if (i < first || i >= first + len) return i;
    return first + (i - first + 1) % len;
  });
}

Permutation transposition(std::size_t degree, std::size_t a, std::size_t b) {
  return from_map(degree, [&](std::size_t i) { return i == a ? b : i == b ? a : i; });
}

}  // namespace

GroupPtr make_cyclic(unsigned n) {
  if (n == 0) throw PreconditionError("cyclic group order must be >= 1");
  if (n == 1) return GroupTable::close(1, {});
  return GroupTable::close(n, {cycle_on(n, 0, n)});
}

GroupPtr make_dihedral(unsigned n) {
  if (n < 3) throw PreconditionError("dihedral group needs n >= 3");
  Permutation rotation = cycle_on(n, 0, n);
  Permutation reflection = from_map(n, [n](std::size_t i) { return (n - i) % n; });
  return GroupTable::close(n, {rotation, reflection});
}

GroupPtr make_symmetric(unsigned n) {
  if (n == 0) throw PreconditionError("symmetric group degree must be >= 1");
  if (n == 1) return GroupTable::close(1, {});
  return GroupTable::close(n, {transposition(n, 0, 1), cycle_on(n, 0, n)});
}

GroupPtr make_alternating(unsigned n) {
  if (n == 0) throw PreconditionError("alternating group degree must be >= 1");
  if (n < 3) return GroupTable::close(n, {});
  if (n == 3) return GroupTable::close(3, {cycle_on(3, 0, 3)});
  // (1 2 3) together with (1 2 ... n) for odd n or (2 3 ... n) for even n.
  Permutation long_cycle = n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return GroupTable::close(n, {cycle_on(n, 0, 3), long_cycle});
}

namespace {

using Matrix2 = std::array<unsigned, 4>;  // row-major a b / c d

// Right action v -> vM on the nonzero vectors of GF(p)^2.
Permutation vector_action(const FiniteField& f, const Matrix2& m) {
  const unsigned q = f.order();
  const std::size_t degree = q * q - 1;
  auto index = [q](unsigned x, unsigned y) { return static_cast<std::size_t>(x * q + y - 1); };
  return from_map(degree, [&](std::size_t i) {
    const unsigned x = static_cast<unsigned>((i + 1) / q);
    const unsigned y = static_cast<unsigned>((i + 1) % q);
    const unsigned nx = f.add(f.mul(x, m[0]), f.mul(y, m[2]));
    const unsigned ny = f.add(f.mul(x, m[1]), f.mul(y, m[3]));
    return index(nx, ny);
  });
}

}  // namespace

GroupPtr make_quaternion8() {
  // i = [[0,-1],[1,0]] and j = [[1,1],[1,-1]] over GF(3).
  FiniteField f(3);
  return GroupTable::close(8, {vector_action(f, {0, 2, 1, 0}), vector_action(f, {1, 1, 1, 2})});
}

GroupPtr make_frobenius21() {
  // z -> z+1 and z -> 2z on GF(7); 2 has multiplicative order 3.
  Permutation t = from_map(7, [](std::size_t z) { return (z + 1) % 7; });
  Permutation s = from_map(7, [](std::size_t z) { return (2 * z) % 7; });
  return GroupTable::close(7, {t, s});
}

GroupPtr make_sl2(unsigned p) {
  FiniteField f(p);
  if (f.characteristic() != p) throw PreconditionError("make_sl2 expects a prime");
  const std::size_t degree = p * p - 1;
  return GroupTable::close(degree, {vector_action(f, {1, 1, 0, 1}), vector_action(f, {1, 0, 1, 1})});
}

GroupPtr make_psl2(unsigned q) {
  FiniteField f(q);
  const unsigned inf = q;
  const unsigned w = f.primitive_element();
  const unsigned a = f.mul(w, w);
  const std::size_t degree = q + 1;
  // z -> z+1, z -> a z, z -> -1/z, with infinity as point q.
  Permutation translate = from_map(degree, [&](std::size_t z) -> std::size_t {
    return z == inf ? inf : f.add(static_cast<unsigned>(z), 1);
  });
  Permutation scale = from_map(degree, [&](std::size_t z) -> std::size_t {
    return z == inf ? inf : f.mul(a, static_cast<unsigned>(z));
  });
  Permutation invert = from_map(degree, [&](std::size_t z) -> std::size_t {
    if (z == inf) return 0;
    if (z == 0) return inf;
    return f.neg(f.inv(static_cast<unsigned>(z)));
  });
  return GroupTable::close(degree, {translate, scale, invert});
}

GroupPtr direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    gens.push_back(from_map(da + db, [&](std::size_t i) -> std::size_t { return i < da ? g[i] : i; }));
  }
  for (const auto& g : b.generators()) {
    gens.push_back(
        from_map(da + db, [&](std::size_t i) -> std::size_t { return i < da ? i : da + g[i - da]; }));
  }
  return GroupTable::close(da + db, gens);
}

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd(std::uint64_t{2}, q - 1); }

bool is_simple(const GroupTable& g) {
  if (g.order() < 2) return false;
  for (ElementId x : conjugacy_class_representatives(g)) {
    if (x == GroupTable::identity()) continue;
    if (!normal_closure(ElementSet(g, {x})).is_whole()) return false;
  }
  return true;
}

std::set<Tag> computed_tags(const GroupTable& g, bool claims_minimal_simple) {
  std::set<Tag> tags;
  const ElementSet whole = ElementSet::whole(g);
  if (is_abelian(whole)) tags.insert(Tag::abelian);
  if (is_nilpotent(whole)) tags.insert(Tag::nilpotent);
  if (is_soluble(whole)) tags.insert(Tag::soluble);
  const bool simple = is_simple(g);
  if (simple) tags.insert(Tag::simple);
  if (simple && claims_minimal_simple) tags.insert(Tag::minimal_simple);
  if (commutator_subgroup(whole, whole).is_whole()) tags.insert(Tag::perfect);
  return tags;
}

namespace {

struct BuildCache {
  std::once_flag once;
  GroupPtr group;
};

std::string tag_list(const std::set<Tag>& tags) {
  std::string out;
  for (Tag t : tags) {
    if (!out.empty()) out += ",";
    out += to_string(t);
  }
  return out.empty() ? "-" : out;
}

CorpusEntry entry(std::string name, std::set<Tag> tags, std::uint64_t order, std::size_t degree,
                  std::function<GroupPtr()> build) {
  auto cache = std::make_shared<BuildCache>();
  std::set<Tag> claimed = tags;
  std::string label = name;
  auto memo = [cache, build = std::move(build), claimed, label, order]() {
    std::call_once(cache->once, [&] {
      GroupPtr g = build();
      if (g->order() != order) {
        throw OrderMismatch(label + ": built order " + std::to_string(g->order()) +
                            ", expected " + std::to_string(order));
      }
      auto computed = computed_tags(*g, claimed.contains(Tag::minimal_simple));
      if (computed != claimed) {
        throw Error(label + ": tags " + tag_list(claimed) + " disagree with computed " +
                    tag_list(computed));
      }
      cache->group = std::move(g);
    });
    return cache->group;
  };
  return CorpusEntry{std::move(name), std::move(tags), order, degree, std::move(memo)};
}

std::vector<CorpusEntry> make_builtin_corpus() {
  using enum Tag;
  const std::set<Tag> ab{abelian, nilpotent, soluble};
  const std::set<Tag> nil{nilpotent, soluble};
  const std::set<Tag> sol{soluble};
  const std::set<Tag> msimple{simple, minimal_simple, perfect};
  const std::set<Tag> simp{simple, perfect};

  std::vector<CorpusEntry> out;
  for (unsigned n = 1; n <= 12; ++n) {
    std::set<Tag> tags = ab;
    if (n == 1) tags.insert(perfect);
    if (n == 2 || n == 3 || n == 5 || n == 7 || n == 11) tags.insert(simple);
    out.push_back(entry("C" + std::to_string(n), tags, n, n, [n] { return make_cyclic(n); }));
  }
  for (unsigned n : {4u, 5u, 6u, 8u}) {
    const bool two_power = (n & (n - 1)) == 0;
    out.push_back(entry("D" + std::to_string(n), two_power ? nil : sol, 2 * n, n,
                        [n] { return make_dihedral(n); }));
  }
  out.push_back(entry("Q8", nil, 8, 8, make_quaternion8));
  out.push_back(entry("S3", sol, 6, 3, [] { return make_symmetric(3); }));
  out.push_back(entry("S4", sol, 24, 4, [] { return make_symmetric(4); }));
  out.push_back(entry("S5", {}, 120, 5, [] { return make_symmetric(5); }));
  out.push_back(entry("S6", {}, 720, 6, [] { return make_symmetric(6); }));
  out.push_back(entry("A4", sol, 12, 4, [] { return make_alternating(4); }));
  out.push_back(entry("A5", msimple, 60, 5, [] { return make_alternating(5); }));
  out.push_back(entry("A6", simp, 360, 6, [] { return make_alternating(6); }));
  out.push_back(entry("C7:C3", sol, 21, 7, make_frobenius21));
  out.push_back(entry("SL(2,3)", sol, 24, 8, [] { return make_sl2(3); }));
  out.push_back(entry("SL(2,5)", {perfect}, 120, 24, [] { return make_sl2(5); }));
  for (unsigned q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    // PSL(2,9) ~ A6 and PSL(2,11) contain A5, so they are not minimal simple.
    const bool minimal = q != 9 && q != 11;
    out.push_back(entry("PSL(2," + std::to_string(q) + ")", minimal ? msimple : simp,
                        psl2_order(q), q + 1, [q] { return make_psl2(q); }));
  }
  out.push_back(entry("C2xS3", sol, 12, 5,
                      [] { return direct_product(*make_cyclic(2), *make_symmetric(3)); }));
  out.push_back(entry("S3xS3", sol, 36, 6,
                      [] { return direct_product(*make_symmetric(3), *make_symmetric(3)); }));
  out.push_back(entry("C3xA4", sol, 36, 7,
                      [] { return direct_product(*make_cyclic(3), *make_alternating(4)); }));
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

GroupPtr CorpusEntry::build() const {
  GroupPtr g = builder();
  if (g->order() != expected_order) {
    throw OrderMismatch(name + ": built order " + std::to_string(g->order()) + ", expected " +
                        std::to_string(expected_order));
  }
  return g;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_builtin_corpus();
  return corpus;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : builtin_corpus()) {
    if (iequals(e.name, name)) return e;
  }
  throw PreconditionError("unknown group '" + std::string(name) + "'");
}

CorpusEntry parse_group_json(std::string_view text, std::string_view source) {
  using nlohmann::json;
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(src + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON: " + e.what());
  }

  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(src + ": " + msg); };
  if (!doc.is_object()) throw fail("top-level value must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) throw fail("missing string field 'name'");
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned()) {
    throw fail("missing positive integer field 'degree'");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw fail("missing array field 'generators'");
  }
  const auto degree = doc["degree"].get<std::size_t>();
  if (degree == 0 || degree > 65535) throw fail("degree must be in 1..65535");

  std::vector<Permutation> gens;
  std::size_t i = 0;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw fail("generator " + std::to_string(i) + " is not a string");
    try {
      gens.push_back(parse_cycles(g.get<std::string>(), degree));
    } catch (const ParseError& e) {
      throw fail("generator " + std::to_string(i) + " \"" + g.get<std::string>() + "\": " + e.what());
    }
    ++i;
  }

  std::string name = doc["name"].get<std::string>();
  GroupPtr group = GroupTable::close(degree, gens);
  if (doc.contains("expected_order")) {
    if (!doc["expected_order"].is_number_unsigned()) throw fail("expected_order must be a positive integer");
    const auto expected = doc["expected_order"].get<std::uint64_t>();
    if (expected != group->order()) {
      throw OrderMismatch(src + ": group '" + name + "' has order " + std::to_string(group->order()) +
                          " but expected_order is " + std::to_string(expected));
    }
  }
  std::set<Tag> tags = computed_tags(*group, false);
  return CorpusEntry{name, tags, group->order(), degree, [group] { return group; }};
}

CorpusEntry load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str(), path.string());
}

}  // namespace cpc
