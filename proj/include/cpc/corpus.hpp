#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cpc/error.hpp"
#include "cpc/group.hpp"

namespace cpc {

enum class Tag { abelian, nilpotent, soluble, simple, minimal_simple, perfect };

const char* to_string(Tag t);

/// A group file's expected_order disagreed with the computed closure.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A named group with deferred construction.
struct CorpusEntry {
  std::string name;
  std::set<Tag> tags;
  std::uint64_t expected_order = 1;
  std::size_t degree = 1;
  std::function<GroupPtr()> builder;

  bool has(Tag t) const { return tags.contains(t); }
  /// Runs the builder and checks the order; throws OrderMismatch.
  GroupPtr build() const;
};

/// Predicates behind each tag, computed from the group itself. Returns the
/// tags that hold; minimal_simple is reported when claimed and the group is
/// simple, since minimality needs a full subgroup search.
std::set<Tag> computed_tags(const GroupTable& g, bool claims_minimal_simple);

/// Every nontrivial normal closure of a single element is the whole group.
bool is_simple(const GroupTable& g);

// Constructors. Each returns the closed permutation group.
GroupPtr make_cyclic(unsigned n);
GroupPtr make_dihedral(unsigned n);  // order 2n, acting on n points
GroupPtr make_symmetric(unsigned n);
GroupPtr make_alternating(unsigned n);
GroupPtr make_quaternion8();
GroupPtr make_frobenius21();
GroupPtr make_sl2(unsigned p);   // SL(2,p), p prime, on the p^2-1 nonzero vectors
GroupPtr make_psl2(unsigned q);  // PSL(2,q) on the q+1 points of the projective line
GroupPtr direct_product(const GroupTable& a, const GroupTable& b);

/// |PSL(2,q)| = q(q^2-1)/gcd(2,q-1).
std::uint64_t psl2_order(std::uint64_t q);

/// The builtin benchmark groups, in a fixed order.
const std::vector<CorpusEntry>& builtin_corpus();
/// Throws PreconditionError for an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);

/**
 * Group file: {"name": ..., "degree": n, "generators": ["(1 2)", ...],
 * "expected_order": m}; expected_order is optional. The group is closed
 * immediately. Throws ParseError (with line and column for JSON syntax
 * errors), OrderMismatch or BudgetExceeded.
 */
CorpusEntry load_group_file(const std::filesystem::path& path);
CorpusEntry parse_group_json(std::string_view text, std::string_view source = "<string>");

}  // namespace cpc
