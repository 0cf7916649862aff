#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cpc {

using Point = std::uint16_t;

/**
 * A permutation of the points {0, ..., degree-1}.
 *
 * Permutations act on the RIGHT: the product p*q (see compose) first applies
 * p, then q, so i maps to q(p(i)). Conjugation is x^g = g^-1 x g and the
 * commutator is [a,b] = a^-1 b^-1 a b. Text I/O uses 1-based cycle notation;
 * the stored images are 0-based.
 */
class Permutation {
 public:
  /// Identity of the given degree (degree >= 1).
  explicit Permutation(std::size_t degree = 1);

  /// Throws PreconditionError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// i -> q(p(i)). Throws PreconditionError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// p^e for any integer e (negative exponents use the inverse).
Permutation power(const Permutation& p, long long e);
/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);
/// Least m >= 1 with p^m = 1 (lcm of the cycle lengths).
std::uint64_t order(const Permutation& p);

/// Disjoint cycles, smallest moved point first, fixed points omitted.
std::vector<std::vector<Point>> cycles(const Permutation& p);

/// Canonical 1-based cycle notation; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Parses 1-based disjoint cycle notation such as "(1 2 3)(4 5)", "()" or
/// "id". Commas between points are accepted. Throws ParseError naming the
/// offending token.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cpc
