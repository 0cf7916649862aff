#pragma once

#include <cstdint>
#include <vector>

namespace cpc {

/**
 * GF(p^n) for small q = p^n, with elements encoded as integers 0..q-1 whose
 * base-p digits are polynomial coefficients (lowest degree first). Prime
 * fields use plain modular arithmetic; extension fields reduce by a fixed
 * irreducible polynomial from an embedded table. All operations are table
 * lookups.
 */
class FiniteField {
 public:
  /// Supported orders: primes below 256, 4, 8, 9, 16, 25, 27.
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  /// Throws PreconditionError for a = 0.
  unsigned inv(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  /// A generator of the multiplicative group (smallest code).
  unsigned primitive_element() const { return primitive_; }

 private:
  unsigned q_;
  unsigned p_;
  unsigned n_;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
  std::vector<unsigned> neg_;
  std::vector<unsigned> inv_;
  unsigned primitive_ = 1;
};

}  // namespace cpc
