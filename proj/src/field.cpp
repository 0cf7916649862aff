#include "cpc/field.hpp"

#include <array>

#include "cpc/error.hpp"

namespace cpc {

namespace {

struct Modulus {
  unsigned p;
  unsigned n;
  // Coefficients of the monic irreducible polynomial, constant term first,
  // leading coefficient omitted.
  std::array<unsigned, 4> low;
};

// x^2+x+1, x^3+x+1, x^2+x+2, x^4+x+1, x^2+x+2 (mod 5), x^3+2x+1 (mod 3)
constexpr std::array<Modulus, 6> kModuli{{
    {2, 2, {1, 1, 0, 0}},
    {2, 3, {1, 1, 0, 0}},
    {3, 2, {2, 1, 0, 0}},
    {2, 4, {1, 1, 0, 0}},
    {5, 2, {2, 1, 0, 0}},
    {3, 3, {1, 2, 0, 0}},
}};

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> digits(unsigned x, unsigned p, unsigned n) {
  std::vector<unsigned> d(n);
  for (unsigned i = 0; i < n; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

unsigned encode(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  const Modulus* modulus = nullptr;
  if (is_prime(q) && q < 256) {
    p_ = q;
    n_ = 1;
  } else {
    for (const auto& m : kModuli) {
      unsigned size = 1;
      for (unsigned i = 0; i < m.n; ++i) size *= m.p;
      if (size == q) modulus = &m;
    }
    if (!modulus) throw PreconditionError("unsupported field order " + std::to_string(q));
    p_ = modulus->p;
    n_ = modulus->n;
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, n_);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, n_);
      std::vector<unsigned> sum(n_);
      for (unsigned i = 0; i < n_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(sum, p_);

      std::vector<unsigned> prod(2 * n_ - 1, 0);
      for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // x^n = -(low terms); reduce from the top degree down.
      for (unsigned deg = 2 * n_ - 2; deg >= n_ && n_ > 1; --deg) {
        const unsigned c = prod[deg];
        prod[deg] = 0;
        for (unsigned i = 0; i < n_; ++i) {
          prod[deg - n_ + i] = (prod[deg - n_ + i] + (p_ - c) * modulus->low[i]) % p_;
        }
      }
      prod.resize(n_);
      mul_[a * q_ + b] = encode(prod, p_);
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (unsigned g = 2; g < q_; ++g) {
    unsigned x = g;
    unsigned k = 1;
    while (x != 1) {
      x = mul(x, g);
      ++k;
    }
    if (k == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0 || a >= q_) throw PreconditionError("inverse of zero");
  return inv_[a];
}

}  // namespace cpc
