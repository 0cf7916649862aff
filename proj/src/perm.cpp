#include "cpc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cpc/error.hpp"

namespace cpc {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw PreconditionError("permutation degree must be >= 1");
  if (degree > 65535) throw PreconditionError("permutation degree exceeds 65535");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw PreconditionError("image list is not a bijection");
    }
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw PreconditionError("compose: degree mismatch (" + std::to_string(p.degree()) +
                            " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = q[p[i]];
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation power(const Permutation& p, long long e) {
  Permutation base = e < 0 ? inverse(p) : p;
  unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(e);
  Permutation result(p.degree());
  while (n != 0) {
    if (n & 1ULL) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (const auto& c : cycles(p)) result = std::lcm(result, std::uint64_t{c.size()});
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    std::vector<Point> cyc;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      cyc.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

namespace {

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be >= 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ',')) {
      ++pos;
    }
  };

  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "id") {
    return Permutation(std::move(images));
  }

  bool saw_any = false;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) + ", found " +
                       quote(text.substr(pos, 1)));
    }
    ++pos;
    saw_any = true;
    std::vector<Point> cyc;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view token = text.substr(start, pos - start);
      if (token.empty()) {
        throw ParseError("unexpected token " + quote(text.substr(start, 1)) + " at offset " +
                         std::to_string(start));
      }
      if (token.size() > 6) throw ParseError("point " + quote(token) + " out of range");
      unsigned long value = std::stoul(std::string(token));
      if (value == 0 || value > degree) {
        throw ParseError("point " + quote(token) + " out of range 1.." + std::to_string(degree));
      }
      Point x = static_cast<Point>(value - 1);
      if (used[x]) throw ParseError("repeated point " + quote(token));
      used[x] = true;
      cyc.push_back(x);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) images[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  if (!saw_any) throw ParseError("empty permutation text (use \"()\" or \"id\")");
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cpc
