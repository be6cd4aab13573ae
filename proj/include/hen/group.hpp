#pragma once
// Finite abelian groups Z/m_1 x ... x Z/m_d with mixed-radix element indexing.
//
// Element encoding: coordinates (x_1, ..., x_d) with x_i in [0, m_i) map to
//   index = ((x_1 * m_2 + x_2) * m_3 + x_3) ... * m_d + x_d,
// i.e. the first factor is the most significant digit (row-major). Tensor
// indexing over G^l stacks l such indices in the same row-major way.

#include "hen/errors.hpp"
#include "hen/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hen {

enum class GroupKind { cyclic, vector_space, product };

inline std::string_view to_string(GroupKind k) {
  switch (k) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::vector_space: return "vector-space";
    case GroupKind::product: return "product";
  }
  return "?";
}

/// A group element, identified by its canonical mixed-radix index.
struct Element {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// A character chi_r of the dual group, identified by the index of r.
struct Character {
  std::uint32_t index = 0;
  friend constexpr auto operator<=>(Character, Character) = default;
};

class Group {
 public:
  static constexpr std::size_t max_order = std::size_t{1} << 20;

  Group() : Group(std::vector<std::uint32_t>{2}) {}

  explicit Group(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw DomainError("group needs at least one cyclic factor");
    std::size_t n = 1;
    for (auto m : factors_) {
      if (m < 2) throw DomainError("cyclic factor must be >= 2, got " + std::to_string(m));
      n *= m;
      if (n > max_order) throw DomainError("group order exceeds 2^20");
    }
    order_ = static_cast<std::uint32_t>(n);
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * factors_[i];
    const bool equal = std::all_of(factors_.begin(), factors_.end(),
                                   [&](auto m) { return m == factors_.front(); });
    vector_space_ = equal && is_prime(factors_.front());
    if (factors_.size() == 1) kind_ = GroupKind::cyclic;
    else if (vector_space_) kind_ = GroupKind::vector_space;
    else kind_ = GroupKind::product;
    elementary2_ = equal && factors_.front() == 2;
    roots_.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::uint32_t m = factors_[i];
      roots_[i].resize(m);
      for (std::uint32_t j = 0; j < m; ++j)
        roots_[i][j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / m);
    }
  }

  /// F_p^n; throws when p is not prime.
  static Group vector_space(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw DomainError("vector space needs a prime field size, got " + std::to_string(p));
    if (n < 1) throw DomainError("vector space dimension must be >= 1");
    return Group(std::vector<std::uint32_t>(n, p));
  }

  static Group cyclic(std::uint32_t m) { return Group(std::vector<std::uint32_t>{m}); }

  std::uint32_t order() const { return order_; }
  std::size_t size() const { return order_; }
  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  GroupKind kind() const { return kind_; }

  /// True when every factor equals one prime p (cyclic groups of prime order included).
  bool is_vector_space() const { return vector_space_; }
  std::uint32_t prime() const {
    if (!vector_space_) throw DomainError("group " + spec() + " is not a vector space over a prime field");
    return factors_.front();
  }
  std::uint32_t dimension() const { return static_cast<std::uint32_t>(factors_.size()); }

  std::vector<std::uint32_t> coords(std::uint32_t index) const {
    std::vector<std::uint32_t> c(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      c[i] = index % factors_[i];
      index /= factors_[i];
    }
    return c;
  }

  std::uint32_t index(std::span<const std::uint32_t> coords) const {
    if (coords.size() != factors_.size()) throw DomainError("coordinate count does not match group rank");
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (coords[i] >= factors_[i]) throw DomainError("coordinate out of range");
      idx = idx * factors_[i] + coords[i];
    }
    return idx;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (elementary2_) return a ^ b;
    if (kind_ == GroupKind::cyclic) {
      const std::uint32_t s = a + b;
      return s >= order_ ? s - order_ : s;
    }
    std::uint32_t out = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint32_t m = factors_[i];
      std::uint32_t s = a % m + b % m;
      if (s >= m) s -= m;
      out += s * strides_[i];
      a /= m;
      b /= m;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (elementary2_) return a;
    if (kind_ == GroupKind::cyclic) return a == 0 ? 0 : order_ - a;
    std::uint32_t out = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint32_t m = factors_[i];
      const std::uint32_t d = a % m;
      out += (d == 0 ? 0 : m - d) * strides_[i];
      a /= m;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  Element add(Element a, Element b) const { return {add(a.index, b.index)}; }
  Element neg(Element a) const { return {neg(a.index)}; }
  Element sub(Element a, Element b) const { return {sub(a.index, b.index)}; }
  static constexpr Element zero() { return {0}; }

  /// Scalar multiple c * a, computed coordinate-wise.
  std::uint32_t scale(std::uint64_t c, std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint32_t m = factors_[i];
      out += static_cast<std::uint32_t>((c % m) * (a % m) % m) * strides_[i];
      a /= m;
    }
    return out;
  }

  /// table[u] = u + t for every u.
  std::vector<std::uint32_t> translation(std::uint32_t t) const {
    std::vector<std::uint32_t> table(order_);
    if (elementary2_) {
      for (std::uint32_t u = 0; u < order_; ++u) table[u] = u ^ t;
    } else if (kind_ == GroupKind::cyclic) {
      for (std::uint32_t u = 0; u < order_; ++u) {
        const std::uint32_t s = u + t;
        table[u] = s >= order_ ? s - order_ : s;
      }
    } else {
      for (std::uint32_t u = 0; u < order_; ++u) table[u] = add(u, t);
    }
    return table;
  }

  /// Exponent of chi_r(x) as a fraction of a full turn: chi_r(x) = exp(2 pi i * phase).
  double character_phase(std::uint32_t r, std::uint32_t x) const {
    double phase = 0.0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint32_t m = factors_[i];
      phase += static_cast<double>((std::uint64_t{r % m} * (x % m)) % m) / m;
      r /= m;
      x /= m;
    }
    return phase - std::floor(phase);
  }

  /// chi_r(x) as a product of cached roots of unity, one per factor.
  std::complex<double> character(Character r, Element x) const {
    std::complex<double> v = 1.0;
    std::uint32_t ri = r.index, xi = x.index;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint32_t m = factors_[i];
      v *= roots_[i][(std::uint64_t{ri % m} * (xi % m)) % m];
      ri /= m;
      xi /= m;
    }
    return v;
  }

  /// Canonical spec string: "Z5", "F2^3", "Z4xZ2".
  std::string spec() const {
    if (vector_space_ && factors_.size() > 1)
      return "F" + std::to_string(factors_.front()) + "^" + std::to_string(factors_.size());
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(factors_[i]);
    }
    return s;
  }

  friend bool operator==(const Group& a, const Group& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint32_t> strides_;
  std::uint32_t order_ = 0;
  GroupKind kind_ = GroupKind::cyclic;
  bool vector_space_ = false;
  bool elementary2_ = false;
  std::vector<std::vector<std::complex<double>>> roots_;
};

/// Builds a group from cyclic orders; `required` enforces a kind (vector-space checks primality).
inline Group make_group(const std::vector<std::uint32_t>& factors,
                        std::optional<GroupKind> required = std::nullopt) {
  Group g(factors);
  if (required == GroupKind::vector_space && !g.is_vector_space())
    throw DomainError("vector space requires equal prime factors");
  if (required == GroupKind::cyclic && g.rank() != 1) throw DomainError("cyclic group requires one factor");
  return g;
}

/// Parses "Z<m>", "F<p>^<n>" (or "F<p>") and "Z<m1>xZ<m2>x...", case-insensitively.
inline Group parse_group(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) throw ParseError("empty group spec");
  auto parse_uint = [&](std::string_view digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 9) throw ParseError("bad number in group spec '" + std::string(text) + "'");
    std::uint32_t v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad number in group spec '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
  };
  try {
    if (s.front() == 'f') {
      const auto caret = s.find('^');
      const std::uint32_t p = parse_uint(std::string_view(s).substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      const std::uint32_t n = caret == std::string::npos ? 1 : parse_uint(std::string_view(s).substr(caret + 1));
      if (n > 20) throw ParseError("vector space dimension too large");
      return Group::vector_space(p, n);
    }
    std::vector<std::uint32_t> factors;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto next = s.find('x', pos);
      std::string_view part = std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (part.size() < 2 || part.front() != 'z') throw ParseError("bad factor '" + std::string(part) + "' in group spec");
      factors.push_back(parse_uint(part.substr(1)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return Group(factors);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid group spec '") + std::string(text) + "': " + e.what());
  }
}

}  // namespace hen
