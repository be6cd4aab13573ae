#pragma once
// Box energies
//   E_{k_1..k_r}(f) = sum_{x_1 in G^{k_1}} ... sum_{x_r in G^{k_r}} prod_{w in [k_1]x..x[k_r]} f(x_1^{w_1} + ... + x_r^{w_r}).
// Shape (k, l) is E^k_l(f) = sum_{x in G^l} C_l(f)(x)^k, shape (k, s, t) is E^k_{s,t}.
//
// Evaluation peels the last axis: for fixed x_r, g(u) = prod_j f(u + x_r^{(j)}) and the
// remaining sum is the energy of g on the shorter shape. Shifting x_r diagonally only
// translates g, so x_r^{(1)} is pinned to 0 and the sum is multiplied by N.

#include "hen/convolution.hpp"
#include "hen/function.hpp"
#include "hen/numeric.hpp"
#include "hen/parallel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace hen {

class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<unsigned> k) : k_(k) { validate(); }
  explicit Shape(std::vector<unsigned> k) : k_(std::move(k)) { validate(); }

  const std::vector<unsigned>& dims() const { return k_; }
  unsigned operator[](std::size_t i) const { return k_[i]; }
  std::size_t rank() const { return k_.size(); }
  unsigned total_product() const {
    return std::accumulate(k_.begin(), k_.end(), 1U, std::multiplies<>());
  }
  unsigned total_sum() const { return std::accumulate(k_.begin(), k_.end(), 0U); }

  /// r >= 2 and every k_i even (hence >= 2): the energy's K-th root is a norm.
  bool norm_grade() const {
    if (k_.size() < 2) return false;
    for (auto k : k_)
      if (k < 2 || k % 2) return false;
    return true;
  }
  bool even_product() const { return total_product() % 2 == 0; }

  Shape reversed() const { return Shape(std::vector<unsigned>(k_.rbegin(), k_.rend())); }
  Shape sorted_descending() const {
    auto v = k_;
    std::sort(v.begin(), v.end(), std::greater<>());
    return Shape(std::move(v));
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < k_.size(); ++i) s += (i ? "," : "") + std::to_string(k_[i]);
    return s;
  }
  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  void validate() const {
    if (k_.empty()) throw DomainError("shape needs at least one axis");
    for (auto k : k_)
      if (k < 1) throw DomainError("shape entries must be >= 1");
  }
  std::vector<unsigned> k_;
};

inline Shape parse_shape(std::string_view text) {
  std::vector<unsigned> k;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    auto part = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (part.empty() || part.size() > 3) throw ParseError("bad shape '" + std::string(text) + "'");
    unsigned v = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw ParseError("bad shape '" + std::string(text) + "'");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    if (v < 1) throw ParseError("shape entries must be >= 1");
    k.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Shape(std::move(k));
}

enum class Strategy { automatic, enumerate, dual_swap, set_fast, corr_fast };

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::enumerate: return "enumerate";
    case Strategy::dual_swap: return "dual-swap";
    case Strategy::set_fast: return "set-fast";
    case Strategy::corr_fast: return "corr-fast";
  }
  return "?";
}

inline Strategy parse_strategy(std::string_view s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "enumerate") return Strategy::enumerate;
  if (s == "dual-swap") return Strategy::dual_swap;
  if (s == "set-fast") return Strategy::set_fast;
  if (s == "corr-fast") return Strategy::corr_fast;
  throw ParseError("unknown strategy '" + std::string(s) + "'");
}

template <typename T>
struct EnergyReport {
  Shape shape;
  T raw{};
  T normalized{};  // raw / N^{k_1 + ... + k_r}
  double norm = 0.0;  // normalized^{1/K}; real root of the sign for odd K
  bool norm_grade = false;
  Strategy strategy = Strategy::enumerate;
  double wall_ms = 0.0;
};

namespace detail {

using i128 = __int128;

inline Integer to_integer(std::int64_t v) { return Integer(v); }
inline Integer to_integer(const Integer& v) { return v; }
inline Integer to_integer(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer r = Integer(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += Integer(static_cast<std::uint64_t>(u));
  return neg ? Integer(-r) : r;
}

template <typename To>
To narrow_from(const Integer& v) {
  if constexpr (std::is_same_v<To, Integer>) return v;
  else if constexpr (std::is_same_v<To, std::int64_t>) return v.convert_to<std::int64_t>();
  else {
    const bool neg = v < 0;
    Integer a = boost::multiprecision::abs(v);
    const auto lo = static_cast<std::uint64_t>(a & Integer(UINT64_MAX));
    const auto hi = static_cast<std::uint64_t>(a >> 64);
    unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    return neg ? -static_cast<i128>(u) : static_cast<i128>(u);
  }
}

template <typename W, typename V>
W widen(const V& v) {
  if constexpr (std::is_same_v<W, V>) return v;
  else if constexpr (std::is_same_v<W, Integer>) return to_integer(v);
  else return static_cast<W>(v);
}

template <typename V>
V power(V base, unsigned e) {
  V r(1);
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

/// Box recursion with narrow per-point values and wide accumulators.
/// ks.front() is the base axis (closed form (sum g)^{k}); axes are peeled from the back.
template <typename Nr, typename Wd>
class BoxKernel {
 public:
  BoxKernel(const Group& g, std::vector<unsigned> ks) : G_(g), ks_(std::move(ks)) {}

  Wd run(const std::vector<Nr>& f) const { return level(f, ks_.size(), true); }

 private:
  Wd level(const std::vector<Nr>& f, std::size_t depth, bool top) const {
    const std::uint32_t n = G_.order();
    if (depth == 1) {
      Nr s(0);
      for (const auto& v : f) s += v;
      return power(widen<Wd>(s), ks_[0]);
    }
    const unsigned free = ks_[depth - 1] - 1;
    const Wd order = widen<Wd>(static_cast<std::int64_t>(n));
    if (free == 0) return order * level(f, depth - 1, top);
    const std::uint64_t count = sat_pow(n, free);
    const bool leaf = depth == 2;
    auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> Wd {
      Wd acc(0);
      std::vector<std::uint32_t> w(free);
      std::uint64_t rest = begin;
      for (unsigned i = free; i-- > 0;) {
        w[i] = static_cast<std::uint32_t>(rest % n);
        rest /= n;
      }
      // prefix[j] = f * f(.+w_0) * ... * f(.+w_{j-1}); the leaf level folds the last factor into a sum.
      const unsigned stored = leaf ? free : free + 1;
      std::vector<std::vector<Nr>> prefix(stored, std::vector<Nr>(n));
      prefix[0] = f;
      auto rebuild = [&](unsigned from) {
        for (unsigned j = std::max(from, 1U); j < stored; ++j)
          for (std::uint32_t u = 0; u < n; ++u) prefix[j][u] = prefix[j - 1][u] * f[G_.add(u, w[j - 1])];
      };
      rebuild(1);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (leaf) {
          const auto& p = prefix[free - 1];
          const std::uint32_t t = w[free - 1];
          Nr s(0);
          for (std::uint32_t u = 0; u < n; ++u) s += p[u] * f[G_.add(u, t)];
          acc += power(widen<Wd>(s), ks_[0]);
        } else {
          acc += level(prefix[free], depth - 1, false);
        }
        // Odometer step; the lowest changed digit decides which prefixes to rebuild.
        unsigned pos = free;
        while (pos > 0) {
          --pos;
          if (++w[pos] < n) break;
          w[pos] = 0;
        }
        rebuild(pos + 1);
      }
      return acc;
    };
    Wd total = top ? parallel_reduce<Wd>(count, Wd(0), chunk) : chunk(0, count);
    return order * total;
  }

  const Group& G_;
  std::vector<unsigned> ks_;
};

inline double log2_bound(const Integer& v) { return v == 0 ? 0.0 : static_cast<double>(msb_or_zero(v)) + 1.0; }

/// Runs the kernel on integer values choosing the narrowest safe integer types.
inline Integer box_energy_integers(const Group& g, const std::vector<Integer>& v, const std::vector<unsigned>& ks) {
  Integer max_abs = 0;
  for (const auto& x : v) max_abs = std::max(max_abs, Integer(boost::multiprecision::abs(x)));
  if (max_abs == 0) return 0;
  const double logn = std::log2(static_cast<double>(g.size())) + 1e-9;
  const double logm = log2_bound(max_abs);
  const unsigned K = std::accumulate(ks.begin(), ks.end(), 1U, std::multiplies<>());
  const unsigned S = std::accumulate(ks.begin(), ks.end(), 0U);
  const double narrow_bits = logn + static_cast<double>(K / ks.front()) * logm + 1;
  const double wide_bits = static_cast<double>(S) * logn + static_cast<double>(K) * logm + 1;
  auto run = [&]<typename Nr, typename Wd>() {
    std::vector<Nr> f(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) f[i] = narrow_from<Nr>(v[i]);
    return to_integer(BoxKernel<Nr, Wd>(g, ks).run(f));
  };
  if (narrow_bits < 62) {
    if (wide_bits < 62) return run.operator()<std::int64_t, std::int64_t>();
    if (wide_bits < 126) return run.operator()<std::int64_t, i128>();
    return run.operator()<std::int64_t, Integer>();
  }
  if (narrow_bits < 126) {
    if (wide_bits < 126) return run.operator()<i128, i128>();
    return run.operator()<i128, Integer>();
  }
  return run.operator()<Integer, Integer>();
}

/// Common-denominator scaling: f = v / D with integer v.
struct ScaledValues {
  std::vector<Integer> v;
  Integer denom = 1;
};

inline ScaledValues scale_to_integers(const std::vector<Rational>& values) {
  ScaledValues s;
  s.denom = common_denominator(values);
  s.v.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) s.v[i] = numerator(values[i] * Rational(s.denom));
  return s;
}

inline std::uint64_t enumerate_cost(std::uint64_t n, const std::vector<unsigned>& ks) {
  std::uint64_t cost = n;
  for (std::size_t i = 1; i < ks.size(); ++i) cost = sat_mul(cost, sat_pow(n, ks[i] - 1));
  return sat_mul(cost, ks.size() > 1 ? ks.back() : 1);
}

inline void require_work(std::uint64_t cost, std::string_view what) {
  if (cost > limits().work_steps)
    throw BudgetError(std::string(what) + " needs about " + std::to_string(cost) +
                      " steps, over the work budget of " + std::to_string(limits().work_steps));
}

template <typename T>
T box_energy_ordered(const DenseFunction<T>& f, const std::vector<unsigned>& ks) {
  require_work(enumerate_cost(f.size(), ks), "box enumeration");
  if constexpr (is_exact_v<T>) {
    auto s = scale_to_integers(f.values());
    const Integer raw = box_energy_integers(f.group(), s.v, ks);
    const unsigned K = std::accumulate(ks.begin(), ks.end(), 1U, std::multiplies<>());
    return Rational(raw, ipow(s.denom, K));
  } else {
    return BoxKernel<double, double>(f.group(), ks).run(f.values());
  }
}

/// N * sum_{w in G^{a-1}} |A_w|^b for a 0/1 function, with a <= b picked by duality.
template <typename T>
T set_energy(const DenseFunction<T>& f, const Shape& shape) {
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  const unsigned a = std::min(shape[0], shape[1]);
  const unsigned b = std::max(shape[0], shape[1]);
  const unsigned free = a - 1;
  const std::uint64_t words = (n + 63) / 64;
  require_work(sat_mul(sat_pow(n, free), words * free + 1), "set-fast enumeration");
  GroupSet A = GroupSet::where(G, [&](std::uint32_t x) { return f[x] == T(1); });
  if (free == 0) {
    const Integer c = static_cast<long long>(A.size());
    const Integer r = Integer(n) * ipow(c, b);
    if constexpr (is_exact_v<T>) return Rational(r);
    else return to_double(r);
  }
  // (A - t) for every t, when the table fits in memory.
  const bool cache = std::uint64_t{n} * words <= (std::uint64_t{1} << 25);
  std::vector<std::vector<std::uint64_t>> shifted;
  if (cache) {
    shifted.resize(n);
    for (std::uint32_t t = 0; t < n; ++t) shifted[t] = A.minus(t).words();
  }
  const double logc = std::log2(static_cast<double>(A.size()) + 1.0);
  const bool wide_ok = free * std::log2(static_cast<double>(n)) + b * logc + 2 < 126;
  auto chunk_impl = [&]<typename Wd>(std::uint64_t begin, std::uint64_t end) -> Wd {
    Wd acc(0);
    std::vector<std::uint32_t> w(free);
    std::uint64_t rest = begin;
    for (unsigned i = free; i-- > 0;) {
      w[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    std::vector<std::vector<std::uint64_t>> prefix(free + 1, A.words());
    auto rebuild = [&](unsigned from) {
      std::vector<std::uint64_t> scratch;
      for (unsigned j = std::max(from, 1U); j <= free; ++j) {
        const std::vector<std::uint64_t>* sw = &scratch;
        if (cache) sw = &shifted[w[j - 1]];
        else scratch = A.minus(w[j - 1]).words();
        for (std::uint64_t q = 0; q < words; ++q) prefix[j][q] = prefix[j - 1][q] & (*sw)[q];
      }
    };
    rebuild(1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::int64_t c = 0;
      for (auto word : prefix[free]) c += std::popcount(word);
      acc += power(widen<Wd>(c), b);
      unsigned pos = free;
      while (pos > 0) {
        --pos;
        if (++w[pos] < n) break;
        w[pos] = 0;
      }
      rebuild(pos + 1);
    }
    return acc;
  };
  const std::uint64_t count = sat_pow(n, free);
  Integer total;
  if (wide_ok) {
    total = to_integer(parallel_reduce<i128>(count, i128(0), [&](std::uint64_t b0, std::uint64_t e0) {
      return chunk_impl.template operator()<i128>(b0, e0);
    }));
  } else {
    total = parallel_reduce<Integer>(count, Integer(0), [&](std::uint64_t b0, std::uint64_t e0) {
      return chunk_impl.template operator()<Integer>(b0, e0);
    });
  }
  total *= n;
  if constexpr (is_exact_v<T>) return Rational(total);
  else return to_double(total);
}

/// N * sum_t (f o f)(t)^p, where p is the exponent paired with arity 2.
template <typename T>
T corr_energy(const DenseFunction<T>& f, const Shape& shape) {
  const unsigned p = shape[1] == 2 ? shape[0] : shape[1];
  const std::uint32_t n = f.group().order();
  require_work(sat_mul(n, n), "corr-fast correlation");
  if constexpr (is_exact_v<T>) {
    auto s = scale_to_integers(f.values());
    const Group& G = f.group();
    Integer total = 0;
    for (std::uint32_t t = 0; t < n; ++t) {
      Integer c = 0;
      for (std::uint32_t y = 0; y < n; ++y)
        if (s.v[y] != 0) c += s.v[y] * s.v[G.add(y, t)];
      total += ipow(c, p);
    }
    total *= n;
    return Rational(total, ipow(s.denom, 2 * p));
  } else {
    auto c = fast_convolve(f, f, ConvKind::circ);
    double total = 0.0;
    for (auto v : c.values()) total += power(v, p);
    return total * n;
  }
}

}  // namespace detail

template <typename T>
bool strategy_feasible(const DenseFunction<T>& f, const Shape& shape, Strategy s) {
  switch (s) {
    case Strategy::automatic:
    case Strategy::enumerate:
    case Strategy::dual_swap:
      return true;
    case Strategy::set_fast:
      return shape.rank() == 2 && f.is_indicator();
    case Strategy::corr_fast:
      return shape.rank() == 2 && (shape[0] == 2 || shape[1] == 2);
  }
  return false;
}

/// Raw box energy by the requested strategy.
template <typename T>
T energy_value(const DenseFunction<T>& f, const Shape& shape, Strategy strategy = Strategy::automatic,
               Strategy* used = nullptr) {
  if (!strategy_feasible(f, shape, strategy))
    throw DomainError("strategy " + std::string(to_string(strategy)) + " is infeasible for shape " + shape.str());
  // Explicit dual-swap reverses the axes; auto uses the cheapest order (largest k as the base axis).
  Shape reorder = shape.reversed();
  if (strategy == Strategy::automatic) {
    if (strategy_feasible(f, shape, Strategy::corr_fast)) strategy = Strategy::corr_fast;
    else if (strategy_feasible(f, shape, Strategy::set_fast)) strategy = Strategy::set_fast;
    else if (shape.sorted_descending() != shape) {
      strategy = Strategy::dual_swap;
      reorder = shape.sorted_descending();
    } else strategy = Strategy::enumerate;
  }
  if (used) *used = strategy;
  switch (strategy) {
    case Strategy::corr_fast: return detail::corr_energy(f, shape);
    case Strategy::set_fast: return detail::set_energy(f, shape);
    case Strategy::dual_swap: return detail::box_energy_ordered(f, reorder.dims());
    default: return detail::box_energy_ordered(f, shape.dims());
  }
}

/// x^{1/K} with the sign kept for odd K.
inline double kth_root(double x, unsigned K) {
  if (x >= 0) return std::pow(x, 1.0 / K);
  if (K % 2) return -std::pow(-x, 1.0 / K);
  return std::numeric_limits<double>::quiet_NaN();
}

template <typename T>
double log_value(const T& v) {
  if constexpr (is_exact_v<T>) return log_abs(v);
  else return std::log(std::abs(v));
}

template <typename T>
EnergyReport<T> energy(const DenseFunction<T>& f, const Shape& shape, Strategy strategy = Strategy::automatic) {
  const auto start = std::chrono::steady_clock::now();
  EnergyReport<T> rep;
  rep.shape = shape;
  rep.raw = energy_value(f, shape, strategy, &rep.strategy);
  const unsigned S = shape.total_sum();
  const unsigned K = shape.total_product();
  if constexpr (is_exact_v<T>) {
    rep.normalized = rep.raw / Rational(ipow(Integer(f.size()), S));
    if (rep.normalized == 0) rep.norm = 0.0;
    else {
      const double lg = log_abs(rep.normalized) / K;
      rep.norm = (rep.normalized < 0 ? (K % 2 ? -1.0 : std::numeric_limits<double>::quiet_NaN()) : 1.0) * std::exp(lg);
    }
  } else {
    rep.normalized = rep.raw / std::pow(static_cast<double>(f.size()), S);
    rep.norm = kth_root(rep.normalized, K);
  }
  rep.norm_grade = shape.norm_grade();
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Unnormalized ||f||_E = E(f)^{1/K} as a float.
template <typename T>
double energy_norm(const DenseFunction<T>& f, const Shape& shape) {
  const T raw = energy_value(f, shape);
  const unsigned K = shape.total_product();
  if (raw == T(0)) return 0.0;
  if constexpr (is_exact_v<T>) {
    const double mag = std::exp(log_abs(raw) / K);
    return raw < 0 ? (K % 2 ? -mag : std::numeric_limits<double>::quiet_NaN()) : mag;
  } else {
    return kth_root(raw, K);
  }
}

/// Bar norm (N^{-S} E(f))^{1/K}.
template <typename T>
double bar_norm(const DenseFunction<T>& f, const Shape& shape) {
  return energy(f, shape).norm;
}

// ---------------------------------------------------------------------------
// Multi-scalar product over a family (f^w) indexed by the box, row-major in w
// (last axis fastest).

namespace detail {

template <typename V>
V multi_level(const Group& G, const std::vector<std::vector<V>>& fam, const std::vector<unsigned>& ks,
              std::size_t depth) {
  const std::uint32_t n = G.order();
  if (depth == 1) {
    V prod(1);
    for (const auto& h : fam) {
      V s(0);
      for (const auto& v : h) s += v;
      prod *= s;
    }
    return prod;
  }
  const unsigned kr = ks[depth - 1];
  const std::size_t outer = fam.size() / kr;
  const unsigned free = kr - 1;
  const std::uint64_t count = sat_pow(n, free);
  std::vector<std::uint32_t> w(free, 0);
  std::vector<std::vector<V>> next(outer, std::vector<V>(n));
  V acc(0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = free; i-- > 0;) {
      w[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    for (std::size_t o = 0; o < outer; ++o) {
      auto& g = next[o];
      g = fam[o * kr];
      for (unsigned j = 1; j < kr; ++j) {
        const auto& h = fam[o * kr + j];
        for (std::uint32_t u = 0; u < n; ++u) g[u] *= h[G.add(u, w[j - 1])];
      }
    }
    acc += multi_level(G, next, ks, depth - 1);
  }
  return acc * V(static_cast<std::int64_t>(n));
}

}  // namespace detail

template <typename T>
T multi_scalar_product(const std::vector<DenseFunction<T>>& family, const Shape& shape) {
  if (family.size() != shape.total_product())
    throw DomainError("family has " + std::to_string(family.size()) + " functions, box needs " +
                      std::to_string(shape.total_product()));
  for (const auto& f : family) family.front().check_same(f);
  const Group& G = family.front().group();
  detail::require_work(sat_mul(detail::enumerate_cost(G.size(), shape.dims()), family.size()), "multi-scalar product");
  if constexpr (is_exact_v<T>) {
    std::vector<std::vector<Integer>> fam;
    Integer denom = 1;
    for (const auto& f : family) {
      auto s = detail::scale_to_integers(f.values());
      denom *= s.denom;
      fam.push_back(std::move(s.v));
    }
    return Rational(detail::multi_level<Integer>(G, fam, shape.dims(), shape.rank()), denom);
  } else {
    std::vector<std::vector<double>> fam;
    for (const auto& f : family) fam.push_back(f.values());
    return detail::multi_level<double>(G, fam, shape.dims(), shape.rank());
  }
}

// ---------------------------------------------------------------------------
// Uniformity relative to E^k_l:  ||f_A||^{kl} <= eps^{kl} delta^{kl} N^{k+l}.

struct Uniformity {
  Rational energy;  // E^k_l(f_A)
  Rational ratio;   // energy / (delta^{kl} N^{k+l})
  double epsilon = 0.0;
};

inline Uniformity uniformity(const GroupSet& a, unsigned k, unsigned l) {
  if (a.empty()) throw DomainError("uniformity of the empty set is undefined");
  if (k < 1 || l < 1) throw DomainError("uniformity needs k, l >= 1");
  Uniformity u;
  if (a.size() == a.group().size()) return u;
  u.energy = energy_value(balanced(a), Shape{k, l}, Strategy::automatic);
  const Integer n = a.group().size();
  const Rational delta = a.density();
  const Rational denom = Rational(ipow(numerator(delta), k * l) * ipow(n, k + l), ipow(denominator(delta), k * l));
  u.ratio = u.energy / denom;
  u.epsilon = u.ratio <= 0 ? 0.0 : std::exp(log_abs(u.ratio) / (k * l));
  return u;
}

inline double uniformity_epsilon(const GroupSet& a, unsigned k, unsigned l) { return uniformity(a, k, l).epsilon; }

}  // namespace hen
