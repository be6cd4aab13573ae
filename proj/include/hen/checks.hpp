#pragma once
// Executable inequality and identity checkers. Each returns a CheckReport with both
// sides, a hypothesis flag computed independently of the verdict, and a relative margin.

#include "hen/convolution.hpp"
#include "hen/energy.hpp"
#include "hen/function.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hen {

inline constexpr double float_tolerance = 1e-9;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string id;
  KeyValues instance;
  std::string lhs;
  std::string rhs;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  std::string relation = "<=";
  bool exact = false;
  bool identity = false;
  bool hypothesis = true;
  bool holds = false;
  double margin = 0.0;
  std::uint64_t seed = 0;
  KeyValues info;
};

/// Shortest decimal that round-trips the double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double relative_gap(double lhs, double rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return (rhs - lhs) / scale;
}

namespace detail {

inline void settle_exact(CheckReport& r, const Rational& lhs, const Rational& rhs, bool identity) {
  r.exact = true;
  r.identity = identity;
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.lhs_value = to_double(lhs);
  r.rhs_value = to_double(rhs);
  r.relation = identity ? "=" : "<=";
  r.holds = identity ? lhs == rhs : lhs <= rhs;
  r.margin = lhs == rhs ? 0.0 : relative_gap(r.lhs_value, r.rhs_value);
  if (identity) r.margin = std::abs(r.margin);
}

inline void settle_float(CheckReport& r, double lhs, double rhs, bool identity, double tol = float_tolerance) {
  r.exact = false;
  r.identity = identity;
  r.lhs = format_double(lhs);
  r.rhs = format_double(rhs);
  r.lhs_value = lhs;
  r.rhs_value = rhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.relation = identity ? "=" : "<=";
  r.holds = identity ? std::abs(lhs - rhs) <= tol * scale : lhs <= rhs + tol * scale;
  r.margin = std::abs(lhs - rhs) <= tol * scale ? 0.0 : relative_gap(lhs, rhs);
  if (identity) r.margin = std::abs(r.margin);
}

/// Comparison of logarithms: lhs, rhs given as natural logs of positive quantities.
inline void settle_log(CheckReport& r, double log_lhs, double log_rhs, double tol = 1e-12) {
  r.exact = false;
  r.identity = false;
  r.relation = ">=";
  r.lhs = "exp(" + format_double(log_lhs) + ")";
  r.rhs = "exp(" + format_double(log_rhs) + ")";
  r.lhs_value = std::exp(log_lhs);
  r.rhs_value = std::exp(log_rhs);
  r.holds = log_lhs >= log_rhs - tol * std::max(1.0, std::abs(log_rhs));
  r.margin = log_lhs - log_rhs;
}

template <typename T>
Rational as_rational(const T& v) {
  if constexpr (is_exact_v<T>) return Rational(v);
  else return exact_from_double(v);
}

template <typename T>
double abs_double(const T& v) {
  return std::abs(to_double(v));
}

inline double pow_log(double base_log, double e) { return base_log * e; }

}  // namespace detail

/// log2(2 / eps) for eps in (0, 1].
inline double cal_L(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("cal_L needs eps in (0, 1]");
  return std::log2(2.0 / eps);
}

// ---------------------------------------------------------------------------

/// sum_x prod_j (f_{A_j} o g)(x) <= ||g||_1^{l(1-1/k)} ||C_l(g)||_inf^{1/k} prod_j (N^{-1} E^k_l(f_{A_j}))^{1/(kl)}.
inline CheckReport check_uniformity_bound(const std::vector<GroupSet>& sets, const ExactFunction& g, unsigned k) {
  CheckReport r;
  r.id = "uniformity_bound";
  const unsigned l = static_cast<unsigned>(sets.size());
  if (l < 2 || k < 2) throw DomainError("uniformity bound needs k, l >= 2");
  bool same = true;
  for (const auto& s : sets) {
    g.check_same(s.indicator());
    same = same && s == sets.front();
  }
  if (k % 2 || (!same && l % 2)) throw DomainError("uniformity bound needs even k, and even l unless all sets coincide");
  const Group& G = g.group();
  const double n = static_cast<double>(G.size());
  r.instance = {{"group", G.spec()}, {"k", std::to_string(k)}, {"l", std::to_string(l)},
                {"identical_sets", same ? "true" : "false"}};

  Rational lhs = 0;
  std::vector<ExactFunction> corr;
  for (const auto& s : sets) corr.push_back(convolve(balanced(s), g, ConvKind::circ));
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    Rational p = 1;
    for (const auto& c : corr) p *= c[x];
    lhs += p;
  }

  double g1 = 0.0;
  for (const auto& v : g.values()) g1 += detail::abs_double(v);
  const auto cg = generalized_conv(g, l);
  double cmax = 0.0;
  for (const auto& v : cg.values()) cmax = std::max(cmax, detail::abs_double(v));
  double log_prod = 0.0;
  bool zero = g1 == 0.0 || cmax == 0.0;
  for (const auto& s : sets) {
    const Rational e = energy_value(balanced(s), Shape{k, l});
    if (e == 0) {
      zero = true;
      break;
    }
    log_prod += (log_abs(e) - std::log(n)) / (k * l);
  }
  double rhs = 0.0;
  if (!zero)
    rhs = std::exp(l * (1.0 - 1.0 / k) * std::log(g1) + std::log(cmax) / k + log_prod);
  detail::settle_float(r, to_double(lhs), rhs, false);
  r.info.push_back({"lhs_exact", to_string(lhs)});
  return r;
}

/// sum_x (A o B)^l(x) <= delta^l |B|^l N min{1.25 (1+eps)^l, (1+1.25 eps)^l}, eps the largest
/// E^k_j-uniformity over 2 <= j <= l at k = 2 ceil(e l log2(1/beta)).
inline CheckReport check_circ_moment(const GroupSet& a, const GroupSet& b, unsigned l) {
  if (a.empty() || b.empty()) throw DomainError("circ moment needs non-empty sets");
  if (l < 1) throw DomainError("circ moment needs l >= 1");
  CheckReport r;
  r.id = "circ_moment";
  const Group& G = a.group();
  const double beta = b.density_real();
  const unsigned k = std::max(2U, 2U * static_cast<unsigned>(std::ceil(std::numbers::e * l * std::log2(1.0 / beta) - 1e-12)));
  const auto c = convolve(a.indicator(), b.indicator(), ConvKind::circ);
  Rational lhs = 0;
  for (const auto& v : c.values()) lhs += ipow(v, l);
  // The bound expands (A o B)^l through every lower moment j <= l, so eps is taken over all
  // of E^k_2..E^k_l; for odd l, E^k_l alone can vanish on sets that are far from uniform.
  double eps = 0.0;
  for (unsigned j = 2; j <= l; ++j) eps = std::max(eps, uniformity_epsilon(a, k, j));
  const double delta = a.density_real();
  const double bsz = static_cast<double>(b.size());
  const double base = std::pow(delta * bsz, l) * static_cast<double>(G.size());
  const double factor = std::min(1.25 * std::pow(1.0 + eps, l), std::pow(1.0 + 1.25 * eps, l));
  r.instance = {{"group", G.spec()}, {"l", std::to_string(l)}, {"k", std::to_string(k)},
                {"A_size", std::to_string(a.size())}, {"B_size", std::to_string(b.size())}};
  detail::settle_float(r, to_double(lhs), base * factor, false);
  // eps is measured at the k chosen above.
  r.hypothesis = true;
  r.info = {{"epsilon", format_double(eps)}, {"epsilon_at_most_1", eps <= 1.0 ? "true" : "false"},
            {"lhs_exact", to_string(lhs)}};
  return r;
}

/// sum_{x in G^l} (C_l(A_1..A_l)(x) - N prod delta_j)^k <= eps^k l 2^{kl+1} N^{l+k} (prod delta_j)^k.
inline CheckReport check_dispersion(const std::vector<GroupSet>& sets, unsigned k) {
  const unsigned l = static_cast<unsigned>(sets.size());
  if (k % 2 || l % 2 || k < 2 || l < 2) throw DomainError("dispersion needs even k, l >= 2");
  CheckReport r;
  r.id = "dispersion";
  const Group& G = sets.front().group();
  std::vector<ExactFunction> ind;
  Rational pi = 1;
  double eps = 0.0;
  for (const auto& s : sets) {
    if (s.empty()) throw DomainError("dispersion needs non-empty sets");
    ind.push_back(s.indicator());
    pi *= s.density();
    eps = std::max(eps, uniformity_epsilon(s, k, l));
  }
  const auto c = generalized_conv<Rational>(std::span<const ExactFunction>(ind));
  const Rational centre = Rational(G.size()) * pi;
  Rational lhs = 0;
  for (const auto& v : c.values()) lhs += ipow(Rational(v - centre), k);
  const double n = static_cast<double>(G.size());
  const double log_rhs = k * std::log(eps) + std::log(static_cast<double>(l)) + (k * l + 1) * std::log(2.0) +
                         (l + k) * std::log(n) + k * log_abs(pi);
  const double rhs = eps == 0.0 ? 0.0 : std::exp(log_rhs);
  r.instance = {{"group", G.spec()}, {"k", std::to_string(k)}, {"l", std::to_string(l)}};
  detail::settle_float(r, to_double(lhs), rhs, false);
  r.hypothesis = 2.0 * l * std::pow(eps, k) <= 1.0;
  r.info = {{"epsilon", format_double(eps)}, {"lhs_exact", to_string(lhs)}};
  return r;
}

/// (E^{k-1}_l(f))^k <= (E^k_l(f))^{k-1} N^l, exact; the hypothesis is f >= 0.
template <typename T>
CheckReport check_holder(const DenseFunction<T>& f, unsigned k, unsigned l) {
  if (k < 2 || l < 1) throw DomainError("Holder check needs k >= 2, l >= 1");
  CheckReport r;
  r.id = "holder";
  const Rational lo = detail::as_rational(energy_value(f, Shape{k - 1, l}));
  const Rational hi = detail::as_rational(energy_value(f, Shape{k, l}));
  const Rational lhs = ipow(lo, k);
  const Rational rhs = ipow(hi, k - 1) * Rational(ipow(Integer(f.size()), l));
  r.instance = {{"group", f.group().spec()}, {"k", std::to_string(k)}, {"l", std::to_string(l)}};
  detail::settle_exact(r, lhs, rhs, false);
  bool nonneg = true;
  for (const auto& v : f.values()) nonneg = nonneg && v >= T(0);
  r.hypothesis = nonneg;
  return r;
}

/// Searches even k_1 in [k1_lo, k1_hi] with E^{k_1}_l(A) >= (1 + eps eps_*^{l-1}/(8l))^{l k_1} delta^{l k_1} N^{l+k_1}.
inline CheckReport check_e_to_d(const GroupSet& a, unsigned k, unsigned l, unsigned k1_lo, unsigned k1_hi) {
  if (k < 5 || k % 2 == 0) throw DomainError("e_to_d needs odd k >= 5");
  if (l < 2) throw DomainError("e_to_d needs l >= 2");
  if (a.empty()) throw DomainError("e_to_d needs a non-empty set");
  CheckReport r;
  r.id = "e_to_d";
  const auto u = uniformity(a, k, l);
  const double eps = u.epsilon;
  const double eps_star = std::min(eps, 1.0);
  const double gain = eps * std::pow(eps_star, l - 1) / (8.0 * l);
  const double logn = std::log(static_cast<double>(a.size() ? a.group().size() : 1));
  const double logd = std::log(a.density_real());
  std::optional<unsigned> witness;
  double best_lhs = 0.0, best_rhs = 0.0;
  const auto ind = a.indicator();
  for (unsigned k1 = k1_lo + (k1_lo % 2); k1 <= k1_hi; k1 += 2) {
    if (k1 < 2) continue;
    const Rational e = energy_value(ind, Shape{k1, l});
    const double lhs = log_abs(e);
    const double rhs = l * k1 * std::log1p(gain) + l * k1 * logd + (l + k1) * logn;
    best_lhs = lhs;
    best_rhs = rhs;
    if (lhs >= rhs - 1e-12 * std::max(1.0, std::abs(rhs))) {
      witness = k1;
      break;
    }
  }
  r.instance = {{"group", a.group().spec()}, {"k", std::to_string(k)}, {"l", std::to_string(l)},
                {"k1_range", std::to_string(k1_lo) + ".." + std::to_string(k1_hi)}};
  detail::settle_log(r, best_lhs, best_rhs);
  r.holds = witness.has_value();
  // Lower-shape uniformity at the top of the range stands in for the unspecified k_*.
  const double lower = uniformity_epsilon(a, std::max(2U, k1_hi), l - 1);
  r.hypothesis = lower <= gain || eps == 0.0;
  r.info = {{"epsilon", format_double(eps)},
            {"witness_k1", witness ? std::to_string(*witness) : "none"},
            {"lower_shape_epsilon", format_double(lower)},
            {"required_lower_epsilon", format_double(gain)}};
  return r;
}

struct LinearForm {
  std::int64_t a = 0, b = 0, c = 0;  // a x + b y + c
};

/// |sum_{x,y} prod_j f_j(L_j(x,y))| <= ||f_1||_{l1*} ||f_2||_{l2*} ||f_3||_{E^2_{l1,l2}} ||f_4||_{E^2_{l1,l2}}.
template <typename T>
CheckReport check_counting(const std::vector<DenseFunction<T>>& fs, const std::vector<LinearForm>& forms, unsigned l1,
                           unsigned l2) {
  if (fs.size() != 4 || forms.size() != 4) throw DomainError("counting check needs four functions and four forms");
  const Group& G = fs.front().group();
  for (const auto& f : fs) fs.front().check_same(f);
  if (G.rank() != 1 || !is_prime(G.order())) throw DomainError("counting check needs Z/p with p prime");
  if (l1 < 2 || l2 < 2) throw DomainError("counting check needs l1, l2 >= 2");
  const std::int64_t p = G.order();
  auto md = [p](std::int64_t v) { return ((v % p) + p) % p; };
  for (std::size_t i = 0; i < 4; ++i) {
    if (md(forms[i].a) == 0 && md(forms[i].b) == 0) throw DomainError("linear form is trivial mod p");
    if (i > 0 && (md(forms[i].a) == 0 || md(forms[i].b) == 0))
      throw DomainError("forms 2..4 must depend on both variables");
    for (std::size_t j = 0; j < i; ++j)
      if (md(forms[i].a * forms[j].b - forms[i].b * forms[j].a) == 0)
        throw DomainError("linear forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are proportional");
  }
  CheckReport r;
  r.id = "counting";
  T lhs(0);
  for (std::int64_t x = 0; x < p; ++x)
    for (std::int64_t y = 0; y < p; ++y) {
      T prod(1);
      for (std::size_t j = 0; j < 4; ++j) {
        prod *= fs[j][static_cast<std::uint32_t>(md(forms[j].a * x + forms[j].b * y + forms[j].c))];
        if (prod == T(0)) break;
      }
      lhs += prod;
    }
  auto lp = [](const DenseFunction<T>& f, double q) {
    double s = 0.0;
    for (const auto& v : f.values()) s += std::pow(detail::abs_double(v), q);
    return std::pow(s, 1.0 / q);
  };
  auto box = [&](const DenseFunction<T>& f) {
    const auto e = energy_value(f, Shape{2, l1, l2});
    if (e == T(0)) return 0.0;
    double lg;
    if constexpr (is_exact_v<T>) lg = log_abs(e);
    else lg = std::log(std::abs(e));
    return std::exp((lg - 2.0 * std::log(static_cast<double>(p))) / (2.0 * l1 * l2));
  };
  const double q1 = static_cast<double>(l1) / (l1 - 1);
  const double q2 = static_cast<double>(l2) / (l2 - 1);
  const double rhs = lp(fs[0], q1) * lp(fs[1], q2) * box(fs[2]) * box(fs[3]);
  r.instance = {{"group", G.spec()}, {"l1", std::to_string(l1)}, {"l2", std::to_string(l2)}};
  std::string forms_text;
  for (const auto& f : forms)
    forms_text += (forms_text.empty() ? "" : ";") + std::to_string(f.a) + "x+" + std::to_string(f.b) + "y+" +
                  std::to_string(f.c);
  r.instance.push_back({"forms", forms_text});
  detail::settle_float(r, std::abs(to_double(lhs)), rhs, false);
  if constexpr (is_exact_v<T>) r.info.push_back({"lhs_exact", to_string(lhs)});
  return r;
}

// ---------------------------------------------------------------------------
// Norm axioms for box energies.

/// ||f+g|| <= ||f|| + ||g|| with ||.|| = E^{1/K}.
template <typename T>
CheckReport check_triangle(const DenseFunction<T>& f, const DenseFunction<T>& g, const Shape& shape) {
  if (!shape.norm_grade()) throw DomainError("triangle inequality needs a norm-grade shape, got " + shape.str());
  CheckReport r;
  r.id = "triangle";
  r.instance = {{"group", f.group().spec()}, {"shape", shape.str()}};
  const double nf = energy_norm(f, shape), ng = energy_norm(g, shape), ns = energy_norm(f + g, shape);
  detail::settle_float(r, ns, nf + ng, false);
  return r;
}

/// |<f^w>| <= prod_w ||f^w||.
template <typename T>
CheckReport check_gcs(const std::vector<DenseFunction<T>>& family, const Shape& shape) {
  if (!shape.norm_grade()) throw DomainError("Gowers-Cauchy-Schwarz needs a norm-grade shape, got " + shape.str());
  CheckReport r;
  r.id = "gowers_cauchy_schwarz";
  r.instance = {{"group", family.front().group().spec()}, {"shape", shape.str()}};
  const T prod = multi_scalar_product(family, shape);
  double log_rhs = 0.0;
  bool zero = false;
  for (const auto& f : family) {
    const double nf = energy_norm(f, shape);
    if (nf == 0.0) zero = true;
    else log_rhs += std::log(nf);
  }
  detail::settle_float(r, std::abs(to_double(prod)), zero ? 0.0 : std::exp(log_rhs), false);
  return r;
}

/// E(f) >= 0 for even K.
template <typename T>
CheckReport check_nonnegative(const DenseFunction<T>& f, const Shape& shape) {
  CheckReport r;
  r.id = "non_negativity";
  r.instance = {{"group", f.group().spec()}, {"shape", shape.str()}};
  const T e = energy_value(f, shape);
  if constexpr (is_exact_v<T>) detail::settle_exact(r, Rational(0), e, false);
  else detail::settle_float(r, 0.0, e, false);
  if constexpr (!is_exact_v<T>) {
    // Float energies near zero: compare against the scale of E(|f|).
    DenseFunction<T> af = f;
    for (auto& v : af.values()) v = std::abs(v);
    const double scale = std::abs(energy_value(af, shape));
    r.holds = e >= -float_tolerance * scale;
  }
  r.hypothesis = shape.even_product();
  return r;
}

/// Bar-norm monotonicity ||f||_{bar E_small} <= ||f||_{bar E_big} for small <= big coordinatewise.
template <typename T>
CheckReport check_monotonicity(const DenseFunction<T>& f, const Shape& small, const Shape& big) {
  if (small.rank() > big.rank()) throw DomainError("monotonicity needs rank(small) <= rank(big)");
  for (std::size_t i = 0; i < small.rank(); ++i)
    if (small[i] > big[i]) throw DomainError("monotonicity needs small <= big coordinatewise");
  CheckReport r;
  r.id = "monotonicity";
  r.instance = {{"group", f.group().spec()}, {"small", small.str()}, {"big", big.str()}};
  const double a = energy(f, small).norm, b = energy(f, big).norm;
  detail::settle_float(r, a, b, false);
  r.hypothesis = small.norm_grade() && big.norm_grade();
  return r;
}

/// Some j has k_j even and K/k_j even.
inline bool zero_norm_parity(const Shape& shape) {
  const unsigned K = shape.total_product();
  for (auto k : shape.dims())
    if (k % 2 == 0 && (K / k) % 2 == 0) return true;
  return false;
}

/// E(f) = 0 exactly when f = 0, under the parity hypothesis.
template <typename T>
CheckReport check_zero_characterization(const DenseFunction<T>& f, const Shape& shape) {
  CheckReport r;
  r.id = "zero_characterization";
  r.instance = {{"group", f.group().spec()}, {"shape", shape.str()}, {"f_is_zero", f.is_zero() ? "true" : "false"}};
  const T e = energy_value(f, shape);
  r.exact = is_exact_v<T>;
  r.identity = true;
  if constexpr (is_exact_v<T>) r.lhs = to_string(e);
  else r.lhs = format_double(e);
  r.rhs = f.is_zero() ? "0" : ">0";
  r.lhs_value = to_double(e);
  r.rhs_value = 0.0;
  r.holds = (e == T(0)) == f.is_zero() && !(e < T(0));
  r.hypothesis = zero_norm_parity(shape);
  return r;
}

/// Triangle, Gowers-Cauchy-Schwarz (family built from f and g), non-negativity,
/// monotonicity against the shape with k_1 + 2, and zero characterization.
template <typename T>
std::vector<CheckReport> check_general_norm_axioms(const Shape& shape, const DenseFunction<T>& f,
                                                   const DenseFunction<T>& g) {
  std::vector<CheckReport> out;
  if (shape.norm_grade()) {
    out.push_back(check_triangle(f, g, shape));
    std::vector<DenseFunction<T>> fam;
    for (unsigned i = 0; i < shape.total_product(); ++i) fam.push_back(i % 2 ? g : f);
    out.push_back(check_gcs(fam, shape));
    auto bigger = shape.dims();
    bigger[0] += 2;
    out.push_back(check_monotonicity(f, shape, Shape(bigger)));
  }
  if (shape.even_product()) out.push_back(check_nonnegative(f, shape));
  out.push_back(check_zero_characterization(f, shape));
  return out;
}

// ---------------------------------------------------------------------------
// Exact identities.

/// sum_{x in G^s, y in G^t} C_{st}(f)(x ⊕ y) = N E^t_s(f).
template <typename T>
CheckReport check_expectation_identity(const DenseFunction<T>& f, unsigned s, unsigned t) {
  CheckReport r;
  r.id = "expectation_identity";
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  const std::uint64_t total = sat_pow(n, s + t);
  detail::require_work(sat_mul(total, sat_mul(n, s * t)), "expectation identity");
  T lhs(0);
  std::vector<std::uint32_t> x(s), y(t);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned j = t; j-- > 0;) y[j] = static_cast<std::uint32_t>(rest % n), rest /= n;
    for (unsigned i = s; i-- > 0;) x[i] = static_cast<std::uint32_t>(rest % n), rest /= n;
    const auto pts = minkowski_index(G, x, y);
    for (std::uint32_t z = 0; z < n; ++z) {
      T p(1);
      for (auto q : pts) p *= f[G.add(z, q)];
      lhs += p;
    }
  }
  const T rhs = T(static_cast<std::int64_t>(n)) * energy_value(f, Shape{t, s}, Strategy::enumerate);
  r.instance = {{"group", G.spec()}, {"s", std::to_string(s)}, {"t", std::to_string(t)}};
  if constexpr (is_exact_v<T>) detail::settle_exact(r, lhs, rhs, true);
  else detail::settle_float(r, lhs, rhs, true);
  return r;
}

/// E(f; k_1..k_r) = sum_{z in G^{k_r}} E(f_z; k_1..k_{r-1}) with f_z(u) = prod_j f(u + z_j).
template <typename T>
CheckReport check_inductive_identity(const DenseFunction<T>& f, const Shape& shape) {
  if (shape.rank() < 2) throw DomainError("inductive identity needs r >= 2");
  CheckReport r;
  r.id = "inductive_identity";
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  const unsigned kr = shape.dims().back();
  const Shape head(std::vector<unsigned>(shape.dims().begin(), shape.dims().end() - 1));
  const std::uint64_t count = sat_pow(n, kr);
  detail::require_work(sat_mul(count, detail::enumerate_cost(n, head.dims())), "inductive identity");
  T rhs(0);
  std::vector<std::uint32_t> z(kr);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned j = kr; j-- > 0;) z[j] = static_cast<std::uint32_t>(rest % n), rest /= n;
    DenseFunction<T> fz = DenseFunction<T>::constant(G, T(1));
    for (std::uint32_t u = 0; u < n; ++u)
      for (auto zj : z) fz[u] *= f[G.add(u, zj)];
    rhs += energy_value(fz, head, Strategy::enumerate);
  }
  const T lhs = energy_value(f, shape, Strategy::enumerate);
  r.instance = {{"group", G.spec()}, {"shape", shape.str()}};
  if constexpr (is_exact_v<T>) detail::settle_exact(r, lhs, rhs, true);
  else detail::settle_float(r, lhs, rhs, true);
  return r;
}

/// C_{st}(f)(x ⊕ y) = C'_{st}(f)(w) with w_ij = (x_i - x_1) + (y_j - y_1), (i,j) != (1,1), at one point;
/// summed over all x, y this is N^2 times the sum over pinned x_1 = y_1 = 0.
template <typename T>
CheckReport check_reduction_identity(const DenseFunction<T>& f, std::span<const std::uint32_t> x,
                                     std::span<const std::uint32_t> y) {
  CheckReport r;
  r.id = "reduction_identity";
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  auto conv_at = [&](const std::vector<std::uint32_t>& pts) {
    T acc(0);
    for (std::uint32_t z = 0; z < n; ++z) {
      T p(1);
      for (auto q : pts) p *= f[G.add(z, q)];
      acc += p;
    }
    return acc;
  };
  const T lhs = conv_at(minkowski_index(G, x, y));
  // Primed convolution: f(z) times the shifted factors at w.
  std::vector<std::uint32_t> w;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (i || j) w.push_back(G.add(G.sub(x[i], x[0]), G.sub(y[j], y[0])));
  T rhs(0);
  for (std::uint32_t z = 0; z < n; ++z) {
    T p = f[z];
    for (auto q : w) p *= f[G.add(z, q)];
    rhs += p;
  }
  r.instance = {{"group", G.spec()}, {"s", std::to_string(x.size())}, {"t", std::to_string(y.size())}};
  if constexpr (is_exact_v<T>) detail::settle_exact(r, lhs, rhs, true);
  else detail::settle_float(r, lhs, rhs, true);
  return r;
}

/// sum_{x,y} C_{st}(x ⊕ y)^k = N^2 sum_{x', y'} C'_{st}(w(0x', 0y'))^k, exact.
template <typename T>
CheckReport check_reduction_sum(const DenseFunction<T>& f, unsigned s, unsigned t, unsigned k) {
  CheckReport r;
  r.id = "reduction_sum";
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  const T full = energy_value(f, Shape{k, s, t}, Strategy::enumerate);
  const std::uint64_t count = sat_pow(n, s + t - 2);
  detail::require_work(sat_mul(count, sat_mul(n, s * t)), "reduction sum");
  T pinned(0);
  std::vector<std::uint32_t> x(s, 0), y(t, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned j = t; j-- > 1;) y[j] = static_cast<std::uint32_t>(rest % n), rest /= n;
    for (unsigned i = s; i-- > 1;) x[i] = static_cast<std::uint32_t>(rest % n), rest /= n;
    T acc(0);
    for (std::uint32_t z = 0; z < n; ++z) {
      T p = f[z];
      for (unsigned i = 0; i < s; ++i)
        for (unsigned j = 0; j < t; ++j)
          if (i || j) p *= f[G.add(z, G.add(x[i], y[j]))];
      acc += p;
    }
    pinned += detail::power(acc, k);
  }
  const T rhs = T(static_cast<std::int64_t>(n) * n) * pinned;
  r.instance = {{"group", G.spec()}, {"s", std::to_string(s)}, {"t", std::to_string(t)}, {"k", std::to_string(k)}};
  if constexpr (is_exact_v<T>) detail::settle_exact(r, full, rhs, true);
  else detail::settle_float(r, full, rhs, true);
  return r;
}

/// C_l(f)(x + D(w)) = C_l(f)(x), checked over every x in G^l and every w.
template <typename T>
CheckReport check_diagonal_symmetry(const DenseFunction<T>& f, unsigned l) {
  CheckReport r;
  r.id = "diagonal_symmetry";
  const auto c = generalized_conv(f, l);
  const Group& G = f.group();
  std::size_t mismatches = 0;
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    auto x = c.unflat(idx);
    for (std::uint32_t w = 1; w < G.order(); ++w) {
      auto xs = x;
      for (auto& v : xs) v = G.add(v, w);
      if (c.at(xs) != c[idx]) ++mismatches;
    }
  }
  r.instance = {{"group", G.spec()}, {"l", std::to_string(l)}};
  detail::settle_exact(r, Rational(static_cast<long long>(mismatches)), Rational(0), true);
  r.exact = is_exact_v<T>;
  return r;
}

/// C_{st}((x + D w1) ⊕ (y + D w2)) = C_{st}(x ⊕ y).
template <typename T>
CheckReport check_two_sided_symmetry(const DenseFunction<T>& f, std::span<const std::uint32_t> x,
                                     std::span<const std::uint32_t> y, std::uint32_t w1, std::uint32_t w2) {
  CheckReport r;
  r.id = "two_sided_symmetry";
  const Group& G = f.group();
  auto conv_at = [&](const std::vector<std::uint32_t>& pts) {
    T acc(0);
    for (std::uint32_t z = 0; z < G.order(); ++z) {
      T p(1);
      for (auto q : pts) p *= f[G.add(z, q)];
      acc += p;
    }
    return acc;
  };
  std::vector<std::uint32_t> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  for (auto& v : xs) v = G.add(v, w1);
  for (auto& v : ys) v = G.add(v, w2);
  const T a = conv_at(minkowski_index(G, x, y));
  const T b1 = conv_at(minkowski_index(G, xs, y));
  const T b2 = conv_at(minkowski_index(G, x, ys));
  r.instance = {{"group", G.spec()}, {"s", std::to_string(x.size())}, {"t", std::to_string(y.size())}};
  const bool ok = a == b1 && a == b2;
  if constexpr (is_exact_v<T>) detail::settle_exact(r, a, ok ? a : b1 == a ? b2 : b1, true);
  else detail::settle_float(r, a, ok ? a : b1 == a ? b2 : b1, true);
  return r;
}

}  // namespace hen
