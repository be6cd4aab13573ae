#pragma once
// Brute-force reference implementations, written straight from the definitions and
// sharing nothing with the library beyond Group arithmetic and Rational.

#include "hen/group.hpp"
#include "hen/numeric.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using hen::Group;
using hen::Rational;

/// Box energy: sum over x^(1) in G^{k_1}, ..., x^(r) in G^{k_r} of the product of
/// f(x^(1)_{i_1} + ... + x^(r)_{i_r}) over the whole grid i in [k_1] x ... x [k_r].
inline Rational box_energy(const Group& g, const std::vector<Rational>& f, const std::vector<unsigned>& ks) {
  const std::uint32_t n = g.order();
  unsigned total = 0;
  for (auto k : ks) total += k;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < total; ++i) count *= n;
  std::vector<std::uint32_t> v(total);
  Rational sum = 0;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < total; ++i) v[i] = static_cast<std::uint32_t>(rest % n), rest /= n;
    // Walk the grid with an odometer over (i_1..i_r).
    std::vector<unsigned> pos(ks.size(), 0);
    Rational prod = 1;
    for (;;) {
      std::uint32_t s = 0;
      unsigned offset = 0;
      for (std::size_t a = 0; a < ks.size(); ++a) {
        s = g.add(s, v[offset + pos[a]]);
        offset += ks[a];
      }
      prod *= f[s];
      if (prod == 0) break;
      std::size_t a = 0;
      while (a < ks.size() && ++pos[a] == ks[a]) pos[a++] = 0;
      if (a == ks.size()) break;
    }
    sum += prod;
  }
  return sum;
}

/// (f o g)(x) = sum_y f(y) g(y + x).
inline std::vector<Rational> circ(const Group& g, const std::vector<Rational>& f, const std::vector<Rational>& h) {
  std::vector<Rational> out(g.order(), 0);
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) out[x] += f[y] * h[g.add(y, x)];
  return out;
}

/// (f * g)(x) = sum_y f(y) g(x - y).
inline std::vector<Rational> star(const Group& g, const std::vector<Rational>& f, const std::vector<Rational>& h) {
  std::vector<Rational> out(g.order(), 0);
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) out[x] += f[y] * h[g.sub(x, y)];
  return out;
}

/// Indicator of a list of indices.
inline std::vector<Rational> indicator(const Group& g, const std::vector<std::uint32_t>& elems) {
  std::vector<Rational> f(g.order(), 0);
  for (auto e : elems) f[e] = 1;
  return f;
}

inline std::vector<Rational> balanced(const Group& g, const std::vector<std::uint32_t>& elems) {
  auto f = indicator(g, elems);
  const Rational delta(static_cast<long long>(elems.size()), static_cast<long long>(g.order()));
  for (auto& v : f) v -= delta;
  return f;
}

/// chi_r(x) from coordinates: exp(2 pi i sum_j r_j x_j / m_j).
inline std::complex<double> character(const Group& g, std::uint32_t r, std::uint32_t x) {
  const auto rc = g.coords(r), xc = g.coords(x);
  double phase = 0.0;
  for (std::size_t j = 0; j < rc.size(); ++j)
    phase += static_cast<double>(rc[j]) * xc[j] / static_cast<double>(g.factors()[j]);
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

}  // namespace oracle
