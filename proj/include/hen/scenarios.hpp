#pragma once
// Planted instances on F_2^n: H ⊕ Λ (uniform for two-point energies, not for three-point ones)
// and H̃ ⊔ Λ (a small structured piece spoils uniformity of a random set).

#include "hen/checks.hpp"
#include "hen/rng.hpp"

#include <cmath>
#include <numeric>

namespace hen {

struct DirectSumScenario {
  GroupSet set;
  unsigned subgroup_dim = 0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  Shape low{2, 2};
  Shape high{8, 3};
  double eps_low = 0.0;
  double eps_high = 0.0;
  double ratio = 0.0;  // eps_high / eps_low
  bool dense_regime = false;  // delta^2 >= 2 |H| / N
  CheckReport separation;
};

struct RemovalScenario {
  GroupSet set;
  double beta = 0.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  unsigned k = 0;
  double eta = 0.0;          // measured uniformity of A at (k, 2)
  double eps = 0.0;          // |H \ Λ| / |A|
  double delta = 0.0;        // density of A
  double prediction = 0.0;   // eps / (2 delta)
  bool beta_le_delta = false;
  CheckReport comparison;
};

/// Subgroup of F_2^n spanned by the last d coordinates: indices below 2^d.
inline GroupSet low_subgroup(const Group& g, unsigned d) {
  if (!g.is_vector_space() || g.prime() != 2) throw DomainError("low_subgroup needs F_2^n");
  if (d > g.dimension()) throw DomainError("subgroup dimension exceeds n");
  const std::uint32_t h = std::uint32_t{1} << d;
  return GroupSet::where(g, [h](std::uint32_t x) { return x < h; });
}

/// A = H ⊕ Λ with H the low subgroup and Λ a Bernoulli(lambda) set of cosets.
inline DirectSumScenario scenario_direct_sum(unsigned n, unsigned subgroup_dim, double lambda, std::uint64_t seed,
                                             const Shape& low = Shape{2, 2}, const Shape& high = Shape{8, 3}) {
  if (n < 1 || n > 20) throw DomainError("direct-sum scenario needs 1 <= n <= 20");
  if (subgroup_dim > n) throw DomainError("subgroup dimension exceeds n");
  if (!(lambda > 0.0) || lambda > 1.0) throw DomainError("lambda must lie in (0, 1]");
  if (low.rank() != 2 || high.rank() != 2) throw DomainError("scenario shapes must have two axes");
  const Group G = Group::vector_space(2, n);
  const std::uint32_t cosets = std::uint32_t{1} << (n - subgroup_dim);
  CounterRng rng(seed, 1);
  std::vector<char> chosen(cosets);
  for (std::uint32_t c = 0; c < cosets; ++c) chosen[c] = rng.bernoulli(lambda);
  // At least one coset so the density is positive.
  if (std::find(chosen.begin(), chosen.end(), 1) == chosen.end()) chosen[0] = 1;
  DirectSumScenario out;
  out.set = GroupSet::where(G, [&](std::uint32_t x) { return chosen[x >> subgroup_dim] != 0; });
  out.subgroup_dim = subgroup_dim;
  out.lambda = lambda;
  out.seed = seed;
  out.low = low;
  out.high = high;
  out.eps_low = uniformity_epsilon(out.set, low[0], low[1]);
  out.eps_high = uniformity_epsilon(out.set, high[0], high[1]);
  out.ratio = out.eps_low > 0.0 ? out.eps_high / out.eps_low : (out.eps_high > 0.0 ? INFINITY : 0.0);
  const double delta = out.set.density_real();
  out.dense_regime = delta * delta >= 2.0 * std::ldexp(1.0, static_cast<int>(subgroup_dim) - static_cast<int>(n));

  auto& r = out.separation;
  r.id = "scenario_direct_sum";
  r.seed = seed;
  r.instance = {{"group", G.spec()}, {"subgroup_dim", std::to_string(subgroup_dim)},
                {"lambda", format_double(lambda)}, {"low", low.str()}, {"high", high.str()}};
  detail::settle_float(r, out.eps_low, out.eps_high, false, 0.0);
  r.hypothesis = out.dense_regime;
  r.info = {{"ratio", format_double(out.ratio)}, {"delta", format_double(delta)}};
  return out;
}

/// A = (H \ Λ) ⊔ Λ with |H| = beta N and Λ Bernoulli(lambda) on G; compares measured
/// E^k_2-uniformity (k the even rounding of log2(2/beta)) with eps / (2 delta).
inline RemovalScenario scenario_removal(unsigned n, double beta, double lambda, std::uint64_t seed) {
  if (n < 2 || n > 20) throw DomainError("removal scenario needs 2 <= n <= 20");
  const double hd = std::log2(beta) + n;
  if (!(beta > 0.0) || beta > 1.0 || std::abs(hd - std::round(hd)) > 1e-12 || hd < 0)
    throw DomainError("beta must be 2^-m with m <= n");
  if (!(lambda > 0.0) || lambda >= 1.0) throw DomainError("lambda must lie in (0, 1)");
  const Group G = Group::vector_space(2, n);
  const GroupSet H = low_subgroup(G, static_cast<unsigned>(std::lround(hd)));
  CounterRng rng(seed, 2);
  GroupSet lam = GroupSet::where(G, [&](std::uint32_t) { return rng.bernoulli(lambda); });
  RemovalScenario out;
  out.set = H | lam;
  out.beta = beta;
  out.lambda = lambda;
  out.seed = seed;
  const double L = cal_L(beta);
  out.k = std::max(2U, 2U * static_cast<unsigned>(std::ceil(L / 2.0 - 1e-12)));
  out.eta = uniformity_epsilon(out.set, out.k, 2);
  out.eps = static_cast<double>((H - lam).size()) / static_cast<double>(out.set.size());
  out.delta = out.set.density_real();
  out.prediction = out.eps / (2.0 * out.delta);
  out.beta_le_delta = beta <= lam.density_real();

  auto& r = out.comparison;
  r.id = "scenario_removal";
  r.seed = seed;
  r.instance = {{"group", G.spec()}, {"beta", format_double(beta)}, {"lambda", format_double(lambda)},
                {"k", std::to_string(out.k)}};
  detail::settle_float(r, out.prediction, out.eta, false, 0.0);
  r.hypothesis = out.beta_le_delta;
  r.info = {{"eta", format_double(out.eta)}, {"eps", format_double(out.eps)}, {"delta", format_double(out.delta)}};
  return out;
}

/// Random set of overall density delta in F_2^n whose intersection with one coset of the
/// codim-`codim` subspace {x : top coordinates zero} has relative density (1 + bias) delta;
/// the other cosets share the remaining mass evenly.  Exact sizes, seeded positions.
inline GroupSet planted_biased_cosets(unsigned n, unsigned codim, double delta, double bias, std::uint64_t seed) {
  if (n < 1 || n > 20 || codim < 1 || codim >= n) throw DomainError("planted cosets need 1 <= codim < n <= 20");
  const Group G = Group::vector_space(2, n);
  const std::uint32_t cell = std::uint32_t{1} << (n - codim);
  const std::uint32_t cosets = std::uint32_t{1} << codim;
  const auto total = static_cast<std::uint64_t>(std::llround(delta * G.size()));
  const auto biased = static_cast<std::uint64_t>(std::llround((1.0 + bias) * delta * cell));
  if (biased > cell || biased > total || total - biased > std::uint64_t{cell} * (cosets - 1))
    throw DomainError("planted coset densities out of range");
  std::vector<std::uint32_t> idx;
  CounterRng rng(seed, 3);
  for (std::uint32_t c = 0; c < cosets; ++c) {
    const std::uint64_t rest = total - biased;
    const std::uint64_t want =
        c == 0 ? biased : rest / (cosets - 1) + ((c - 1) < rest % (cosets - 1) ? 1 : 0);
    // Partial Fisher-Yates over the coset.
    std::vector<std::uint32_t> pts(cell);
    std::iota(pts.begin(), pts.end(), c * cell);
    for (std::uint64_t i = 0; i < want; ++i) {
      const auto j = i + rng.below(cell - i);
      std::swap(pts[i], pts[j]);
      idx.push_back(pts[i]);
    }
  }
  return GroupSet::from_indices(G, std::span<const std::uint32_t>(idx));
}

}  // namespace hen
