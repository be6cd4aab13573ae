#pragma once
// Convolutions:  (f*g)(x) = sum_y f(y) g(x-y),   (f o g)(x) = sum_y f(y) g(y+x),
// generalized convolutions C_l(f_1..f_l)(x) = sum_z prod_j f_j(z + x_j) and the
// primed variant with the first coordinate pinned to 0.

#include "hen/fourier.hpp"
#include "hen/function.hpp"
#include "hen/parallel.hpp"

#include <span>
#include <vector>

namespace hen {

enum class ConvKind { star, circ };

template <typename T>
DenseFunction<T> convolve(const DenseFunction<T>& f, const DenseFunction<T>& g, ConvKind kind) {
  f.check_same(g);
  const Group& G = f.group();
  DenseFunction<T> out(G);
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    T acc(0);
    for (std::uint32_t y = 0; y < G.order(); ++y) {
      if (f[y] == T(0)) continue;
      const std::uint32_t other = kind == ConvKind::star ? G.sub(x, y) : G.add(y, x);
      acc += f[y] * g[other];
    }
    out[x] = acc;
  }
  return out;
}

/// Largest prime factor of every cyclic order is at most 13.
inline bool has_smooth_order(const Group& g) {
  for (auto m : g.factors()) {
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U})
      while (m % p == 0) m /= p;
    if (m != 1) return false;
  }
  return true;
}

/// Transform path for real inputs on smooth groups, definitional otherwise.
/// Exact inputs always take the definitional path.
template <typename T>
DenseFunction<T> fast_convolve(const DenseFunction<T>& f, const DenseFunction<T>& g, ConvKind kind) {
  f.check_same(g);
  if constexpr (is_exact_v<T>) {
    return convolve(f, g, kind);
  } else {
    const Group& G = f.group();
    if (!has_smooth_order(G) || G.size() < 16) return convolve(f, g, kind);
    auto fh = fourier(G, std::span<const double>(f.values()));
    auto gh = fourier(G, std::span<const double>(g.values()));
    for (std::size_t r = 0; r < fh.size(); ++r) fh[r] = (kind == ConvKind::star ? fh[r] : std::conj(fh[r])) * gh[r];
    auto back = inverse_fourier(G, fh);
    DenseFunction<T> out(G);
    for (std::size_t x = 0; x < back.size(); ++x) out[static_cast<std::uint32_t>(x)] = back[x].real();
    return out;
  }
}

template <typename T>
TensorFunction<T> generalized_conv(std::span<const DenseFunction<T>> fs) {
  if (fs.empty()) throw DomainError("generalized convolution needs at least one function");
  for (const auto& f : fs) fs.front().check_same(f);
  const Group& G = fs.front().group();
  const unsigned l = static_cast<unsigned>(fs.size());
  TensorFunction<T> out(G, l);
  const std::uint32_t n = G.order();
  // Each chunk owns a contiguous block of leading indices (x_1..x_{l-1}); the last
  // coordinate is filled by a correlation against the running product.
  const std::uint64_t prefixes = out.size() / n;
  parallel_chunks(prefixes, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
    std::vector<T> prod(n);
    std::vector<std::uint32_t> x(l > 1 ? l - 1 : 0);
    for (std::uint64_t p = b; p < e; ++p) {
      std::uint64_t rest = p;
      for (unsigned i = l - 1; i-- > 0;) {
        x[i] = static_cast<std::uint32_t>(rest % n);
        rest /= n;
      }
      for (std::uint32_t z = 0; z < n; ++z) prod[z] = T(1);
      for (unsigned j = 0; j + 1 < l; ++j) {
        const auto& fj = fs[j].values();
        for (std::uint32_t z = 0; z < n; ++z) prod[z] *= fj[G.add(z, x[j])];
      }
      const auto& fl = fs[l - 1].values();
      for (std::uint32_t xl = 0; xl < n; ++xl) {
        T acc(0);
        for (std::uint32_t z = 0; z < n; ++z) acc += prod[z] * fl[G.add(z, xl)];
        out[p * n + xl] = acc;
      }
    }
  });
  return out;
}

template <typename T>
TensorFunction<T> generalized_conv(const DenseFunction<T>& f, unsigned l) {
  std::vector<DenseFunction<T>> fs(l, f);
  return generalized_conv<T>(std::span<const DenseFunction<T>>(fs));
}

/// C'_l(f)(x_1..x_{l-1}) = sum_z f(z) f(z+x_1) ... f(z+x_{l-1}) = C_l(f)(0, x_1, ..., x_{l-1}).
template <typename T>
TensorFunction<T> reduced_conv(const DenseFunction<T>& f, unsigned l) {
  if (l < 2) throw DomainError("primed convolution needs arity >= 2");
  const Group& G = f.group();
  const std::uint32_t n = G.order();
  TensorFunction<T> out(G, l - 1);
  const std::uint64_t prefixes = out.size() / n;
  parallel_chunks(prefixes, [&](std::uint64_t b, std::uint64_t e, std::uint64_t) {
    std::vector<T> prod(n);
    std::vector<std::uint32_t> x(l - 2);
    for (std::uint64_t p = b; p < e; ++p) {
      std::uint64_t rest = p;
      for (unsigned i = l - 2; i-- > 0;) {
        x[i] = static_cast<std::uint32_t>(rest % n);
        rest /= n;
      }
      for (std::uint32_t z = 0; z < n; ++z) prod[z] = f[z];
      for (unsigned j = 0; j + 2 < l; ++j)
        for (std::uint32_t z = 0; z < n; ++z) prod[z] *= f[G.add(z, x[j])];
      for (std::uint32_t xl = 0; xl < n; ++xl) {
        T acc(0);
        for (std::uint32_t z = 0; z < n; ++z) acc += prod[z] * f[G.add(z, xl)];
        out[p * n + xl] = acc;
      }
    }
  });
  return out;
}

/// A_z = A  ∩ (A - z_1) ∩ ... ∩ (A - z_m).
inline GroupSet shifted_intersection(const GroupSet& a, std::span<const Element> z) {
  GroupSet out = a;
  for (auto zi : z) out = out & a.minus(zi.index);
  return out;
}

inline GroupSet shifted_intersection(const GroupSet& a, std::span<const std::uint32_t> z) {
  GroupSet out = a;
  for (auto zi : z) out = out & a.minus(zi);
  return out;
}

/// x ⊕ y = (x_i + y_j) in (i, j) lexicographic order.
inline std::vector<std::uint32_t> minkowski_index(const Group& g, std::span<const std::uint32_t> x,
                                                  std::span<const std::uint32_t> y) {
  std::vector<std::uint32_t> out;
  out.reserve(x.size() * y.size());
  for (auto xi : x)
    for (auto yj : y) out.push_back(g.add(xi, yj));
  return out;
}

inline std::vector<std::uint32_t> minkowski_index(const Group& g, std::span<const std::uint32_t> x,
                                                  std::span<const std::uint32_t> y,
                                                  std::span<const std::uint32_t> z) {
  const auto xy = minkowski_index(g, x, y);
  return minkowski_index(g, xy, z);
}

}  // namespace hen
