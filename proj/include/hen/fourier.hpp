#pragma once
// Discrete Fourier transform on G:  fhat(r) = sum_x f(x) conj(chi_r(x)).
// Backed by FFTW's multi-dimensional complex DFT; the mixed-radix row-major
// element layout is exactly FFTW's row-major array layout.

#include "hen/group.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <span>
#include <vector>

namespace hen {

using Complex = std::complex<double>;

namespace detail {

inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

inline std::vector<Complex> run_dft(const Group& g, std::span<const Complex> in, int sign) {
  if (in.size() != g.size()) throw GroupMismatch("transform input length does not match group order");
  std::vector<Complex> src(in.begin(), in.end());
  std::vector<Complex> out(g.size());
  std::vector<int> dims(g.factors().begin(), g.factors().end());
  auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
  auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    // Only execution is thread-safe in FFTW; planning must be serialized.
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), src_ptr, out_ptr, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace detail

inline std::vector<Complex> fourier(const Group& g, std::span<const Complex> f) {
  return detail::run_dft(g, f, FFTW_FORWARD);
}

inline std::vector<Complex> fourier(const Group& g, std::span<const double> f) {
  std::vector<Complex> c(f.begin(), f.end());
  return detail::run_dft(g, c, FFTW_FORWARD);
}

/// f(x) = N^{-1} sum_r fhat(r) chi_r(x).
inline std::vector<Complex> inverse_fourier(const Group& g, std::span<const Complex> fhat) {
  auto out = detail::run_dft(g, fhat, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& v : out) v *= scale;
  return out;
}

/// O(N^2) transform straight from the character formula.
inline std::vector<Complex> fourier_direct(const Group& g, std::span<const Complex> f) {
  if (f.size() != g.size()) throw GroupMismatch("transform input length does not match group order");
  const std::uint32_t n = g.order();
  std::vector<Complex> out(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (std::uint32_t x = 0; x < n; ++x) acc += f[x] * std::conj(g.character({r}, {x}));
    out[r] = acc;
  }
  return out;
}

}  // namespace hen
