#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"
#include "oracles.hpp"

using namespace hen;

namespace {

std::vector<Group> small_groups() {
  std::vector<Group> out;
  for (std::uint32_t m = 2; m <= 16; ++m) out.push_back(Group::cyclic(m));
  for (std::uint32_t n = 1; n <= 6; ++n) out.push_back(Group::vector_space(2, n));
  out.push_back(Group::vector_space(3, 2));
  out.push_back(Group::vector_space(3, 3));
  out.push_back(Group::vector_space(5, 2));
  out.push_back(Group({4, 2}));
  out.push_back(Group({2, 4}));
  out.push_back(Group({3, 4, 2}));
  out.push_back(Group({6, 6}));
  return out;
}

}  // namespace

TEST_CASE("make_group computes order and kind") {
  const auto z5 = make_group({5});
  CHECK(z5.size() == 5);
  CHECK(z5.kind() == GroupKind::cyclic);
  const auto f23 = make_group({2, 2, 2});
  CHECK(f23.size() == 8);
  CHECK(f23.kind() == GroupKind::vector_space);
  const auto mixed = make_group({4, 2});
  CHECK(mixed.size() == 8);
  CHECK(mixed.kind() == GroupKind::product);
  CHECK_THROWS_AS(make_group({1}), DomainError);
  CHECK_THROWS_AS(make_group({4, 4}, GroupKind::vector_space), DomainError);
  CHECK_THROWS_AS(make_group({3, 2}, GroupKind::vector_space), DomainError);
  CHECK_THROWS_AS(Group::vector_space(6, 2), DomainError);
}

TEST_CASE("group spec strings parse and print canonically") {
  CHECK(parse_group("Z5").spec() == "Z5");
  CHECK(parse_group("f2^3").spec() == "F2^3");
  CHECK(parse_group("Z4xZ2").spec() == "Z4xZ2");
  CHECK(parse_group("F3").spec() == "Z3");
  CHECK(parse_group("z2xz2") == Group::vector_space(2, 2));
  for (const char* bad : {"", "Z", "Zx", "Q5", "Z5x", "F4^2", "Z1", "F2^-1", "Z 5"})
    CHECK_THROWS_AS(parse_group(bad), std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively for N <= 64") {
  for (const auto& g : small_groups()) {
    if (g.size() > 64) continue;
    INFO(g.spec());
    const std::uint32_t n = g.order();
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) {
      ok = ok && g.add(a, 0) == a && g.add(a, g.neg(a)) == 0 && g.sub(a, a) == 0;
      for (std::uint32_t b = 0; b < n && ok; ++b) {
        ok = ok && g.add(a, b) == g.add(b, a);
        for (std::uint32_t c = 0; c < n && ok; ++c) ok = ok && g.add(g.add(a, b), c) == g.add(a, g.add(b, c));
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("mixed-radix encoding round-trips, first coordinate most significant") {
  const Group g({3, 4, 2});
  for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(g.index(g.coords(x)) == x);
  CHECK(g.coords(1) == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(g.coords(8) == std::vector<std::uint32_t>{1, 0, 0});
  const std::vector<std::uint32_t> bad{3, 0, 0};
  CHECK_THROWS_AS(g.index(bad), DomainError);
}

TEST_CASE("characters are homomorphisms and match the coordinate formula") {
  for (const auto& g : small_groups()) {
    if (g.size() > 64) continue;
    INFO(g.spec());
    const std::uint32_t n = g.order();
    double worst = 0.0;
    for (std::uint32_t r = 0; r < n; ++r) {
      CHECK(std::abs(g.character({0}, {r}) - 1.0) < 1e-12);
      for (std::uint32_t x = 0; x < n; ++x) {
        worst = std::max(worst, std::abs(g.character({r}, {x}) - oracle::character(g, r, x)));
        for (std::uint32_t y = 0; y < n; y += 3) {
          const auto lhs = g.character({r}, {g.add(x, y)});
          const auto rhs = g.character({r}, {x}) * g.character({r}, {y});
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Fourier transform of point mass and constant") {
  const Group z4 = Group::cyclic(4);
  std::vector<Complex> delta0{1, 0, 0, 0}, ones{1, 1, 1, 1};
  const auto a = fourier(z4, delta0);
  for (auto v : a) CHECK(std::abs(v - 1.0) < 1e-12);
  const auto b = fourier(z4, ones);
  CHECK(std::abs(b[0] - 4.0) < 1e-12);
  for (int r = 1; r < 4; ++r) CHECK(std::abs(b[r]) < 1e-12);
}

TEST_CASE("Fourier transform agrees with the character sum, inverts, and satisfies Parseval") {
  CounterRng rng(7, 0);
  for (const auto& g : small_groups()) {
    INFO(g.spec());
    std::vector<Complex> f(g.size());
    for (auto& v : f) v = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto fast = fourier(g, f);
    // Character-sum oracle.
    double worst = 0.0, scale = 0.0;
    for (std::uint32_t r = 0; r < g.order(); ++r) {
      Complex acc = 0;
      for (std::uint32_t x = 0; x < g.order(); ++x) acc += f[x] * std::conj(oracle::character(g, r, x));
      worst = std::max(worst, std::abs(acc - fast[r]));
      scale = std::max(scale, std::abs(acc));
    }
    CHECK(worst <= 1e-12 * std::max(1.0, scale));
    const auto back = inverse_fourier(g, fast);
    double err = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
    CHECK(err < 1e-12);
    double lhs = 0.0, rhs = 0.0;
    for (auto v : f) lhs += std::norm(v);
    for (auto v : fast) rhs += std::norm(v);
    rhs /= static_cast<double>(g.size());
    CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
  }
}

TEST_CASE("Parseval on a random real function on Z/8") {
  const Group z8 = Group::cyclic(8);
  CounterRng rng(3, 0);
  std::vector<double> f(8);
  for (auto& v : f) v = rng.uniform(-1, 1);
  const auto fh = fourier(z8, std::span<const double>(f));
  double lhs = 0.0, rhs = 0.0;
  for (auto v : f) lhs += v * v;
  for (auto v : fh) rhs += std::norm(v);
  CHECK(std::abs(lhs - rhs / 8.0) <= 1e-12 * lhs);
}
