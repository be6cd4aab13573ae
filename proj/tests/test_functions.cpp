#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"
#include "oracles.hpp"

using namespace hen;

namespace {

std::vector<Rational> values_of(const ExactFunction& f) { return f.values(); }

const Group z5 = Group::cyclic(5);
const GroupSet a01 = GroupSet::from_indices(z5, {0, 1});

}  // namespace

TEST_CASE("balanced function and normalized indicator") {
  CHECK(balanced(GroupSet::all(z5)).is_zero());
  CHECK(balanced(GroupSet::empty(z5)).is_zero());
  const std::vector<Rational> fa{Rational(3, 5), Rational(3, 5), Rational(-2, 5), Rational(-2, 5), Rational(-2, 5)};
  CHECK(balanced(a01).values() == fa);

  const Group z3 = Group::cyclic(3), z4 = Group::cyclic(4);
  CHECK(mu(GroupSet::from_indices(z3, {0})).values() == std::vector<Rational>{1, 0, 0});
  CHECK(mu(GroupSet::all(z4)).values() == std::vector<Rational>(4, Rational(1, 4)));
  const std::vector<Rational> m01{Rational(1, 2), Rational(1, 2), 0, 0, 0};
  CHECK(mu(a01).values() == m01);
}

TEST_CASE("convolutions match the definitional oracle") {
  const auto ind = a01.indicator();
  const auto c = convolve(ind, ind, ConvKind::circ);
  CHECK(c.values() == oracle::circ(z5, values_of(ind), values_of(ind)));
  CHECK(c.values() == std::vector<Rational>{2, 1, 0, 0, 1});

  CounterRng rng(11, 0);
  for (const Group& g : {Group::cyclic(7), Group::cyclic(12), Group::vector_space(2, 3), Group({4, 2})}) {
    INFO(g.spec());
    ExactFunction f(g), h(g);
    for (auto& v : f.values()) v = Rational(rng.between(-3, 3));
    for (auto& v : h.values()) v = Rational(rng.between(-3, 3));
    CHECK(convolve(f, h, ConvKind::star).values() == oracle::star(g, f.values(), h.values()));
    CHECK(convolve(f, h, ConvKind::circ).values() == oracle::circ(g, f.values(), h.values()));
    // (f o g)(x) = (g o f)(-x) and f * g = g * f.
    const auto fg = convolve(f, h, ConvKind::circ), gf = convolve(h, f, ConvKind::circ);
    for (std::uint32_t x = 0; x < g.order(); ++x) CHECK(fg[x] == gf[g.neg(x)]);
    CHECK(convolve(f, h, ConvKind::star) == convolve(h, f, ConvKind::star));
  }
}

TEST_CASE("point masses convolve to point masses") {
  const Group g({3, 4});
  for (std::uint32_t a = 0; a < g.order(); a += 5)
    for (std::uint32_t b = 0; b < g.order(); b += 3)
      CHECK(convolve(ExactFunction::delta(g, a), ExactFunction::delta(g, b), ConvKind::star) ==
            ExactFunction::delta(g, g.add(a, b)));
}

TEST_CASE("transform convolution agrees with the definitional path") {
  CounterRng rng(5, 0);
  for (const Group& g : {Group::cyclic(16), Group::cyclic(15), Group::vector_space(2, 5), Group::cyclic(17)}) {
    INFO(g.spec());
    RealFunction f(g), h(g);
    for (auto& v : f.values()) v = rng.uniform(-1, 1);
    for (auto& v : h.values()) v = rng.uniform(-1, 1);
    for (auto kind : {ConvKind::star, ConvKind::circ}) {
      const auto slow = convolve(f, h, kind), fast = fast_convolve(f, h, kind);
      for (std::uint32_t x = 0; x < g.order(); ++x)
        CHECK(std::abs(slow[x] - fast[x]) <= 1e-9 * std::max(1.0, std::abs(slow[x])));
    }
  }
  const Group z4 = Group::cyclic(4), z5g = Group::cyclic(5);
  CHECK_THROWS_AS(convolve(ExactFunction(z4), ExactFunction(z5g), ConvKind::star), GroupMismatch);
}

TEST_CASE("generalized convolution") {
  const Group z6 = Group::cyclic(6);
  const auto c = generalized_conv(ExactFunction::constant(z6, Rational(3)), 2);
  for (const auto& v : c.values()) CHECK(v == 9 * 6);

  const auto ind = a01.indicator();
  const auto c2 = generalized_conv(ind, 2);
  const auto circ = oracle::circ(z5, ind.values(), ind.values());
  for (std::uint32_t x1 = 0; x1 < 5; ++x1)
    for (std::uint32_t x2 = 0; x2 < 5; ++x2) CHECK(c2.at({x1, x2}) == circ[z5.sub(x2, x1)]);
  CHECK(c2.at({0, 0}) == 2);
  CHECK(c2.at({0, 2}) == 0);

  CounterRng rng(1, 0);
  ExactFunction f(z5);
  for (auto& v : f.values()) v = Rational(rng.between(-2, 2));
  const auto c1 = generalized_conv(f, 1);
  for (const auto& v : c1.values()) CHECK(v == f.sum());

  // Triple-loop oracle at arity 3.
  const auto c3 = generalized_conv(f, 3);
  for (std::size_t idx = 0; idx < c3.size(); ++idx) {
    const auto x = c3.unflat(idx);
    Rational acc = 0;
    for (std::uint32_t z = 0; z < 5; ++z) acc += f[z5.add(z, x[0])] * f[z5.add(z, x[1])] * f[z5.add(z, x[2])];
    CHECK(c3[idx] == acc);
  }
}

TEST_CASE("reduced convolution pins the first coordinate") {
  const Group z7 = Group::cyclic(7);
  const auto r = reduced_conv(ExactFunction::constant(z7, Rational(1)), 3);
  for (const auto& v : r.values()) CHECK(v == 7);
  CounterRng rng(2, 0);
  ExactFunction f(z7);
  for (auto& v : f.values()) v = Rational(rng.between(-2, 2));
  const auto full = generalized_conv(f, 3), red = reduced_conv(f, 3);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) CHECK(red.at({a, b}) == full.at({0, a, b}));
}

TEST_CASE("shifted intersections") {
  CHECK(shifted_intersection(a01, std::span<const std::uint32_t>{}) == a01);
  const std::vector<std::uint32_t> one{1};
  CHECK(shifted_intersection(a01, one) == GroupSet::from_indices(z5, {0}));
  const Group f23 = Group::vector_space(2, 3);
  const auto h = GroupSet::from_indices(f23, {0, 1, 2, 3});
  const std::vector<std::uint32_t> z{1, 3};
  CHECK(shifted_intersection(h, z) == h);
}

TEST_CASE("Minkowski index") {
  const std::vector<std::uint32_t> x0{0}, y00{0, 0}, x12{1, 2}, y3{3}, x01{0, 1}, y02{0, 2};
  CHECK(minkowski_index(z5, x0, y00) == std::vector<std::uint32_t>{0, 0});
  CHECK(minkowski_index(z5, x12, y3) == std::vector<std::uint32_t>{4, 0});
  CHECK(minkowski_index(z5, x01, y02) == std::vector<std::uint32_t>{0, 2, 1, 3});
}

TEST_CASE("tensor budget is enforced") {
  const auto saved = limits().tensor_entries;
  set_tensor_budget(100);
  CHECK_THROWS_AS(generalized_conv(ExactFunction(Group::cyclic(11)), 2), BudgetError);
  set_tensor_budget(saved);
}
