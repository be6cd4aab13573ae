#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"
#include "oracles.hpp"

#include <fstream>

using namespace hen;

namespace {

const Group z5 = Group::cyclic(5);
const GroupSet a01 = GroupSet::from_indices(z5, {0, 1});

ExactFunction random_integers(const Group& g, CounterRng& rng, int lo = -3, int hi = 3) {
  ExactFunction f(g);
  for (auto& v : f.values()) v = Rational(rng.between(lo, hi));
  return f;
}

}  // namespace

TEST_CASE("energy anchors agree with the box-sum oracle") {
  CHECK(oracle::box_energy(z5, a01.indicator().values(), {2, 2}) == 30);
  CHECK(energy(a01.indicator(), Shape{2, 2}).raw == 30);

  CHECK(energy(GroupSet::all(z5).indicator(), Shape{2, 2}).raw == 625);
  CHECK(energy(GroupSet::all(z5).indicator(), Shape{3, 2}).raw == 3125);

  const Group f22 = Group::vector_space(2, 2);
  const auto h = GroupSet::from_indices(f22, {0, 1});
  CHECK(oracle::box_energy(f22, h.indicator().values(), {2, 2}) == 32);
  CHECK(energy(h.indicator(), Shape{2, 2}).raw == 32);

  CHECK(oracle::box_energy(z5, balanced(a01).values(), {2, 2}) == 14);
  CHECK(energy(balanced(a01), Shape{2, 2}).raw == 14);
  const auto u = uniformity(a01, 2, 2);
  CHECK(u.ratio == Rational(7, 8));
  CHECK(u.epsilon == Catch::Approx(std::pow(7.0 / 8.0, 0.25)).epsilon(1e-15));
}

TEST_CASE("anchors fixture matches the oracle values") {
  // Each frozen value in the fixture is recomputed here by the oracle alone.
  std::ifstream in(HEN_FIXTURES "/anchors.manifest");
  REQUIRE(in);
  const auto entries = parse_manifest(in);
  REQUIRE(entries.size() == 6);
  for (const auto& e : entries) {
    INFO(e.text);
    const Group g = parse_group(e.params.at("group"));
    std::vector<std::uint32_t> elems;
    const auto set = parse_set_list(g, e.params.at("set"));
    elems.assign(set.elements().begin(), set.elements().end());
    if (e.id == "anchor_conv") {
      const auto ind = oracle::indicator(g, elems);
      const auto c = oracle::circ(g, ind, ind);
      std::string joined;
      for (const auto& v : c) joined += (joined.empty() ? "" : ",") + to_string(v);
      CHECK(joined == e.params.at("expect"));
      continue;
    }
    const Shape s = parse_shape(e.params.at("shape"));
    const bool bal = e.id == "anchor_uniformity" || (e.params.count("function") && e.params.at("function") == "balanced");
    Rational value = oracle::box_energy(g, bal ? oracle::balanced(g, elems) : oracle::indicator(g, elems), s.dims());
    if (e.id == "anchor_uniformity") {
      const Rational delta(static_cast<long long>(elems.size()), static_cast<long long>(g.order()));
      value /= ipow(delta, s[0] * s[1]) * Rational(ipow(Integer(g.order()), s[0] + s[1]));
    }
    CHECK(to_string(value) == e.params.at("expect"));
  }
}

TEST_CASE("energies agree with the oracle across shapes and groups") {
  CounterRng rng(21, 0);
  const std::vector<std::vector<unsigned>> shapes{{1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {1, 1, 1}};
  for (const Group& g : {Group::cyclic(4), Group::cyclic(5), Group::vector_space(2, 2), Group({3, 2})}) {
    for (const auto& ks : shapes) {
      unsigned s = 0;
      for (auto k : ks) s += k;
      if (std::pow(g.size(), s) > 2e5) continue;
      const auto f = random_integers(g, rng);
      INFO(g.spec() << " " << Shape(ks).str());
      CHECK(energy_value(f, Shape(ks)) == oracle::box_energy(g, f.values(), ks));
    }
  }
}

TEST_CASE("rational inputs are exact") {
  ExactFunction f(z5);
  f[0] = Rational(1, 2);
  f[3] = Rational(-1, 3);
  f[4] = 2;
  for (const auto& ks : std::vector<std::vector<unsigned>>{{2, 2}, {3, 2}, {2, 3}})
    CHECK(energy_value(f, Shape(ks)) == oracle::box_energy(z5, f.values(), ks));
}

TEST_CASE("all strategies agree exactly") {
  CounterRng rng(4, 0);
  for (const Group& g : {Group::cyclic(6), Group::cyclic(7), Group::vector_space(2, 3)}) {
    for (int trial = 0; trial < 4; ++trial) {
      ExactFunction f = trial % 2 ? random_integers(g, rng) : random_integers(g, rng, 0, 1);
      for (const Shape& s : {Shape{2, 2}, Shape{2, 3}, Shape{3, 2}, Shape{4, 2}, Shape{2, 4}, Shape{3, 3}}) {
        INFO(g.spec() << " " << s.str() << " trial " << trial);
        const Rational ref = energy_value(f, s, Strategy::enumerate);
        for (auto st : {Strategy::dual_swap, Strategy::set_fast, Strategy::corr_fast, Strategy::automatic})
          if (strategy_feasible(f, s, st)) CHECK(energy_value(f, s, st) == ref);
      }
    }
  }
  CHECK_THROWS_AS(energy_value(random_integers(z5, rng), Shape{3, 3}, Strategy::corr_fast), DomainError);
}

TEST_CASE("integer and floating modes agree") {
  CounterRng rng(8, 0);
  const auto f = random_integers(Group::cyclic(9), rng);
  const auto fr = to_real(f);
  for (const Shape& s : {Shape{2, 2}, Shape{3, 2}, Shape{2, 2, 2}}) {
    const double exact = to_double(energy_value(f, s));
    CHECK(energy_value(fr, s) == Catch::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("norms of constants and the normalized norm") {
  const Group z7 = Group::cyclic(7);
  const auto one = ExactFunction::constant(z7, Rational(1));
  const auto rep = energy(one, Shape{2, 2});
  CHECK(rep.raw == ipow(Integer(7), 4));
  CHECK(rep.normalized == 1);
  CHECK(rep.norm == Catch::Approx(1.0));
  CHECK(rep.norm_grade);
  CHECK(energy_norm(one, Shape{2, 2}) == Catch::Approx(7.0));
  CHECK(bar_norm(ExactFunction::constant(z7, Rational(3)), Shape{2, 3}) == Catch::Approx(3.0));
}

TEST_CASE("multi-scalar product") {
  CounterRng rng(9, 0);
  const auto f = random_integers(z5, rng);
  const Shape s{2, 2};
  CHECK(multi_scalar_product(std::vector<ExactFunction>(4, f), s) == energy_value(f, s));
  std::vector<ExactFunction> fam(4, f);
  fam[2] = ExactFunction(z5);
  CHECK(multi_scalar_product(fam, s) == 0);
  std::vector<RealFunction> rf;
  for (int i = 0; i < 4; ++i) rf.push_back(to_real(random_integers(z5, rng)));
  double prod = 1.0;
  for (const auto& g : rf) prod *= energy_norm(g, s);
  CHECK(std::abs(multi_scalar_product(rf, s)) <= prod * (1 + 1e-9));
}

TEST_CASE("uniformity of trivial sets") {
  CHECK(uniformity_epsilon(GroupSet::all(z5), 2, 2) == 0.0);
  CHECK_THROWS_AS(uniformity_epsilon(GroupSet::empty(z5), 2, 2), DomainError);
}

TEST_CASE("Shape parsing and grades") {
  CHECK(parse_shape("2,3").dims() == std::vector<unsigned>{2, 3});
  CHECK(parse_shape("2,2,2").rank() == 3);
  for (const char* bad : {"", "2,", ",2", "a", "0,2", "2;3"}) CHECK_THROWS_AS(parse_shape(bad), std::invalid_argument);
  CHECK(Shape{2, 2}.norm_grade());
  CHECK(Shape{2, 4}.norm_grade());
  CHECK(Shape{2, 2, 2}.norm_grade());
  CHECK(Shape{3, 2}.even_product());
  CHECK_FALSE(Shape{3, 3}.even_product());
}

TEST_CASE("work budget refuses oversize enumerations") {
  const auto saved = limits().work_steps;
  set_work_budget(1000);
  CounterRng rng(1, 0);
  CHECK_THROWS_AS(energy_value(random_integers(Group::cyclic(13), rng), Shape{3, 3}, Strategy::enumerate),
                  BudgetError);
  set_work_budget(saved);
}
