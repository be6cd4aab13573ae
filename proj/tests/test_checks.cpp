#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"
#include "oracles.hpp"

using namespace hen;

namespace {

const Group z5 = Group::cyclic(5);
const Group z7 = Group::cyclic(7);

}  // namespace

TEST_CASE("cal_L") {
  CHECK(cal_L(1.0) == 1.0);
  CHECK(cal_L(0.5) == 2.0);
  CHECK(cal_L(0.125) == 4.0);
  CHECK_THROWS_AS(cal_L(0.0), DomainError);
  CHECK_THROWS_AS(cal_L(1.5), DomainError);
}

TEST_CASE("uniformity bound") {
  CounterRng rng(1, 0);
  const std::vector<GroupSet> two{random_set(z7, 0.5, rng), random_set(z7, 0.5, rng)};
  auto r = check_uniformity_bound(two, ExactFunction(z7), 2);
  CHECK(r.holds);
  CHECK(r.lhs_value == 0.0);
  CHECK(r.rhs_value == 0.0);
  CHECK(r.margin == 0.0);

  const std::vector<GroupSet> full{GroupSet::all(z7), GroupSet::all(z7)};
  r = check_uniformity_bound(full, random_set(z7, 0.5, rng).indicator(), 2);
  CHECK(r.holds);
  CHECK(r.lhs_value == 0.0);

  const auto b = random_set(z7, 0.5, rng);
  r = check_uniformity_bound(two, b.indicator(), 2);
  CHECK(r.holds);

  const std::vector<GroupSet> three{two[0], two[1], two[0]};
  CHECK_THROWS_AS(check_uniformity_bound(three, b.indicator(), 2), DomainError);
  CHECK_THROWS_AS(check_uniformity_bound(two, b.indicator(), 3), DomainError);
}

TEST_CASE("circ moment") {
  const Group z11 = Group::cyclic(11);
  CounterRng rng(2, 0);
  const auto b = random_set(z11, 0.4, rng);
  auto r = check_circ_moment(GroupSet::all(z11), b, 2);
  CHECK(r.holds);
  CHECK(r.lhs_value == Catch::Approx(std::pow(b.size(), 2) * 11));

  const auto a = random_set(z11, 0.5, rng);
  r = check_circ_moment(a, GroupSet::from_indices(z11, {3}), 2);
  CHECK(r.lhs_value == static_cast<double>(a.size()));
  CHECK(r.holds);

  r = check_circ_moment(a, b, 2);
  if (r.hypothesis) CHECK(r.holds);
  CHECK_THROWS_AS(check_circ_moment(GroupSet::empty(z11), b, 2), DomainError);
}

TEST_CASE("dispersion") {
  const Group f24 = Group::vector_space(2, 4);
  const std::vector<GroupSet> full{GroupSet::all(f24), GroupSet::all(f24)};
  auto r = check_dispersion(full, 2);
  CHECK(r.holds);
  CHECK(r.lhs_value == 0.0);

  CounterRng rng(3, 0);
  const std::vector<GroupSet> half{random_set(f24, 0.5, rng), random_set(f24, 0.5, rng)};
  CHECK(check_dispersion(half, 2).holds);

  const auto h = GroupSet::from_indices(f24, {0, 1, 2, 3});
  r = check_dispersion({h, h}, 2);
  CHECK_FALSE(r.hypothesis);
  CHECK_THROWS_AS(check_dispersion({h, h, h}, 2), DomainError);
}

TEST_CASE("E to D transfer") {
  const Group z13 = Group::cyclic(13);
  auto r = check_e_to_d(GroupSet::all(z13), 5, 2, 2, 8);
  CHECK(r.holds);
  CounterRng rng(4, 0);
  r = check_e_to_d(random_set(z13, 0.5, rng), 5, 2, 2, 8);
  CHECK(r.holds);
  const Group f25 = Group::vector_space(2, 5);
  r = check_e_to_d(GroupSet::from_indices(f25, {0, 1, 2, 3}), 5, 2, 2, 8);
  CHECK(r.holds);
  const auto witness = std::find_if(r.info.begin(), r.info.end(), [](auto& kv) { return kv.first == "witness_k1"; });
  REQUIRE(witness != r.info.end());
  CHECK(witness->second != "none");
  CHECK_THROWS_AS(check_e_to_d(GroupSet::all(z13), 4, 2, 2, 8), DomainError);
}

TEST_CASE("counting bound for four linear forms") {
  const std::vector<LinearForm> ap4{{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}};
  const std::vector<ExactFunction> ones(4, ExactFunction::constant(z5, Rational(1)));
  auto r = check_counting(ones, ap4, 2, 2);
  CHECK(r.lhs_value == 25.0);
  CHECK(r.holds);
  CHECK(r.margin == 0.0);

  auto zeros = ones;
  zeros[2] = ExactFunction(z5);
  r = check_counting(zeros, ap4, 2, 2);
  CHECK(r.holds);
  CHECK(r.lhs_value == 0.0);

  CounterRng rng(5, 0);
  std::vector<ExactFunction> pm;
  for (int j = 0; j < 4; ++j) {
    ExactFunction f(z7);
    for (auto& v : f.values()) v = rng.bernoulli(0.5) ? 1 : -1;
    pm.push_back(f);
  }
  CHECK(check_counting(pm, ap4, 2, 2).holds);

  const std::vector<LinearForm> proportional{{1, 0, 0}, {1, 1, 0}, {2, 2, 0}, {1, 3, 0}};
  CHECK_THROWS_AS(check_counting(pm, proportional, 2, 2), DomainError);
  const std::vector<ExactFunction> on_z6(4, ExactFunction::constant(Group::cyclic(6), Rational(1)));
  CHECK_THROWS_AS(check_counting(on_z6, ap4, 2, 2), DomainError);
}

TEST_CASE("general norm axioms") {
  CounterRng rng(6, 0);
  RealFunction f(z5);
  for (auto& v : f.values()) v = rng.uniform(-1, 1);
  // Homogeneity witness: ||2f|| = 2||f||.
  const auto t = check_triangle(f, f, Shape{2, 2});
  CHECK(t.holds);
  CHECK(t.lhs_value == Catch::Approx(t.rhs_value).epsilon(1e-12));

  RealFunction g(z5);
  for (auto& v : g.values()) v = rng.uniform(-1, 1);
  const auto m = check_monotonicity(f, Shape{2, 2}, Shape{2, 4});
  CHECK(m.holds);
  for (const auto& r : check_general_norm_axioms(Shape{2, 2}, f, g)) {
    INFO(r.id);
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(check_triangle(f, g, Shape{2, 3}), DomainError);

  // Zero characterization on random integer functions under the parity hypothesis.
  for (int i = 0; i < 20; ++i) {
    ExactFunction h(z5);
    for (auto& v : h.values()) v = Rational(rng.between(-2, 2));
    const auto r = check_zero_characterization(h, Shape{2, 2});
    CHECK(r.hypothesis);
    CHECK(r.holds);
  }
}

TEST_CASE("exact identities") {
  CounterRng rng(7, 0);
  ExactFunction f(z5);
  for (auto& v : f.values()) v = Rational(rng.between(-3, 3));
  CHECK(check_expectation_identity(f, 2, 1).holds);
  CHECK(check_inductive_identity(f, Shape{2, 3}).holds);
  CHECK(check_reduction_sum(f, 2, 2, 2).holds);
  CHECK(check_diagonal_symmetry(f, 3).holds);
  const std::vector<std::uint32_t> x{1, 4}, y{2, 0, 3};
  CHECK(check_reduction_identity(f, x, y).holds);
  CHECK(check_two_sided_symmetry(f, x, y, 2, 3).holds);
  for (const auto& r : {check_expectation_identity(f, 2, 1), check_reduction_sum(f, 2, 2, 2)}) {
    CHECK(r.identity);
    CHECK(r.exact);
    CHECK(r.margin == 0.0);
  }
}

TEST_CASE("Hoelder chain") {
  CounterRng rng(8, 0);
  ExactFunction f(z7);
  for (auto& v : f.values()) v = Rational(rng.between(0, 3));
  const auto r = check_holder(f, 3, 2);
  CHECK(r.hypothesis);
  CHECK(r.holds);
  f[0] = -1;
  CHECK_FALSE(check_holder(f, 3, 2).hypothesis);
}

TEST_CASE("corrupted right-hand side fails") {
  CounterRng rng(9, 0);
  ExactFunction f(z5);
  for (auto& v : f.values()) v = Rational(rng.between(-3, 3));
  auto r = check_expectation_identity(f, 1, 2);
  REQUIRE(r.holds);
  corrupt_rhs(r, Rational(1));
  CHECK_FALSE(r.holds);
}

TEST_CASE("planted scenarios") {
  const auto whole = scenario_direct_sum(6, 6, 0.5, 0);
  CHECK(whole.set.size() == 64);
  CHECK(whole.eps_low == 0.0);
  CHECK(whole.eps_high == 0.0);
  CHECK_THROWS_AS(scenario_direct_sum(6, 7, 0.5, 0), DomainError);
  CHECK_THROWS_AS(scenario_removal(6, 0.3, 0.5, 0), DomainError);

  const auto a = planted_biased_cosets(10, 2, 0.25, 0.5, 0);
  CHECK(a.size() == 256);
  std::size_t low = 0;
  for (auto x : a.elements()) low += x < 256;
  CHECK(low == 96);
  CHECK(planted_biased_cosets(10, 2, 0.25, 0.5, 0) == a);
  CHECK_FALSE(planted_biased_cosets(10, 2, 0.25, 0.5, 1) == a);
}

TEST_CASE("suite manifest parsing") {
  const auto entries = parse_manifest("# comment\n\nduality count=2 k=2,3\n  anchor_energy group=Z5 set=0,1 expect=30\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].id == "duality");
  CHECK(entries[0].params.at("k") == "2,3");
  CHECK(entries[1].line == 4);
  CHECK_THROWS_AS(parse_manifest("duality count"), ParseError);
  CHECK_THROWS_AS(parse_manifest("duality count=1 count=2"), ParseError);
  CHECK_THROWS_AS(run_manifest(parse_manifest("nonsense"), 0), ParseError);
  CHECK_THROWS_AS(run_manifest(parse_manifest("duality colour=red"), 0), ParseError);
  CHECK(run_manifest(parse_manifest(""), 0).reports.empty());

  const auto res = run_manifest(parse_manifest("duality groups=Z4 count=2 k=2,3"), 5);
  CHECK(res.ok());
  CHECK(res.reports.size() == 8);
  for (const auto& r : res.reports) CHECK(r.seed == 5);
  const auto again = run_manifest(parse_manifest("duality groups=Z4 count=2 k=2,3"), 5);
  for (std::size_t i = 0; i < res.reports.size(); ++i) CHECK(dump_json(to_json(res.reports[i])) == dump_json(to_json(again.reports[i])));

  const auto bad = run_manifest(parse_manifest("anchor_energy group=Z5 set=0,1 shape=2,2 expect=31"), 0);
  CHECK_FALSE(bad.ok());
  CHECK(bad.failing == std::vector<std::string>{"anchor_energy"});
}

TEST_CASE("default manifest holds") {
  const auto res = run_manifest(parse_manifest(default_manifest()), 1);
  for (const auto& r : res.reports)
    if (is_failure(r)) FAIL_CHECK(dump_json(to_json(r)));
  CHECK(res.ok());
  CHECK(res.reports.size() > 500);
}
