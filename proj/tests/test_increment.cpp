#include "catch_amalgamated.hpp"

#include "hen/hen.hpp"

using namespace hen;

namespace {

const Group f24 = Group::vector_space(2, 4);

Subspace span_of(const Group& g, std::initializer_list<std::uint32_t> xs) {
  const std::vector<std::uint32_t> v(xs);
  return Subspace::span(g, std::span<const std::uint32_t>(v));
}

}  // namespace

TEST_CASE("subspace row reduction") {
  const auto v = span_of(f24, {0b0011, 0b0101, 0b0110});
  CHECK(v.dim() == 2);
  CHECK(v.codim() == 2);
  CHECK(v.size() == 4);
  CHECK(v.contains(0b0110));
  CHECK_FALSE(v.contains(0b0001));
  CHECK(v.as_set() == GroupSet::from_indices(f24, {0, 0b0011, 0b0101, 0b0110}));
  CHECK(v.coset_representatives().size() == 4);
  CHECK(Subspace::whole(f24).dim() == 4);
  CHECK(Subspace::zero(f24).size() == 1);

  const Group f32 = Group::vector_space(3, 2);
  const auto w = span_of(f32, {f32.index(std::vector<std::uint32_t>{1, 2})});
  CHECK(w.contains(f32.index(std::vector<std::uint32_t>{2, 1})));
  CHECK(w.dim() == 1);
  CHECK_THROWS_AS(Subspace::whole(Group::cyclic(4)), DomainError);
}

TEST_CASE("annihilator and intersection") {
  const auto v = span_of(f24, {0b0011, 0b0101});
  const auto ann = v.annihilator();
  CHECK(ann.dim() == 2);
  for (auto x : v.elements())
    for (auto r : ann.elements()) CHECK(f24.character_phase({r}, {x}) == 0);
  CHECK(ann.annihilator().as_set() == v.as_set());
  const auto w = span_of(f24, {0b0011, 0b1000});
  CHECK(v.intersect(w).as_set() == GroupSet::from_indices(f24, {0, 0b0011}));
  CHECK(v.intersect(Subspace::whole(f24)).as_set() == v.as_set());
  CHECK(Subspace::zero(f24).annihilator().dim() == 4);
}

TEST_CASE("spectrum examples") {
  const auto h = span_of(f24, {0b0001, 0b0010});
  const auto sh = spec_set(h.as_set(), 0.5);
  CHECK(GroupSet::from_indices(f24, std::span<const std::uint32_t>(sh.characters)) == h.annihilator().as_set());

  const auto sg = spec_set(GroupSet::all(f24), 0.5);
  CHECK(sg.characters == std::vector<std::uint32_t>{0});
  CHECK(spectral_annihilator(sg).dim() == 4);

  const auto s1 = spec_set(GroupSet::from_indices(f24, {5}), 1.0);
  CHECK(s1.characters.size() == 16);
  CHECK(spectral_annihilator(s1).dim() == 0);
  CHECK_THROWS_AS(spec_set(GroupSet::empty(f24), 0.5), DomainError);
}

TEST_CASE("annihilator of a two-dimensional spectrum has codim 2") {
  const Group f26 = Group::vector_space(2, 6);
  const auto h = span_of(f26, {0b000001, 0b000010, 0b000100, 0b001000});
  const auto spec = spec_set(h.as_set(), 0.5);
  CHECK(spec.characters.size() == 4);
  const auto v = spectral_annihilator(spec);
  CHECK(v.codim() == 2);
  CHECK(v.as_set() == h.as_set());
}

TEST_CASE("almost periods of a subgroup profile") {
  const Group f25 = Group::vector_space(2, 5);
  const auto h = span_of(f25, {0b00001, 0b00010, 0b00100});
  const auto hs = h.as_set();
  RealFunction ind(f25);
  for (auto x : hs.elements()) ind[x] = 1.0;
  const auto ap = croot_sisask_sample(hs, ind, 2, 0.75, 8, 16, 0);
  CHECK(ap.exhaustive);
  CHECK(ap.shifts.front() == 0);
  CHECK(ap.deviations.front() == 0.0);
  for (auto t : hs.elements()) CHECK(std::find(ap.shifts.begin(), ap.shifts.end(), t) != ap.shifts.end());
  for (std::size_t i = 0; i < ap.shifts.size(); ++i)
    if (h.contains(ap.shifts[i])) CHECK(ap.deviations[i] == 0.0);
  CHECK_THROWS_AS(croot_sisask_sample(hs, ind, 3, 0.75, 8, 16, 0), DomainError);
}

TEST_CASE("BSzG selection on a subgroup") {
  const Group f26 = Group::vector_space(2, 6);
  const auto h = span_of(f26, {0b000001, 0b000010, 0b000100}).as_set();
  const auto r = bszg_select(h, 2, 2, 0.25, 0.25 / 30, 0);
  CHECK(r.energy_condition);
  CHECK(r.any_large);
  CHECK_FALSE(r.b.empty());
  CHECK(r.s_size > 0);
  CHECK(r.z.size() == 2);
  CHECK(r.z[0] == 0);
  CHECK_THROWS_AS(bszg_select(h, 1, 2, 0.25, 0.01), DomainError);
  CHECK_THROWS_AS(bszg_select(h, 2, 2, 0.25, 0.5), DomainError);
}

TEST_CASE("increment step guards") {
  const Group f26 = Group::vector_space(2, 6);
  const auto full = increment_step(GroupSet::all(f26), 2, 2, 0.25);
  CHECK_FALSE(full.success);
  CHECK(full.reason == "set is the whole group");
  CHECK_THROWS_AS(increment_step(GroupSet::from_indices(Group::cyclic(6), {0, 1}), 2, 2, 0.25), DomainError);
  CHECK_THROWS_AS(increment_step(GroupSet::empty(f26), 2, 2, 0.25), DomainError);
}

TEST_CASE("L_q moments") {
  const auto v = span_of(f24, {0b0001, 0b0010});
  CounterRng rng(3, 0);
  const auto a = random_set(f24, 0.5, rng);
  for (const auto& s : lq_moments(a, Subspace::whole(f24), 4)) CHECK(s == 0);

  const auto coset = v.as_set();
  const auto s = lq_moments(coset, v, 4);
  CHECK(s[0] == 0);
  CHECK(s[1] == Rational(3, 16));
  CHECK(smoothed_moment(coset, v, 2) == Rational(1, 4));
  const auto checks = lq_companion_checks(coset, v, 2, 4, Rational(1, 4));
  REQUIRE(checks.size() == 3);
  for (const auto& r : checks) {
    CHECK(r.relation == ">=");
    CHECK(r.holds);
  }
}

TEST_CASE("uniformize terminates immediately on uniform inputs") {
  const Group f28 = Group::vector_space(2, 8);
  const auto full = uniformize(GroupSet::all(f28), 2, 2, 0.25, 16);
  CHECK(full.uniform);
  CHECK(full.trace.empty());
  CHECK(full.density == 1);

  int immediate = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CounterRng rng(seed, 0);
    const auto r = uniformize(random_set(f28, 0.5, rng), 2, 2, 0.5, 16);
    if (r.uniform && r.trace.empty() && r.v.codim() == 0) ++immediate;
  }
  CHECK(immediate >= 18);

  CHECK_THROWS_AS(uniformize(GroupSet::all(Group::cyclic(8)), 2, 2, 0.25, 16), DomainError);
}

TEST_CASE("zero step budget leaves the trace empty") {
  const auto a = planted_biased_cosets(10, 2, 0.25, 0.5, 0);
  const auto r = uniformize(a, 2, 2, 0.25, 0);
  CHECK(r.trace.empty());
  if (!r.uniform) CHECK(r.budget_exhausted);
}

TEST_CASE("uniformize on the planted instance") {
  const auto a = planted_biased_cosets(10, 2, 0.25, 0.5, 0);
  IncrementParams params;
  const auto r = uniformize(a, 2, 2, 0.25, 16, params);
  CHECK(r.trace.size() <= 16);
  CHECK(r.uniform);
  Rational last = a.density();
  for (const auto& s : r.trace) {
    CHECK(s.density_before == last);
    CHECK(s.density_after >= s.density_before);
    if (s.success) CHECK(to_double(s.density_after) >= to_double(s.density_before) * (1 + 0.25 / 8) - 1e-12);
    last = s.density_after;
  }
  CHECK(r.density == last);
  const auto accepted = std::count_if(r.trace.begin(), r.trace.end(), [](const auto& s) { return s.success; });
  CHECK(static_cast<unsigned>(accepted) <= step_limit(0.25, 0.25));
  CHECK(to_double(r.density) >= (1 + 1.0 / 16) * 0.25);

  const auto again = uniformize(a, 2, 2, 0.25, 16, params);
  CHECK(dump_json(to_json(again)).size() > 0);
  CHECK(again.trace.size() == r.trace.size());
  CHECK(again.x == r.x);
  CHECK(again.v == r.v);
  CHECK(again.density == r.density);
}

TEST_CASE("partition of uniform and structured sets") {
  const Group f26 = Group::vector_space(2, 6);
  const auto whole = uniform_partition(GroupSet::all(f26), 2, 2, 0.25, 0.25);
  REQUIRE(whole.cells.size() == 1);
  CHECK(whole.cells[0].v.codim() == 0);
  CHECK(whole.exceptional.empty());

  // Two cosets of a codim-2 subspace: every cell of a refinement along that subspace is full or empty.
  const auto v = span_of(f26, {0b000001, 0b000010, 0b000100, 0b001000});
  const auto a = v.coset(0) | v.coset(0b010000);
  const auto p = uniform_partition(a, 2, 2, 0.25, 0.25);
  CHECK(p.within_budget);
  std::uint64_t covered = 0;
  for (const auto& c : p.cells) covered += c.v.size();
  for (const auto& c : p.exceptional) covered += c.v.size();
  CHECK(covered == f26.size());
  for (const auto& c : p.cells) {
    INFO(c.v.codim() << " " << c.x);
    CHECK((c.uniform || c.density == 1));
  }
  const auto q = uniform_partition(a, 2, 2, 0.25, 0.25);
  CHECK(dump_json(to_json(p)) == dump_json(to_json(q)));
}
