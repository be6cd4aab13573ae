#pragma once
// Manifest-driven check runner.  A manifest is a text file with one check per line,
// "check_id key=value ...", '#' comments and blank lines ignored.  Each line expands into
// seeded random instances; every instance yields one or more CheckReports.

#include "hen/checks.hpp"
#include "hen/increment.hpp"
#include "hen/io.hpp"
#include "hen/rng.hpp"
#include "hen/scenarios.hpp"

#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hen {

struct ManifestEntry {
  std::string id;
  std::map<std::string, std::string> params;
  std::size_t line = 0;
  std::string text;  // the whole line; its hash seeds the entry's instance stream
};

inline std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream words{std::string(t)};
    ManifestEntry e;
    e.line = no;
    e.text = std::string(t);
    words >> e.id;
    std::string kv;
    while (words >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("manifest line " + std::to_string(no) + ": expected key=value, got '" + kv + "'");
      const auto key = kv.substr(0, eq);
      if (!e.params.emplace(key, kv.substr(eq + 1)).second)
        throw ParseError("manifest line " + std::to_string(no) + ": duplicate key '" + key + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_manifest(in);
}

/// Typed access to an entry's parameters; unknown keys are rejected by finish().
class EntryParams {
 public:
  explicit EntryParams(const ManifestEntry& e) : e_(e) {}

  bool has(const std::string& key) const { return e_.params.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    const auto it = e_.params.find(key);
    return it == e_.params.end() ? fallback : it->second;
  }
  unsigned uint(const std::string& key, unsigned fallback) {
    if (!has(key)) return used_.insert(key), fallback;
    return static_cast<unsigned>(wrap([&] { return detail::parse_uint(text(key, ""), key); }));
  }
  double real(const std::string& key, double fallback) {
    if (!has(key)) return used_.insert(key), fallback;
    return wrap([&] { return to_double(parse_rational_or_decimal(text(key, ""))); });
  }
  Rational rational(const std::string& key, const Rational& fallback) {
    if (!has(key)) return used_.insert(key), fallback;
    return wrap([&] { return parse_rational_or_decimal(text(key, "")); });
  }
  std::vector<unsigned> uints(const std::string& key, const std::string& fallback) {
    const auto s = text(key, fallback);
    return wrap([&] {
      std::vector<unsigned> out;
      for (auto part : detail::split(s, ',')) out.push_back(static_cast<unsigned>(detail::parse_uint(part, key)));
      return out;
    });
  }
  std::vector<Group> groups(const std::string& key, const std::string& fallback) {
    const auto s = text(key, fallback);
    return wrap([&] {
      std::vector<Group> out;
      for (auto part : detail::split(s, ';')) out.push_back(parse_group(part));
      return out;
    });
  }
  std::vector<Shape> shapes(const std::string& key, const std::string& fallback) {
    const auto s = text(key, fallback);
    return wrap([&] {
      std::vector<Shape> out;
      for (auto part : detail::split(s, ';')) out.push_back(parse_shape(part));
      return out;
    });
  }
  /// Lists of integer tuples separated by ';', e.g. "1,2;2,2".
  std::vector<std::vector<std::int64_t>> tuples(const std::string& key, const std::string& fallback) {
    const auto s = text(key, fallback);
    return wrap([&] {
      std::vector<std::vector<std::int64_t>> out;
      for (auto part : detail::split(s, ';')) {
        std::vector<std::int64_t> t;
        for (auto v : detail::split(part, ',')) {
          std::int64_t x = 0;
          const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
          if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
            throw ParseError("malformed integer '" + std::string(v) + "' in " + key);
          t.push_back(x);
        }
        out.push_back(std::move(t));
      }
      return out;
    });
  }

  void finish() const {
    for (const auto& [k, v] : e_.params)
      if (!used_.count(k))
        throw ParseError("manifest line " + std::to_string(e_.line) + ": unknown key '" + k + "' for " + e_.id);
  }

 private:
  static Rational parse_rational_or_decimal(std::string_view s) {
    if (s.find('.') == std::string_view::npos && s.find('e') == std::string_view::npos) return parse_rational(s);
    return exact_from_double(std::stod(std::string(s)));
  }
  template <typename F>
  auto wrap(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const std::invalid_argument& ex) {
      throw ParseError("manifest line " + std::to_string(e_.line) + ": " + ex.what());
    }
  }

  const ManifestEntry& e_;
  std::set<std::string> used_;
};

// ---------------------------------------------------------------------------
// Random instances.

inline ExactFunction random_integer_function(const Group& g, std::int64_t lo, std::int64_t hi, CounterRng& rng) {
  ExactFunction f(g);
  for (auto& v : f.values()) v = Rational(rng.between(lo, hi));
  return f;
}

inline RealFunction random_real_function(const Group& g, CounterRng& rng) {
  RealFunction f(g);
  for (auto& v : f.values()) v = rng.uniform(-1.0, 1.0);
  return f;
}

/// Bernoulli(density) subset, never empty.
inline GroupSet random_set(const Group& g, double density, CounterRng& rng) {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (rng.bernoulli(density)) idx.push_back(x);
  if (idx.empty()) idx.push_back(static_cast<std::uint32_t>(rng.below(g.order())));
  return GroupSet::from_indices(g, std::span<const std::uint32_t>(idx));
}

inline std::vector<std::uint32_t> random_tuple(const Group& g, std::size_t len, CounterRng& rng) {
  std::vector<std::uint32_t> t(len);
  for (auto& v : t) v = static_cast<std::uint32_t>(rng.below(g.order()));
  return t;
}

// ---------------------------------------------------------------------------
// Checks that only exist at suite level.

/// E(f; k, l) = E(f; l, k), both by enumeration along the stated axis order.
inline CheckReport check_duality(const ExactFunction& f, unsigned k, unsigned l) {
  CheckReport r;
  r.id = "duality";
  r.instance = {{"group", f.group().spec()}, {"shape", Shape{k, l}.str()}};
  const Rational a = energy_value(f, Shape{k, l}, Strategy::enumerate);
  const Rational b = energy_value(f, Shape{l, k}, Strategy::enumerate);
  detail::settle_exact(r, a, b, true);
  return r;
}

/// Every feasible strategy returns the enumerated value.
inline CheckReport check_strategy_agreement(const ExactFunction& f, const Shape& shape) {
  CheckReport r;
  r.id = "strategy_agreement";
  r.instance = {{"group", f.group().spec()}, {"shape", shape.str()},
                {"indicator", f.is_indicator() ? "true" : "false"}};
  const Rational base = energy_value(f, shape, Strategy::enumerate);
  Rational other = base;
  std::string used = "enumerate";
  for (auto s : {Strategy::dual_swap, Strategy::set_fast, Strategy::corr_fast}) {
    if (!strategy_feasible(f, shape, s)) continue;
    const Rational v = energy_value(f, shape, s);
    used += std::string(",") + std::string(to_string(s));
    if (v != base && other == base) other = v;
  }
  detail::settle_exact(r, base, other, true);
  r.info = {{"strategies", used}};
  r.hypothesis = used.find(',') != std::string::npos;
  return r;
}

/// Compares a computed exact value with a frozen oracle value.
inline CheckReport check_anchor(std::string id, KeyValues instance, const Rational& computed, const Rational& oracle) {
  CheckReport r;
  r.id = std::move(id);
  r.instance = std::move(instance);
  detail::settle_exact(r, computed, oracle, true);
  return r;
}

/// Shifts the right-hand side by `delta` and re-derives the verdict: a deliberately corrupted oracle.
inline void corrupt_rhs(CheckReport& r, const Rational& delta) {
  r.instance.push_back({"corrupt_rhs", to_string(delta)});
  bool parsed = false;
  if (r.exact) {
    try {
      const Rational lhs = parse_rational(r.lhs);
      const Rational rhs = parse_rational(r.rhs) + delta;
      const std::string relation = r.relation;
      if (relation == ">=") {
        detail::settle_exact(r, rhs, lhs, r.identity);
        std::swap(r.lhs, r.rhs);
        std::swap(r.lhs_value, r.rhs_value);
        r.relation = ">=";
        r.margin = -r.margin;
      } else {
        detail::settle_exact(r, lhs, rhs, r.identity);
      }
      parsed = true;
    } catch (const std::invalid_argument&) {
    }
  }
  if (!parsed) {
    const double rhs = r.rhs_value + to_double(delta);
    const double lhs = r.lhs_value;
    if (r.relation == ">=") {
      detail::settle_float(r, rhs, lhs, r.identity);
      std::swap(r.lhs_value, r.rhs_value);
      std::swap(r.lhs, r.rhs);
      r.relation = ">=";
      r.margin = -r.margin;
    } else {
      detail::settle_float(r, lhs, rhs, r.identity);
    }
  }
}

// ---------------------------------------------------------------------------
// Runner.

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

namespace detail {

inline Subspace random_subspace(const Group& g, std::size_t gens, CounterRng& rng) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < gens; ++i) rows.push_back(g.coords(static_cast<std::uint32_t>(rng.below(g.order()))));
  return Subspace(g, std::move(rows));
}

}  // namespace detail

/// Expands one manifest entry.  Instance i draws from CounterRng(seed, hash(line) + i).
inline std::vector<CheckReport> run_manifest_entry(const ManifestEntry& e, std::uint64_t seed) {
  EntryParams p(e);
  std::vector<CheckReport> out;
  const std::string& id = e.id;
  const std::uint64_t stream = fnv1a(e.text);
  std::optional<Rational> corruption;
  if (p.has("corrupt_rhs")) corruption = p.rational("corrupt_rhs", 0);

  auto emit = [&](CheckReport r, std::size_t sample) {
    r.seed = seed;
    r.instance.push_back({"sample", std::to_string(sample)});
    out.push_back(std::move(r));
  };
  auto rng_for = [&](std::size_t i) { return CounterRng(seed, stream + i); };

  if (id == "duality") {
    const auto groups = p.groups("groups", "Z5;Z6;F2^2");
    const auto ks = p.uints("k", "2,3,4");
    const unsigned count = p.uint("count", 10);
    const auto lo = static_cast<std::int64_t>(-static_cast<std::int64_t>(p.uint("abs_max", 3)));
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const auto f = random_integer_function(groups[i % groups.size()], lo, -lo, rng);
      for (auto k : ks)
        for (auto l : ks) emit(check_duality(f, k, l), i);
    }
  } else if (id == "strategy_agreement") {
    const auto groups = p.groups("groups", "Z5;Z6;Z7;F2^3");
    const auto shapes = p.shapes("shapes", "2,2;2,3;3,2;2,4;4,2;3,3");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const ExactFunction f =
          i % 2 ? random_set(G, rng.uniform(0.2, 0.8), rng).indicator() : random_integer_function(G, -3, 3, rng);
      for (const auto& s : shapes) emit(check_strategy_agreement(f, s), i);
    }
  } else if (id == "triangle" || id == "gowers_cauchy_schwarz" || id == "monotonicity") {
    const auto groups = p.groups("groups", "Z5;Z6;Z7;F2^3");
    const auto shapes = p.shapes("shapes", id == "monotonicity" ? "2,2;2,4;4,4" : "2,2;2,4;4,4;2,2,2");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const Shape& s = shapes[(i / groups.size()) % shapes.size()];
      if (id == "triangle") {
        const auto f = random_real_function(G, rng);
        const auto g = random_real_function(G, rng);
        emit(check_triangle(f, g, s), i);
      } else if (id == "gowers_cauchy_schwarz") {
        std::vector<RealFunction> fam;
        for (unsigned w = 0; w < s.total_product(); ++w) fam.push_back(random_real_function(G, rng));
        emit(check_gcs(fam, s), i);
      } else {
        // Every ordered pair small <= big drawn from the listed shapes.
        const auto f = random_real_function(G, rng);
        for (const auto& a : shapes)
          for (const auto& b : shapes) {
            if (a.rank() != b.rank() || a == b) continue;
            bool le = true;
            for (std::size_t j = 0; j < a.rank(); ++j) le = le && a[j] <= b[j];
            if (le) emit(check_monotonicity(f, a, b), i);
          }
      }
    }
  } else if (id == "non_negativity" || id == "zero_characterization") {
    const auto groups = p.groups("groups", "Z5;Z6;Z7;F2^3");
    const auto shapes = p.shapes("shapes", "2,2;2,3;3,2;2,4;4,3;2,2,2");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const Shape& s = shapes[(i / groups.size()) % shapes.size()];
      ExactFunction f = random_integer_function(G, -3, 3, rng);
      if (id == "zero_characterization") {
        if (i % 5 == 0) f = ExactFunction(G);
        emit(check_zero_characterization(f, s), i);
      } else {
        emit(check_nonnegative(f, s), i);
      }
    }
  } else if (id == "expectation_identity" || id == "reduction_sum" || id == "inductive_identity" ||
             id == "reduction_identity" || id == "two_sided_symmetry" || id == "diagonal_symmetry") {
    const auto groups = p.groups("groups", "Z3;Z4;Z5;F2^2");
    std::string dflt = "1,2;2,1;2,2;1,3";
    if (id == "reduction_sum") dflt = "2,2,2;2,3,2;3,2,2;2,2,3";
    if (id == "inductive_identity") dflt = "2,2;3,2;2,3;2,2,2";
    if (id == "diagonal_symmetry") dflt = "2;3";
    const auto params = p.tuples("params", dflt);
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const auto& t = params[(i / groups.size()) % params.size()];
      auto need = [&](std::size_t n) {
        if (t.size() != n) throw ParseError("manifest line " + std::to_string(e.line) + ": params need " +
                                            std::to_string(n) + " entries per tuple");
        for (auto v : t)
          if (v < 1) throw ParseError("manifest line " + std::to_string(e.line) + ": params must be positive");
      };
      const auto f = random_integer_function(G, -3, 3, rng);
      if (id == "expectation_identity") {
        need(2);
        emit(check_expectation_identity(f, static_cast<unsigned>(t[0]), static_cast<unsigned>(t[1])), i);
      } else if (id == "reduction_sum") {
        need(3);
        emit(check_reduction_sum(f, static_cast<unsigned>(t[0]), static_cast<unsigned>(t[1]),
                                 static_cast<unsigned>(t[2])),
             i);
      } else if (id == "inductive_identity") {
        std::vector<unsigned> dims(t.begin(), t.end());
        emit(check_inductive_identity(f, Shape(dims)), i);
      } else if (id == "diagonal_symmetry") {
        need(1);
        emit(check_diagonal_symmetry(f, static_cast<unsigned>(t[0])), i);
      } else {
        need(2);
        const auto x = random_tuple(G, static_cast<std::size_t>(t[0]), rng);
        const auto y = random_tuple(G, static_cast<std::size_t>(t[1]), rng);
        if (id == "reduction_identity") {
          emit(check_reduction_identity(f, x, y), i);
        } else {
          const auto w = random_tuple(G, 2, rng);
          emit(check_two_sided_symmetry(f, x, y, w[0], w[1]), i);
        }
      }
    }
  } else if (id == "counting" || id == "counting_equality") {
    const auto groups = p.groups("groups", "Z5;Z7;Z11;Z13");
    const auto ls = p.tuples("l", "2,2;2,4;4,4");
    const auto forms_raw = p.tuples("forms", "1,0,0;1,1,0;1,2,0;1,3,0");
    const unsigned count = p.uint("count", 12);
    p.finish();
    if (forms_raw.size() != 4) throw ParseError("manifest line " + std::to_string(e.line) + ": need four forms");
    std::vector<LinearForm> forms;
    for (const auto& f : forms_raw) {
      if (f.size() != 3) throw ParseError("manifest line " + std::to_string(e.line) + ": forms are a,b,c");
      forms.push_back({f[0], f[1], f[2]});
    }
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const auto& l = ls[(i / groups.size()) % ls.size()];
      if (l.size() != 2 || l[0] < 2 || l[1] < 2)
        throw ParseError("manifest line " + std::to_string(e.line) + ": l pairs need l1,l2 >= 2");
      std::vector<ExactFunction> fs;
      for (int j = 0; j < 4; ++j) {
        if (id == "counting") {
          ExactFunction f(G);
          for (auto& v : f.values()) v = rng.bernoulli(0.5) ? 1 : -1;
          fs.push_back(f);
        } else {
          const std::int64_t c = rng.between(1, 3) * (rng.bernoulli(0.5) ? 1 : -1);
          fs.push_back(ExactFunction::constant(G, Rational(c)));
        }
      }
      auto r = check_counting(fs, forms, static_cast<unsigned>(l[0]), static_cast<unsigned>(l[1]));
      if (id == "counting_equality") {
        r.id = id;
        detail::settle_float(r, r.lhs_value, r.rhs_value, true);
      }
      emit(std::move(r), i);
    }
  } else if (id == "uniformity_bound") {
    const auto groups = p.groups("groups", "Z5;Z6;Z7;Z8;F2^3");
    const auto ks = p.uints("k", "2,4");
    const auto ls = p.uints("l", "2,3");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const unsigned k = ks[(i / groups.size()) % ks.size()];
      const unsigned l = ls[(i / (groups.size() * ks.size())) % ls.size()];
      std::vector<GroupSet> sets;
      const bool same = l % 2 == 1 || rng.bernoulli(0.25);
      for (unsigned j = 0; j < l; ++j)
        sets.push_back(same && j > 0 ? sets.front() : random_set(G, rng.uniform(0.2, 0.8), rng));
      const ExactFunction g = i % 2 ? random_set(G, rng.uniform(0.2, 0.8), rng).indicator()
                                    : random_integer_function(G, -2, 2, rng);
      emit(check_uniformity_bound(sets, g, k), i);
    }
  } else if (id == "circ_moment") {
    const auto groups = p.groups("groups", "Z7;Z8;Z11;F2^3;F2^4");
    const auto ls = p.uints("l", "1,2,3");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const unsigned l = ls[(i / groups.size()) % ls.size()];
      const auto a = random_set(G, rng.uniform(0.2, 0.8), rng);
      const auto b = random_set(G, rng.uniform(0.2, 0.8), rng);
      emit(check_circ_moment(a, b, l), i);
    }
  } else if (id == "dispersion") {
    const auto groups = p.groups("groups", "Z32;F2^5;Z64");
    const auto ks = p.uints("k", "4,6");
    const auto ls = p.uints("l", "2");
    const double lo = p.real("density_min", 0.35), hi = p.real("density_max", 0.65);
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const unsigned k = ks[(i / groups.size()) % ks.size()];
      const unsigned l = ls[(i / (groups.size() * ks.size())) % ls.size()];
      std::vector<GroupSet> sets;
      for (unsigned j = 0; j < l; ++j) sets.push_back(random_set(G, rng.uniform(lo, hi), rng));
      emit(check_dispersion(sets, k), i);
    }
  } else if (id == "holder") {
    const auto groups = p.groups("groups", "Z4;Z5;Z6;Z7;F2^3");
    const auto ks = p.uints("k", "2,3,4");
    const auto ls = p.uints("l", "1,2,3");
    const unsigned count = p.uint("count", 20);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const unsigned k = ks[(i / groups.size()) % ks.size()];
      const unsigned l = ls[(i / (groups.size() * ks.size())) % ls.size()];
      emit(check_holder(random_integer_function(G, 0, 3, rng), k, l), i);
    }
  } else if (id == "e_to_d") {
    const auto groups = p.groups("groups", "Z7;Z11;Z13");
    const unsigned k = p.uint("k", 5), l = p.uint("l", 2);
    const unsigned k1_lo = p.uint("k1_min", 2), k1_hi = p.uint("k1_max", 8);
    const unsigned count = p.uint("count", 6);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      emit(check_e_to_d(random_set(G, 0.5, rng), k, l, k1_lo, k1_hi), i);
    }
  } else if (id == "lq_moments") {
    const auto groups = p.groups("groups", "F2^5;F2^6;F3^3");
    const unsigned l = p.uint("l", 2), q = p.uint("q", 4);
    const Rational eps = p.rational("eps", Rational(1, 4));
    const unsigned count = p.uint("count", 6);
    p.finish();
    for (std::size_t i = 0; i < count; ++i) {
      auto rng = rng_for(i);
      const Group& G = groups[i % groups.size()];
      const auto a = random_set(G, rng.uniform(0.2, 0.6), rng);
      const auto v = detail::random_subspace(G, 1 + rng.below(G.dimension() - 1), rng);
      for (auto& r : lq_companion_checks(a, v, l, q, eps)) {
        // These are the L_q increment conclusions; they need not hold for an arbitrary V.
        r.hypothesis = false;
        emit(std::move(r), i);
      }
    }
  } else if (id == "anchor_energy" || id == "anchor_uniformity") {
    const Group G = p.groups("group", "Z5").front();
    const auto set_text = p.text("set", "");
    const Shape shape = p.shapes("shape", "2,2").front();
    const std::string fn = p.text("function", "indicator");
    const Rational expect = p.rational("expect", 0);
    p.finish();
    if (!p.has("expect") || !p.has("set"))
      throw ParseError("manifest line " + std::to_string(e.line) + ": anchors need set= and expect=");
    const GroupSet a = parse_set_list(G, set_text);
    KeyValues inst{{"group", G.spec()}, {"set", set_text}, {"shape", shape.str()}};
    Rational computed;
    if (id == "anchor_energy") {
      if (fn != "indicator" && fn != "balanced")
        throw ParseError("manifest line " + std::to_string(e.line) + ": function must be indicator or balanced");
      computed = energy_value(fn == "indicator" ? a.indicator() : balanced(a), shape);
      inst.push_back({"function", fn});
    } else {
      if (shape.rank() != 2) throw ParseError("anchor_uniformity needs a two-axis shape");
      computed = uniformity(a, shape[0], shape[1]).ratio;
    }
    emit(check_anchor(id, std::move(inst), computed, expect), 0);
  } else if (id == "anchor_conv") {
    const Group G = p.groups("group", "Z5").front();
    const auto set_text = p.text("set", "");
    const std::string kind = p.text("kind", "circ");
    const auto expect_text = p.text("expect", "");
    p.finish();
    if (kind != "circ" && kind != "star") throw ParseError("anchor_conv kind must be circ or star");
    const auto a = parse_set_list(G, set_text).indicator();
    const auto c = convolve(a, a, kind == "circ" ? ConvKind::circ : ConvKind::star);
    const auto parts = detail::split(expect_text, ',');
    if (parts.size() != G.size())
      throw ParseError("manifest line " + std::to_string(e.line) + ": expect needs one value per element");
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      Rational want;
      try {
        want = parse_rational(parts[x]);
      } catch (const std::invalid_argument& ex) {
        throw ParseError("manifest line " + std::to_string(e.line) + ": " + ex.what());
      }
      emit(check_anchor(id, {{"group", G.spec()}, {"set", set_text}, {"kind", kind}, {"x", std::to_string(x)}},
                        c[x], want),
           0);
    }
  } else if (id == "scenario_direct_sum") {
    const unsigned n = p.uint("n", 10), d = p.uint("subgroup_dim", 3);
    const double lambda = p.real("lambda", 0.125);
    const Shape low = p.shapes("low", "2,2").front(), high = p.shapes("high", "8,3").front();
    p.finish();
    emit(scenario_direct_sum(n, d, lambda, seed, low, high).separation, 0);
  } else if (id == "scenario_removal") {
    const unsigned n = p.uint("n", 10);
    const double beta = p.real("beta", 0.0625), lambda = p.real("lambda", 0.25);
    p.finish();
    emit(scenario_removal(n, beta, lambda, seed).comparison, 0);
  } else {
    throw ParseError("manifest line " + std::to_string(e.line) + ": unknown check id '" + id + "'");
  }
  if (corruption)
    for (auto& r : out) corrupt_rhs(r, *corruption);
  return out;
}

struct SuiteResult {
  std::vector<CheckReport> reports;
  std::vector<std::string> failing;  // ids with a report whose hypothesis holds but whose verdict fails
  bool ok() const { return failing.empty(); }
};

/// A failure is a report with hypothesis true and holds false.
inline bool is_failure(const CheckReport& r) { return r.hypothesis && !r.holds; }

template <typename Sink>
SuiteResult run_manifest(const std::vector<ManifestEntry>& entries, std::uint64_t seed, Sink&& sink) {
  SuiteResult out;
  std::set<std::string> failing;
  for (const auto& e : entries) {
    for (auto& r : run_manifest_entry(e, seed)) {
      if (is_failure(r) && failing.insert(r.id).second) out.failing.push_back(r.id);
      sink(r);
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

inline SuiteResult run_manifest(const std::vector<ManifestEntry>& entries, std::uint64_t seed) {
  return run_manifest(entries, seed, [](const CheckReport&) {});
}

/// The manifest used when none is given: every checker at modest counts plus the frozen anchors.
inline std::string_view default_manifest() {
  return R"(# Frozen anchors (values from brute-force oracles)
anchor_energy group=Z5 set=0,1 shape=2,2 expect=30
anchor_energy group=Z5 set=all shape=2,2 expect=625
anchor_energy group=F2^2 set=0,1 shape=2,2 expect=32
anchor_energy group=Z5 set=0,1 shape=2,2 function=balanced expect=14
anchor_uniformity group=Z5 set=0,1 shape=2,2 expect=7/8
anchor_conv group=Z5 set=0,1 kind=circ expect=2,1,0,0,1

# Energies
duality groups=Z4;Z5;Z6;F2^2;F2^3 count=10
strategy_agreement count=20

# Norm axioms
triangle count=40
gowers_cauchy_schwarz count=24
monotonicity count=16
non_negativity count=24
zero_characterization count=24

# Identities
expectation_identity count=16
inductive_identity count=16
reduction_identity count=16
reduction_sum count=16
diagonal_symmetry count=8
two_sided_symmetry count=16

# Inequalities
uniformity_bound count=40
circ_moment count=30
dispersion count=12
holder count=45
counting count=12
counting_equality count=12
e_to_d count=3
lq_moments count=6
)";
}

}  // namespace hen
