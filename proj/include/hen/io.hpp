#pragma once
// Text input (set lists, set files, function files) and JSON output for reports.

#include "hen/energy.hpp"
#include "hen/increment.hpp"
#include "hen/scenarios.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>

namespace hen {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty " + std::string(what));
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

/// Element given as an index or as comma-separated coordinates.
inline std::uint32_t parse_element(const Group& g, std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) {
    const auto v = parse_uint(parts[0], "element index");
    if (v >= g.order()) throw ParseError("element index " + std::to_string(v) + " out of range for " + g.spec());
    return static_cast<std::uint32_t>(v);
  }
  if (parts.size() != g.rank())
    throw ParseError("element '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                     " coordinates, group " + g.spec() + " has rank " + std::to_string(g.rank()));
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto v = parse_uint(parts[i], "coordinate");
    if (v >= g.factors()[i]) throw ParseError("coordinate out of range in '" + std::string(text) + "'");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return g.index(c);
}

}  // namespace detail

/// "all", "" (empty set) or a comma-separated list of indices.
inline GroupSet parse_set_list(const Group& g, std::string_view text) {
  text = detail::trim(text);
  if (text == "all") return GroupSet::all(g);
  if (text.empty() || text == "none") return GroupSet::empty(g);
  std::vector<std::uint32_t> idx;
  for (auto part : detail::split(text, ',')) {
    const auto v = detail::parse_uint(part, "element index");
    if (v >= g.order()) throw ParseError("element index " + std::to_string(v) + " out of range for " + g.spec());
    idx.push_back(static_cast<std::uint32_t>(v));
  }
  return GroupSet::from_indices(g, std::span<const std::uint32_t>(idx));
}

/// One element per line, '#' comments and blank lines ignored.
inline GroupSet parse_set_file(const Group& g, std::istream& in) {
  std::vector<std::uint32_t> idx;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      idx.push_back(detail::parse_element(g, t));
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return GroupSet::from_indices(g, std::span<const std::uint32_t>(idx));
}

/// "index,value" per line; unlisted indices are 0; values may be "p/q".
inline ExactFunction parse_function_file(const Group& g, std::istream& in) {
  ExactFunction f(g);
  std::vector<char> seen(g.size(), 0);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto comma = t.rfind(',');
    try {
      if (comma == std::string_view::npos) throw ParseError("expected 'index,value'");
      const auto x = detail::parse_element(g, t.substr(0, comma));
      if (seen[x]) throw ParseError("index " + std::to_string(x) + " listed twice");
      seen[x] = 1;
      f[x] = parse_rational(t.substr(comma + 1));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// JSON.

namespace detail {

inline void write_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // Keep the value a float on re-read.
  if (std::string_view(buf).find_first_of(".eEn") == std::string_view::npos) out += ".0";
}

inline void write_json(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write_json(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_json(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: write_double(out, j.get<double>()); break;
    default: out += j.dump();
  }
}

}  // namespace detail

/// Compact JSON with every float printed to 17 significant digits.
inline std::string dump_json(const Json& j) {
  std::string out;
  detail::write_json(out, j);
  return out;
}

/// "path value" lines from a flattened document; floats at 17 significant digits.
inline std::vector<std::pair<std::string, std::string>> flatten_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  const Json flat = j.flatten();
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    std::string v;
    if (it.value().is_string()) v = it.value().get<std::string>();
    else detail::write_json(v, it.value());
    out.emplace_back(it.key(), v);
  }
  return out;
}

inline Json key_values(const KeyValues& kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

inline Json to_json(const CheckReport& r) {
  Json j;
  j["id"] = r.id;
  j["instance"] = key_values(r.instance);
  j["lhs"] = r.lhs;
  j["relation"] = r.relation;
  j["rhs"] = r.rhs;
  j["lhs_value"] = r.lhs_value;
  j["rhs_value"] = r.rhs_value;
  j["exact"] = r.exact;
  j["identity"] = r.identity;
  j["hypothesis"] = r.hypothesis;
  j["holds"] = r.holds;
  j["margin"] = r.margin;
  j["seed"] = r.seed;
  if (!r.info.empty()) j["info"] = key_values(r.info);
  return j;
}

template <typename T>
Json to_json(const EnergyReport<T>& r, const Group& g) {
  Json j;
  j["group"] = g.spec();
  j["shape"] = r.shape.str();
  if constexpr (is_exact_v<T>) {
    j["raw"] = to_string(r.raw);
    j["normalized"] = to_string(r.normalized);
  } else {
    j["raw"] = r.raw;
    j["normalized"] = r.normalized;
  }
  j["norm"] = r.norm;
  j["norm_grade"] = r.norm_grade;
  j["strategy"] = std::string(to_string(r.strategy));
  j["wall_ms"] = r.wall_ms;
  return j;
}

inline Json to_json(const Subspace& v) {
  Json j;
  j["dim"] = v.dim();
  j["codim"] = v.codim();
  Json basis = Json::array();
  for (const auto& row : v.basis()) basis.push_back(v.group().index(row));
  j["basis"] = basis;
  return j;
}

inline Json to_json(const TraceStep& s) {
  Json j;
  j["step"] = s.step;
  j["shape"] = std::to_string(s.k) + "," + std::to_string(s.l);
  j["lower_shape"] = s.lower_shape;
  j["cell_codim"] = s.cell_codim;
  j["density_before"] = to_string(s.density_before);
  j["epsilon_before"] = s.epsilon_before;
  j["success"] = s.success;
  j["reason"] = s.reason;
  j["codim_added"] = s.codim_added;
  j["density_after"] = to_string(s.density_after);
  j["b_size"] = s.b_size;
  j["s_size"] = s.s_size;
  j["periods"] = s.periods;
  j["spectrum_size"] = s.spectrum_size;
  j["codim_bound_diagnostic"] = s.codim_bound;
  j["wall_ms"] = s.wall_ms;
  return j;
}

inline Json to_json(const UniformizeResult& r) {
  Json j;
  j["cell"] = to_json(r.v);
  j["shift"] = r.x;
  j["density"] = to_string(r.density);
  j["initial_epsilon"] = r.initial_epsilon;
  j["epsilon"] = r.epsilon;
  if (r.lower_epsilon) {
    j["lower_shape_k"] = r.lower_k;
    j["lower_shape_epsilon"] = *r.lower_epsilon;
  }
  j["uniform"] = r.uniform;
  j["budget_exhausted"] = r.budget_exhausted;
  j["termination"] = r.termination;
  Json steps = Json::array();
  for (const auto& s : r.trace) steps.push_back(to_json(s));
  j["trace"] = steps;
  return j;
}

inline Json to_json(const PartitionCell& c) {
  Json j;
  j["cell"] = to_json(c.v);
  j["shift"] = c.x;
  j["density"] = to_string(c.density);
  j["epsilon"] = c.epsilon;
  j["uniform"] = c.uniform;
  return j;
}

inline Json to_json(const Partition& p) {
  Json j;
  Json cells = Json::array();
  for (const auto& c : p.cells) cells.push_back(to_json(c));
  Json ex = Json::array();
  for (const auto& c : p.exceptional) ex.push_back(to_json(c));
  j["cells"] = cells;
  j["exceptional"] = ex;
  j["omega_size"] = p.omega_size;
  j["omega_fraction"] = p.omega_fraction;
  j["within_budget"] = p.within_budget;
  j["increment_steps"] = p.steps;
  return j;
}

inline Json to_json(const IncrementResult& r) {
  Json j;
  j["success"] = r.success;
  j["reason"] = r.reason;
  j["subspace"] = to_json(r.v);
  j["shift"] = r.x;
  j["initial_density"] = to_string(r.initial_density);
  j["density"] = to_string(r.density);
  j["required_factor"] = r.required_factor;
  j["b_size"] = r.bszg.b.size();
  j["s_size"] = r.bszg.s_size;
  j["bszg_witness"] = r.bszg.found;
  j["periods"] = r.periods;
  j["cs_q"] = r.cs_q;
  j["spectrum_size"] = r.spectrum_size;
  j["codim_bound_diagnostic"] = r.codim_bound;
  j["diagnostics"] = key_values(r.diagnostics);
  return j;
}

}  // namespace hen
