// hen: command-line front end for energies, norms, checks, scenarios and the increment engine.
// Exit codes: 0 ok, 1 suite failure, 2 malformed input, 3 budget refusal.

#include "hen/hen.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace hen;

struct Config {
  std::string group = "Z5";
  std::string set;
  std::string set_file;
  std::string function_file;
  bool balanced = false;
  std::string shape = "2,2";
  std::string strategy = "auto";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint64_t tensor_budget = 0;
  std::uint64_t work_budget = 0;
  std::string format = "json";

  // conv
  std::string kind = "circ";
  unsigned arity = 2;
  std::string with_set;
  // count-forms
  std::string forms = "1,0,0;1,1,0;1,2,0;1,3,0";
  unsigned l1 = 2, l2 = 2;
  // suite
  std::string manifest;
  // scenario
  std::string scenario;
  unsigned n = 10;
  unsigned subgroup_dim = 3;
  double lambda = 0.125;
  double beta = 0.0625;
  std::string low = "2,2", high = "8,3";
  // increment / partition
  std::string planted;
  std::string eps = "1/4";
  unsigned budget_steps = 16;
  bool single = false;
  double c = 0.5;
  unsigned cs_q = 0;
  unsigned cs_samples = 8;
  double cs_epsilon = 0.75;
  double omega_budget = 0.25;
  unsigned max_steps = 256;
};

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

Group config_group(const Config& c) { return parse_group(c.group); }

bool has_set_input(const Config& c) { return !c.set.empty() || !c.set_file.empty(); }

GroupSet load_set(const Config& c, const Group& g) {
  if (!c.set.empty() && !c.set_file.empty()) throw ParseError("give --set or --set-file, not both");
  if (!c.set_file.empty()) {
    auto in = open_file(c.set_file);
    return parse_set_file(g, in);
  }
  if (c.set.empty()) throw ParseError("a set is required (--set or --set-file)");
  return parse_set_list(g, c.set);
}

/// The input function: a function file, or the indicator (or balanced function) of the set.
ExactFunction load_function(const Config& c, const Group& g) {
  if (!c.function_file.empty()) {
    if (has_set_input(c)) throw ParseError("give a set or --function-file, not both");
    auto in = open_file(c.function_file);
    return parse_function_file(g, in);
  }
  const GroupSet a = load_set(c, g);
  return c.balanced ? balanced(a) : a.indicator();
}

void print(const Config& c, const Json& j) {
  if (c.format == "json") {
    std::cout << dump_json(j) << '\n';
  } else if (c.format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : flatten_json(j)) {
      const bool quote = v.find_first_of(",\"\n") != std::string::npos;
      std::string q = v;
      if (quote) {
        q.clear();
        for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        q = "\"" + q + "\"";
      }
      std::cout << k << ',' << q << '\n';
    }
  } else {
    for (const auto& [k, v] : flatten_json(j)) std::cout << k.substr(1) << ": " << v << '\n';
  }
}

void apply_limits(const Config& c) {
  if (c.threads) set_threads(c.threads);
  if (c.tensor_budget) set_tensor_budget(c.tensor_budget);
  if (c.work_budget) set_work_budget(c.work_budget);
}

IncrementParams increment_params(const Config& c) {
  IncrementParams p;
  p.c = c.c;
  p.cs_q = c.cs_q;
  p.cs_samples = c.cs_samples;
  p.cs_epsilon = c.cs_epsilon;
  p.seed = c.seed;
  return p;
}

double parse_positive(const std::string& s, const char* what) {
  double v = 0.0;
  try {
    v = to_double(parse_rational(s));
  } catch (const std::invalid_argument&) {
    std::size_t used = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  }
  if (!(v > 0.0)) throw ParseError(std::string(what) + " must be positive");
  return v;
}

/// The set for increment/partition: an explicit set or a planted instance "n,codim,delta,bias".
GroupSet increment_input(const Config& c, Json& meta) {
  if (!c.planted.empty()) {
    if (has_set_input(c)) throw ParseError("give a set or --planted, not both");
    const auto parts = detail::split(c.planted, ',');
    if (parts.size() != 4) throw ParseError("--planted needs n,codim,delta,bias");
    const auto n = static_cast<unsigned>(detail::parse_uint(parts[0], "n"));
    const auto codim = static_cast<unsigned>(detail::parse_uint(parts[1], "codim"));
    const double delta = parse_positive(std::string(parts[2]), "delta");
    const double bias = parse_positive(std::string(parts[3]), "bias");
    meta["planted"] = {{"n", n}, {"codim", codim}, {"delta", delta}, {"bias", bias}};
    return planted_biased_cosets(n, codim, delta, bias, c.seed);
  }
  return load_set(c, config_group(c));
}

std::pair<unsigned, unsigned> two_axes(const Config& c) {
  const Shape s = parse_shape(c.shape);
  if (s.rank() != 2) throw ParseError("this subcommand needs a two-axis shape k,l");
  return {s[0], s[1]};
}

// ---------------------------------------------------------------------------

void cmd_energy(const Config& c) {
  const Group g = config_group(c);
  const auto f = load_function(c, g);
  const auto rep = energy(f, parse_shape(c.shape), parse_strategy(c.strategy));
  Json j = to_json(rep, g);
  j["function"] = !c.function_file.empty() ? "file" : c.balanced ? "balanced" : "indicator";
  print(c, j);
}

void cmd_norm(const Config& c) {
  const Group g = config_group(c);
  const auto f = load_function(c, g);
  const Shape s = parse_shape(c.shape);
  const auto rep = energy(f, s, parse_strategy(c.strategy));
  Json j;
  j["group"] = g.spec();
  j["shape"] = s.str();
  j["raw"] = to_string(rep.raw);
  j["norm"] = energy_norm(f, s);
  j["bar_norm"] = rep.norm;
  j["norm_grade"] = rep.norm_grade;
  j["even_product"] = s.even_product();
  j["zero_parity"] = zero_norm_parity(s);
  print(c, j);
}

void cmd_uniformity(const Config& c) {
  const Group g = config_group(c);
  const auto a = load_set(c, g);
  const auto [k, l] = two_axes(c);
  const auto u = uniformity(a, k, l);
  Json j;
  j["group"] = g.spec();
  j["shape"] = Shape{k, l}.str();
  j["size"] = a.size();
  j["density"] = to_string(a.density());
  j["energy"] = to_string(u.energy);
  j["ratio"] = to_string(u.ratio);
  j["epsilon"] = u.epsilon;
  print(c, j);
}

void cmd_conv(const Config& c) {
  const Group g = config_group(c);
  const auto f = load_function(c, g);
  Json j;
  j["group"] = g.spec();
  j["kind"] = c.kind;
  Json values = Json::array();
  if (c.kind == "circ" || c.kind == "star") {
    const ExactFunction other = c.with_set.empty() ? f : parse_set_list(g, c.with_set).indicator();
    const auto out = convolve(f, other, c.kind == "circ" ? ConvKind::circ : ConvKind::star);
    for (const auto& v : out.values()) values.push_back(to_string(v));
  } else if (c.kind == "generalized" || c.kind == "reduced") {
    if (!c.with_set.empty()) throw ParseError("--with-set applies to circ and star only");
    const auto t = c.kind == "generalized" ? generalized_conv(f, c.arity) : reduced_conv(f, c.arity);
    j["arity"] = t.arity();
    for (const auto& v : t.values()) values.push_back(to_string(v));
  } else {
    throw ParseError("unknown --kind '" + c.kind + "' (circ, star, generalized, reduced)");
  }
  j["values"] = values;
  print(c, j);
}

void cmd_count_forms(const Config& c) {
  const Group g = config_group(c);
  const auto f = load_function(c, g);
  ManifestEntry e;
  e.params["forms"] = c.forms;
  EntryParams p(e);
  std::vector<LinearForm> forms;
  for (const auto& t : p.tuples("forms", "")) {
    if (t.size() != 3) throw ParseError("each form is a,b,c");
    forms.push_back({t[0], t[1], t[2]});
  }
  if (forms.size() != 4) throw ParseError("--forms needs four forms");
  print(c, to_json(check_counting(std::vector<ExactFunction>(4, f), forms, c.l1, c.l2)));
}

int cmd_suite(const Config& c) {
  std::vector<ManifestEntry> entries;
  if (c.manifest.empty()) {
    entries = parse_manifest(default_manifest());
  } else {
    auto in = open_file(c.manifest);
    entries = parse_manifest(in);
  }
  if (c.format == "csv") std::cout << "id,holds,hypothesis,relation,lhs,rhs,margin,seed\n";
  const auto res = run_manifest(entries, c.seed, [&](const CheckReport& r) {
    if (c.format == "json") {
      std::cout << dump_json(to_json(r)) << '\n';
    } else if (c.format == "csv") {
      std::string margin;
      detail::write_double(margin, r.margin);
      std::cout << r.id << ',' << (r.holds ? "true" : "false") << ',' << (r.hypothesis ? "true" : "false") << ','
                << r.relation << ',' << r.lhs << ',' << r.rhs << ',' << margin << ',' << r.seed << '\n';
    } else {
      std::cout << (r.holds ? "PASS " : r.hypothesis ? "FAIL " : "SKIP ") << r.id;
      for (const auto& [k, v] : r.instance) std::cout << ' ' << k << '=' << v;
      std::cout << "  " << r.lhs << ' ' << r.relation << ' ' << r.rhs << '\n';
    }
    std::cout.flush();
  });
  if (!res.ok()) {
    std::cerr << "failing checks:";
    for (const auto& id : res.failing) std::cerr << ' ' << id;
    std::cerr << '\n';
    return 1;
  }
  return 0;
}

void cmd_scenario(const Config& c) {
  Json j;
  j["seed"] = c.seed;
  if (c.scenario == "direct-sum") {
    const auto s = scenario_direct_sum(c.n, c.subgroup_dim, c.lambda, c.seed, parse_shape(c.low), parse_shape(c.high));
    j["scenario"] = "direct-sum";
    j["n"] = c.n;
    j["subgroup_dim"] = s.subgroup_dim;
    j["lambda"] = s.lambda;
    j["size"] = s.set.size();
    j["low"] = s.low.str();
    j["high"] = s.high.str();
    j["eps_low"] = s.eps_low;
    j["eps_high"] = s.eps_high;
    j["ratio"] = s.ratio;
    j["dense_regime"] = s.dense_regime;
    j["report"] = to_json(s.separation);
  } else if (c.scenario == "removal") {
    const auto s = scenario_removal(c.n, c.beta, c.lambda, c.seed);
    j["scenario"] = "removal";
    j["n"] = c.n;
    j["beta"] = s.beta;
    j["lambda"] = s.lambda;
    j["size"] = s.set.size();
    j["k"] = s.k;
    j["eta"] = s.eta;
    j["eps"] = s.eps;
    j["delta"] = s.delta;
    j["prediction"] = s.prediction;
    j["beta_le_delta"] = s.beta_le_delta;
    j["report"] = to_json(s.comparison);
  } else {
    throw ParseError("unknown scenario '" + c.scenario + "' (direct-sum, removal)");
  }
  print(c, j);
}

void cmd_increment(const Config& c) {
  Json j;
  j["seed"] = c.seed;
  const GroupSet a = increment_input(c, j);
  const auto [k, l] = two_axes(c);
  const double eps = parse_positive(c.eps, "--eps");
  j["group"] = a.group().spec();
  j["shape"] = Shape{k, l}.str();
  j["eps_target"] = eps;
  if (c.single) {
    require_increment_group(a.group());
    j["step"] = to_json(increment_step(a, k, l, eps, increment_params(c)));
  } else {
    j["result"] = to_json(uniformize(a, k, l, eps, c.budget_steps, increment_params(c)));
  }
  print(c, j);
}

void cmd_partition(const Config& c) {
  Json j;
  j["seed"] = c.seed;
  const GroupSet a = increment_input(c, j);
  const auto [k, l] = two_axes(c);
  const double eps = parse_positive(c.eps, "--eps");
  j["group"] = a.group().spec();
  j["shape"] = Shape{k, l}.str();
  j["eps"] = eps;
  j["omega_budget"] = c.omega_budget;
  j["partition"] = to_json(uniform_partition(a, k, l, eps, c.omega_budget, increment_params(c), c.max_steps));
  print(c, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher energies, box norms and density increments over finite abelian groups"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    s->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    s->add_option("--tensor-budget", c.tensor_budget, "max tensor entries (default 2^27, env HE_TENSOR_BUDGET)");
    s->add_option("--work-budget", c.work_budget, "max enumeration steps (default 2^36)");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  };
  auto inputs = [&](CLI::App* s, bool functions) {
    s->add_option("--group", c.group, "group spec: Z5, F2^3, Z4xZ2")->capture_default_str();
    s->add_option("--set", c.set, "comma-separated element indices, or 'all'");
    s->add_option("--set-file", c.set_file, "one element per line (index or coordinates)");
    if (functions) {
      s->add_option("--function-file", c.function_file, "'index,value' lines; values p or p/q");
      s->add_flag("--balanced", c.balanced, "use the balanced function of the set");
    }
  };

  auto* energy_cmd = app.add_subcommand("energy", "box energy of a function");
  inputs(energy_cmd, true);
  energy_cmd->add_option("--shape", c.shape, "k_1,...,k_r")->capture_default_str();
  energy_cmd->add_option("--strategy", c.strategy, "auto, enumerate, dual-swap, set-fast, corr-fast");
  common(energy_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "energy norm and normalized norm");
  inputs(norm_cmd, true);
  norm_cmd->add_option("--shape", c.shape, "k_1,...,k_r")->capture_default_str();
  norm_cmd->add_option("--strategy", c.strategy, "energy strategy");
  common(norm_cmd);

  auto* unif_cmd = app.add_subcommand("uniformity", "uniformity of a set relative to E^k_l");
  inputs(unif_cmd, false);
  unif_cmd->add_option("--shape", c.shape, "k,l")->capture_default_str();
  common(unif_cmd);

  auto* conv_cmd = app.add_subcommand("conv", "convolutions");
  inputs(conv_cmd, true);
  conv_cmd->add_option("--kind", c.kind, "circ, star, generalized, reduced")->capture_default_str();
  conv_cmd->add_option("--arity", c.arity, "l for generalized and reduced convolutions")->capture_default_str();
  conv_cmd->add_option("--with-set", c.with_set, "second set for circ/star (default: the input itself)");
  common(conv_cmd);

  auto* count_cmd = app.add_subcommand("count-forms", "counting bound for four linear forms on Z/p");
  inputs(count_cmd, true);
  count_cmd->add_option("--forms", c.forms, "a,b,c;... for a x + b y + c")->capture_default_str();
  count_cmd->add_option("--l1", c.l1)->capture_default_str();
  count_cmd->add_option("--l2", c.l2)->capture_default_str();
  common(count_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "run a check manifest, one JSON report per line");
  suite_cmd->add_option("--manifest", c.manifest, "manifest file (default: built-in)");
  common(suite_cmd);

  auto* scen_cmd = app.add_subcommand("scenario", "planted scenarios on F_2^n");
  scen_cmd->add_option("kind", c.scenario, "direct-sum or removal")->required();
  scen_cmd->add_option("--n", c.n)->capture_default_str();
  scen_cmd->add_option("--subgroup-dim", c.subgroup_dim)->capture_default_str();
  auto* lambda_opt = scen_cmd->add_option("--lambda", c.lambda, "coset density (default 0.125 direct-sum, 0.25 removal)");
  scen_cmd->add_option("--beta", c.beta)->capture_default_str();
  scen_cmd->add_option("--low", c.low, "two-point shape")->capture_default_str();
  scen_cmd->add_option("--high", c.high, "three-point shape")->capture_default_str();
  common(scen_cmd);

  auto increment_opts = [&](CLI::App* s) {
    inputs(s, false);
    s->add_option("--planted", c.planted, "n,codim,delta,bias planted instance instead of a set");
    s->add_option("--shape", c.shape, "k,l")->capture_default_str();
    s->add_option("--eps", c.eps, "uniformity target")->capture_default_str();
    s->add_option("--c", c.c, "spectrum threshold")->capture_default_str();
    s->add_option("--cs-q", c.cs_q, "almost-period moment (0 = derived)")->capture_default_str();
    s->add_option("--cs-samples", c.cs_samples, "tuple length for sampled shifts")->capture_default_str();
    s->add_option("--cs-epsilon", c.cs_epsilon, "almost-period tolerance")->capture_default_str();
    common(s);
  };
  auto* inc_cmd = app.add_subcommand("increment", "uniformize a set by density increments");
  increment_opts(inc_cmd);
  inc_cmd->add_option("--budget-steps", c.budget_steps, "maximum increment steps")->capture_default_str();
  inc_cmd->add_flag("--single", c.single, "run one increment step and report it");

  auto* part_cmd = app.add_subcommand("partition", "partition into uniform cells plus an exceptional set");
  increment_opts(part_cmd);
  part_cmd->add_option("--omega-budget", c.omega_budget, "exceptional mass budget as a fraction of N")
      ->capture_default_str();
  part_cmd->add_option("--max-steps", c.max_steps, "maximum increment steps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    apply_limits(c);
    if (*energy_cmd) cmd_energy(c);
    else if (*norm_cmd) cmd_norm(c);
    else if (*unif_cmd) cmd_uniformity(c);
    else if (*conv_cmd) cmd_conv(c);
    else if (*count_cmd) cmd_count_forms(c);
    else if (*suite_cmd) return cmd_suite(c);
    else if (*scen_cmd) {
      if (c.scenario == "removal" && lambda_opt->count() == 0) c.lambda = 0.25;
      cmd_scenario(c);
    }
    else if (*inc_cmd) cmd_increment(c);
    else if (*part_cmd) cmd_partition(c);
  } catch (const BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
