#include "cpgb/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <json.hpp>

#include "cpgb/closures.hpp"
#include "cpgb/error.hpp"
#include "cpgb/groebner.hpp"
#include "cpgb/identities.hpp"
#include "cpgb/simulator.hpp"
#include "cpgb/solver.hpp"

namespace cpgb {

namespace {

using nlohmann::json;

std::string fmt12(double v) { return fmt::format("{:.12g}", v); }

json manifest(const std::vector<std::string>& args, std::optional<std::uint64_t> seed) {
  std::string line;
  for (const auto& a : args) {
    if (!line.empty()) line += ' ';
    line += a;
  }
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  json m = {{"command_line", line},
            {"tool_version", kToolVersion},
            {"rng", Rng::kName},
            {"timestamp", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now))}};
  m["seed"] = seed ? json(*seed) : json(nullptr);
  return m;
}

struct SystemOptions {
  std::string order;
  std::vector<std::string> patterns;
  std::string scheme;
  std::vector<std::string> relations;
};

void add_system_options(CLI::App* cmd, SystemOptions& o) {
  cmd->add_option("--order", o.order, "Built-in approximation: 1, 2, 2prime or 3");
  cmd->add_option("--patterns", o.patterns, "Identity patterns, e.g. o,oo,ooo")->delimiter(',');
  cmd->add_option("--scheme", o.scheme, "mean_field_1, pair_2, naive_2prime, third_3 or custom");
  cmd->add_option("--relation", o.relations, "Custom closure, e.g. o*ooxo=oo*oxo (repeatable)");
}

ClosureScheme named_scheme(const std::string& name) {
  if (name == "mean_field_1") return ClosureScheme::mean_field();
  if (name == "pair_2") return ClosureScheme::pair();
  if (name == "naive_2prime") return ClosureScheme::naive_pair();
  if (name == "third_3") return ClosureScheme::third();
  throw InvalidArgument(fmt::format("unknown closure scheme '{}'", name));
}

Ideal make_ideal(const SystemOptions& o, VariableRegistry& registry) {
  if (!o.relations.empty() && !o.scheme.empty() && o.scheme != "custom")
    throw InvalidArgument("--relation requires --scheme custom");
  if (o.scheme == "custom" && o.relations.empty())
    throw InvalidArgument("--scheme custom needs at least one --relation");

  std::vector<ConfigurationPattern> patterns;
  std::optional<ClosureScheme> scheme;
  std::string label = "custom";
  if (!o.patterns.empty()) {
    if (!o.order.empty()) throw InvalidArgument("give either --order or --patterns, not both");
    for (const auto& p : o.patterns) patterns.push_back(ConfigurationPattern::parse(p));
  } else {
    if (o.order.empty()) throw InvalidArgument("--order or --patterns is required");
    auto order = parse_approximation_order(o.order);
    patterns = identity_patterns(order);
    scheme = closure_scheme(order);
    label = to_string(order);
  }
  if (!o.relations.empty()) {
    std::vector<ClosureRelation> rel;
    for (const auto& r : o.relations) rel.push_back(parse_relation(r));
    scheme = ClosureScheme::custom(std::move(rel));
    label = "custom";
  } else if (!o.scheme.empty()) {
    scheme = named_scheme(o.scheme);
    if (!o.patterns.empty() || scheme->kind != closure_scheme(parse_approximation_order(o.order)).kind)
      label = "custom";
  }
  if (!scheme) throw InvalidArgument("--patterns needs --scheme or --relation");
  return build_ideal(std::move(patterns), std::move(*scheme), registry, label);
}

json basis_json(const std::vector<Polynomial>& polys, const VariableRegistry& registry) {
  json arr = json::array();
  for (const auto& p : polys) arr.push_back(registry.format(p));
  return arr;
}

int cmd_identities(const std::string& pattern, const std::string& order, std::ostream& out) {
  VariableRegistry registry;
  std::vector<Polynomial> ids;
  if (!pattern.empty() && !order.empty()) throw InvalidArgument("give either --pattern or --order");
  if (!pattern.empty())
    ids.push_back(correlation_identity(ConfigurationPattern::parse(pattern), registry));
  else if (order == "1" || order == "2" || order == "3")
    ids = identity_system(std::stoi(order), registry);
  else
    throw InvalidArgument("--pattern or --order {1|2|3} is required");
  for (const auto& p : ids) out << registry.format(p) << '\n';
  return kExitOk;
}

int cmd_ideal(const SystemOptions& o, std::ostream& out) {
  VariableRegistry registry;
  Ideal ideal = make_ideal(o, registry);
  for (const auto& g : ideal.generators) out << registry.format(g) << '\n';
  return kExitOk;
}

int cmd_groebner(const SystemOptions& o, bool trace, std::ostream& out, std::ostream& err) {
  VariableRegistry registry;
  Ideal ideal = make_ideal(o, registry);
  BuchbergerOptions options;
  if (trace)
    options.trace = [&](const PairTrace& t) {
      auto lcm_text = registry.format(Polynomial::term(Rational(1), t.lcm));
      if (t.skipped_coprime)
        err << fmt::format("pair ({}, {}) lcm {}: coprime, skipped\n", t.first, t.second, lcm_text);
      else if (t.remainder.is_zero())
        err << fmt::format("pair ({}, {}) lcm {}: reduces to 0\n", t.first, t.second, lcm_text);
      else
        err << fmt::format("pair ({}, {}) lcm {}: new element {}\n", t.first, t.second, lcm_text,
                           registry.format(t.remainder));
    };
  GroebnerBasis gb = buchberger(ideal.generators, registry.order(), options);
  for (const auto& g : gb.elements) out << registry.format(g) << '\n';
  return kExitOk;
}

int cmd_approx(const SystemOptions& o, const std::string& format, const std::vector<std::string>& args,
               std::ostream& out) {
  VariableRegistry registry;
  Ideal ideal = make_ideal(o, registry);
  GroebnerBasis gb = buchberger(ideal.generators, registry.order());

  json j;
  j["order"] = ideal.label;
  j["scheme"] = ideal.scheme.name();
  j["generators"] = basis_json(ideal.generators, registry);
  j["basis"] = basis_json(gb.elements, registry);
  j["manifest"] = manifest(args, std::nullopt);

  std::optional<ApproximationResult> result;
  std::string degenerate_reason;
  try {
    result = solve(gb, registry, ideal.label);
  } catch (const Degenerate& e) {
    degenerate_reason = e.what();
  }

  if (!result) {
    j["degenerate"] = true;
    j["message"] = "trivial solution only";
    if (format == "json") {
      out << j.dump(2) << '\n';
    } else {
      out << "order: " << ideal.label << '\n' << "basis:\n";
      for (const auto& g : gb.elements) out << "  " << registry.format(g) << '\n';
      out << "trivial solution only (" << degenerate_reason << ")\n";
    }
    return kExitDegenerate;
  }

  const auto& r = *result;
  auto branch = closed_form_branch(r, registry);
  j["degenerate"] = false;
  j["elimination"] = registry.format(r.elim);
  j["nontrivial"] = registry.format(r.nontrivial);
  j["elim_scalar"] = r.elim_scalar.get_str();
  j["lambda_c"] = {{"value", r.lambda_c.value},
                   {"exact", r.lambda_c.exact_text() ? json(*r.lambda_c.exact_text()) : json(nullptr)}};
  j["branch"] = branch ? json(*branch) : json(nullptr);
  j["discriminant"] = r.discriminant ? json(registry.format(*r.discriminant)) : json(nullptr);

  if (format == "json") {
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "order: " << ideal.label << '\n' << "basis:\n";
  for (const auto& g : gb.elements) out << "  " << registry.format(g) << '\n';
  out << "elimination: " << registry.format(r.elim) << '\n';
  out << "nontrivial: " << registry.format(r.nontrivial) << '\n';
  out << "lambda_c: " << fmt12(r.lambda_c.value);
  if (auto exact = r.lambda_c.exact_text(); exact && *exact != fmt12(r.lambda_c.value)) out << " = " << *exact;
  out << '\n';
  if (branch) out << "branch: " << *branch << '\n';
  if (r.discriminant) out << "D = " << registry.format(*r.discriminant) << '\n';
  return kExitOk;
}

ApproximationResult solve_order(const std::string& order_label, VariableRegistry& registry) {
  auto order = parse_approximation_order(order_label);
  Ideal ideal = build_ideal(order, registry);
  GroebnerBasis gb = buchberger(ideal.generators, registry.order());
  return solve(gb, registry, ideal.label);
}

int cmd_sweep(const std::string& order, double from, double to, double step, const std::string& format,
              const std::vector<std::string>& args, std::ostream& out) {
  if (!(step > 0)) throw InvalidArgument("--step must be positive");
  if (to < from) throw InvalidArgument("--to must not be below --from");
  VariableRegistry registry;
  ApproximationResult r = solve_order(order, registry);
  std::vector<std::pair<double, double>> rows;
  auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    double lambda = from + static_cast<double>(k) * step;
    rows.emplace_back(lambda, r.density(lambda));
  }
  json m = manifest(args, std::nullopt);
  if (format == "json") {
    json j = {{"order", r.order_label}, {"manifest", m}, {"rows", json::array()}};
    for (const auto& [l, rho] : rows) j["rows"].push_back({{"lambda", l}, {"rho", rho}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "# " << m.dump() << '\n' << "lambda,rho\n";
  for (const auto& [l, rho] : rows) out << fmt12(l) << ',' << fmt12(rho) << '\n';
  return kExitOk;
}

json estimate_json(const SimulationEstimate& e) {
  return {{"mean", e.mean},
          {"half_width", e.half_width},
          {"replicas", e.replicas},
          {"elapsed_sim_time", e.elapsed_sim_time}};
}

struct SimOptions {
  double lambda = -1;
  std::string pattern = "o";
  std::size_t L = 400;
  double T = 200;
  std::size_t replicas = 200;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string mode = "extinction";
};

void add_sim_options(CLI::App* cmd, SimOptions& o) {
  cmd->add_option("--lambda", o.lambda, "Infection rate")->required();
  cmd->add_option("--L", o.L, "Ring size");
  cmd->add_option("--T", o.T, "Time horizon");
  cmd->add_option("--replicas", o.replicas, "Number of replicas");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores); results do not depend on it");
}

int cmd_simulate(const SimOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  auto started = std::chrono::steady_clock::now();
  auto pattern = ConfigurationPattern::parse(o.pattern);
  json j;
  j["mode"] = o.mode;
  j["params"] = {{"lambda", o.lambda}, {"pattern", pattern.str()}, {"L", o.L},       {"T", o.T},
                 {"replicas", o.replicas}, {"seed", o.seed}};
  SimConfig config{o.lambda, o.L, o.T, o.replicas, o.seed, InitialCondition::from_pattern(pattern), o.threads};
  if (o.mode == "extinction") {
    auto e = extinction_probability(config);
    j["mean"] = e.mean;
    j["half_width"] = e.half_width;
    j["elapsed_sim_time"] = e.elapsed_sim_time;
  } else if (o.mode == "density") {
    config.initial = InitialCondition::all_ones();
    auto e = density_estimate(config);
    j["mean"] = e.mean;
    j["half_width"] = e.half_width;
    j["elapsed_sim_time"] = e.elapsed_sim_time;
  } else if (o.mode == "duality") {
    auto d = duality_check(o.lambda, pattern, o.L, o.T, o.replicas, o.seed, o.threads);
    j["lhs"] = estimate_json(d.vacancy);
    j["rhs"] = estimate_json(d.extinction);
    j["mean"] = d.vacancy.mean - d.extinction.mean;
    j["half_width"] = std::hypot(d.vacancy.half_width, d.extinction.half_width);
    j["elapsed_sim_time"] = d.vacancy.elapsed_sim_time + d.extinction.elapsed_sim_time;
  } else {
    throw InvalidArgument(fmt::format("unknown mode '{}'", o.mode));
  }
  j["rng"] = Rng::kName;
  j["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  j["manifest"] = manifest(args, o.seed);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_compare(const std::string& order, const SimOptions& o, const std::vector<std::string>& args,
                std::ostream& out) {
  VariableRegistry registry;
  ApproximationResult r = solve_order(order, registry);
  double rho = r.density(o.lambda);
  SimConfig config{o.lambda, o.L, o.T, o.replicas, o.seed, InitialCondition::single_site(), o.threads};
  auto extinction = extinction_probability(config);
  config.initial = InitialCondition::all_ones();
  auto dens = density_estimate(config);
  json j = {{"order", r.order_label},
            {"lambda", o.lambda},
            {"rho_approx", rho},
            {"rho_sim", dens.mean},
            {"ci", dens.half_width},
            {"extinction_approx", 1.0 - rho},
            {"extinction_sim", extinction.mean},
            {"extinction_ci", extinction.half_width},
            {"params", {{"L", o.L}, {"T", o.T}, {"replicas", o.replicas}, {"seed", o.seed}}},
            {"rng", Rng::kName},
            {"manifest", manifest(args, o.seed)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-basis approximations and Monte Carlo for the 1D contact process", "cpgb"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string pattern;
  std::string id_order;
  auto* identities = app.add_subcommand("identities", "Print correlation identities");
  identities->add_option("--pattern", pattern, "Pattern such as ooxo");
  identities->add_option("--order", id_order, "All identities used by order 1, 2 or 3");

  SystemOptions ideal_opts;
  auto* ideal = app.add_subcommand("ideal", "Print the generators of an approximation ideal");
  add_system_options(ideal, ideal_opts);

  SystemOptions gb_opts;
  bool trace = false;
  auto* groebner = app.add_subcommand("groebner", "Print the reduced Groebner basis");
  add_system_options(groebner, gb_opts);
  groebner->add_flag("--trace", trace, "Log critical pairs to stderr");

  SystemOptions approx_opts;
  std::string approx_out = "text";
  auto* approx = app.add_subcommand("approx", "Solve an approximation: branch, density and bound");
  add_system_options(approx, approx_opts);
  approx->add_option("--out", approx_out)->check(CLI::IsMember({"text", "json"}));

  std::string sweep_order = "3";
  double from = 1.0;
  double to = 5.0;
  double step = 0.05;
  std::string sweep_out = "csv";
  auto* sweep = app.add_subcommand("sweep", "Tabulate the approximate density over a range of rates");
  sweep->add_option("--order", sweep_order)->check(CLI::IsMember({"1", "2", "3"}));
  sweep->add_option("--from", from);
  sweep->add_option("--to", to);
  sweep->add_option("--step", step);
  sweep->add_option("--out", sweep_out)->check(CLI::IsMember({"csv", "json"}));

  SimOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates (JSON)");
  add_sim_options(simulate, sim_opts);
  simulate->add_option("--pattern", sim_opts.pattern, "Initial pattern for extinction and duality");
  simulate->add_option("--mode", sim_opts.mode)->check(CLI::IsMember({"extinction", "density", "duality"}));

  SimOptions cmp_opts;
  std::string cmp_order = "3";
  auto* compare = app.add_subcommand("compare", "Approximation against simulation at one rate (JSON)");
  add_sim_options(compare, cmp_opts);
  compare->add_option("--order", cmp_order)->check(CLI::IsMember({"1", "2", "3"}));

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*identities) return cmd_identities(pattern, id_order, out);
    if (*ideal) return cmd_ideal(ideal_opts, out);
    if (*groebner) return cmd_groebner(gb_opts, trace, out, err);
    if (*approx) return cmd_approx(approx_opts, approx_out, args, out);
    if (*sweep) return cmd_sweep(sweep_order, from, to, step, sweep_out, args, out);
    if (*simulate) return cmd_simulate(sim_opts, args, out);
    if (*compare) return cmd_compare(cmp_order, cmp_opts, args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptyPattern& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Degenerate& e) {
    err << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const NoEliminationElement& e) {
    err << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const MultipleEliminationElements& e) {
    err << "degenerate: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace cpgb
