#include "fattail/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fattail/chaos.hpp"
#include "fattail/error.hpp"
#include "fattail/ingest.hpp"
#include "fattail/pipeline.hpp"
#include "fattail/spatial.hpp"

namespace fattail::cli {
namespace {

struct SimulateArgs {
  std::string system;
  std::optional<double> dt;
  std::optional<std::int64_t> steps;
  std::optional<std::int64_t> discard;
  std::vector<std::string> params;
  std::optional<double> perturb;
  std::string out;
};

struct FitOutputArgs {
  std::optional<std::size_t> bins;
  std::string report;
  std::string overlay;
};

struct AnalyzeArgs {
  std::string input;
  std::string column = "0";
  char delimiter = ',';
  bool header = false;
  std::string method = "plain";
  int order = 1;
  int k = 5;
  FitOutputArgs output;
};

struct SpatialArgs {
  std::string raster;
  std::string axis;
  FitOutputArgs output;
};

// Flag values that parse but are semantically wrong.
struct UsageError {
  std::string message;
};

void add_fit_output_flags(CLI::App* cmd, FitOutputArgs& a) {
  cmd->add_option("--bins", a.bins, "Histogram bin count (default Freedman-Diaconis)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--report", a.report, "Write the JSON fit report here");
  cmd->add_option("--overlay", a.overlay, "Write the CDF overlay CSV here");
}

ChaosSpec build_chaos_spec(const SimulateArgs& a) {
  ChaosSpec spec;
  try {
    spec = default_spec(a.system);
  } catch (const Error& e) {
    throw UsageError{e.message()};
  }
  if (a.dt) spec.dt = *a.dt;
  if (a.steps) {
    spec.steps = *a.steps;
    spec.discard = default_discard(spec.steps);
  }
  if (a.discard) spec.discard = *a.discard;
  for (const auto& p : a.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError{"--param expects name=value, got '" + p + "'"};
    }
    const std::string name = p.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw UsageError{"--param value is not a number: '" + p + "'"};
    }
    if (!spec.params.contains(name)) {
      throw UsageError{"unknown parameter '" + name + "' for " + a.system};
    }
    spec.params[name] = value;
  }
  spec.seed_perturbation = a.perturb;
  try {
    validate(spec);
  } catch (const Error& e) {
    throw UsageError{e.message()};
  }
  return spec;
}

void print_kv(std::ostream& out, std::string_view key, const std::string& value) {
  out << key << " = " << value << '\n';
}

void emit_analysis(const Analysis& a, const FitOutputArgs& o, std::ostream& out) {
  if (!o.report.empty()) write_report(a.fit, a.dist, o.report);
  if (!o.overlay.empty()) write_overlay(a.dist, a.fit, o.overlay);
  const Report r = make_report(a.fit, a.dist);
  print_kv(out, "n", std::to_string(r.n));
  print_kv(out, "nu", format_number(r.nu));
  print_kv(out, "location", format_number(r.location));
  print_kv(out, "scale", format_number(r.scale));
  print_kv(out, "mean_over_std", format_number(r.mean_over_std));
  print_kv(out, "pp_correlation", format_number(r.pp_correlation));
  print_kv(out, "tail_excess_3sigma", format_number(r.tail_excess_3sigma));
  print_kv(out, "normal_limit_flag", r.normal_limit_flag ? "true" : "false");
  print_kv(out, "diff_method", r.diff_method);
  print_kv(out, "diff_order", std::to_string(r.diff_order));
  print_kv(out, "k_window", std::to_string(r.k_window));
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const ChaosSpec spec = build_chaos_spec(a);
  const Trajectory traj = simulate(spec);
  if (a.out.empty()) {
    write_trajectory(traj, out);
  } else {
    write_trajectory(traj, a.out);
  }
  return kExitOk;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  ColumnSelector sel;
  sel.path = a.input;
  sel.delimiter = a.delimiter;
  sel.skip_header = a.header;
  const bool numeric = !a.column.empty() &&
      std::all_of(a.column.begin(), a.column.end(),
                  [](unsigned char c) { return std::isdigit(c) != 0; });
  if (numeric) {
    sel.column = static_cast<std::size_t>(std::stoull(a.column));
  } else {
    sel.column = a.column;
  }
  DiffSpec spec;
  spec.method = parse_diff_method(a.method);
  spec.order = a.order;
  spec.k_window = a.k;

  const Series series = read_series(sel);
  emit_analysis(analyze_series(series, spec, a.output.bins), a.output, out);
  return kExitOk;
}

int cmd_spatial(const SpatialArgs& a, std::ostream& out) {
  const Raster raster = read_raster(a.raster);
  Series diffs = spatial_diff(raster, parse_axis(a.axis));
  emit_analysis(analyze_differences(std::move(diffs), DiffSpec{}, a.output.bins),
                a.output, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Difference-distribution analysis and Student t fitting"};
  app.name(args.empty() ? "fattail" : args.front());
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Integrate a chaotic system with RK4");
  simulate_cmd->add_option("--system", sim.system, "lorenz | duffing | chua")
      ->required()
      ->check(CLI::IsMember({"lorenz", "duffing", "chua"}));
  simulate_cmd->add_option("--dt", sim.dt, "Integration and sampling step")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--steps", sim.steps, "Total integration steps")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--discard", sim.discard, "Transient steps to drop")
      ->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--param", sim.params, "Override a parameter, name=value");
  simulate_cmd->add_option("--perturb", sim.perturb, "Offset added to x0");
  simulate_cmd->add_option("--out", sim.out, "Output CSV (default stdout)");

  AnalyzeArgs ana;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Difference a series and fit a t distribution");
  analyze_cmd->add_option("input", ana.input, "Delimited text file")->required();
  analyze_cmd->add_option("--column", ana.column, "Column index or header name");
  analyze_cmd->add_option("--delimiter", ana.delimiter, "Field delimiter");
  analyze_cmd->add_flag("--header", ana.header, "First line is a header");
  analyze_cmd->add_option("--method", ana.method, "plain | ratio | log")
      ->check(CLI::IsMember({"plain", "ratio", "log"}));
  analyze_cmd->add_option("--order", ana.order, "Difference order")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--k", ana.k, "Trailing window for ratio differences")
      ->check(CLI::PositiveNumber);
  add_fit_output_flags(analyze_cmd, ana.output);

  SpatialArgs spa;
  auto* spatial_cmd =
      app.add_subcommand("spatial", "Difference a raster along one axis and fit");
  spatial_cmd->add_option("raster", spa.raster, "Whitespace matrix file")->required();
  spatial_cmd->add_option("--axis", spa.axis, "row | col")
      ->required()
      ->check(CLI::IsMember({"row", "col"}));
  add_fit_output_flags(spatial_cmd, spa.output);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("fattail");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (simulate_cmd->parsed()) return cmd_simulate(sim, out);
    if (analyze_cmd->parsed()) return cmd_analyze(ana, out);
    if (spatial_cmd->parsed()) return cmd_spatial(spa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n' << simulate_cmd->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace fattail::cli
