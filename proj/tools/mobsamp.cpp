// mobsamp: decide stable-sampling status of planar trajectory families over
// convex spectra, transfer verdicts to Paley-Wiener mobile sampling, compute
// uniqueness thresholds, and corroborate verdicts numerically on a torus
// grid. One subcommand per task; every stochastic run is seeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mobsamp/json_io.hpp"
#include "mobsamp/scenario.hpp"

namespace {

using mobsamp::json;

struct CommonFlags {
  std::string scenario_file;
  std::optional<std::string> spectrum, trajectory, set;
  std::optional<int> grid_n, trials, iters;
  std::optional<double> period, eta, tol, epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--scenario", f.scenario_file, "scenario JSON file");
  cmd->add_option("--spectrum", f.spectrum, "spectrum body as inline JSON");
  cmd->add_option("--trajectory", f.trajectory, "trajectory as inline JSON");
  cmd->add_option("--set", f.set, "discrete set as inline JSON");
  cmd->add_option("--grid", f.grid_n, "grid size N (power of two)");
  cmd->add_option("--period", f.period, "torus period L");
  cmd->add_option("--eta", f.eta, "path discretization step");
  cmd->add_option("--trials", f.trials, "Monte-Carlo trials");
  cmd->add_option("--seed", f.seed, "base seed for stochastic tasks");
  cmd->add_option("--iters", f.iters, "adversarial iterations");
  cmd->add_option("--samples", f.samples, "Monte-Carlo samples");
  cmd->add_option("--tol", f.tol, "decision tolerance");
  cmd->add_option("--epsilon", f.epsilon, "transfer scaling epsilon");
}

json parse_inline(const std::string& text, const char* field) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    std::fprintf(stderr, "invalid JSON for --%s\n", field);
    std::exit(2);
  }
  return j;
}

json load_scenario(const CommonFlags& f, const std::string& task) {
  json j;
  if (!f.scenario_file.empty()) {
    std::ifstream in(f.scenario_file);
    if (!in) {
      std::fprintf(stderr, "cannot read scenario file %s\n", f.scenario_file.c_str());
      std::exit(2);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    j = json::parse(ss.str(), nullptr, false);
    if (j.is_discarded()) {
      std::fprintf(stderr, "scenario file is not valid JSON\n");
      std::exit(2);
    }
  }
  j["task"] = task;
  if (f.spectrum) j["spectrum"] = parse_inline(*f.spectrum, "spectrum");
  if (f.trajectory) j["trajectory"] = parse_inline(*f.trajectory, "trajectory");
  if (f.set) j["set"] = parse_inline(*f.set, "set");
  if (f.grid_n) j["N"] = *f.grid_n;
  if (f.period) j["L"] = *f.period;
  if (f.eta) j["eta"] = *f.eta;
  if (f.trials) j["trials"] = *f.trials;
  if (f.seed) j["seed"] = *f.seed;
  if (f.iters) j["iters"] = *f.iters;
  if (f.samples) j["samples"] = *f.samples;
  if (f.tol) j["tol"] = *f.tol;
  if (f.epsilon) j["epsilon"] = *f.epsilon;
  return j;
}

int run_and_print(const json& scenario) {
  const mobsamp::RunResult res = mobsamp::run(scenario);
  std::cout << mobsamp::dump_fixed12(res.output) << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mobsamp: stable-sampling decisions, Paley-Wiener transfer, uniqueness "
      "thresholds and grid corroboration for planar trajectory families"};
  app.require_subcommand(1);

  CommonFlags decide_f, verify_f, density_f, uniq_f, emit_f;
  bool transfer = false;
  bool cc_holds = true, c_holds = true;

  auto* decide = app.add_subcommand("decide", "decide SS / NotSS for a trajectory and spectrum");
  add_common(decide, decide_f);
  decide->add_flag("--transfer", transfer, "append the Paley-Wiener transfer verdict");
  decide->add_flag("--cc-holds,!--no-cc-holds", cc_holds,
                   "local lower length condition established");
  decide->add_flag("--c-holds,!--no-c-holds", c_holds, "uniform upper length condition established");

  auto* verify = app.add_subcommand("verify", "numerical corroboration on the torus grid");
  add_common(verify, verify_f);
  std::string op = "estimate";
  verify->add_option("--op", op, "estimate | witness-lines | adversarial");

  auto* density = app.add_subcommand("density", "separation and lower uniform density");
  add_common(density, density_f);

  auto* uniqueness = app.add_subcommand("uniqueness", "uniqueness-set thresholds");
  add_common(uniqueness, uniq_f);
  std::string family;
  std::optional<double> type_a, slope_b;
  uniqueness->add_option("--family", family, "lines | dilated | translated")->required();
  uniqueness->add_option("--type-A", type_a, "exponential type A");
  uniqueness->add_option("--slope-B", slope_b, "counting slope B (omit to compute from --set)");

  auto* emit = app.add_subcommand("emit", "CSV plot data for trajectory and spectrum");
  add_common(emit, emit_f);
  std::string out_dir = ".";
  emit->add_option("--out-dir", out_dir, "output directory for CSV files");

  CLI11_PARSE(app, argc, argv);

  if (decide->parsed()) {
    json j = load_scenario(decide_f, "decide");
    if (transfer) j["transfer"] = true;
    j["cc_holds"] = cc_holds;
    j["c_holds"] = c_holds;
    return run_and_print(j);
  }
  if (verify->parsed()) {
    json j = load_scenario(verify_f, "verify");
    j["op"] = op;
    return run_and_print(j);
  }
  if (density->parsed()) return run_and_print(load_scenario(density_f, "density"));
  if (uniqueness->parsed()) {
    json j = load_scenario(uniq_f, "uniqueness");
    j["family"] = family;
    if (type_a) j["type_A"] = *type_a;
    if (slope_b) j["slope_B"] = *slope_b;
    return run_and_print(j);
  }
  if (emit->parsed()) {
    json j = load_scenario(emit_f, "emit");
    j["out_dir"] = out_dir;
    return run_and_print(j);
  }
  return 2;
}
