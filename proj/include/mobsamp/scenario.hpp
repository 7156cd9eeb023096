#pragma once

// Batch front end: scenario records parsed from JSON, dispatched to the
// decide/verify/density/uniqueness modules, with CSV emission for plots.
// Exit codes: 0 success, 2 schema/validation failure (diagnostic names the
// offending field), 3 propagated module errors.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "mobsamp/decide.hpp"
#include "mobsamp/density.hpp"
#include "mobsamp/errors.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/gridfield.hpp"
#include "mobsamp/json_io.hpp"
#include "mobsamp/trajectory.hpp"
#include "mobsamp/uniqueness.hpp"

namespace mobsamp {

struct Scenario {
  std::string task;  // decide | verify | density | uniqueness | emit
  std::optional<ConvexBody> spectrum;
  std::optional<Trajectory> trajectory;
  std::optional<DiscreteSet> set;
  std::optional<std::string> family;  // lines | dilated | translated
  std::optional<double> type_a;
  std::optional<double> slope_b;

  int grid_n = 256;
  double period = 16.0;
  double eta = 16.0 / 256.0;
  int trials = 8;
  std::uint64_t seed = 1;
  double tol = kTolGeom;
  double epsilon = 0.1;
  int iters = 500;
  std::int64_t samples = 1'000'000;
  std::vector<double> schedule;
  std::vector<double> t_schedule;
  std::string verify_op = "estimate";  // estimate | witness-lines | adversarial
  std::string out_dir = ".";
  bool cc_holds = true;
  bool c_holds = true;
  bool transfer = false;
};

inline Scenario parse_scenario(const json& j) {
  Scenario s;
  s.task = jsondetail::require(j, "task", "scenario").get<std::string>();
  if (j.contains("spectrum")) s.spectrum = body_from_json(j.at("spectrum"), "spectrum");
  if (j.contains("trajectory")) s.trajectory = trajectory_from_json(j.at("trajectory"), "trajectory");
  if (j.contains("set")) s.set = set_from_json(j.at("set"), "set");
  if (j.contains("family")) s.family = j.at("family").get<std::string>();
  if (j.contains("type_A")) s.type_a = j.at("type_A").get<double>();
  if (j.contains("slope_B")) s.slope_b = j.at("slope_B").get<double>();
  if (j.contains("N")) s.grid_n = j.at("N").get<int>();
  if (j.contains("L")) s.period = j.at("L").get<double>();
  s.eta = j.contains("eta") ? j.at("eta").get<double>() : s.period / s.grid_n;
  if (j.contains("trials")) s.trials = j.at("trials").get<int>();
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("tol")) s.tol = j.at("tol").get<double>();
  if (j.contains("epsilon")) s.epsilon = j.at("epsilon").get<double>();
  if (j.contains("iters")) s.iters = j.at("iters").get<int>();
  if (j.contains("samples")) s.samples = j.at("samples").get<std::int64_t>();
  if (j.contains("schedule")) s.schedule = j.at("schedule").get<std::vector<double>>();
  if (j.contains("t_schedule")) s.t_schedule = j.at("t_schedule").get<std::vector<double>>();
  if (j.contains("op")) s.verify_op = j.at("op").get<std::string>();
  if (j.contains("out_dir")) s.out_dir = j.at("out_dir").get<std::string>();
  if (j.contains("cc_holds")) s.cc_holds = j.at("cc_holds").get<bool>();
  if (j.contains("c_holds")) s.c_holds = j.at("c_holds").get<bool>();
  if (j.contains("transfer")) s.transfer = j.at("transfer").get<bool>();
  return s;
}

struct RunResult {
  int exit_code = 0;
  json output;
};

namespace detail {

inline DensityOptions density_options(const Scenario& s) {
  DensityOptions opt;
  opt.schedule = s.schedule;
  opt.tol = s.tol;
  return opt;
}

inline Verdict decide_scenario(const Scenario& s) {
  if (!s.trajectory) fail(ErrorCode::SchemaError, "scenario: missing required field \"trajectory\"");
  if (!s.spectrum) fail(ErrorCode::SchemaError, "scenario: missing required field \"spectrum\"");
  const Trajectory& P = *s.trajectory;
  const DensityOptions opt = density_options(s);
  switch (P.family) {
    case Trajectory::Family::ParallelLines:
      return decide_parallel_lines(P.offsets, P.offset_direction(), *s.spectrum, opt);
    case Trajectory::Family::DilatedBoundary:
      return decide_dilated(P.base, P.dilations, *s.spectrum, opt);
    case Trajectory::Family::TranslatedCircles:
      return decide_translated_circles(P.centers, P.circle_radius, *s.spectrum, opt);
    case Trajectory::Family::Polyline:
      fail(ErrorCode::SchemaError,
           "trajectory.family: no decision rule covers generic polylines");
  }
  fail(ErrorCode::SchemaError, "trajectory.family: unknown family");
}

inline json verify_scenario(const Scenario& s) {
  if (!s.trajectory) fail(ErrorCode::SchemaError, "scenario: missing required field \"trajectory\"");
  if (!s.spectrum) fail(ErrorCode::SchemaError, "scenario: missing required field \"spectrum\"");
  json out;
  if (s.verify_op == "estimate") {
    const ProbeReport r = estimate_lower_frame_ratio(*s.spectrum, *s.trajectory, s.trials,
                                                     s.grid_n, s.period, s.eta, s.seed);
    out["op"] = "estimate";
    out["report"] = probe_to_json(r);
  } else if (s.verify_op == "witness-lines") {
    const GridField f = witness_lines(*s.spectrum, s.grid_n, s.period);
    const ProbeReport r = probe(*s.trajectory, f, s.eta);
    out["op"] = "witness-lines";
    out["report"] = probe_to_json(r);
    out["off_mask_energy"] = off_mask_energy(f);
  } else if (s.verify_op == "adversarial") {
    const ProbeReport r =
        adversarial_minimize(*s.spectrum, *s.trajectory, s.grid_n, s.period, s.eta, s.iters, s.seed);
    out["op"] = "adversarial";
    out["report"] = probe_to_json(r);
  } else {
    fail(ErrorCode::SchemaError, "op: expected estimate | witness-lines | adversarial");
  }
  return out;
}

inline json density_scenario(const Scenario& s) {
  if (!s.set) fail(ErrorCode::SchemaError, "scenario: missing required field \"set\"");
  const DensityOptions opt = density_options(s);
  json out;
  out["lower_uniform_density"] = density_report_to_json(lower_uniform_density(*s.set, opt));
  try {
    out["separation"] = separation(*s.set);
  } catch (const Error& e) {
    out["separation"] = nullptr;
    out["separation_error"] = error_code_name(e.code());
  }
  if (s.set->dim == 1) {
    try {
      out["symmetrized_density"] = density_report_to_json(symmetrized_density(*s.set, opt));
    } catch (const Error&) {
      // Not a positive set; d^- does not apply.
    }
  }
  return out;
}

inline json uniqueness_scenario(const Scenario& s) {
  if (!s.family) fail(ErrorCode::SchemaError, "scenario: missing required field \"family\"");
  UniquenessQuery q;
  if (*s.family == "lines")
    q.family = UniquenessFamily::Lines;
  else if (*s.family == "dilated")
    q.family = UniquenessFamily::DilatedCircles;
  else if (*s.family == "translated")
    q.family = UniquenessFamily::TranslatedCircles;
  else
    fail(ErrorCode::SchemaError, "family: expected lines | dilated | translated");

  q.type_a = s.type_a.value_or(0.0);
  if (!s.type_a && s.spectrum) q.type_a = bernstein_type(*s.spectrum).a_max;

  json out;
  if (s.slope_b) {
    q.slope_b = *s.slope_b;
  } else if (s.set) {
    std::vector<double> ts = s.t_schedule;
    if (ts.empty()) {
      const double known = s.set->known_radius();
      const double tmax = std::isfinite(known) ? known / std::sqrt(2.0) : 5.0e5;
      for (int i = 8; i >= 0; --i) ts.push_back(tmax / std::pow(1.5, i));
    }
    const SlopeReport slope = liminf_slope(*s.set, ts, density_options(s));
    q.slope_b = slope.value;
    q.slope_infinite = slope.infinite;
    out["slope_B"] = slope.infinite ? json("inf") : json(slope.value);
  } else {
    fail(ErrorCode::SchemaError, "scenario: missing required field \"slope_B\" (or \"set\")");
  }

  ThresholdResult r;
  if (q.family == UniquenessFamily::Lines) {
    r = threshold_lines(q);
  } else if (q.family == UniquenessFamily::DilatedCircles) {
    const MeanEstimate alpha = estimate_alpha(s.samples, s.seed);
    out["alpha"] = estimate_to_json(alpha);
    r = threshold_dilated_circles(q, alpha);
  } else {
    r = threshold_translated_circles(q);
  }
  out["family"] = *s.family;
  out["type_A"] = q.type_a;
  if (!out.contains("slope_B")) out["slope_B"] = q.slope_infinite ? json("inf") : json(q.slope_b);
  out["outcome"] = to_string(r.outcome);
  out["threshold"] = r.threshold;
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IOError, "cannot open " + path + " for writing");
  f << content;
  if (!f) fail(ErrorCode::IOError, "failed writing " + path);
}

inline std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string outline_csv(const ConvexBody& b) {
  std::string csv = "x,y\n";
  for (const Vec2& p : boundary_samples(b, 256)) csv += csv_num(p.x) + "," + csv_num(p.y) + "\n";
  return csv;
}

inline json emit_scenario(const Scenario& s) {
  json out;
  json files = json::array();
  if (s.trajectory) {
    const Bbox box{{0.0, 0.0}, {s.period, s.period}};
    const DiscretePath path = discretize(*s.trajectory, s.eta, box);
    std::string csv = "x,y,component_id,arclength_param\n";
    for (const auto& comp : path.components)
      for (std::size_t i = 0; i < comp.points.size(); ++i)
        csv += csv_num(comp.points[i].x) + "," + csv_num(comp.points[i].y) + "," +
               std::to_string(comp.id) + "," + csv_num(comp.arc_param[i]) + "\n";
    const std::string path_name = s.out_dir + "/trajectory.csv";
    write_file(path_name, csv);
    files.push_back(path_name);
    out["trajectory_rows"] = path.size();
  }
  if (s.spectrum) {
    const std::string f1 = s.out_dir + "/spectrum.csv";
    write_file(f1, outline_csv(*s.spectrum));
    files.push_back(f1);
    const std::string f2 = s.out_dir + "/spectrum_self_difference.csv";
    write_file(f2, outline_csv(minkowski_self_difference(*s.spectrum)));
    files.push_back(f2);
  }
  if (s.trajectory && s.spectrum && s.verify_op == "estimate") {
    // |f| profile along the path for one synthesized field.
    const GridField f = synth_random(*s.spectrum, s.grid_n, s.period, s.seed);
    const FieldEvaluator eval(f);
    const DiscretePath path = discretize(*s.trajectory, s.eta, torus_bbox(f));
    std::string csv = "arclength,abs_f\n";
    double base = 0.0;
    for (const auto& comp : path.components) {
      for (std::size_t i = 0; i < comp.points.size(); ++i)
        csv += csv_num(base + comp.arc_param[i]) + "," +
               csv_num(std::abs(eval(comp.points[i]))) + "\n";
      base += comp.length;
    }
    const std::string f3 = s.out_dir + "/profile.csv";
    write_file(f3, csv);
    files.push_back(f3);
  }
  if (files.empty())
    fail(ErrorCode::SchemaError, "scenario: emit needs \"trajectory\" or \"spectrum\"");
  out["files"] = std::move(files);
  return out;
}

}  // namespace detail

inline RunResult run(const Scenario& s) {
  RunResult res;
  try {
    if (s.task == "decide") {
      const Verdict v = detail::decide_scenario(s);
      res.output = verdict_to_json(v);
      if (s.transfer && s.spectrum) {
        const TransferVerdict t =
            transfer_to_paley_wiener(v, *s.spectrum, s.epsilon, s.cc_holds, s.c_holds);
        res.output["transfer"] = transfer_to_json(t);
      }
    } else if (s.task == "verify") {
      res.output = detail::verify_scenario(s);
    } else if (s.task == "density") {
      res.output = detail::density_scenario(s);
    } else if (s.task == "uniqueness") {
      res.output = detail::uniqueness_scenario(s);
    } else if (s.task == "emit") {
      res.output = detail::emit_scenario(s);
    } else {
      fail(ErrorCode::SchemaError, "task: expected decide | verify | density | uniqueness | emit");
    }
  } catch (const Error& e) {
    res.exit_code = e.code() == ErrorCode::SchemaError ? 2 : 3;
    res.output = json{{"error", error_code_name(e.code())}, {"message", e.what()}};
  }
  return res;
}

inline RunResult run(const json& scenario_json) {
  try {
    return run(parse_scenario(scenario_json));
  } catch (const Error& e) {
    RunResult res;
    res.exit_code = e.code() == ErrorCode::SchemaError ? 2 : 3;
    res.output = json{{"error", error_code_name(e.code())}, {"message", e.what()}};
    return res;
  }
}

}  // namespace mobsamp
