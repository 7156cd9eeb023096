#pragma once

// JSON wire formats: bodies, discrete sets, trajectories, verdicts and
// reports, plus a dump that prints floating-point fields at 12 significant
// digits so identical runs serialize byte-identically.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "mobsamp/decide.hpp"
#include "mobsamp/density.hpp"
#include "mobsamp/errors.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/gridfield.hpp"
#include "mobsamp/trajectory.hpp"
#include "mobsamp/uniqueness.hpp"

namespace mobsamp {

using json = nlohmann::json;

namespace jsondetail {

inline const json& require(const json& j, const char* field, const std::string& context) {
  if (!j.contains(field))
    fail(ErrorCode::SchemaError, context + ": missing required field \"" + field + "\"");
  return j.at(field);
}

inline double require_number(const json& j, const char* field, const std::string& context) {
  const json& v = require(j, field, context);
  if (!v.is_number()) fail(ErrorCode::SchemaError, context + ": field \"" + field + "\" must be a number");
  return v.get<double>();
}

inline Vec2 parse_vec2(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::SchemaError, context + ": expected a [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace jsondetail

// ---------------------------------------------------------------------------
// ConvexBody

inline json body_to_json(const ConvexBody& b) {
  json j;
  if (b.is_disk()) {
    j["kind"] = "disk";
    j["center"] = {b.center.x, b.center.y};
    j["radius"] = b.radius;
  } else {
    j["kind"] = "polygon";
    json verts = json::array();
    for (const Vec2& v : b.vertices) verts.push_back({v.x, v.y});
    j["vertices"] = std::move(verts);
  }
  return j;
}

inline ConvexBody body_from_json(const json& j, const std::string& context = "body") {
  const json& kind = jsondetail::require(j, "kind", context);
  if (kind == "disk") {
    const Vec2 c = jsondetail::parse_vec2(jsondetail::require(j, "center", context), context + ".center");
    return ConvexBody::disk(c, jsondetail::require_number(j, "radius", context));
  }
  if (kind == "polygon") {
    const json& verts = jsondetail::require(j, "vertices", context);
    if (!verts.is_array() || verts.size() < 3)
      fail(ErrorCode::SchemaError, context + ".vertices: need at least 3 vertices");
    std::vector<Vec2> pts;
    for (const auto& v : verts) pts.push_back(jsondetail::parse_vec2(v, context + ".vertices"));
    return ConvexBody::polygon(std::move(pts));
  }
  fail(ErrorCode::SchemaError, context + ".kind: expected \"polygon\" or \"disk\"");
}

// ---------------------------------------------------------------------------
// DiscreteSet

inline json set_to_json(const DiscreteSet& s) {
  json j;
  j["dim"] = s.dim;
  switch (s.kind) {
    case DiscreteSet::Kind::Arithmetic:
      j["kind"] = "arithmetic";
      j["step"] = s.step;
      j["offset"] = s.offset;
      break;
    case DiscreteSet::Kind::Ray:
      j["kind"] = "ray";
      j["step"] = s.step;
      j["start"] = s.offset;
      break;
    case DiscreteSet::Kind::Explicit1D:
      j["kind"] = "explicit";
      j["points"] = s.points1d;
      j["r_trunc"] = s.r_trunc;
      break;
    case DiscreteSet::Kind::Lattice2D:
      j["kind"] = "lattice";
      j["basis"] = {{s.basis0.x, s.basis0.y}, {s.basis1.x, s.basis1.y}};
      break;
    case DiscreteSet::Kind::Explicit2D: {
      j["kind"] = "explicit";
      json pts = json::array();
      for (const Vec2& p : s.points2d) pts.push_back({p.x, p.y});
      j["points"] = std::move(pts);
      j["r_trunc"] = s.r_trunc;
      break;
    }
    case DiscreteSet::Kind::Union: {
      j["kind"] = "union";
      json parts = json::array();
      for (const auto& p : s.parts) parts.push_back(set_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

inline DiscreteSet set_from_json(const json& j, const std::string& context = "set") {
  const json& kind = jsondetail::require(j, "kind", context);
  const int dim = j.contains("dim") ? j.at("dim").get<int>() : 1;
  if (kind == "arithmetic")
    return DiscreteSet::arithmetic(jsondetail::require_number(j, "step", context),
                                   j.contains("offset") ? j.at("offset").get<double>() : 0.0);
  if (kind == "ray")
    return DiscreteSet::ray(jsondetail::require_number(j, "step", context),
                            jsondetail::require_number(j, "start", context));
  if (kind == "lattice") {
    const json& basis = jsondetail::require(j, "basis", context);
    if (!basis.is_array() || basis.size() != 2)
      fail(ErrorCode::SchemaError, context + ".basis: expected two basis vectors");
    return DiscreteSet::lattice(jsondetail::parse_vec2(basis[0], context + ".basis"),
                                jsondetail::parse_vec2(basis[1], context + ".basis"));
  }
  if (kind == "explicit") {
    const json& pts = jsondetail::require(j, "points", context);
    const double r = jsondetail::require_number(j, "r_trunc", context);
    if (!pts.is_array()) fail(ErrorCode::SchemaError, context + ".points: expected an array");
    if (dim == 2 || (!pts.empty() && pts[0].is_array())) {
      std::vector<Vec2> out;
      for (const auto& p : pts) out.push_back(jsondetail::parse_vec2(p, context + ".points"));
      return DiscreteSet::explicit2d(std::move(out), r);
    }
    std::vector<double> out;
    for (const auto& p : pts) {
      if (!p.is_number()) fail(ErrorCode::SchemaError, context + ".points: expected numbers");
      out.push_back(p.get<double>());
    }
    return DiscreteSet::explicit1d(std::move(out), r);
  }
  if (kind == "union") {
    const json& parts = jsondetail::require(j, "parts", context);
    if (!parts.is_array() || parts.empty())
      fail(ErrorCode::SchemaError, context + ".parts: expected a nonempty array");
    std::vector<DiscreteSet> members;
    for (const auto& p : parts) members.push_back(set_from_json(p, context + ".parts"));
    return DiscreteSet::set_union(std::move(members));
  }
  fail(ErrorCode::SchemaError, context + ".kind: unknown set kind");
}

// ---------------------------------------------------------------------------
// Trajectory

inline json trajectory_to_json(const Trajectory& t) {
  json j;
  switch (t.family) {
    case Trajectory::Family::ParallelLines:
      j["family"] = "parallel_lines";
      j["direction"] = {t.line_direction.v.x, t.line_direction.v.y};
      j["offsets"] = set_to_json(t.offsets);
      break;
    case Trajectory::Family::DilatedBoundary:
      j["family"] = "dilated_boundary";
      j["body"] = body_to_json(t.base);
      j["dilations"] = set_to_json(t.dilations);
      break;
    case Trajectory::Family::TranslatedCircles:
      j["family"] = "translated_circles";
      j["radius"] = t.circle_radius;
      j["centers"] = set_to_json(t.centers);
      break;
    case Trajectory::Family::Polyline: {
      j["family"] = "polyline";
      json chains = json::array();
      for (const auto& chain : t.chains) {
        json c = json::array();
        for (const Vec2& p : chain) c.push_back({p.x, p.y});
        chains.push_back(std::move(c));
      }
      j["chains"] = std::move(chains);
      break;
    }
  }
  return j;
}

inline Trajectory trajectory_from_json(const json& j, const std::string& context = "trajectory") {
  const json& fam = jsondetail::require(j, "family", context);
  if (fam == "parallel_lines") {
    const Vec2 d = jsondetail::parse_vec2(jsondetail::require(j, "direction", context),
                                          context + ".direction");
    return Trajectory::parallel_lines(Direction{d},
                                      set_from_json(jsondetail::require(j, "offsets", context),
                                                    context + ".offsets"));
  }
  if (fam == "dilated_boundary")
    return Trajectory::dilated_boundary(
        body_from_json(jsondetail::require(j, "body", context), context + ".body"),
        set_from_json(jsondetail::require(j, "dilations", context), context + ".dilations"));
  if (fam == "translated_circles")
    return Trajectory::translated_circles(
        jsondetail::require_number(j, "radius", context),
        set_from_json(jsondetail::require(j, "centers", context), context + ".centers"));
  if (fam == "polyline") {
    const json& chains = jsondetail::require(j, "chains", context);
    if (!chains.is_array() || chains.empty())
      fail(ErrorCode::SchemaError, context + ".chains: expected a nonempty array");
    std::vector<std::vector<Vec2>> out;
    for (const auto& c : chains) {
      std::vector<Vec2> chain;
      for (const auto& p : c) chain.push_back(jsondetail::parse_vec2(p, context + ".chains"));
      out.push_back(std::move(chain));
    }
    return Trajectory::polyline(std::move(out));
  }
  fail(ErrorCode::SchemaError, context + ".family: unknown trajectory family");
}

// ---------------------------------------------------------------------------
// Reports

inline json verdict_to_json(const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["rule"] = v.rule;
  j["margin"] = v.margin;
  json w = json::array();
  for (const Vec2& p : v.witnesses) w.push_back({p.x, p.y});
  j["witnesses"] = std::move(w);
  j["exactness"] = v.exact ? "exact" : "windowed";
  if (!v.exact) j["window_radius"] = v.window_radius;
  return j;
}

inline json transfer_to_json(const TransferVerdict& t) {
  json j;
  j["claim"] = to_string(t.claim);
  j["rule"] = t.rule;
  j["epsilon"] = t.epsilon;
  j["p_range"] = "[1,inf)";
  j["scaled_spectrum"] = body_to_json(t.scaled_spectrum);
  j["source_status"] = to_string(t.source_status);
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

inline json probe_to_json(const ProbeReport& r) {
  json j;
  j["sup_ratio"] = r.sup_ratio;
  j["l2_ratio"] = r.l2_ratio;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["resolution"] = {{"N", r.n}, {"L", r.period}, {"eta", r.eta}};
  return j;
}

inline json estimate_to_json(const MeanEstimate& e) {
  json j;
  j["value"] = e.value;
  j["std_error"] = e.std_error;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  return j;
}

inline json density_report_to_json(const DensityReport& r) {
  json j;
  j["value"] = r.value;
  j["exactness"] = r.exact ? "exact" : "windowed";
  if (!r.exact) j["window_radius"] = r.window_radius;
  return j;
}

// ---------------------------------------------------------------------------
// Fixed-precision dump

namespace jsondetail {

inline void dump12(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump12(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump12(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
      } else if (std::isnan(v)) {
        out += "\"nan\"";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out += buf;
      }
      break;
    }
    default:
      out += j.dump();
      break;
  }
}

}  // namespace jsondetail

// Serialization with every float printed at 12 significant digits;
// identical inputs produce byte-identical strings.
inline std::string dump_fixed12(const json& j) {
  std::string out;
  jsondetail::dump12(j, out);
  return out;
}

}  // namespace mobsamp
