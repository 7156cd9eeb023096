#pragma once

// The three structured trajectory families (parallel lines, dilations of a
// convex boundary, translated circles) plus generic polylines: arc length
// inside balls, the uniform upper/lower local-length conditions, and
// covering discretization.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "mobsamp/density.hpp"
#include "mobsamp/errors.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/vec2.hpp"

namespace mobsamp {

struct Bbox {
  Vec2 lo{0.0, 0.0};
  Vec2 hi{1.0, 1.0};

  Bbox inflated(double pad) const { return {lo - Vec2{pad, pad}, hi + Vec2{pad, pad}}; }
  bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  Vec2 center() const { return (lo + hi) * 0.5; }
  double circumradius() const { return dist(lo, hi) * 0.5; }
};

struct Trajectory {
  enum class Family { ParallelLines, DilatedBoundary, TranslatedCircles, Polyline };

  Family family = Family::Polyline;
  Direction line_direction;                // direction of the lines themselves
  DiscreteSet offsets;                     // 1-D, along the orthogonal unit vector
  ConvexBody base = ConvexBody::disk({0.0, 0.0}, 1.0);  // dilated family
  DiscreteSet dilations;                   // 1-D positive
  double circle_radius = 1.0;
  DiscreteSet centers;                     // 2-D
  std::vector<std::vector<Vec2>> chains;   // polyline vertex chains

  static Trajectory parallel_lines(const Direction& line_dir, DiscreteSet offsets) {
    if (offsets.dim != 1) fail(ErrorCode::InvalidArgument, "line offsets must be 1-D");
    Trajectory t;
    t.family = Family::ParallelLines;
    t.line_direction = line_dir;
    t.offsets = std::move(offsets);
    return t;
  }

  static Trajectory dilated_boundary(ConvexBody base, DiscreteSet dilations) {
    if (signed_distance(base, {0.0, 0.0}) > -kTolGeom)
      fail(ErrorCode::OriginNotInterior, "dilated family needs the origin inside the base body");
    if (dilations.dim != 1) fail(ErrorCode::InvalidArgument, "dilation set must be 1-D");
    detail::require_positive_1d(dilations);
    Trajectory t;
    t.family = Family::DilatedBoundary;
    t.base = std::move(base);
    t.dilations = std::move(dilations);
    return t;
  }

  static Trajectory translated_circles(double radius, DiscreteSet centers) {
    if (radius <= 0.0) fail(ErrorCode::InvalidArgument, "circle radius must be positive");
    if (centers.dim != 2) fail(ErrorCode::InvalidArgument, "circle centers must be 2-D");
    Trajectory t;
    t.family = Family::TranslatedCircles;
    t.circle_radius = radius;
    t.centers = std::move(centers);
    return t;
  }

  static Trajectory polyline(std::vector<std::vector<Vec2>> chains) {
    if (chains.empty()) fail(ErrorCode::EmptySet, "polyline needs at least one chain");
    Trajectory t;
    t.family = Family::Polyline;
    t.chains = std::move(chains);
    return t;
  }

  Direction offset_direction() const { return line_direction.orthogonal(); }
};

// ---------------------------------------------------------------------------
// Closed-form length primitives

namespace detail {

inline double segment_length_in_ball(const Vec2& a, const Vec2& b, const Vec2& c, double r) {
  const Vec2 w = b - a;
  const double len = w.norm();
  if (len <= 0.0) return 0.0;
  const Vec2 u = w / len;
  const Vec2 d = a - c;
  const double m = dot(u, d);
  const double disc = m * m - (d.norm2() - r * r);
  if (disc <= 0.0) return 0.0;
  const double sq = std::sqrt(disc);
  const double t0 = std::max(0.0, -m - sq);
  const double t1 = std::min(len, -m + sq);
  return std::max(0.0, t1 - t0);
}

// Arc length of the circle (center v, radius rho) inside the closed ball
// B_r(c).
inline double circle_length_in_ball(const Vec2& v, double rho, const Vec2& c, double r) {
  const double d = dist(v, c);
  if (d + rho <= r + 1e-15) return 2.0 * M_PI * rho;  // circle entirely inside
  if (d >= r + rho) return 0.0;                       // disks disjoint
  if (rho >= d + r) return 0.0;                       // ball inside the circle's hole
  if (d < 1e-15) return 0.0;                          // concentric, radii differ
  const double cosphi = std::clamp((d * d + rho * rho - r * r) / (2.0 * d * rho), -1.0, 1.0);
  return 2.0 * rho * std::acos(cosphi);
}

// Vertices of the dilate q * base (polygon case).
inline std::vector<Vec2> dilate_vertices(const ConvexBody& base, double q) {
  std::vector<Vec2> pts = base.vertices;
  for (Vec2& p : pts) p = p * q;
  return pts;
}

inline double polygon_boundary_length_in_ball(const std::vector<Vec2>& verts, const Vec2& c,
                                              double r) {
  double s = 0.0;
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i)
    s += segment_length_in_ball(verts[i], verts[(i + 1) % n], c, r);
  return s;
}

// Distances from the origin to the nearest/farthest boundary point of a
// body with the origin interior; they bracket which dilates can reach a
// given annulus.
inline std::pair<double, double> boundary_radial_range(const ConvexBody& body) {
  if (body.is_disk()) {
    const double d = body.center.norm();
    return {body.radius - d, body.radius + d};
  }
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& pl : edge_planes(body)) lo = std::min(lo, pl.offset / pl.normal.norm());
  for (const Vec2& v : body.vertices) hi = std::max(hi, v.norm());
  return {lo, hi};
}

}  // namespace detail

// Total arc length of the trajectory inside the closed ball B_r(c).
// Exact closed forms for lines and circles; per-edge chords for polygonal
// boundaries and polylines.
inline double arc_length_in_ball(const Trajectory& P, const Vec2& c, double r) {
  if (r <= 0.0) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
  switch (P.family) {
    case Trajectory::Family::ParallelLines: {
      const Vec2 vl = P.offset_direction().v;
      const double proj = dot(c, vl);
      std::vector<double> offs;
      try {
        offs = enumerate1d(P.offsets, proj - r, proj + r);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ExceedsTruncation)
          fail(ErrorCode::UnboundedContribution,
               "offset description does not cover the requested ball");
        throw;
      }
      double s = 0.0;
      for (double a : offs) {
        const double d = std::abs(proj - a);
        if (d <= r) s += 2.0 * std::sqrt(std::max(0.0, r * r - d * d));
      }
      return s;
    }
    case Trajectory::Family::DilatedBoundary: {
      const auto [lob, hib] = detail::boundary_radial_range(P.base);
      const double dc = c.norm();
      const double qlo = std::max(0.0, (dc - r) / hib);
      const double qhi = (dc + r) / lob;
      std::vector<double> qs;
      try {
        qs = enumerate1d(P.dilations, qlo, qhi);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ExceedsTruncation)
          fail(ErrorCode::UnboundedContribution,
               "dilation description does not cover the requested ball");
        throw;
      }
      double s = 0.0;
      for (double q : qs) {
        if (q <= 0.0) continue;
        if (P.base.is_disk())
          s += detail::circle_length_in_ball(P.base.center * q, P.base.radius * q, c, r);
        else
          s += detail::polygon_boundary_length_in_ball(detail::dilate_vertices(P.base, q), c, r);
      }
      return s;
    }
    case Trajectory::Family::TranslatedCircles: {
      std::vector<Vec2> vs;
      try {
        vs = enumerate2d(P.centers, c, r + P.circle_radius);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ExceedsTruncation)
          fail(ErrorCode::UnboundedContribution,
               "center description does not cover the requested ball");
        throw;
      }
      double s = 0.0;
      for (const Vec2& v : vs) s += detail::circle_length_in_ball(v, P.circle_radius, c, r);
      return s;
    }
    case Trajectory::Family::Polyline: {
      double s = 0.0;
      for (const auto& chain : P.chains)
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          s += detail::segment_length_in_ball(chain[i], chain[i + 1], c, r);
      return s;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Condition (c): sup over centers of length in B_r bounded

struct UpperLengthReport {
  enum class Status { Holds, Violated, Indeterminate };
  Status status = Status::Indeterminate;
  double bound = 0.0;  // structural bound, or grid supremum for polylines
};

inline UpperLengthReport check_upper_length_condition(const Trajectory& P, double r,
                                                      const std::vector<Vec2>& center_grid = {}) {
  if (r <= 0.0) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
  UpperLengthReport rep;
  switch (P.family) {
    case Trajectory::Family::ParallelLines: {
      double delta;
      try {
        delta = separation(P.offsets);
      } catch (const Error&) {
        rep.status = UpperLengthReport::Status::Indeterminate;
        return rep;
      }
      if (delta <= kTolGeom) {
        rep.status = UpperLengthReport::Status::Violated;
        return rep;
      }
      // At most 2r/delta + 1 lines meet a ball, each chord at most 2r.
      rep.status = UpperLengthReport::Status::Holds;
      rep.bound = (2.0 * r / delta + 1.0) * 2.0 * r;
      return rep;
    }
    case Trajectory::Family::DilatedBoundary: {
      double delta;
      try {
        delta = separation(P.dilations);
      } catch (const Error&) {
        rep.status = UpperLengthReport::Status::Indeterminate;
        return rep;
      }
      if (delta <= kTolGeom) {
        rep.status = UpperLengthReport::Status::Violated;
        return rep;
      }
      // The gauge of the base is (1/lob)-Lipschitz, so the dilation
      // parameters meeting B_r span a window of width 2r/lob; each convex
      // component contributes at most the ball perimeter.
      const auto [lob, hib] = detail::boundary_radial_range(P.base);
      (void)hib;
      rep.status = UpperLengthReport::Status::Holds;
      rep.bound = (2.0 * r / (lob * delta) + 1.0) * 2.0 * M_PI * r;
      return rep;
    }
    case Trajectory::Family::TranslatedCircles: {
      double delta;
      try {
        delta = separation(P.centers);
      } catch (const Error&) {
        rep.status = UpperLengthReport::Status::Indeterminate;
        return rep;
      }
      if (delta <= kTolGeom) {
        rep.status = UpperLengthReport::Status::Violated;
        return rep;
      }
      const double reach = r + P.circle_radius;
      const double count = (2.0 * reach / delta + 1.0) * (2.0 * reach / delta + 1.0);
      rep.status = UpperLengthReport::Status::Holds;
      rep.bound = count * 2.0 * M_PI * std::min(P.circle_radius, r);
      return rep;
    }
    case Trajectory::Family::Polyline: {
      for (const auto& chain : P.chains) {
        if (chain.size() < 2) {
          rep.status = UpperLengthReport::Status::Violated;  // point-degenerate chain
          return rep;
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          if (dist(chain[i], chain[i + 1]) <= kTolGeom) {
            rep.status = UpperLengthReport::Status::Violated;  // zero-length edge
            return rep;
          }
      }
      if (center_grid.empty()) {
        rep.status = UpperLengthReport::Status::Indeterminate;
        return rep;
      }
      double sup = 0.0;
      for (const Vec2& c : center_grid) sup = std::max(sup, arc_length_in_ball(P, c, r));
      rep.status = UpperLengthReport::Status::Holds;
      rep.bound = sup;
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Condition (cc): local length at least delta for every delta <= r

struct LowerLengthReport {
  bool holds = false;
  std::optional<Vec2> violation;  // a probed point where the condition failed
};

namespace detail {

// Every point of a structured family lies on a component that is a full
// line or a closed convex curve. A branch of the component from x to the
// sphere of B_delta(x) has length >= delta, so the condition holds for all
// delta up to the smallest component perimeter.
inline double min_component_perimeter(const Trajectory& P) {
  switch (P.family) {
    case Trajectory::Family::ParallelLines:
      return std::numeric_limits<double>::infinity();
    case Trajectory::Family::TranslatedCircles:
      return 2.0 * M_PI * P.circle_radius;
    case Trajectory::Family::DilatedBoundary: {
      double qmin = std::numeric_limits<double>::infinity();
      if (P.dilations.kind == DiscreteSet::Kind::Ray)
        qmin = P.dilations.offset;
      else if (P.dilations.kind == DiscreteSet::Kind::Explicit1D && !P.dilations.points1d.empty())
        qmin = P.dilations.points1d.front();
      else {
        const auto pts = enumerate1d(P.dilations, 0.0, detail::default_window(P.dilations));
        if (!pts.empty()) qmin = pts.front();
      }
      return qmin * P.base.perimeter();
    }
    case Trajectory::Family::Polyline:
      return 0.0;
  }
  return 0.0;
}

}  // namespace detail

inline LowerLengthReport check_local_lower_length(const Trajectory& P, double r,
                                                  const std::vector<Vec2>& probes = {}) {
  if (r <= 0.0) fail(ErrorCode::InvalidArgument, "radius must be positive");
  LowerLengthReport rep;
  if (P.family != Trajectory::Family::Polyline) {
    const double pmin = detail::min_component_perimeter(P);
    if (r <= pmin + kTolGeom) {
      rep.holds = true;
      return rep;
    }
    // Beyond the smallest component perimeter the analytic certificate no
    // longer applies; fall through to numeric probing.
  }
  if (probes.empty()) fail(ErrorCode::InvalidArgument, "numeric check needs probe points on P");
  constexpr int kDeltaSteps = 8;
  for (const Vec2& x : probes) {
    for (int i = 1; i <= kDeltaSteps; ++i) {
      const double delta = r * static_cast<double>(i) / kDeltaSteps;
      if (arc_length_in_ball(P, x, delta) < delta - kTolGeom) {
        rep.holds = false;
        rep.violation = x;
        return rep;
      }
    }
  }
  rep.holds = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Discretization (covering subset per the eta-net contract)

struct PathComponent {
  int id = 0;
  bool closed = false;
  double length = 0.0;               // full component length inside the sampled window
  std::vector<Vec2> points;
  std::vector<double> arc_param;     // arc length from the component start
};

struct DiscretePath {
  std::vector<PathComponent> components;

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.points.size();
    return n;
  }
  std::vector<Vec2> flat_points() const {
    std::vector<Vec2> out;
    out.reserve(size());
    for (const auto& c : components) out.insert(out.end(), c.points.begin(), c.points.end());
    return out;
  }
};

namespace detail {

inline void sample_segment(const Vec2& a, const Vec2& b, double eta, const Bbox& keep, int id,
                           DiscretePath& out) {
  const double len = dist(a, b);
  PathComponent comp;
  comp.id = id;
  comp.closed = false;
  comp.length = len;
  if (len <= 0.0) {
    if (keep.contains(a)) {
      comp.points.push_back(a);
      comp.arc_param.push_back(0.0);
      out.components.push_back(std::move(comp));
    }
    return;
  }
  const int m = std::max(1, static_cast<int>(std::ceil(len / eta - 1e-12)));
  for (int i = 0; i <= m; ++i) {
    const double s = len * i / m;
    const Vec2 p = a + (b - a) * (s / len);
    if (keep.contains(p)) {
      comp.points.push_back(p);
      comp.arc_param.push_back(s);
    }
  }
  if (!comp.points.empty()) out.components.push_back(std::move(comp));
}

// Sample a closed loop given by arc-length parameterization `at(s)`,
// keeping points in `keep`; contiguous kept runs become components.
template <typename F>
inline void sample_closed_loop(double perimeter, F&& at, double eta, const Bbox& keep, int id,
                               DiscretePath& out) {
  const int m = std::max(3, static_cast<int>(std::ceil(perimeter / eta - 1e-12)));
  std::vector<Vec2> pts(m);
  std::vector<bool> in(m);
  for (int i = 0; i < m; ++i) {
    pts[i] = at(perimeter * i / m);
    in[i] = keep.contains(pts[i]);
  }
  const bool all_in = std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  if (all_in) {
    PathComponent comp;
    comp.id = id;
    comp.closed = true;
    comp.length = perimeter;
    for (int i = 0; i < m; ++i) {
      comp.points.push_back(pts[i]);
      comp.arc_param.push_back(perimeter * i / m);
    }
    out.components.push_back(std::move(comp));
    return;
  }
  // Walk once around, emitting maximal kept runs.
  int start = 0;
  while (start < m && in[start]) ++start;
  if (start == m) return;  // unreachable: all_in handled above
  PathComponent comp;
  comp.id = id;
  for (int k = 1; k <= m; ++k) {
    const int i = (start + k) % m;
    if (in[i]) {
      comp.points.push_back(pts[i]);
      comp.arc_param.push_back(perimeter * i / m);
    } else if (!comp.points.empty()) {
      comp.closed = false;
      comp.length = comp.arc_param.back() - comp.arc_param.front();
      out.components.push_back(std::move(comp));
      comp = PathComponent{};
      comp.id = id;
    }
  }
  if (!comp.points.empty()) {
    comp.closed = false;
    comp.length = comp.arc_param.back() - comp.arc_param.front();
    out.components.push_back(std::move(comp));
  }
}

// Clip the line {anchor + t*dir} against an axis box; returns the t-range.
inline std::optional<std::pair<double, double>> clip_line(const Vec2& anchor, const Vec2& dir,
                                                          const Bbox& box) {
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const double px[2] = {dir.x, dir.y};
  const double ax[2] = {anchor.x, anchor.y};
  const double lo[2] = {box.lo.x, box.lo.y};
  const double hi[2] = {box.hi.x, box.hi.y};
  for (int k = 0; k < 2; ++k) {
    if (std::abs(px[k]) < 1e-15) {
      if (ax[k] < lo[k] || ax[k] > hi[k]) return std::nullopt;
    } else {
      double a = (lo[k] - ax[k]) / px[k];
      double b = (hi[k] - ax[k]) / px[k];
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(t0, t1);
}

}  // namespace detail

// Points on P with every point of P inside `bbox` within eta of the output.
// Equal-arc-length stepping per component; samples are kept in the bbox
// inflated by eta/2 so boundary-crossing components stay covered.
inline DiscretePath discretize(const Trajectory& P, double eta, const Bbox& bbox) {
  if (eta <= 0.0) fail(ErrorCode::InvalidArgument, "eta must be positive");
  const Bbox keep = bbox.inflated(eta / 2.0);
  DiscretePath out;
  int id = 0;
  switch (P.family) {
    case Trajectory::Family::ParallelLines: {
      const Vec2 vl = P.offset_direction().v;
      const Vec2 d = P.line_direction.v;
      double plo = std::numeric_limits<double>::infinity(), phi = -plo;
      for (const Vec2& corner : {keep.lo, Vec2{keep.hi.x, keep.lo.y}, keep.hi, Vec2{keep.lo.x, keep.hi.y}}) {
        plo = std::min(plo, dot(corner, vl));
        phi = std::max(phi, dot(corner, vl));
      }
      for (double a : enumerate1d(P.offsets, plo, phi)) {
        const Vec2 anchor = vl * a;
        const auto t = detail::clip_line(anchor, d, keep);
        if (!t) {
          ++id;
          continue;
        }
        detail::sample_segment(anchor + d * t->first, anchor + d * t->second, eta, keep, id++, out);
      }
      return out;
    }
    case Trajectory::Family::DilatedBoundary: {
      const auto [lob, hib] = detail::boundary_radial_range(P.base);
      (void)hib;
      const double reach = keep.center().norm() + keep.circumradius();
      for (double q : enumerate1d(P.dilations, 0.0, reach / lob)) {
        if (q <= 0.0) continue;
        if (P.base.is_disk()) {
          const Vec2 c = P.base.center * q;
          const double rho = P.base.radius * q;
          detail::sample_closed_loop(
              2.0 * M_PI * rho,
              [&](double s) {
                const double th = s / rho;
                return c + Vec2{std::cos(th), std::sin(th)} * rho;
              },
              eta, keep, id++, out);
        } else {
          const auto verts = detail::dilate_vertices(P.base, q);
          std::vector<double> cum{0.0};
          for (std::size_t i = 0; i < verts.size(); ++i)
            cum.push_back(cum.back() + dist(verts[i], verts[(i + 1) % verts.size()]));
          const double per = cum.back();
          detail::sample_closed_loop(
              per,
              [&](double s) {
                const std::size_t e =
                    std::upper_bound(cum.begin(), cum.end(), s) - cum.begin() - 1;
                const std::size_t i = std::min(e, verts.size() - 1);
                const Vec2& a = verts[i];
                const Vec2& b = verts[(i + 1) % verts.size()];
                const double seg = cum[i + 1] - cum[i];
                return seg > 0.0 ? a + (b - a) * ((s - cum[i]) / seg) : a;
              },
              eta, keep, id++, out);
        }
      }
      return out;
    }
    case Trajectory::Family::TranslatedCircles: {
      const Vec2 c0 = keep.center();
      const double reach = keep.circumradius() + P.circle_radius;
      for (const Vec2& v : enumerate2d(P.centers, c0, reach)) {
        detail::sample_closed_loop(
            2.0 * M_PI * P.circle_radius,
            [&](double s) {
              const double th = s / P.circle_radius;
              return v + Vec2{std::cos(th), std::sin(th)} * P.circle_radius;
            },
            eta, keep, id++, out);
      }
      return out;
    }
    case Trajectory::Family::Polyline: {
      for (const auto& chain : P.chains) {
        if (chain.size() == 1) {
          detail::sample_segment(chain[0], chain[0], eta, keep, id++, out);
          continue;
        }
        // Sample the whole chain by cumulative arc length.
        std::vector<double> cum{0.0};
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          cum.push_back(cum.back() + dist(chain[i], chain[i + 1]));
        const double len = cum.back();
        PathComponent comp;
        comp.id = id;
        comp.closed = false;
        comp.length = len;
        const int m = std::max(1, static_cast<int>(std::ceil(len / eta - 1e-12)));
        for (int i = 0; i <= m; ++i) {
          const double s = len * i / m;
          const std::size_t e = std::min<std::size_t>(
              std::upper_bound(cum.begin(), cum.end(), s) - cum.begin() - 1, chain.size() - 2);
          const double seg = cum[e + 1] - cum[e];
          const Vec2 p = seg > 0.0 ? chain[e] + (chain[e + 1] - chain[e]) * ((s - cum[e]) / seg)
                                   : chain[e];
          if (keep.contains(p)) {
            comp.points.push_back(p);
            comp.arc_param.push_back(s);
          }
        }
        if (!comp.points.empty()) out.components.push_back(std::move(comp));
        ++id;
      }
      return out;
    }
  }
  return out;
}

}  // namespace mobsamp
