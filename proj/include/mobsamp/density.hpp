#pragma once

// Uniformly discrete set descriptions with separation constants, lower
// uniform densities (1-D and 2-D), the symmetrized density of a positive
// set, open-disk counting functions and their liminf slope.
//
// Arithmetic, ray and lattice descriptions admit exact answers; explicit
// finite descriptions yield windowed estimates carrying the window radius,
// never a claimed limit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "mobsamp/errors.hpp"
#include "mobsamp/vec2.hpp"

namespace mobsamp {

struct DiscreteSet {
  enum class Kind {
    Arithmetic,  // {step*k + offset : k in Z}, 1-D
    Ray,         // {start + step*k : k = 0,1,2,...}, 1-D, start > 0 allowed for positive sets
    Explicit1D,  // sorted finite list, truncation radius r_trunc
    Lattice2D,   // {m1*b1 + m2*b2}, full rank
    Explicit2D,  // finite point list, truncation radius r_trunc
    Union,       // union of same-dimension descriptions
  };

  int dim = 1;
  Kind kind = Kind::Arithmetic;
  double step = 1.0;
  double offset = 0.0;  // Ray: first element
  std::vector<double> points1d;
  double r_trunc = 0.0;
  Vec2 basis0{1.0, 0.0}, basis1{0.0, 1.0};
  std::vector<Vec2> points2d;
  std::vector<DiscreteSet> parts;

  static DiscreteSet arithmetic(double step, double offset = 0.0) {
    if (step <= 0.0) fail(ErrorCode::InvalidArgument, "arithmetic step must be positive");
    DiscreteSet s;
    s.dim = 1;
    s.kind = Kind::Arithmetic;
    s.step = step;
    s.offset = offset;
    return s;
  }

  static DiscreteSet ray(double step, double start) {
    if (step <= 0.0) fail(ErrorCode::InvalidArgument, "ray step must be positive");
    DiscreteSet s;
    s.dim = 1;
    s.kind = Kind::Ray;
    s.step = step;
    s.offset = start;
    return s;
  }

  static DiscreteSet explicit1d(std::vector<double> pts, double r_trunc) {
    if (r_trunc <= 0.0) fail(ErrorCode::InvalidArgument, "r_trunc must be positive");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    DiscreteSet s;
    s.dim = 1;
    s.kind = Kind::Explicit1D;
    s.points1d = std::move(pts);
    s.r_trunc = r_trunc;
    return s;
  }

  static DiscreteSet lattice(const Vec2& b0, const Vec2& b1) {
    if (std::abs(cross(b0, b1)) <= kTolGeom)
      fail(ErrorCode::InvalidArgument, "lattice basis must be full rank");
    DiscreteSet s;
    s.dim = 2;
    s.kind = Kind::Lattice2D;
    s.basis0 = b0;
    s.basis1 = b1;
    return s;
  }

  static DiscreteSet explicit2d(std::vector<Vec2> pts, double r_trunc) {
    if (r_trunc <= 0.0) fail(ErrorCode::InvalidArgument, "r_trunc must be positive");
    std::sort(pts.begin(), pts.end(), lex_less);
    DiscreteSet s;
    s.dim = 2;
    s.kind = Kind::Explicit2D;
    s.points2d = std::move(pts);
    s.r_trunc = r_trunc;
    return s;
  }

  static DiscreteSet set_union(std::vector<DiscreteSet> members) {
    if (members.empty()) fail(ErrorCode::EmptySet, "union of no sets");
    const int d = members.front().dim;
    for (const auto& m : members)
      if (m.dim != d) fail(ErrorCode::InvalidArgument, "union members must share dimension");
    DiscreteSet s;
    s.dim = d;
    s.kind = Kind::Union;
    s.parts = std::move(members);
    return s;
  }

  // Finite descriptions only know membership inside their truncation
  // radius; symbolic ones are valid everywhere.
  double known_radius() const {
    switch (kind) {
      case Kind::Arithmetic:
      case Kind::Ray:
      case Kind::Lattice2D:
        return std::numeric_limits<double>::infinity();
      case Kind::Explicit1D:
      case Kind::Explicit2D:
        return r_trunc;
      case Kind::Union: {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& p : parts) r = std::min(r, p.known_radius());
        return r;
      }
    }
    return 0.0;
  }
};

struct DensityReport {
  double value = 0.0;
  bool exact = false;
  double window_radius = 0.0;  // largest window used, 0 when exact
};

struct DensityOptions {
  std::vector<double> schedule;  // increasing window radii; empty = adaptive
  double tol = kTolGeom;
  double divergence_threshold = 1e6;  // theta(t)/t beyond this across the tail reads as +inf
};

// ---------------------------------------------------------------------------
// Enumeration

inline void enumerate1d_into(const DiscreteSet& s, double lo, double hi, std::vector<double>& out) {
  switch (s.kind) {
    case DiscreteSet::Kind::Arithmetic: {
      const std::int64_t k0 = static_cast<std::int64_t>(std::ceil((lo - s.offset) / s.step - 1e-12));
      const std::int64_t k1 = static_cast<std::int64_t>(std::floor((hi - s.offset) / s.step + 1e-12));
      for (std::int64_t k = k0; k <= k1; ++k) out.push_back(s.offset + s.step * static_cast<double>(k));
      break;
    }
    case DiscreteSet::Kind::Ray: {
      const std::int64_t k0 =
          std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil((lo - s.offset) / s.step - 1e-12)));
      const std::int64_t k1 = static_cast<std::int64_t>(std::floor((hi - s.offset) / s.step + 1e-12));
      for (std::int64_t k = k0; k <= k1; ++k) out.push_back(s.offset + s.step * static_cast<double>(k));
      break;
    }
    case DiscreteSet::Kind::Explicit1D: {
      if (lo < -s.r_trunc - kTolGeom || hi > s.r_trunc + kTolGeom)
        fail(ErrorCode::ExceedsTruncation, "1-D window exceeds the declared truncation radius");
      for (double p : s.points1d)
        if (p >= lo && p <= hi) out.push_back(p);
      break;
    }
    case DiscreteSet::Kind::Union:
      for (const auto& part : s.parts) enumerate1d_into(part, lo, hi, out);
      break;
    default:
      fail(ErrorCode::InvalidArgument, "enumerate1d on a 2-D description");
  }
}

inline std::vector<double> enumerate1d(const DiscreteSet& s, double lo, double hi) {
  if (s.dim != 1) fail(ErrorCode::InvalidArgument, "enumerate1d needs a 1-D set");
  std::vector<double> out;
  enumerate1d_into(s, lo, hi, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) <= kTolGeom; }),
            out.end());
  return out;
}

inline void enumerate2d_into(const DiscreteSet& s, const Vec2& c, double r, std::vector<Vec2>& out) {
  switch (s.kind) {
    case DiscreteSet::Kind::Lattice2D: {
      const double det = cross(s.basis0, s.basis1);
      // m = B^{-1} x ranges over a disk image; bound each index by the dual rows.
      const Vec2 row0 = Vec2{s.basis1.y, -s.basis1.x} / det;   // m0 = <row0, x>
      const Vec2 row1 = Vec2{-s.basis0.y, s.basis0.x} / det;   // m1 = <row1, x>
      const double c0 = dot(row0, c), c1 = dot(row1, c);
      const double r0 = r * row0.norm(), r1 = r * row1.norm();
      const std::int64_t a0 = static_cast<std::int64_t>(std::floor(c0 - r0)) - 1;
      const std::int64_t b0 = static_cast<std::int64_t>(std::ceil(c0 + r0)) + 1;
      const std::int64_t a1 = static_cast<std::int64_t>(std::floor(c1 - r1)) - 1;
      const std::int64_t b1 = static_cast<std::int64_t>(std::ceil(c1 + r1)) + 1;
      for (std::int64_t m0 = a0; m0 <= b0; ++m0)
        for (std::int64_t m1 = a1; m1 <= b1; ++m1) {
          const Vec2 p = s.basis0 * static_cast<double>(m0) + s.basis1 * static_cast<double>(m1);
          if (dist(p, c) <= r + kTolGeom) out.push_back(p);
        }
      break;
    }
    case DiscreteSet::Kind::Explicit2D: {
      if (c.norm() + r > s.r_trunc + kTolGeom)
        fail(ErrorCode::ExceedsTruncation, "2-D window exceeds the declared truncation radius");
      for (const Vec2& p : s.points2d)
        if (dist(p, c) <= r + kTolGeom) out.push_back(p);
      break;
    }
    case DiscreteSet::Kind::Union:
      for (const auto& part : s.parts) enumerate2d_into(part, c, r, out);
      break;
    default:
      fail(ErrorCode::InvalidArgument, "enumerate2d on a 1-D description");
  }
}

inline std::vector<Vec2> enumerate2d(const DiscreteSet& s, const Vec2& c, double r) {
  if (s.dim != 2) fail(ErrorCode::InvalidArgument, "enumerate2d needs a 2-D set");
  std::vector<Vec2> out;
  enumerate2d_into(s, c, r, out);
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Vec2& a, const Vec2& b) { return dist(a, b) <= kTolGeom; }),
            out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Separation

namespace detail {

// Lagrange-Gauss reduction: shortest vector of a rank-2 lattice.
inline double lattice_shortest(Vec2 u, Vec2 v) {
  if (u.norm2() > v.norm2()) std::swap(u, v);
  while (true) {
    const double m = std::round(dot(u, v) / u.norm2());
    const Vec2 w = v - u * m;
    if (w.norm2() >= u.norm2() - 1e-15) return u.norm();
    v = u;
    u = w;
  }
}

inline double default_window(const DiscreteSet& s) {
  const double known = s.known_radius();
  if (std::isfinite(known)) return known;
  double step = 0.0;
  if (s.kind == DiscreteSet::Kind::Arithmetic || s.kind == DiscreteSet::Kind::Ray)
    step = s.step + std::abs(s.offset);
  else if (s.kind == DiscreteSet::Kind::Lattice2D)
    step = std::max(s.basis0.norm(), s.basis1.norm());
  else if (s.kind == DiscreteSet::Kind::Union)
    for (const auto& p : s.parts) step = std::max(step, default_window(p) / 64.0);
  return 64.0 * std::max(step, 1.0);
}

}  // namespace detail

// Exact for single arithmetic/ray/lattice descriptions, windowed minimum
// over the truncation region otherwise.
inline double separation(const DiscreteSet& s) {
  switch (s.kind) {
    case DiscreteSet::Kind::Arithmetic:
    case DiscreteSet::Kind::Ray:
      return s.step;
    case DiscreteSet::Kind::Lattice2D:
      return detail::lattice_shortest(s.basis0, s.basis1);
    case DiscreteSet::Kind::Explicit1D: {
      if (s.points1d.size() < 2) fail(ErrorCode::TooFewPoints, "separation needs >= 2 points");
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < s.points1d.size(); ++i)
        d = std::min(d, s.points1d[i] - s.points1d[i - 1]);
      return d;
    }
    case DiscreteSet::Kind::Explicit2D: {
      if (s.points2d.size() < 2) fail(ErrorCode::TooFewPoints, "separation needs >= 2 points");
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < s.points2d.size(); ++i)
        for (std::size_t j = i + 1; j < s.points2d.size(); ++j)
          d = std::min(d, dist(s.points2d[i], s.points2d[j]));
      return d;
    }
    case DiscreteSet::Kind::Union: {
      const double w = detail::default_window(s);
      if (s.dim == 1) {
        const auto pts = enumerate1d(s, -w, w);
        if (pts.size() < 2) fail(ErrorCode::TooFewPoints, "separation needs >= 2 points in window");
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < pts.size(); ++i) d = std::min(d, pts[i] - pts[i - 1]);
        return d;
      }
      const auto pts = enumerate2d(s, {0.0, 0.0}, w);
      if (pts.size() < 2) fail(ErrorCode::TooFewPoints, "separation needs >= 2 points in window");
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::min(d, dist(pts[i], pts[j]));
      return d;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Lower uniform density

namespace detail {

inline std::vector<double> density_schedule(const DiscreteSet& s, const DensityOptions& opt) {
  if (!opt.schedule.empty()) {
    for (std::size_t i = 1; i < opt.schedule.size(); ++i)
      if (opt.schedule[i] <= opt.schedule[i - 1])
        fail(ErrorCode::InvalidArgument, "window schedule must be increasing");
    const double known = s.known_radius();
    if (std::isfinite(known) && opt.schedule.back() > known / 2.0 + kTolGeom)
      fail(ErrorCode::WindowExceedsTruncation, "largest window exceeds r_trunc/2");
    return opt.schedule;
  }
  const double known = s.known_radius();
  const double rmax = std::isfinite(known) ? known / 2.0 : 32.0;
  return {rmax / 8.0, rmax / 4.0, rmax / 2.0, rmax};
}

// inf over window centers of the count in B_r(x), centers on a grid of
// pitch delta/4 spanning the region where the description is valid.
inline double windowed_density_1d(const DiscreteSet& s, double r, double delta) {
  const double known = s.known_radius();
  const double span = std::isfinite(known) ? known - r : detail::default_window(s);
  const auto pts = enumerate1d(s, -std::min(known, span + r), std::min(known, span + r));
  const double pitch = std::max(delta / 4.0, 1e-6);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (double x = -span; x <= span + pitch / 2; x += pitch) {
    const auto lo = std::lower_bound(pts.begin(), pts.end(), x - r);
    const auto hi = std::upper_bound(pts.begin(), pts.end(), x + r);
    best = std::min<std::int64_t>(best, hi - lo);
    if (best == 0) break;
  }
  return static_cast<double>(best) / (2.0 * r);
}

inline double windowed_density_2d(const DiscreteSet& s, double r, double delta) {
  const double known = s.known_radius();
  const double span = std::isfinite(known) ? known - r : detail::default_window(s);
  const auto pts = enumerate2d(s, {0.0, 0.0}, std::min(known, span + r));
  // Points bucketed by x for the range scan below.
  std::vector<Vec2> sorted = pts;  // already lex-sorted by enumerate2d
  const double pitch = std::max(delta / 4.0, 1e-3);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const double r2 = r * r;
  for (double cx = -span; cx <= span + pitch / 2 && best > 0; cx += pitch) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), Vec2{cx - r, 0.0},
                                     [](const Vec2& a, const Vec2& b) { return a.x < b.x; });
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), Vec2{cx + r, 0.0},
                                     [](const Vec2& a, const Vec2& b) { return a.x < b.x; });
    for (double cy = -span; cy <= span + pitch / 2; cy += pitch) {
      std::int64_t cnt = 0;
      for (auto it = lo; it != hi; ++it) {
        const double dx = it->x - cx, dy = it->y - cy;
        if (dx * dx + dy * dy <= r2) ++cnt;
      }
      best = std::min(best, cnt);
      if (best == 0) break;
    }
  }
  return static_cast<double>(best) / (M_PI * r2);
}

}  // namespace detail

inline DensityReport lower_uniform_density(const DiscreteSet& s, const DensityOptions& opt = {}) {
  DensityReport rep;
  switch (s.kind) {
    case DiscreteSet::Kind::Arithmetic:
      rep.value = 1.0 / s.step;
      rep.exact = true;
      return rep;
    case DiscreteSet::Kind::Ray:
      // A one-sided progression has empty windows arbitrarily far left.
      rep.value = 0.0;
      rep.exact = true;
      return rep;
    case DiscreteSet::Kind::Lattice2D:
      rep.value = 1.0 / std::abs(cross(s.basis0, s.basis1));
      rep.exact = true;
      return rep;
    default:
      break;
  }
  const auto schedule = detail::density_schedule(s, opt);
  double delta;
  try {
    delta = separation(s);
  } catch (const Error&) {
    delta = schedule.front();  // 0/1-point sets: any pitch works, density is 0
  }
  double value = std::numeric_limits<double>::infinity();
  for (double r : schedule)
    value = (s.dim == 1) ? detail::windowed_density_1d(s, r, delta)
                         : detail::windowed_density_2d(s, r, delta);
  rep.value = value;
  rep.exact = false;
  rep.window_radius = schedule.back();
  return rep;
}

namespace detail {

inline void require_positive_1d(const DiscreteSet& q) {
  switch (q.kind) {
    case DiscreteSet::Kind::Ray:
      if (q.offset <= 0.0) fail(ErrorCode::NonPositiveElement, "ray start must be positive");
      return;
    case DiscreteSet::Kind::Explicit1D:
      if (!q.points1d.empty() && q.points1d.front() <= 0.0)
        fail(ErrorCode::NonPositiveElement, "explicit set contains a non-positive element");
      return;
    case DiscreteSet::Kind::Arithmetic:
      fail(ErrorCode::NonPositiveElement, "two-sided arithmetic progressions contain non-positive elements");
    case DiscreteSet::Kind::Union:
      for (const auto& p : q.parts) require_positive_1d(p);
      return;
    default:
      fail(ErrorCode::InvalidArgument, "positive sets must be 1-D");
  }
}

}  // namespace detail

// d^-(Q) = D^-(Q u (-Q)) for Q subset of (0, inf).
inline DensityReport symmetrized_density(const DiscreteSet& q, const DensityOptions& opt = {}) {
  if (q.dim != 1) fail(ErrorCode::InvalidArgument, "symmetrized density needs a 1-D set");
  detail::require_positive_1d(q);
  if (q.kind == DiscreteSet::Kind::Ray) {
    // {±(start + k step)} has gaps `step` outside a fixed neighborhood of 0.
    DensityReport rep;
    rep.value = 1.0 / q.step;
    rep.exact = true;
    return rep;
  }
  if (q.kind == DiscreteSet::Kind::Explicit1D) {
    std::vector<double> sym = q.points1d;
    for (double p : q.points1d) sym.push_back(-p);
    return lower_uniform_density(DiscreteSet::explicit1d(std::move(sym), q.r_trunc), opt);
  }
  // Union of positives: reflect every part into an explicit window.
  std::vector<DiscreteSet> parts;
  for (const auto& p : q.parts) {
    const double w = std::isfinite(p.known_radius()) ? p.known_radius() : detail::default_window(p);
    std::vector<double> pts;
    enumerate1d_into(p, 0.0, w, pts);
    std::vector<double> sym = pts;
    for (double v : pts) sym.push_back(-v);
    parts.push_back(DiscreteSet::explicit1d(std::move(sym), w));
  }
  return lower_uniform_density(DiscreteSet::set_union(std::move(parts)), opt);
}

// ---------------------------------------------------------------------------
// Counting function theta(t) = #(S intersect open disk |x| < t)

namespace detail {

// #{k : |p(k)| < t} for one lattice row, p quadratic coefficients
// a k^2 + b k + c < t^2, a > 0.
inline std::int64_t quadratic_count(double a, double b, double c, double t2) {
  const double disc = b * b - 4.0 * a * (c - t2);
  if (disc <= 0.0) return 0;
  const double sq = std::sqrt(disc);
  const double lo = (-b - sq) / (2.0 * a);
  const double hi = (-b + sq) / (2.0 * a);
  std::int64_t klo = static_cast<std::int64_t>(std::ceil(lo));
  std::int64_t khi = static_cast<std::int64_t>(std::floor(hi));
  // Open condition: push off boundary points the float roots grazed.
  auto val = [&](std::int64_t k) { return a * double(k) * double(k) + b * double(k) + c; };
  while (klo <= khi && val(klo) >= t2 - 1e-12) ++klo;
  while (khi >= klo && val(khi) >= t2 - 1e-12) --khi;
  return khi >= klo ? khi - klo + 1 : 0;
}

}  // namespace detail

inline std::int64_t counting(const DiscreteSet& s, double t) {
  if (t <= 0.0) return 0;
  switch (s.kind) {
    case DiscreteSet::Kind::Arithmetic: {
      // #{k : |step k + offset| < t}
      const double lo = (-t - s.offset) / s.step, hi = (t - s.offset) / s.step;
      std::int64_t klo = static_cast<std::int64_t>(std::ceil(lo));
      std::int64_t khi = static_cast<std::int64_t>(std::floor(hi));
      auto inside = [&](std::int64_t k) { return std::abs(s.step * double(k) + s.offset) < t - 1e-12; };
      while (klo <= khi && !inside(klo)) ++klo;
      while (khi >= klo && !inside(khi)) --khi;
      return khi >= klo ? khi - klo + 1 : 0;
    }
    case DiscreteSet::Kind::Ray: {
      if (t <= s.offset + 1e-12) return 0;
      return static_cast<std::int64_t>(std::floor((t - s.offset - 1e-12) / s.step)) + 1;
    }
    case DiscreteSet::Kind::Explicit1D: {
      if (t > s.r_trunc + kTolGeom)
        fail(ErrorCode::ExceedsTruncation, "counting window exceeds r_trunc");
      std::int64_t n = 0;
      for (double p : s.points1d)
        if (std::abs(p) < t - 1e-12) ++n;
      return n;
    }
    case DiscreteSet::Kind::Lattice2D: {
      const double t2 = t * t;
      // Row index bound from the distance of basis1 to span(basis0).
      const double h = std::abs(cross(s.basis0, s.basis1)) / s.basis0.norm();
      const std::int64_t mmax = static_cast<std::int64_t>(std::floor(t / h)) + 1;
      std::int64_t n = 0;
      for (std::int64_t m = -mmax; m <= mmax; ++m) {
        const Vec2 q = s.basis1 * static_cast<double>(m);
        // |k b0 + q|^2 = |b0|^2 k^2 + 2<b0,q> k + |q|^2
        n += detail::quadratic_count(s.basis0.norm2(), 2.0 * dot(s.basis0, q), q.norm2(), t2);
      }
      return n;
    }
    case DiscreteSet::Kind::Explicit2D: {
      if (t > s.r_trunc + kTolGeom)
        fail(ErrorCode::ExceedsTruncation, "counting window exceeds r_trunc");
      std::int64_t n = 0;
      for (const Vec2& p : s.points2d)
        if (p.norm() < t - 1e-12) ++n;
      return n;
    }
    case DiscreteSet::Kind::Union: {
      // Enumerate-and-dedupe; exact for disjoint parts and safe for overlaps.
      if (s.dim == 1) {
        const auto pts = enumerate1d(s, -t, t);
        std::int64_t n = 0;
        for (double p : pts)
          if (std::abs(p) < t - 1e-12) ++n;
        return n;
      }
      const auto pts = enumerate2d(s, {0.0, 0.0}, t);
      std::int64_t n = 0;
      for (const Vec2& p : pts)
        if (p.norm() < t - 1e-12) ++n;
      return n;
    }
  }
  return 0;
}

struct SlopeReport {
  double value = 0.0;       // running minimum of theta(t)/t over the schedule tail
  bool infinite = false;    // divergence declared per the threshold rule
};

// liminf_{t->inf} theta(t)/t probed on a finite schedule. The +inf verdict
// requires theta(t)/t to exceed `divergence_threshold` at every tail point
// with positive second difference.
inline SlopeReport liminf_slope(const DiscreteSet& s, const std::vector<double>& t_schedule,
                                const DensityOptions& opt = {}) {
  if (t_schedule.size() < 2) fail(ErrorCode::InvalidArgument, "schedule needs >= 2 points");
  for (std::size_t i = 1; i < t_schedule.size(); ++i)
    if (t_schedule[i] <= t_schedule[i - 1])
      fail(ErrorCode::InvalidArgument, "schedule must be increasing");
  const double known = s.known_radius();
  if (std::isfinite(known) && t_schedule.back() > known + kTolGeom)
    fail(ErrorCode::ExceedsTruncation, "schedule exceeds the truncation radius");

  std::vector<double> g;
  g.reserve(t_schedule.size());
  for (double t : t_schedule) g.push_back(static_cast<double>(counting(s, t)) / t);

  const std::size_t tail_begin = t_schedule.size() / 2;
  bool diverges = true;
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = tail_begin; i < g.size(); ++i) {
    running_min = std::min(running_min, g[i]);
    if (g[i] <= opt.divergence_threshold) diverges = false;
  }
  for (std::size_t i = tail_begin; i + 2 < g.size() && diverges; ++i)
    if (g[i + 2] - 2.0 * g[i + 1] + g[i] <= 0.0) diverges = false;

  SlopeReport rep;
  if (diverges) {
    rep.infinite = true;
    rep.value = std::numeric_limits<double>::infinity();
  } else {
    rep.value = running_min;
  }
  return rep;
}

}  // namespace mobsamp
