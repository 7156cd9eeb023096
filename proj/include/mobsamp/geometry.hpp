#pragma once

// Convex-geometry kernel for planar spectra: support functions, Minkowski
// self-difference, polar duality, extreme points, chord reach, membership
// and Hausdorff distance. Bodies are convex polygons or disks; smooth bodies
// are expected to arrive as fine polygonal inscriptions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mobsamp/errors.hpp"
#include "mobsamp/vec2.hpp"

namespace mobsamp {

inline double polygon_signed_area(const std::vector<Vec2>& pts) {
  double a = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = pts[i];
    const Vec2& q = pts[(i + 1) % n];
    a += cross(p, q);
  }
  return 0.5 * a;
}

// Andrew monotone chain. Collinear points (within `tol` of a supporting
// line) are dropped, so the result is strictly convex CCW.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double tol = kTolGeom) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const Vec2& a, const Vec2& b) { return dist(a, b) <= tol; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= tol) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= tol) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

enum class Membership { Inside, Boundary, Outside };

struct ConvexBody {
  enum class Kind { Polygon, Disk };

  Kind kind = Kind::Disk;
  std::vector<Vec2> vertices;  // CCW, strictly convex, starts at lex-smallest
  Vec2 center{0.0, 0.0};
  double radius = 0.0;

  static ConvexBody polygon(std::vector<Vec2> pts, double tol = kTolGeom) {
    std::vector<Vec2> hull = convex_hull(std::move(pts), tol);
    if (hull.size() < 3) fail(ErrorCode::DegenerateBody, "polygon needs >= 3 non-collinear vertices");
    if (polygon_signed_area(hull) < tol)
      fail(ErrorCode::DegenerateBody, "polygon area below tolerance");
    auto start = std::min_element(hull.begin(), hull.end(), lex_less);
    std::rotate(hull.begin(), start, hull.end());
    ConvexBody b;
    b.kind = Kind::Polygon;
    b.vertices = std::move(hull);
    return b;
  }

  static ConvexBody disk(const Vec2& c, double r) {
    if (r <= kTolGeom) fail(ErrorCode::DegenerateBody, "disk radius must be positive");
    ConvexBody b;
    b.kind = Kind::Disk;
    b.center = c;
    b.radius = r;
    return b;
  }

  static ConvexBody axis_box(double x0, double y0, double x1, double y1) {
    return polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
  }

  bool is_polygon() const { return kind == Kind::Polygon; }
  bool is_disk() const { return kind == Kind::Disk; }

  ConvexBody translated(const Vec2& t) const {
    if (is_disk()) return disk(center + t, radius);
    std::vector<Vec2> pts = vertices;
    for (Vec2& p : pts) p += t;
    return polygon(std::move(pts));
  }

  // Scaling about the origin; `s` must be positive.
  ConvexBody scaled(double s) const {
    if (s <= 0.0) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
    if (is_disk()) return disk(center * s, radius * s);
    std::vector<Vec2> pts = vertices;
    for (Vec2& p : pts) p = p * s;
    return polygon(std::move(pts));
  }

  Vec2 centroid() const {
    if (is_disk()) return center;
    // Area-weighted polygon centroid.
    double a = 0.0;
    Vec2 c{0.0, 0.0};
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& p = vertices[i];
      const Vec2& q = vertices[(i + 1) % n];
      const double w = cross(p, q);
      a += w;
      c += (p + q) * w;
    }
    return c / (3.0 * a);
  }

  double area() const {
    if (is_disk()) return M_PI * radius * radius;
    return polygon_signed_area(vertices);
  }

  double perimeter() const {
    if (is_disk()) return 2.0 * M_PI * radius;
    double s = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) s += dist(vertices[i], vertices[(i + 1) % n]);
    return s;
  }
};

// H(y) = max_{u in body} <u, y>. Positively homogeneous in y.
inline double support(const ConvexBody& body, const Vec2& y) {
  if (body.is_disk()) return dot(body.center, y) + body.radius * y.norm();
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : body.vertices) h = std::max(h, dot(v, y));
  return h;
}

namespace detail {

// Outward edge normals and offsets of a CCW polygon: edge i satisfies
// <x, n_i> = h_i on its supporting line, <x, n_i> <= h_i inside.
struct EdgePlane {
  Vec2 normal;  // not normalized
  double offset;
};

inline std::vector<EdgePlane> edge_planes(const ConvexBody& poly) {
  std::vector<EdgePlane> planes;
  const std::size_t n = poly.vertices.size();
  planes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertices[i];
    const Vec2& b = poly.vertices[(i + 1) % n];
    const Vec2 e = b - a;
    const Vec2 nrm{e.y, -e.x};
    planes.push_back({nrm, dot(a, nrm)});
  }
  return planes;
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / ab.norm2(), 0.0, 1.0);
  return dist(p, a + ab * t);
}

}  // namespace detail

// Signed Euclidean distance to the boundary: negative inside, positive
// outside, zero on the boundary.
inline double signed_distance(const ConvexBody& body, const Vec2& x) {
  if (body.is_disk()) return dist(x, body.center) - body.radius;
  const auto planes = detail::edge_planes(body);
  double max_plane = -std::numeric_limits<double>::infinity();
  for (const auto& pl : planes) {
    const double d = (dot(x, pl.normal) - pl.offset) / pl.normal.norm();
    max_plane = std::max(max_plane, d);
  }
  if (max_plane <= 0.0) return max_plane;  // inside: nearest edge plane is the boundary
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = body.vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, detail::point_segment_distance(x, body.vertices[i], body.vertices[(i + 1) % n]));
  return best;
}

inline Membership contains(const ConvexBody& body, const Vec2& x, double tol = kTolGeom) {
  const double d = signed_distance(body, x);
  if (d < -tol) return Membership::Inside;
  if (d > tol) return Membership::Outside;
  return Membership::Boundary;
}

// Minkowski sum of two convex polygons by merging edge fans (both CCW).
inline std::vector<Vec2> minkowski_sum_vertices(std::vector<Vec2> p, std::vector<Vec2> q) {
  auto reorder_from_bottom = [](std::vector<Vec2>& v) {
    auto it = std::min_element(v.begin(), v.end(), [](const Vec2& a, const Vec2& b) {
      if (a.y != b.y) return a.y < b.y;
      return a.x < b.x;
    });
    std::rotate(v.begin(), it, v.end());
  };
  reorder_from_bottom(p);
  reorder_from_bottom(q);
  const std::size_t n = p.size(), m = q.size();
  p.push_back(p[0]);
  p.push_back(p[1]);
  q.push_back(q[0]);
  q.push_back(q[1]);
  std::vector<Vec2> out;
  out.reserve(n + m);
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    out.push_back(p[i] + q[j]);
    const double c = cross(p[i + 1] - p[i], q[j + 1] - q[j]);
    if (c >= 0.0 && i < n) ++i;
    if (c <= 0.0 && j < m) ++j;
  }
  return out;
}

// Omega - Omega. Origin-symmetric; support at y equals
// support(Omega, y) + support(Omega, -y). Point reflection preserves the
// CCW orientation.
inline ConvexBody minkowski_self_difference(const ConvexBody& body) {
  if (body.is_disk()) return ConvexBody::disk({0.0, 0.0}, 2.0 * body.radius);
  std::vector<Vec2> negated = body.vertices;
  for (Vec2& v : negated) v = -v;
  return ConvexBody::polygon(minkowski_sum_vertices(body.vertices, std::move(negated)));
}

// D^o = {x : <x,y> <= 1 for all y in D}. Requires the origin strictly
// interior. Polygons dualize edge-by-edge (edge <x,n> = h maps to vertex
// n/h); origin-centered disks dualize to disks. Off-center disks have
// non-disk polars and are rejected; inscribe a polygon instead.
inline ConvexBody polar_dual(const ConvexBody& body, double tol = kTolGeom) {
  if (signed_distance(body, {0.0, 0.0}) > -tol)
    fail(ErrorCode::OriginNotInterior, "polar dual requires the origin strictly inside the body");
  if (body.is_disk()) {
    if (body.center.norm() > tol)
      fail(ErrorCode::UnsupportedBody,
           "polar dual of an off-center disk is not a disk or polygon; use a polygonal inscription");
    return ConvexBody::disk({0.0, 0.0}, 1.0 / body.radius);
  }
  std::vector<Vec2> dual;
  for (const auto& pl : detail::edge_planes(body)) dual.push_back(pl.normal / pl.offset);
  return ConvexBody::polygon(std::move(dual));
}

// Closure of the extreme points: polygon vertices, or the whole boundary
// circle for a disk.
struct ExtremeSet {
  bool full_circle = false;
  std::vector<Vec2> points;  // polygon case
  Vec2 center{0.0, 0.0};     // disk case
  double radius = 0.0;
};

inline ExtremeSet extreme_points(const ConvexBody& body) {
  ExtremeSet e;
  if (body.is_disk()) {
    e.full_circle = true;
    e.center = body.center;
    e.radius = body.radius;
  } else {
    e.points = body.vertices;
  }
  return e;
}

// Length of the longest segment contained in `body` parallel to `v`,
// i.e. the largest t >= 0 with t*v in body - body.
inline double max_chord_length(const ConvexBody& body, const Direction& v) {
  const ConvexBody diff = minkowski_self_difference(body);
  if (diff.is_disk()) return diff.radius;
  double t = std::numeric_limits<double>::infinity();
  for (const auto& pl : detail::edge_planes(diff)) {
    const double dn = dot(v.v, pl.normal);
    if (dn > kTolGeom * pl.normal.norm()) t = std::min(t, pl.offset / dn);
  }
  return t;
}

inline double diameter(const ConvexBody& body) {
  if (body.is_disk()) return 2.0 * body.radius;
  double d = 0.0;
  for (std::size_t i = 0; i < body.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < body.vertices.size(); ++j)
      d = std::max(d, dist(body.vertices[i], body.vertices[j]));
  return d;
}

// Symmetric Hausdorff distance between finite point samples.
inline double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  if (a.empty() || b.empty()) fail(ErrorCode::EmptySet, "hausdorff_distance needs nonempty sets");
  auto directed = [](std::span<const Vec2> from, std::span<const Vec2> to) {
    double worst = 0.0;
    for (const Vec2& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec2& q : to) best = std::min(best, dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

inline double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  return hausdorff_distance(std::span<const Vec2>(a), std::span<const Vec2>(b));
}

// Boundary sampled as a polyline loop; disks use `segments` chords.
inline std::vector<Vec2> boundary_samples(const ConvexBody& body, int segments = 256) {
  std::vector<Vec2> out;
  if (body.is_disk()) {
    out.reserve(static_cast<std::size_t>(segments));
    for (int i = 0; i < segments; ++i) {
      const double t = 2.0 * M_PI * i / segments;
      out.push_back(body.center + Vec2{std::cos(t), std::sin(t)} * body.radius);
    }
  } else {
    out = body.vertices;
  }
  return out;
}

}  // namespace mobsamp
