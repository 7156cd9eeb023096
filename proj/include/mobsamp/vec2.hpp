#pragma once

#include <cmath>

#include "mobsamp/errors.hpp"

namespace mobsamp {

// Absolute tolerance used by geometric predicates unless the caller passes
// an explicit one.
inline constexpr double kTolGeom = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
// 90-degree counterclockwise rotation.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

inline bool lex_less(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Unit vector; normalizes on construction and rejects near-zero input.
struct Direction {
  Vec2 v{1.0, 0.0};

  Direction() = default;
  explicit Direction(const Vec2& raw) {
    const double n = raw.norm();
    if (n < kTolGeom) fail(ErrorCode::InvalidArgument, "direction vector has near-zero norm");
    v = raw / n;
  }
  Direction(double x, double y) : Direction(Vec2{x, y}) {}

  Direction orthogonal() const {
    Direction d;
    d.v = perp(v);
    return d;
  }
};

}  // namespace mobsamp
