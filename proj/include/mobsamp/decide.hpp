#pragma once

// Exact stable-sampling decisions for the three trajectory families over a
// convex spectrum, the 1-D Beurling rule, and the logical transfer from
// Bernstein-space verdicts to Paley-Wiener mobile sampling.
//
// Boundary semantics: the self-difference body is compact, so a tested
// point exactly on its boundary is inside it and the sharp answer is
// NotSS. The distinct Boundary status is still reported whenever the
// margin is within tolerance, so callers see the knife edge.

#include <cmath>
#include <string>
#include <vector>

#include "mobsamp/density.hpp"
#include "mobsamp/errors.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/vec2.hpp"

namespace mobsamp {

enum class SamplingStatus { SS, NotSS, Boundary, Indeterminate };

inline const char* to_string(SamplingStatus s) {
  switch (s) {
    case SamplingStatus::SS: return "SS";
    case SamplingStatus::NotSS: return "NotSS";
    case SamplingStatus::Boundary: return "Boundary";
    case SamplingStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct Verdict {
  SamplingStatus status = SamplingStatus::Indeterminate;
  std::string rule;               // "thm1" | "thm2" | "thm3" | "cor1i" | "thm5"
  double margin = 0.0;            // signed distance to the decisive boundary
  std::vector<Vec2> witnesses;    // offending extreme directions (scaled points)
  bool exact = true;              // density exactness propagated
  double window_radius = 0.0;
};

namespace detail {

inline SamplingStatus classify(double margin, double tol) {
  if (std::abs(margin) <= tol) return SamplingStatus::Boundary;
  return margin > 0.0 ? SamplingStatus::SS : SamplingStatus::NotSS;
}

}  // namespace detail

// Beurling's rule on the line: SS iff D^-(Lambda) > |Omega| for the
// interval Omega = [lo, hi].
inline Verdict beurling_1d(const DiscreteSet& lambda, double lo, double hi,
                           const DensityOptions& opt = {}) {
  if (hi <= lo) fail(ErrorCode::InvalidArgument, "interval must have positive length");
  if (lambda.dim != 1) fail(ErrorCode::InvalidArgument, "Beurling rule needs a 1-D set");
  const DensityReport d = lower_uniform_density(lambda, opt);
  Verdict v;
  v.rule = "thm1";
  v.margin = d.value - (hi - lo);
  v.status = detail::classify(v.margin, opt.tol);
  v.exact = d.exact;
  v.window_radius = d.window_radius;
  return v;
}

// Parallel lines l + H v_l: SS iff D^-(H) v_l lies strictly outside
// Omega - Omega. Equivalent chord form: max_chord_length(Omega, v_l) < D^-(H).
inline Verdict decide_parallel_lines(const DiscreteSet& offsets, const Direction& v_l,
                                     const ConvexBody& spectrum, const DensityOptions& opt = {}) {
  if (offsets.dim != 1) fail(ErrorCode::InvalidArgument, "line offsets must be 1-D");
  const DensityReport d = lower_uniform_density(offsets, opt);
  const ConvexBody diff = minkowski_self_difference(spectrum);
  const Vec2 p = v_l.v * d.value;
  Verdict v;
  v.rule = "thm2";
  v.margin = signed_distance(diff, p);
  v.status = detail::classify(v.margin, opt.tol);
  if (v.status != SamplingStatus::SS) v.witnesses.push_back(p);
  v.exact = d.exact;
  v.window_radius = d.window_radius;
  return v;
}

// Dilations Q * boundary(D): SS iff d^-(Q) v lies strictly outside
// Omega - Omega for every v in Ext(D^o). A disk D reduces to the diameter
// comparison Diam(Omega) < d^-(Q)/radius(D).
inline Verdict decide_dilated(const ConvexBody& base, const DiscreteSet& dilations,
                              const ConvexBody& spectrum, const DensityOptions& opt = {}) {
  if (signed_distance(base, {0.0, 0.0}) > -opt.tol)
    fail(ErrorCode::OriginNotInterior, "dilated rule needs the origin inside the base body");
  const DensityReport dq = symmetrized_density(dilations, opt);
  const ConvexBody dual = polar_dual(base);
  const ExtremeSet ext = extreme_points(dual);
  Verdict v;
  v.exact = dq.exact;
  v.window_radius = dq.window_radius;
  if (ext.full_circle) {
    // Every unit direction is extreme for the dual disk. Some point of the
    // test circle of radius rho lies in Omega - Omega iff Omega has a
    // chord of length rho, i.e. iff Diam(Omega) >= rho. The margin is the
    // distance from the circle to the self-difference when nonnegative.
    const double rho = dq.value * ext.radius;
    v.rule = "cor1i";
    v.margin = rho - diameter(spectrum);
    v.status = detail::classify(v.margin, opt.tol);
    if (v.status != SamplingStatus::SS) {
      // Witness: the diameter direction, scaled onto the test circle.
      double best = 0.0;
      Vec2 wdir{1.0, 0.0};
      const auto pts = boundary_samples(minkowski_self_difference(spectrum), 512);
      for (const Vec2& p : pts)
        if (p.norm() > best) {
          best = p.norm();
          wdir = p / p.norm();
        }
      v.witnesses.push_back(wdir * rho);
    }
    return v;
  }
  const ConvexBody diff = minkowski_self_difference(spectrum);
  v.rule = "thm3";
  v.margin = std::numeric_limits<double>::infinity();
  for (const Vec2& e : ext.points) {
    const Vec2 p = e * dq.value;
    const double s = signed_distance(diff, p);
    v.margin = std::min(v.margin, s);
    if (s <= opt.tol) v.witnesses.push_back(p);
  }
  v.status = detail::classify(v.margin, opt.tol);
  return v;
}

// Translated circles V + T: SS iff D^-(V) > 0, for any spectrum of
// positive measure. Strict comparison; no boundary band applies.
inline Verdict decide_translated_circles(const DiscreteSet& centers, double radius,
                                         const ConvexBody& spectrum,
                                         const DensityOptions& opt = {}) {
  if (radius <= 0.0) fail(ErrorCode::InvalidArgument, "circle radius must be positive");
  if (centers.dim != 2) fail(ErrorCode::InvalidArgument, "centers must be 2-D");
  (void)spectrum;  // any convex spectrum of positive measure behaves alike
  const DensityReport d = lower_uniform_density(centers, opt);
  Verdict v;
  v.rule = "thm5";
  v.margin = d.value;
  v.status = d.value > 0.0 ? SamplingStatus::SS : SamplingStatus::NotSS;
  v.exact = d.exact;
  v.window_radius = d.window_radius;
  return v;
}

// ---------------------------------------------------------------------------
// Transfer to Paley-Wiener mobile sampling

enum class TransferClaim { ST, NotST, Indeterminate };

inline const char* to_string(TransferClaim c) {
  switch (c) {
    case TransferClaim::ST: return "ST";
    case TransferClaim::NotST: return "NotST";
    case TransferClaim::Indeterminate: return "Indeterminate";
  }
  return "?";
}

struct TransferVerdict {
  TransferClaim claim = TransferClaim::Indeterminate;
  ConvexBody scaled_spectrum = ConvexBody::disk({0.0, 0.0}, 1.0);
  double epsilon = 0.0;
  std::string rule = "thm6";
  SamplingStatus source_status = SamplingStatus::Indeterminate;
  std::string note;
};

// SS verdicts transfer to sampling trajectories for PW^p over (1-eps)Omega
// for all 1 <= p < inf, provided the local lower-length condition holds;
// NotSS verdicts rule out PW^p over (1+eps)Omega. The uniform upper-length
// condition is a hypothesis of the rule and must be supplied.
inline TransferVerdict transfer_to_paley_wiener(const Verdict& v, const ConvexBody& spectrum,
                                                double epsilon, bool cc_holds, bool c_holds) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail(ErrorCode::InvalidArgument, "epsilon must lie in (0,1)");
  if (!c_holds)
    fail(ErrorCode::MissingConditionC,
         "the uniform upper length condition (c) is required for the transfer rule");
  TransferVerdict t;
  t.epsilon = epsilon;
  t.source_status = v.status;
  switch (v.status) {
    case SamplingStatus::SS:
      if (cc_holds) {
        t.claim = TransferClaim::ST;
        t.scaled_spectrum = spectrum.scaled(1.0 - epsilon);
      } else {
        t.claim = TransferClaim::Indeterminate;
        t.scaled_spectrum = spectrum.scaled(1.0 - epsilon);
        t.note = "local lower length condition (cc) not established; the positive direction does not apply";
      }
      break;
    case SamplingStatus::NotSS:
      t.claim = TransferClaim::NotST;
      t.scaled_spectrum = spectrum.scaled(1.0 + epsilon);
      break;
    case SamplingStatus::Boundary:
    case SamplingStatus::Indeterminate:
      t.claim = TransferClaim::Indeterminate;
      t.scaled_spectrum = spectrum;
      t.note = "source verdict inconclusive";
      break;
  }
  return t;
}

}  // namespace mobsamp
