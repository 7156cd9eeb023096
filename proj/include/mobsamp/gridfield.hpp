#pragma once

// Desk-scale surrogates for band-limited functions: fields synthesized on a
// periodized N x N grid whose spectrum lives on an integer frequency mask
// {k : k/L in Omega}. Path probing interpolates with a prefiltered cardinal
// bicubic spline on a 2x spectrally upsampled grid, which keeps the
// pure-exponential evaluation error under 1e-6 for masks inside the grid
// Nyquist box.
//
// Random synthesis draws one standard complex Gaussian per mask point in a
// canonical order that does not depend on N, so refining the grid keeps the
// underlying trigonometric polynomial fixed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "mobsamp/density.hpp"
#include "mobsamp/errors.hpp"
#include "mobsamp/fft.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/rng.hpp"
#include "mobsamp/trajectory.hpp"
#include "mobsamp/vec2.hpp"

namespace mobsamp {

struct FreqPair {
  int kx = 0;
  int ky = 0;
};

struct GridField {
  int n = 0;           // grid size per axis, power of two
  double period = 0.0; // torus period L
  std::vector<FreqPair> mask;
  std::vector<std::complex<double>> coeffs;  // parallel to mask
  std::vector<std::complex<double>> values;  // n*n, index ix + n*iy

  Vec2 grid_point(int ix, int iy) const {
    return {period * ix / n, period * iy / n};
  }
};

struct ProbeReport {
  double sup_ratio = 0.0;
  double l2_ratio = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
  int n = 0;
  double period = 0.0;
  double eta = 0.0;
};

// ---------------------------------------------------------------------------
// Mask and synthesis

inline std::vector<FreqPair> build_mask(const ConvexBody& spectrum, int n, double period) {
  if (!is_power_of_two(static_cast<std::size_t>(n)))
    fail(ErrorCode::InvalidArgument, "grid size must be a power of two");
  if (period <= 0.0) fail(ErrorCode::InvalidArgument, "period must be positive");
  const int klo_x = static_cast<int>(std::floor(-support(spectrum, {-1.0, 0.0}) * period)) - 1;
  const int khi_x = static_cast<int>(std::ceil(support(spectrum, {1.0, 0.0}) * period)) + 1;
  const int klo_y = static_cast<int>(std::floor(-support(spectrum, {0.0, -1.0}) * period)) - 1;
  const int khi_y = static_cast<int>(std::ceil(support(spectrum, {0.0, 1.0}) * period)) + 1;
  std::vector<FreqPair> mask;
  for (int kx = klo_x; kx <= khi_x; ++kx)
    for (int ky = klo_y; ky <= khi_y; ++ky) {
      const Vec2 y{kx / period, ky / period};
      if (contains(spectrum, y) != Membership::Outside) mask.push_back({kx, ky});
    }
  if (mask.empty()) fail(ErrorCode::MaskEmpty, "no grid frequency lies in the spectrum");
  for (const FreqPair& k : mask)
    if (std::abs(k.kx) > n / 2 - 1 || std::abs(k.ky) > n / 2 - 1)
      fail(ErrorCode::MaskExceedsGrid, "spectrum exceeds the representable frequency box");
  return mask;
}

inline void resynthesize_values(GridField& f) {
  const std::size_t n = static_cast<std::size_t>(f.n);
  std::vector<std::complex<double>> freq(n * n, {0.0, 0.0});
  for (std::size_t i = 0; i < f.mask.size(); ++i) {
    const int ix = ((f.mask[i].kx % f.n) + f.n) % f.n;
    const int iy = ((f.mask[i].ky % f.n) + f.n) % f.n;
    freq[static_cast<std::size_t>(ix) + n * static_cast<std::size_t>(iy)] = f.coeffs[i];
  }
  fft2_inplace(freq, n, /*inverse=*/true);
  const double scale = static_cast<double>(n) * static_cast<double>(n);
  for (auto& v : freq) v *= scale;
  f.values = std::move(freq);
}

inline GridField synth_from_coeffs(const ConvexBody& spectrum, int n, double period,
                                   std::vector<FreqPair> mask,
                                   std::vector<std::complex<double>> coeffs) {
  (void)spectrum;
  GridField f;
  f.n = n;
  f.period = period;
  f.mask = std::move(mask);
  f.coeffs = std::move(coeffs);
  resynthesize_values(f);
  return f;
}

// Independent standard complex Gaussian coefficients on the mask, one draw
// per mask point in canonical (kx, ky) order.
inline GridField synth_random(const ConvexBody& spectrum, int n, double period,
                              std::uint64_t seed) {
  std::vector<FreqPair> mask = build_mask(spectrum, n, period);
  Rng rng(seed);
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) coeffs.push_back(rng.complex_gaussian());
  return synth_from_coeffs(spectrum, n, period, std::move(mask), std::move(coeffs));
}

inline double grid_sup(const GridField& f) {
  double s = 0.0;
  for (const auto& v : f.values) s = std::max(s, std::abs(v));
  return s;
}

// \int |f|^2 over one fundamental domain.
inline double grid_l2_squared(const GridField& f) {
  double acc = 0.0;
  for (const auto& v : f.values) acc += std::norm(v);
  return acc * f.period * f.period / (static_cast<double>(f.values.size()));
}

// Relative spectral energy outside the mask, measured from the values.
inline double off_mask_energy(const GridField& f) {
  const std::size_t n = static_cast<std::size_t>(f.n);
  std::vector<std::complex<double>> freq = f.values;
  fft2_inplace(freq, n, /*inverse=*/false);
  std::vector<bool> on(n * n, false);
  for (const FreqPair& k : f.mask) {
    const int ix = ((k.kx % f.n) + f.n) % f.n;
    const int iy = ((k.ky % f.n) + f.n) % f.n;
    on[static_cast<std::size_t>(ix) + n * static_cast<std::size_t>(iy)] = true;
  }
  double off = 0.0, total = 0.0;
  for (std::size_t i = 0; i < freq.size(); ++i) {
    const double e = std::norm(freq[i]);
    total += e;
    if (!on[i]) off += e;
  }
  return total > 0.0 ? off / total : 0.0;
}

// ---------------------------------------------------------------------------
// Interpolating evaluator

namespace detail {

inline double bspline3(double z) {
  const double a = std::abs(z);
  if (a < 1.0) return 2.0 / 3.0 - a * a + a * a * a / 2.0;
  if (a < 2.0) {
    const double b = 2.0 - a;
    return b * b * b / 6.0;
  }
  return 0.0;
}

inline double bspline3_dft(int k, int m) {
  return 2.0 / 3.0 + std::cos(2.0 * M_PI * k / m) / 3.0;
}

}  // namespace detail

// Cardinal bicubic spline over the field's spectrum, prefiltered on a 2x
// upsampled grid. Exact (to rounding) at the upsampled grid nodes.
class FieldEvaluator {
 public:
  explicit FieldEvaluator(const GridField& f) : m_(2 * f.n), period_(f.period) {
    const std::size_t m = static_cast<std::size_t>(m_);
    std::vector<std::complex<double>> freq(m * m, {0.0, 0.0});
    for (std::size_t i = 0; i < f.mask.size(); ++i) {
      const int ix = ((f.mask[i].kx % m_) + m_) % m_;
      const int iy = ((f.mask[i].ky % m_) + m_) % m_;
      const double pre = detail::bspline3_dft(f.mask[i].kx, m_) * detail::bspline3_dft(f.mask[i].ky, m_);
      freq[static_cast<std::size_t>(ix) + m * static_cast<std::size_t>(iy)] = f.coeffs[i] / pre;
    }
    fft2_inplace(freq, m, /*inverse=*/true);
    const double scale = static_cast<double>(m) * static_cast<double>(m);
    for (auto& v : freq) v *= scale;
    spline_ = std::move(freq);
  }

  std::complex<double> operator()(const Vec2& x) const {
    double ux = std::fmod(x.x / period_, 1.0);
    double uy = std::fmod(x.y / period_, 1.0);
    if (ux < 0.0) ux += 1.0;
    if (uy < 0.0) uy += 1.0;
    const double gx = ux * m_;
    const double gy = uy * m_;
    const int jx = static_cast<int>(std::floor(gx));
    const int jy = static_cast<int>(std::floor(gy));
    const double tx = gx - jx;
    const double ty = gy - jy;
    double wx[4], wy[4];
    for (int d = 0; d < 4; ++d) {
      wx[d] = detail::bspline3(tx - (d - 1));
      wy[d] = detail::bspline3(ty - (d - 1));
    }
    std::complex<double> acc{0.0, 0.0};
    for (int dy = 0; dy < 4; ++dy) {
      const int iy = (jy + dy - 1 + m_) % m_;
      std::complex<double> row{0.0, 0.0};
      for (int dx = 0; dx < 4; ++dx) {
        const int ix = (jx + dx - 1 + m_) % m_;
        row += spline_[static_cast<std::size_t>(ix) + static_cast<std::size_t>(m_) * iy] * wx[dx];
      }
      acc += row * wy[dy];
    }
    return acc;
  }

 private:
  int m_;
  double period_;
  std::vector<std::complex<double>> spline_;
};

// ---------------------------------------------------------------------------
// Probing

inline Bbox torus_bbox(const GridField& f) { return Bbox{{0.0, 0.0}, {f.period, f.period}}; }

// Sup and L2 ratios of the field along the discretized trajectory.
// Components on the torus seam are sampled on both edges; the sup is
// unaffected and the trapezoidal L2 weight changes only marginally.
inline ProbeReport probe(const Trajectory& P, const GridField& f, double eta) {
  const DiscretePath path = discretize(P, eta, torus_bbox(f));
  if (path.size() == 0) fail(ErrorCode::EmptyPath, "trajectory misses the torus window");
  const FieldEvaluator eval(f);
  double sup_path = 0.0;
  double l2_path = 0.0;
  for (const auto& comp : path.components) {
    const std::size_t m = comp.points.size();
    std::vector<double> mag2(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double a = std::abs(eval(comp.points[i]));
      sup_path = std::max(sup_path, a);
      mag2[i] = a * a;
    }
    if (m < 2) continue;
    for (std::size_t i = 0; i + 1 < m; ++i)
      l2_path += 0.5 * (mag2[i] + mag2[i + 1]) * (comp.arc_param[i + 1] - comp.arc_param[i]);
    if (comp.closed) {
      const double ds = comp.length - comp.arc_param.back();
      l2_path += 0.5 * (mag2.back() + mag2.front()) * ds;
    }
  }
  ProbeReport rep;
  rep.sup_ratio = sup_path / grid_sup(f);
  rep.l2_ratio = l2_path / grid_l2_squared(f);
  rep.trials = 1;
  rep.n = f.n;
  rep.period = f.period;
  rep.eta = eta;
  return rep;
}

// Monte-Carlo lower-bound probe of the frame inequality: minimum ratios
// over independent random fields, per-trial seeds seed + trial index.
inline ProbeReport estimate_lower_frame_ratio(const ConvexBody& spectrum, const Trajectory& P,
                                              int trials, int n, double period, double eta,
                                              std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "need at least one trial");
  ProbeReport agg;
  agg.sup_ratio = std::numeric_limits<double>::infinity();
  agg.l2_ratio = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const GridField f = synth_random(spectrum, n, period, seed + static_cast<std::uint64_t>(t));
    const ProbeReport r = probe(P, f, eta);
    agg.sup_ratio = std::min(agg.sup_ratio, r.sup_ratio);
    agg.l2_ratio = std::min(agg.l2_ratio, r.l2_ratio);
  }
  agg.trials = trials;
  agg.seed = seed;
  agg.n = n;
  agg.period = period;
  agg.eta = eta;
  return agg;
}

// ---------------------------------------------------------------------------
// Explicit witnesses

// The extremal function sin(pi x1): vanishes on every vertical line at an
// integer abscissa, reaches sup 1, and its two-point spectrum {±1/2} on the
// x1 axis fits any spectrum with a horizontal chord of length >= 1 after
// translation.
inline GridField witness_lines(const ConvexBody& spectrum, int n, double period) {
  if (max_chord_length(spectrum, Direction{1.0, 0.0}) < 1.0 - kTolGeom)
    fail(ErrorCode::ChordTooShort, "spectrum has no horizontal chord of length 1");
  const double khalf_real = period / 2.0;
  const int khalf = static_cast<int>(std::llround(khalf_real));
  if (std::abs(khalf_real - khalf) > 1e-12)
    fail(ErrorCode::FrequencyUnrepresentable, "period must be even so that ±1/2 are grid frequencies");
  if (khalf > n / 2 - 1) fail(ErrorCode::MaskExceedsGrid, "grid too coarse for frequency 1/2");
  std::vector<FreqPair> mask{{-khalf, 0}, {khalf, 0}};
  std::vector<std::complex<double>> coeffs{{0.0, 0.5}, {0.0, -0.5}};  // sin(pi x1)
  return synth_from_coeffs(spectrum, n, period, std::move(mask), std::move(coeffs));
}

// sinc with the product convention sin(x1)/x1 * sin(x2)/x2.
inline double sinc2(const Vec2& x) {
  auto s = [](double u) { return std::abs(u) < 1e-12 ? 1.0 : std::sin(u) / u; };
  return s(x.x) * s(x.y);
}

// Periodized sinc bumps sinc(delta (x - x_c)) for each gap center: spectrum
// inside the square [-delta/2pi, delta/2pi]^2 (contained in B_delta(0), so
// in the centered spectrum), grid sup normalized to 1 near the center.
inline std::vector<GridField> witness_gap(const ConvexBody& spectrum, double delta,
                                          const std::vector<Vec2>& gap_centers, int n,
                                          double period) {
  if (delta <= 0.0) fail(ErrorCode::InvalidArgument, "delta must be positive");
  const Vec2 c0 = spectrum.centroid();
  if (-signed_distance(spectrum, c0) < delta - kTolGeom)
    fail(ErrorCode::DeltaTooLarge, "B_delta(0) does not fit inside the centered spectrum");
  const int kmax = static_cast<int>(std::floor(delta * period / (2.0 * M_PI)));
  if (kmax > n / 2 - 1) fail(ErrorCode::MaskExceedsGrid, "grid too coarse for the sinc band");
  if (kmax < 0) fail(ErrorCode::MaskEmpty, "band contains no grid frequency");
  std::vector<GridField> out;
  out.reserve(gap_centers.size());
  const double amp = (M_PI / (delta * period)) * (M_PI / (delta * period));
  for (const Vec2& xc : gap_centers) {
    std::vector<FreqPair> mask;
    std::vector<std::complex<double>> coeffs;
    for (int kx = -kmax; kx <= kmax; ++kx)
      for (int ky = -kmax; ky <= kmax; ++ky) {
        mask.push_back({kx, ky});
        const double phase = -2.0 * M_PI * (kx * xc.x + ky * xc.y) / period;
        coeffs.push_back(std::polar(amp, phase));
      }
    GridField f = synth_from_coeffs(spectrum, n, period, std::move(mask), std::move(coeffs));
    const double s = grid_sup(f);
    for (auto& c : f.coeffs) c /= s;
    for (auto& v : f.values) v /= s;
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adversarial search (heuristic; never evidence of SS)

// Alternating projection between fields vanishing on the discretized path
// and mask-band-limited fields, renormalized to grid sup 1 each round.
// Reports the achieved sup ratio; no claim of global optimality.
inline ProbeReport adversarial_minimize(const ConvexBody& spectrum, const Trajectory& P, int n,
                                        double period, double eta, int iterations,
                                        std::uint64_t seed) {
  GridField f = synth_random(spectrum, n, period, seed);
  if (iterations > 0) {
    const DiscretePath path = discretize(P, eta, torus_bbox(f));
    if (path.size() == 0) fail(ErrorCode::EmptyPath, "trajectory misses the torus window");
    // Precompute the grid footprint of each path sample.
    struct NodeHit {
      std::size_t idx;
    };
    struct PatchHit {
      std::size_t idx[4];
      double w[4];
      double wnorm2;
    };
    std::vector<NodeHit> nodes;
    std::vector<PatchHit> patches;
    const std::size_t nn = static_cast<std::size_t>(n);
    for (const Vec2& p : path.flat_points()) {
      double ux = std::fmod(p.x / period, 1.0), uy = std::fmod(p.y / period, 1.0);
      if (ux < 0.0) ux += 1.0;
      if (uy < 0.0) uy += 1.0;
      const double gx = ux * n, gy = uy * n;
      const double rx = std::round(gx), ry = std::round(gy);
      if (std::abs(gx - rx) < 1e-9 && std::abs(gy - ry) < 1e-9) {
        const std::size_t ix = static_cast<std::size_t>(rx) % nn;
        const std::size_t iy = static_cast<std::size_t>(ry) % nn;
        nodes.push_back({ix + nn * iy});
      } else {
        const int jx = static_cast<int>(std::floor(gx));
        const int jy = static_cast<int>(std::floor(gy));
        const double tx = gx - jx, ty = gy - jy;
        PatchHit h{};
        const double w00 = (1 - tx) * (1 - ty), w10 = tx * (1 - ty), w01 = (1 - tx) * ty,
                     w11 = tx * ty;
        const std::size_t x0 = static_cast<std::size_t>((jx % n + n) % n);
        const std::size_t y0 = static_cast<std::size_t>((jy % n + n) % n);
        const std::size_t x1 = (x0 + 1) % nn, y1 = (y0 + 1) % nn;
        h.idx[0] = x0 + nn * y0;
        h.idx[1] = x1 + nn * y0;
        h.idx[2] = x0 + nn * y1;
        h.idx[3] = x1 + nn * y1;
        h.w[0] = w00;
        h.w[1] = w10;
        h.w[2] = w01;
        h.w[3] = w11;
        h.wnorm2 = w00 * w00 + w10 * w10 + w01 * w01 + w11 * w11;
        patches.push_back(h);
      }
    }
    std::vector<bool> on_mask(nn * nn, false);
    for (const FreqPair& k : f.mask) {
      const int ix = ((k.kx % n) + n) % n;
      const int iy = ((k.ky % n) + n) % n;
      on_mask[static_cast<std::size_t>(ix) + nn * static_cast<std::size_t>(iy)] = true;
    }
    std::vector<std::complex<double>> work;
    for (int it = 0; it < iterations; ++it) {
      // Damp path values.
      for (const NodeHit& h : nodes) f.values[h.idx] = {0.0, 0.0};
      for (const PatchHit& h : patches) {
        std::complex<double> val{0.0, 0.0};
        for (int k = 0; k < 4; ++k) val += f.values[h.idx[k]] * h.w[k];
        const std::complex<double> corr = val / h.wnorm2;
        for (int k = 0; k < 4; ++k) f.values[h.idx[k]] -= corr * h.w[k];
      }
      // Project onto the mask.
      work = f.values;
      fft2_inplace(work, nn, /*inverse=*/false);
      const double invn2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
      for (std::size_t i = 0; i < work.size(); ++i)
        work[i] = on_mask[i] ? work[i] * invn2 : std::complex<double>{0.0, 0.0};
      for (std::size_t i = 0; i < f.mask.size(); ++i) {
        const int ix = ((f.mask[i].kx % n) + n) % n;
        const int iy = ((f.mask[i].ky % n) + n) % n;
        f.coeffs[i] = work[static_cast<std::size_t>(ix) + nn * static_cast<std::size_t>(iy)];
      }
      resynthesize_values(f);
      // Renormalize to sup 1.
      const double s = grid_sup(f);
      if (s < 1e-300) break;
      for (auto& c : f.coeffs) c /= s;
      for (auto& v : f.values) v /= s;
    }
  }
  ProbeReport rep = probe(P, f, eta);
  rep.trials = iterations;
  rep.seed = seed;
  return rep;
}

}  // namespace mobsamp
