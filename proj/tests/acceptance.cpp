// Acceptance suite: one criterion per function, one pass/fail line each,
// nonzero exit when anything fails. Runtime limits are part of the
// criteria and are enforced.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobsamp/decide.hpp"
#include "mobsamp/density.hpp"
#include "mobsamp/geometry.hpp"
#include "mobsamp/gridfield.hpp"
#include "mobsamp/json_io.hpp"
#include "mobsamp/rng.hpp"
#include "mobsamp/scenario.hpp"
#include "mobsamp/trajectory.hpp"
#include "mobsamp/uniqueness.hpp"

namespace {

using namespace mobsamp;

void check(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

void check_near(double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    throw std::runtime_error(os.str());
  }
}

ConvexBody random_polygon(Rng& rng, double scale) {
  const int n = 4 + static_cast<int>(rng.uniform01() * 6);
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * (i + 0.8 * rng.uniform01()) / n;
    const double r = scale * (0.5 + 1.5 * rng.uniform01());
    pts.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return ConvexBody::polygon(std::move(pts));
}

// 1. Equidistant circles against small and large disks; the diameter rule
//    decides both.
void criterion1() {
  const DiscreteSet nat = DiscreteSet::ray(1.0, 1.0);
  const ConvexBody circle = ConvexBody::disk({0, 0}, 1.0);
  const double dq = symmetrized_density(nat).value;
  check(dq == 1.0, "d^-(N) must be exactly 1");

  const ConvexBody small = ConvexBody::disk({0, 0}, 0.4);
  const Verdict ss = decide_dilated(circle, nat, small);
  check(ss.status == SamplingStatus::SS, "disk 0.4 must be SS");
  check(ss.rule == "cor1i", "disk base must use the diameter rule");
  check((diameter(small) < dq) == (ss.status == SamplingStatus::SS), "diameter rule mismatch");
  check_near(ss.margin, dq - diameter(small), 1e-12, "margin = d^- - Diam");

  const ConvexBody large = ConvexBody::disk({0, 0}, 0.51);
  const Verdict ns = decide_dilated(circle, nat, large);
  check(ns.status == SamplingStatus::NotSS, "disk 0.51 must be NotSS");
  check((diameter(large) < dq) == false, "diameter rule mismatch on 0.51");
  check_near(ns.margin, dq - diameter(large), 1e-12, "margin = d^- - Diam");
}

// 2. Equidistant squares admit an SS spectrum of area 3 > pi/4; equidistant
//    circles reject every spectrum of area > pi/4 (isodiametric: area >
//    pi/4 forces Diam > 1).
void criterion2() {
  const DiscreteSet nat = DiscreteSet::ray(1.0, 1.0);
  const ConvexBody square = ConvexBody::axis_box(-1, -1, 1, 1);
  const ConvexBody strip = ConvexBody::polygon({{0, 0}, {10, 10}, {10.3, 10}, {0.3, 0}});
  check_near(strip.area(), 3.0, 1e-12, "strip area");
  check(strip.area() > M_PI / 4.0, "strip area must exceed pi/4");
  const Verdict v = decide_dilated(square, nat, strip);
  check(v.status == SamplingStatus::SS, "square dilates over the strip must be SS");

  const ConvexBody circle = ConvexBody::disk({0, 0}, 1.0);
  Rng rng(2024);
  for (int i = 0; i < 10; ++i) {
    ConvexBody omega = random_polygon(rng, 1.0);
    const double target = M_PI / 4.0 + 0.05 + 2.0 * rng.uniform01();
    omega = omega.scaled(std::sqrt(target / omega.area()));
    check(omega.area() > M_PI / 4.0, "random body must have area > pi/4");
    check(diameter(omega) > 1.0, "isodiametric consequence: Diam > 1");
    check(decide_dilated(circle, nat, omega).status == SamplingStatus::NotSS,
          "circles must reject area > pi/4");
  }
}

// 3. Geometry property suite on 100 random polygons at 1e-9.
void criterion3() {
  Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const ConvexBody poly = random_polygon(rng, 0.3 + 2.0 * rng.uniform01());

    const ConvexBody back = polar_dual(polar_dual(poly));
    check(hausdorff_distance(back.vertices, poly.vertices) <= 1e-9 * diameter(poly),
          "polar involution");

    const ConvexBody diff = minkowski_self_difference(poly);
    for (int k = 0; k < 100; ++k) {
      const double th = 2.0 * M_PI * rng.uniform01();
      const Vec2 y{std::cos(th), std::sin(th)};
      const double expect = support(poly, y) + support(poly, -y);
      check(std::abs(support(diff, y) - expect) <= 1e-12 * std::max(1.0, expect),
            "support additivity");
    }

    // Chord/membership equivalence: t v in Omega - Omega iff the chord in
    // direction v reaches t.
    for (int k = 0; k < 16; ++k) {
      const double th = 2.0 * M_PI * rng.uniform01();
      const Direction v{std::cos(th), std::sin(th)};
      const double chord = max_chord_length(poly, v);
      const double t = chord * (0.2 + 1.6 * rng.uniform01());
      const bool inside = contains(diff, v.v * t, 1e-9) != Membership::Outside;
      const bool reach = t <= chord + 1e-9;
      check(inside == reach, "chord vs membership equivalence");
    }
  }
}

// 4. Exact density oracles plus the counting enumeration.
void criterion4() {
  const DensityReport z = lower_uniform_density(DiscreteSet::arithmetic(1.0));
  check(z.exact && z.value == 1.0, "D^-(Z) = 1 exactly");
  const DensityReport a = lower_uniform_density(DiscreteSet::arithmetic(0.25));
  check(a.exact && a.value == 4.0, "D^-(0.25 Z) = 4 exactly");
  const DensityReport l = lower_uniform_density(DiscreteSet::lattice({1, 0}, {0, 1}));
  check(l.exact && l.value == 1.0, "D^-(Z^2) = 1 exactly");
  const DensityReport d = symmetrized_density(DiscreteSet::ray(1.0, 1.0));
  check(d.exact && d.value == 1.0, "d^-(N) = 1 exactly");

  std::int64_t brute = 0;
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      if (x * x + y * y < 6.25) ++brute;
  check(brute == 21, "brute-force enumeration must give 21");
  check(counting(DiscreteSet::lattice({1, 0}, {0, 1}), 2.5) == brute, "theta(Z^2, 2.5) = 21");
}

// 5. Desk-scale corroboration of the knife edge at disk radius 1/2:
//    random-field floor on the SS side, adversarial collapse and an exact
//    witness on the NotSS side, stable across N = 256 -> 512.
void criterion5() {
  const Trajectory lines =
      Trajectory::parallel_lines(Direction{0.0, 1.0}, DiscreteSet::arithmetic(1.0));
  const ConvexBody ss_disk = ConvexBody::disk({0, 0}, 0.49);
  const ConvexBody ns_disk = ConvexBody::disk({0, 0}, 0.51);
  const double L = 16.0;
  const int trials = 32;
  const std::uint64_t seed = 1;

  const ProbeReport r256 = estimate_lower_frame_ratio(ss_disk, lines, trials, 256, L, L / 256, seed);
  const ProbeReport r512 = estimate_lower_frame_ratio(ss_disk, lines, trials, 512, L, L / 512, seed);
  check(r256.sup_ratio > 0.0 && r512.sup_ratio > 0.0, "SS ratios must be positive");
  const double rel = std::abs(r256.sup_ratio - r512.sup_ratio) / r256.sup_ratio;
  check(rel < 0.20, "min sup ratio must be stable within 20% across resolutions, got " +
                        std::to_string(rel));

  const ProbeReport adv =
      adversarial_minimize(ns_disk, lines, 256, L, L / 256, 500, seed);
  check(std::min(r256.sup_ratio, r512.sup_ratio) >= 10.0 * adv.sup_ratio,
        "SS floor must exceed 10x the adversarial NotSS value (adv " +
            std::to_string(adv.sup_ratio) + ")");

  const GridField w = witness_lines(ns_disk, 256, L);
  const ProbeReport wr = probe(lines, w, L / 256);
  check(wr.sup_ratio <= 1e-9, "witness must vanish on the lines to 1e-9");
}

// 6. The sinc bump over a gap of radius 20 in the center set.
void criterion6() {
  const double L = 128.0;
  const int n = 512;
  const double delta = 0.3;
  const double gap = 20.0;
  const Vec2 xc{64.0, 64.0};
  std::vector<Vec2> centers;
  for (double x = 4.0; x <= 124.0; x += 4.0)
    for (double y = 4.0; y <= 124.0; y += 4.0)
      if (dist({x, y}, xc) > gap) centers.push_back({x, y});
  const Trajectory circles =
      Trajectory::translated_circles(1.0, DiscreteSet::explicit2d(centers, 256.0));

  const ConvexBody omega = ConvexBody::disk({0, 0}, 0.4);
  const auto fields = witness_gap(omega, delta, {xc}, n, L);
  check(fields.size() == 1, "one field per gap center");
  const GridField& f = fields[0];
  check_near(grid_sup(f), 1.0, 1e-12, "sup must be normalized to 1");
  const FieldEvaluator eval(f);
  check(std::abs(eval(xc)) >= 0.99, "field must peak at the gap center");

  const ProbeReport r = probe(circles, f, 0.25);
  const double envelope = 1.0 / (delta * gap);
  check(r.sup_ratio <= envelope,
        "on-path sup " + std::to_string(r.sup_ratio) + " must stay below the envelope " +
            std::to_string(envelope));
}

// 7. Uniqueness constants: the 10-digit factor, the pinned alpha, and the
//    sphere-grid quadrature cross-check of the average intersection count.
void criterion7() {
  check(std::abs(kTranslatedCirclesFactor - 1.0606601717) < 5e-11,
        "3/(2 sqrt 2) to ten digits");

  const MeanEstimate alpha = estimate_alpha(1000000, 424242);
  check(std::abs(alpha.value - kAlphaPinned) <= 3.0 * alpha.std_error,
        "alpha(1e6) must match the pinned oracle value within 3 std errors");

  const DiscreteSet nat = DiscreteSet::ray(1.0, 1.0);
  const CountingFn theta = make_counting_fn(nat);
  const double t = 10.0;
  const MeanEstimate mc = avg_intersection_count(theta, t, 1000000, 99);
  // Deterministic sphere-grid quadrature in Hopf coordinates (1000 x 100
  // grid over the (c, psi) chart; the fiber integral is exact).
  double quad = 0.0;
  const int nc = 1000, npsi = 100;
  for (int i = 0; i < nc; ++i) {
    const double c = (i + 0.5) / nc;
    for (int j = 0; j < npsi; ++j) {
      const double psi = 2.0 * M_PI * (j + 0.5) / npsi;
      const double mod2 = c * c + (1 - c) * (1 - c) + 2 * c * (1 - c) * std::cos(psi);
      quad += 2.0 * theta(std::sqrt(std::sqrt(std::max(0.0, mod2))) * t);
    }
  }
  quad /= static_cast<double>(nc) * npsi;
  check(std::abs(mc.value - quad) <= 2.0 * mc.std_error,
        "average intersection count must match quadrature within 2 std errors (mc " +
            std::to_string(mc.value) + ", quad " + std::to_string(quad) + ")");
}

// 8. The transfer rule's scaling bookkeeping over a table of 20 cases.
void criterion8() {
  const ConvexBody omega = ConvexBody::disk({0, 0}, 0.5);
  int checked = 0;
  for (const SamplingStatus status :
       {SamplingStatus::SS, SamplingStatus::NotSS, SamplingStatus::Boundary,
        SamplingStatus::Indeterminate}) {
    for (const double eps : {0.05, 0.1, 0.25, 0.5}) {
      Verdict v;
      v.status = status;
      const TransferVerdict t = transfer_to_paley_wiener(v, omega, eps, true, true);
      if (status == SamplingStatus::SS) {
        check(t.claim == TransferClaim::ST, "SS + cc must transfer to ST");
        check_near(t.scaled_spectrum.radius, 0.5 * (1.0 - eps), 1e-12, "(1-eps) scaling");
      } else if (status == SamplingStatus::NotSS) {
        check(t.claim == TransferClaim::NotST, "NotSS must transfer to NotST");
        check_near(t.scaled_spectrum.radius, 0.5 * (1.0 + eps), 1e-12, "(1+eps) scaling");
      } else {
        check(t.claim == TransferClaim::Indeterminate, "inconclusive verdicts propagate");
      }
      ++checked;
    }
  }
  // Dropping (cc) suppresses the positive direction.
  for (const double eps : {0.1, 0.2, 0.3, 0.4}) {
    Verdict v;
    v.status = SamplingStatus::SS;
    const TransferVerdict t = transfer_to_paley_wiener(v, omega, eps, false, true);
    check(t.claim == TransferClaim::Indeterminate, "SS without cc must be indeterminate");
    ++checked;
  }
  check(checked == 20, "table must cover 20 cases");
}

// 9. Byte-identical JSON for repeated stochastic runs.
void criterion9() {
  const json verify{{"task", "verify"},
                    {"trajectory",
                     {{"family", "parallel_lines"},
                      {"direction", {0.0, 1.0}},
                      {"offsets", {{"dim", 1}, {"kind", "arithmetic"}, {"step", 1.0}}}}},
                    {"spectrum", {{"kind", "disk"}, {"center", {0.0, 0.0}}, {"radius", 0.49}}},
                    {"N", 128},
                    {"trials", 4},
                    {"seed", 31337}};
  check(dump_fixed12(run(verify).output) == dump_fixed12(run(verify).output),
        "verify runs must serialize byte-identically");

  const json adversarial{{"task", "verify"},
                         {"op", "adversarial"},
                         {"trajectory",
                          {{"family", "parallel_lines"},
                           {"direction", {0.0, 1.0}},
                           {"offsets", {{"dim", 1}, {"kind", "arithmetic"}, {"step", 1.0}}}}},
                         {"spectrum", {{"kind", "disk"}, {"center", {0.0, 0.0}}, {"radius", 0.51}}},
                         {"N", 128},
                         {"iters", 50},
                         {"seed", 5}};
  check(dump_fixed12(run(adversarial).output) == dump_fixed12(run(adversarial).output),
        "adversarial runs must serialize byte-identically");

  const json uniq{{"task", "uniqueness"}, {"family", "dilated"}, {"type_A", 1.0},
                  {"slope_B", 1.0},      {"samples", 200000},    {"seed", 77}};
  check(dump_fixed12(run(uniq).output) == dump_fixed12(run(uniq).output),
        "uniqueness runs must serialize byte-identically");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "equidistant-circles diameter rule", 1.0, criterion1},
      {2, "large-measure spectra: squares pass, circles fail", 5.0, criterion2},
      {3, "geometry properties on 100 random polygons", 10.0, criterion3},
      {4, "exact density and counting oracles", 1.0, criterion4},
      {5, "grid corroboration of the half-disk knife edge", 300.0, criterion5},
      {6, "gap witness under the sinc envelope", 60.0, criterion6},
      {7, "uniqueness constants and quadrature cross-checks", 120.0, criterion7},
      {8, "transfer rule scaling table", 1.0, criterion8},
      {9, "seeded runs are byte-identical", 120.0, criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.limit_seconds) {
      std::ostringstream os;
      os << "runtime " << secs << " s exceeds the " << c.limit_seconds << " s limit";
      error = os.str();
    }
    if (error.empty()) {
      std::printf("[PASS] criterion %d: %s (%.2f s)\n", c.id, c.name, secs);
    } else {
      std::printf("[FAIL] criterion %d: %s (%.2f s): %s\n", c.id, c.name, secs, error.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
