#include <algorithm>
#include <cmath>
#include <string>

#include "../leaf_scan.hpp"
#include "../quintic_core.hpp"
#include "folia/analysis.hpp"
#include "folia/error.hpp"
#include "folia/kernels.hpp"

namespace folia::analysis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Extremum {
  double kappa = 0.0;
  double at = 0.0;  // s (h2) or w (e2)
};

// One curvature value at parameter s inside an h2 piece.
double h2_point(const leafgen::H2Leaf& leaf, double s) {
  double t = std::exp(s);
  double v, g, gp;
  leaf.rho_derivs(t, &v, &g, &gp);
  return kernelcore::kappa_h2_one(t, std::sin(t), std::cos(t), g, gp);
}

double e2_spike_point(const QuinticSegment& poly, double w) {
  double v, g, gp;
  poly.eval(w, &v, &g, &gp);
  double en = std::exp(-w);
  double p = g * en;
  double q = 1.0 + p * p;
  return (g - gp) * (en * en) / (q * std::sqrt(q));
}

double e2_parabola_point(double delta, double x) {
  double m = 2.0 * delta;
  double q = 1.0 + m * x * m * x;
  return m / (q * std::sqrt(q));
}

// Brute local refinement of an extremum inside [lo, hi]: three rounds of a
// 33-point sweep around the best sample.
template <typename F>
Extremum refine(const F& f, double lo, double hi, double seed, bool want_max) {
  double du = (hi - lo) / 32.0;
  double best_at = seed;
  double best = f(seed);
  for (int round = 0; round < 3; ++round) {
    double a = std::max(lo, best_at - du);
    double b = std::min(hi, best_at + du);
    for (int i = 0; i <= 32; ++i) {
      double s = a + (b - a) * i / 32.0;
      double k = f(s);
      if (want_max ? k > best : k < best) {
        best = k;
        best_at = s;
      }
    }
    du = (b - a) / 16.0;
  }
  return {best, best_at};
}

struct PieceScan {
  Extremum min_e, max_e;
};

template <typename F>
PieceScan scan_piece(const std::vector<double>& kappa, double lo, double hi,
                     const F& f) {
  const kernels::KernelSet& ks = kernels::active();
  kernels::MinMaxResult mm = ks.minmax(kappa.data(), kappa.size());
  double step = (hi - lo) / static_cast<double>(kappa.size() - 1);
  double at_min = lo + step * static_cast<double>(mm.argmin);
  double at_max = lo + step * static_cast<double>(mm.argmax);
  PieceScan out;
  out.min_e = refine(f, std::max(lo, at_min - step),
                     std::min(hi, at_min + step), at_min, false);
  out.max_e = refine(f, std::max(lo, at_max - step),
                     std::min(hi, at_max + step), at_max, true);
  return out;
}

}  // namespace

CurvatureScan scan_h2(const leafgen::H2Leaf& leaf, int samples_per_segment) {
  if (samples_per_segment < 16)
    throw ValidationError("curvature scan needs at least 16 samples");
  const kernels::KernelSet& ks = kernels::active();
  CurvatureScan scan;
  bool seen = false;
  double worst_dev = -1.0;
  auto take = [&](const PieceScan& ps, const std::string& label) {
    double at_min = std::exp(ps.min_e.at);
    double at_max = std::exp(ps.max_e.at);
    if (!seen || ps.min_e.kappa < scan.min_kappa) {
      scan.min_kappa = ps.min_e.kappa;
      scan.argmin = at_min;
    }
    if (!seen || ps.max_e.kappa > scan.max_kappa) {
      scan.max_kappa = ps.max_e.kappa;
      scan.argmax = at_max;
    }
    seen = true;
    double dev =
        std::max(std::abs(ps.min_e.kappa - 1.0), std::abs(ps.max_e.kappa - 1.0));
    if (dev > worst_dev) {
      worst_dev = dev;
      scan.worst_piece = label;
    }
  };

  scan_detail::H2Grid grid;
  double s_core_lo = std::log(leaf.params.delta);
  double s_core_hi = std::log(0.5 * kPi);
  grid.init(s_core_lo, s_core_hi, samples_per_segment);
  grid.kappa_core(ks);
  auto f = [&leaf](double s) { return h2_point(leaf, s); };
  take(scan_piece(grid.kappa, s_core_lo, s_core_hi, f), "core");

  for (const leafgen::H2SpikeSegment& sp : leaf.spikes) {
    grid.init(sp.poly.s0, sp.poly.s1, samples_per_segment);
    grid.kappa_quintic(ks, sp.poly.c);
    take(scan_piece(grid.kappa, sp.poly.s0, sp.poly.s1, f),
         "spike " + std::to_string(sp.index));
  }
  return scan;
}

CurvatureScan scan_e2(const leafgen::E2Leaf& leaf, int samples_per_segment) {
  if (samples_per_segment < 16)
    throw ValidationError("curvature scan needs at least 16 samples");
  const kernels::KernelSet& ks = kernels::active();
  CurvatureScan scan;
  bool seen = false;
  double worst_dev = -1.0;
  auto take = [&](const Extremum& mn, const Extremum& mx, double at_min,
                  double at_max, const std::string& label) {
    if (!seen || mn.kappa < scan.min_kappa) {
      scan.min_kappa = mn.kappa;
      scan.argmin = at_min;
    }
    if (!seen || mx.kappa > scan.max_kappa) {
      scan.max_kappa = mx.kappa;
      scan.argmax = at_max;
    }
    seen = true;
    double dev = std::max(std::abs(mn.kappa), std::abs(mx.kappa));
    if (dev > worst_dev) {
      worst_dev = dev;
      scan.worst_piece = label;
    }
  };

  {
    double k = leaf.params.k_width;
    std::vector<double> kappa(samples_per_segment);
    for (int i = 0; i < samples_per_segment; ++i) {
      double x = k * i / static_cast<double>(samples_per_segment - 1);
      kappa[i] = e2_parabola_point(leaf.params.delta, x);
    }
    auto f = [&leaf](double x) {
      return e2_parabola_point(leaf.params.delta, x);
    };
    PieceScan ps = scan_piece(kappa, 0.0, k, f);
    take(ps.min_e, ps.max_e, ps.min_e.at, ps.max_e.at, "parabola");
  }

  scan_detail::E2Grid grid;
  for (const leafgen::E2SpikeSegment& sp : leaf.spikes) {
    grid.init(sp.poly.s0, sp.poly.s1, samples_per_segment);
    grid.kappa_quintic(ks, sp.poly.c);
    auto f = [&sp](double w) { return e2_spike_point(sp.poly, w); };
    PieceScan ps = scan_piece(grid.kappa, sp.poly.s0, sp.poly.s1, f);
    // Report extrema at the abscissa of the segment for consistency with the
    // parabola piece.
    double vx_min, vx_max, g, gp;
    sp.poly.eval(ps.min_e.at, &vx_min, &g, &gp);
    sp.poly.eval(ps.max_e.at, &vx_max, &g, &gp);
    take(ps.min_e, ps.max_e, vx_min, vx_max,
         "spike " + std::to_string(sp.index));
  }
  return scan;
}

void require_pinched(const CurvatureScan& scan, double target,
                     double epsilon) {
  double lo = target - scan.min_kappa;
  double hi = scan.max_kappa - target;
  double dev = std::max(lo, hi);
  if (dev > epsilon * (1.0 + 1e-9) + 1e-15) {
    bool high = hi >= lo;
    throw ConstructionError(
        "curvature pinch violated: " + scan.worst_piece + " reaches kappa = " +
            std::to_string(high ? scan.max_kappa : scan.min_kappa),
        scan.worst_piece, high ? scan.max_kappa : scan.min_kappa,
        high ? scan.argmax : scan.argmin);
  }
}

}  // namespace folia::analysis
