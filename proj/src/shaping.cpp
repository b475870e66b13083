#include "shaping.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "folia/error.hpp"
#include "folia/kernels.hpp"
#include "leaf_scan.hpp"

namespace folia::leafgen::detail {

namespace {

struct WorstPoint {
  int segment = 0;
  double kappa = 0.0;
  double at = 0.0;  // theta (h2) or w (e2) of the worst sample
};

double harmonic(double a, double b) {
  double s = a + b;
  if (s == 0.0) return 0.0;
  return 2.0 * a * b / s;
}

// Minimize objective(params) by per-coordinate three-point probes with
// adaptive steps.  Deterministic; stops at the target, on step exhaustion or
// after max_sweeps.
double coordinate_descent(std::vector<double>& params,
                          const std::vector<double>& scales,
                          const std::function<double()>& objective,
                          double target, int max_sweeps) {
  double best = objective();
  if (best <= target) return best;
  std::vector<double> step(scales);
  for (double& st : step) st *= 0.5;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
      double center = params[i];
      params[i] = center + step[i];
      double up = objective();
      params[i] = center - step[i];
      double down = objective();
      if (up < best && up <= down) {
        params[i] = center + step[i];
        best = up;
        step[i] *= 1.6;
        improved = true;
      } else if (down < best) {
        params[i] = center - step[i];
        best = down;
        step[i] *= 1.6;
        improved = true;
      } else {
        params[i] = center;
        step[i] *= 0.5;
      }
      if (best <= target) return best;
    }
    if (!improved) {
      double live = 0.0;
      for (std::size_t i = 0; i < params.size(); ++i)
        live = std::max(live, step[i] / scales[i]);
      if (live < 1e-10) break;
    }
  }
  return objective();
}

}  // namespace

std::vector<QuinticSegment> shape_h2(const ConstructionParams& p,
                                     const std::vector<double>& s,
                                     const std::vector<double>& v, double g0,
                                     double q0) {
  int len = static_cast<int>(s.size()) - 1;
  if (len <= 0) return {};
  const kernels::KernelSet& ks = kernels::active();

  std::vector<double> chord(len + 1, 0.0);
  for (int n = 1; n <= len; ++n)
    chord[n] = (v[n - 1] - v[n]) / (s[n - 1] - s[n]);

  // params layout: g_1, q_1, ..., g_L, q_L (anchor-side derivatives).
  std::vector<double> params(2 * len);
  std::vector<double> scales(2 * len);
  for (int n = 1; n <= len; ++n) {
    double g_init = n < len ? harmonic(chord[n], chord[n + 1]) : chord[len];
    params[2 * (n - 1)] = g_init;
    params[2 * (n - 1) + 1] = 0.0;
    double sc = std::max(1.0, std::abs(chord[n]));
    if (n < len) sc = std::max(sc, std::abs(chord[n + 1]));
    scales[2 * (n - 1)] = sc;
    scales[2 * (n - 1) + 1] = sc;
  }

  std::vector<scan_detail::H2Grid> grids(len);
  for (int n = 1; n <= len; ++n)
    grids[n - 1].init(s[n], s[n - 1], p.samples_per_segment);

  WorstPoint worst;
  auto objective = [&]() {
    double dev = 0.0;
    for (int n = 1; n <= len; ++n) {
      double gr = n == 1 ? g0 : params[2 * (n - 2)];
      double qr = n == 1 ? q0 : params[2 * (n - 2) + 1];
      QuinticSegment seg =
          QuinticSegment::hermite(s[n], s[n - 1], v[n], params[2 * (n - 1)],
                                  params[2 * (n - 1) + 1], v[n - 1], gr, qr);
      scan_detail::H2Grid& grid = grids[n - 1];
      grid.kappa_quintic(ks, seg.c);
      kernels::MinMaxResult mm = ks.minmax(grid.kappa.data(), grid.kappa.size());
      double lo = 1.0 - mm.min_v;
      double hi = mm.max_v - 1.0;
      double d = std::max(lo, hi);
      if (d > dev) {
        dev = d;
        bool high = hi >= lo;
        worst.segment = n;
        worst.kappa = high ? mm.max_v : mm.min_v;
        worst.at = grid.theta[high ? mm.argmax : mm.argmin];
      }
    }
    return dev;
  };

  double dev = coordinate_descent(params, scales, objective,
                                  0.98 * p.epsilon, 200);
  if (dev > p.epsilon)
    throw ConstructionError(
        "curvature pinch unattainable: spike " + std::to_string(worst.segment) +
            " reaches kappa = " + std::to_string(worst.kappa),
        "spike " + std::to_string(worst.segment), worst.kappa, worst.at);

  std::vector<QuinticSegment> out;
  out.reserve(len);
  for (int n = 1; n <= len; ++n) {
    double gr = n == 1 ? g0 : params[2 * (n - 2)];
    double qr = n == 1 ? q0 : params[2 * (n - 2) + 1];
    out.push_back(QuinticSegment::hermite(s[n], s[n - 1], v[n],
                                          params[2 * (n - 1)],
                                          params[2 * (n - 1) + 1], v[n - 1],
                                          gr, qr));
  }
  return out;
}

std::vector<QuinticSegment> shape_e2(const ConstructionParams& p,
                                     const std::vector<double>& w,
                                     const std::vector<double>& x, double g0,
                                     double q0) {
  int len = static_cast<int>(w.size()) - 1;
  if (len <= 0) return {};
  const kernels::KernelSet& ks = kernels::active();

  std::vector<double> chord(len + 1, 0.0);
  for (int n = 1; n <= len; ++n)
    chord[n] = (x[n] - x[n - 1]) / (w[n] - w[n - 1]);

  std::vector<double> params(2 * len);
  std::vector<double> scales(2 * len);
  for (int n = 1; n <= len; ++n) {
    double g_init = n < len ? harmonic(chord[n], chord[n + 1]) : chord[len];
    params[2 * (n - 1)] = g_init;
    params[2 * (n - 1) + 1] = 0.0;
    double sc = std::max(1.0, std::abs(chord[n]));
    if (n < len) sc = std::max(sc, std::abs(chord[n + 1]));
    scales[2 * (n - 1)] = sc;
    scales[2 * (n - 1) + 1] = sc;
  }

  std::vector<scan_detail::E2Grid> grids(len);
  for (int n = 1; n <= len; ++n)
    grids[n - 1].init(w[n - 1], w[n], p.samples_per_segment);

  WorstPoint worst;
  double worst_slope = 0.0;
  auto objective = [&]() {
    double dev = 0.0;
    double penalty = 0.0;
    worst_slope = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= len; ++n) {
      double gl = n == 1 ? g0 : params[2 * (n - 2)];
      double ql = n == 1 ? q0 : params[2 * (n - 2) + 1];
      QuinticSegment seg = QuinticSegment::hermite(
          w[n - 1], w[n], x[n - 1], gl, ql, x[n], params[2 * (n - 1)],
          params[2 * (n - 1) + 1]);
      scan_detail::E2Grid& grid = grids[n - 1];
      grid.kappa_quintic(ks, seg.c);
      kernels::MinMaxResult mm = ks.minmax(grid.kappa.data(), grid.kappa.size());
      double d = std::max(std::abs(mm.min_v), std::abs(mm.max_v));
      if (d > dev) {
        dev = d;
        bool high = std::abs(mm.max_v) >= std::abs(mm.min_v);
        worst.segment = n;
        worst.kappa = high ? mm.max_v : mm.min_v;
        worst.at = grid.w[high ? mm.argmax : mm.argmin];
      }
      kernels::MinMaxResult sl = ks.minmax(grid.d1.data(), grid.d1.size());
      worst_slope = std::min(worst_slope, sl.min_v);
      if (sl.min_v < 1e-9) penalty += 1000.0 * (1e-9 - sl.min_v);
    }
    return dev + penalty;
  };

  double dev = coordinate_descent(params, scales, objective,
                                  0.98 * p.epsilon, 200);
  if (dev > p.epsilon) {
    if (worst_slope < 1e-9)
      throw ConstructionError(
          "spike " + std::to_string(worst.segment) +
              " cannot stay a graph: dx/dw reaches " +
              std::to_string(worst_slope),
          "spike " + std::to_string(worst.segment), worst_slope, worst.at);
    throw ConstructionError(
        "curvature pinch unattainable: spike " + std::to_string(worst.segment) +
            " reaches kappa = " + std::to_string(worst.kappa),
        "spike " + std::to_string(worst.segment), worst.kappa, worst.at);
  }

  std::vector<QuinticSegment> out;
  out.reserve(len);
  for (int n = 1; n <= len; ++n) {
    double gl = n == 1 ? g0 : params[2 * (n - 2)];
    double ql = n == 1 ? q0 : params[2 * (n - 2) + 1];
    out.push_back(QuinticSegment::hermite(w[n - 1], w[n], x[n - 1], gl, ql,
                                          x[n], params[2 * (n - 1)],
                                          params[2 * (n - 1) + 1]));
  }
  return out;
}

}  // namespace folia::leafgen::detail
