#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "folia/egeom.hpp"
#include "folia/error.hpp"
#include "folia/leafgen.hpp"
#include "folia/quadrature.hpp"
#include "shaping.hpp"

namespace folia::leafgen {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Largest height the pinch allows at junction offset t: the inclination sine
// u obeys du = kappa dx, so u(K + t) <= u0 + eps t, and as long as that stays
// below 1 the accumulated height is bounded by phi(K) + (sqrt(1 - u0^2) -
// sqrt(1 - u(t)^2)) / eps.  Past the point where u may reach 1 the graph can
// climb arbitrarily fast and no bound applies.
void check_reachable(const ConstructionParams& p,
                     const std::vector<double>& w, int usable) {
  double slope = 2.0 * p.delta * p.k_width;
  double u0 = slope / std::sqrt(1.0 + slope * slope);
  double base = p.delta * p.k_width * p.k_width;
  for (int n = 1; n <= usable; ++n) {
    double ut = u0 + p.epsilon * static_cast<double>(n);
    if (ut >= 1.0) return;
    double gain =
        (std::sqrt(1.0 - u0 * u0) - std::sqrt(1.0 - ut * ut)) / p.epsilon;
    double bound = std::log(base + gain);
    if (w[n] > bound)
      throw ConstructionError(
          "spike " + std::to_string(n) +
              " is unreachable under the curvature budget: needs log height " +
              std::to_string(w[n]) + " but at most " + std::to_string(bound) +
              " is attainable",
          "spike " + std::to_string(n), w[n] - bound,
          p.k_width + static_cast<double>(n));
  }
}

int segment_index(const E2Leaf& leaf, double ax) {
  int lo = 1, hi = static_cast<int>(leaf.spikes.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (ax <= leaf.anchors[mid].x)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Monotone bisection for w with x(w) = ax inside segment seg.
double invert_segment(const QuinticSegment& poly, double ax) {
  double lo = poly.s0, hi = poly.s1;
  for (int i = 0; i < 256; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double v, g, gp;
    poly.eval(mid, &v, &g, &gp);
    if (v < ax)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double E2Leaf::x_max() const {
  return anchors[spikes.size()].x;
}

double E2Leaf::log_height(double x) const {
  double ax = std::abs(x);
  if (ax == 0.0) return kNegInf;
  if (ax > x_max() * (1.0 + 1e-12))
    throw DomainError("abscissa outside the leaf domain");
  int usable = static_cast<int>(spikes.size());
  for (int n = 0; n <= usable; ++n)
    if (ax == anchors[n].x) return anchors[n].w;
  if (ax < params.k_width)
    return std::log(params.delta) + 2.0 * std::log(ax);
  const E2SpikeSegment& seg = spikes[segment_index(*this, ax) - 1];
  return invert_segment(seg.poly, ax);
}

double E2Leaf::height(double x) const {
  double w = log_height(x);
  if (w > kMaxExpLog)
    throw DomainError("height exceeds double range; use log_height");
  return std::exp(w) + y_offset;
}

E2Leaf build_e2_leaf(const ConstructionParams& params,
                     const growth::GrowthOracle& oracle) {
  params.validate_e2();
  LogScalar o0 = oracle.log_radius(0);
  if (o0.saturated)
    throw ConstructionError("growth oracle saturates at its base value",
                            "anchor 0", o0.log_value, params.k_width);
  double junction = std::log(params.delta * params.k_width * params.k_width);

  E2Leaf leaf;
  leaf.params = params;
  leaf.oracle_id = oracle.id();
  int first_saturated = -1;
  for (int n = 0; n <= params.n_max; ++n) {
    E2Anchor a;
    a.x = params.k_width + static_cast<double>(n);
    LogScalar on = oracle.log_radius(n);
    if (on.saturated) {
      a.w = std::numeric_limits<double>::max();
      a.saturated = true;
      if (first_saturated < 0) first_saturated = n;
    } else {
      a.w = junction + (on.log_value - o0.log_value);
    }
    leaf.anchors.push_back(a);
  }

  int usable = params.n_max;
  if (first_saturated >= 0) {
    if (!params.allow_saturated_tail)
      throw ConstructionError(
          "growth oracle saturates at n = " + std::to_string(first_saturated) +
              "; lower n_max or set allow_saturated_tail",
          "anchor " + std::to_string(first_saturated),
          std::numeric_limits<double>::max(),
          leaf.anchors[first_saturated].x);
    usable = first_saturated - 1;
  }

  std::vector<double> w(usable + 1), x(usable + 1);
  for (int n = 0; n <= usable; ++n) {
    w[n] = leaf.anchors[n].w;
    x[n] = leaf.anchors[n].x;
  }
  check_reachable(params, w, usable);
  double g0 = 0.5 * params.k_width;
  double q0 = 0.25 * params.k_width;
  std::vector<QuinticSegment> polys = detail::shape_e2(params, w, x, g0, q0);
  for (int n = 1; n <= usable; ++n)
    leaf.spikes.push_back({n, polys[n - 1]});
  return leaf;
}

double eval_e2_log_height(const E2Leaf& leaf, double x) {
  return leaf.log_height(x);
}

namespace {

// Plain-range arc length of one spike piece over [wa, wb].
double spike_length_plain(const QuinticSegment& poly, double wa, double wb) {
  auto f = [&](double w) {
    double v, g, gp;
    poly.eval(w, &v, &g, &gp);
    return std::hypot(g, std::exp(w));
  };
  return adaptive_simpson(f, wa, wb, 1e-10);
}

// Log-domain composite Simpson for pieces whose heights overflow doubles:
// ln f(w) = w + 0.5 log1p(p^2) with p = x'(w) e^{-w}.
double spike_length_log(const QuinticSegment& poly, double wa, double wb) {
  const int panels = 4096;
  double h = (wb - wa) / (2 * panels);
  double acc = kNegInf;
  for (int i = 0; i <= 2 * panels; ++i) {
    double w = wa + h * i;
    double v, g, gp;
    poly.eval(w, &v, &g, &gp);
    double p = g * std::exp(-w);
    double lf = w + 0.5 * std::log1p(p * p);
    double weight = (i == 0 || i == 2 * panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc = log_add_exp(acc, std::log(weight) + lf);
  }
  return std::log(h / 3.0) + acc;
}

}  // namespace

LogScalar E2Leaf::graph_length(double x1, double x2) const {
  if (!(x2 >= x1 && x1 >= 0.0))
    throw ValidationError("graph length needs 0 <= x1 <= x2");
  if (x2 > x_max() * (1.0 + 1e-12))
    throw DomainError("arc endpoints outside the leaf domain");
  if (x1 == x2) return LogScalar::from_value(0.0);

  double log_total = kNegInf;
  double k = params.k_width;
  if (x1 < k) {
    double b = std::min(x2, k);
    double m = 2.0 * params.delta;
    auto speed = [m](double x) { return std::hypot(1.0, m * x); };
    double len = adaptive_simpson(speed, x1, b, 1e-10);
    log_total = log_add_exp(log_total, std::log(len));
  }
  if (x2 > k) {
    double a = std::max(x1, k);
    double wa = log_height(a);
    int first = segment_index(*this, std::nextafter(a, x_max()));
    int last = segment_index(*this, x2);
    for (int n = first; n <= last; ++n) {
      const QuinticSegment& poly = spikes[n - 1].poly;
      double lo = std::max(wa, poly.s0);
      double hi = n == last ? log_height(x2) : poly.s1;
      if (!(hi > lo)) continue;
      double piece = hi <= 350.0 ? std::log(spike_length_plain(poly, lo, hi))
                                 : spike_length_log(poly, lo, hi);
      log_total = log_add_exp(log_total, piece);
    }
  }
  return LogScalar::from_log(log_total);
}

}  // namespace folia::leafgen
