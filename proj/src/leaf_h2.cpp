#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "folia/error.hpp"
#include "folia/hgeom.hpp"
#include "folia/leafgen.hpp"
#include "folia/quadrature.hpp"
#include "shaping.hpp"

namespace folia::leafgen {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Index of the spike segment covering theta, 1-based; theta must satisfy
// theta_min <= theta < delta.
int segment_index(const H2Leaf& leaf, double theta) {
  int lo = 1, hi = static_cast<int>(leaf.spikes.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (theta >= leaf.anchors[mid].theta)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

double core_rho(double theta) { return -std::log(std::sin(theta)); }

void core_derivs(double theta, double* g, double* gp) {
  double s = std::sin(theta);
  double c = std::cos(theta);
  double gg = -theta * c / s;
  *g = gg;
  *gp = gg + theta * theta / (s * s);
}

}  // namespace

double H2Leaf::theta_min() const {
  return anchors[spikes.size()].theta;
}

double H2Leaf::theta_max() const { return kPi - theta_min(); }

double H2Leaf::rho(double theta) const {
  double tmin = theta_min();
  if (!(theta >= tmin && theta <= kPi - tmin))
    throw DomainError("angle outside the leaf domain");
  double t = theta > 0.5 * kPi ? kPi - theta : theta;
  int usable = static_cast<int>(spikes.size());
  for (int n = 0; n <= usable; ++n) {
    const H2Anchor& a = anchors[n];
    if (t == a.theta || theta == kPi - a.theta) return a.rho + rho_offset;
  }
  if (t > params.delta) return core_rho(t) + rho_offset;
  const H2SpikeSegment& seg = spikes[segment_index(*this, t) - 1];
  double v, g, gp;
  seg.poly.eval(std::log(t), &v, &g, &gp);
  return v + rho_offset;
}

void H2Leaf::rho_derivs(double theta, double* v, double* g, double* gp) const {
  double tmin = theta_min();
  if (!(theta >= tmin * (1.0 - 1e-12) && theta <= 0.5 * kPi * (1.0 + 1e-12)))
    throw DomainError("derivative queries cover [theta_min, pi/2]");
  if (theta >= params.delta) {
    *v = core_rho(theta) + rho_offset;
    core_derivs(theta, g, gp);
    return;
  }
  const H2SpikeSegment& seg = spikes[segment_index(*this, theta) - 1];
  seg.poly.eval(std::log(theta), v, g, gp);
  *v += rho_offset;
}

H2Leaf build_h2_leaf(const ConstructionParams& params,
                     const growth::GrowthOracle& oracle) {
  params.validate_h2();
  LogScalar o0 = oracle.log_radius(0);
  if (o0.saturated)
    throw ConstructionError("growth oracle saturates at its base value",
                            "anchor 0", o0.log_value, params.delta);
  double junction = core_rho(params.delta);

  H2Leaf leaf;
  leaf.params = params;
  leaf.oracle_id = oracle.id();
  int first_saturated = -1;
  for (int n = 0; n <= params.n_max; ++n) {
    H2Anchor a;
    a.theta = std::ldexp(params.delta, -n);
    LogScalar on = oracle.log_radius(n);
    if (on.saturated) {
      a.rho = std::numeric_limits<double>::max();
      a.saturated = true;
      if (first_saturated < 0) first_saturated = n;
    } else {
      a.rho = junction + (on.log_value - o0.log_value);
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
          leaf.anchors[first_saturated].theta);
    usable = first_saturated - 1;
  }

  std::vector<double> s(usable + 1), v(usable + 1);
  for (int n = 0; n <= usable; ++n) {
    s[n] = std::log(leaf.anchors[n].theta);
    v[n] = leaf.anchors[n].rho;
  }
  double g0, q0;
  core_derivs(params.delta, &g0, &q0);
  std::vector<QuinticSegment> polys = detail::shape_h2(params, s, v, g0, q0);
  for (int n = 1; n <= usable; ++n)
    leaf.spikes.push_back({n, polys[n - 1]});
  return leaf;
}

double eval_leaf(const H2Leaf& leaf, double theta) { return leaf.rho(theta); }

namespace {

// Arc length in s over one smooth piece [a, b] of the canonical side.
double piece_length(const H2Leaf& leaf, double sa, double sb) {
  if (!(sb > sa)) return 0.0;
  auto f = [&](double s) {
    double t = std::exp(s);
    double v, g, gp;
    leaf.rho_derivs(t, &v, &g, &gp);
    return std::hypot(g, t) / std::sin(t);
  };
  return adaptive_simpson(f, sa, sb, 1e-10);
}

// Arc length between theta1 < theta2, both at or below pi/2.
double canonical_length(const H2Leaf& leaf, double theta1, double theta2) {
  std::vector<double> cuts{std::log(theta1)};
  for (int n = 1; n <= static_cast<int>(leaf.spikes.size()); ++n) {
    double t = leaf.anchors[n].theta;
    if (t > theta1 && t < theta2) cuts.push_back(std::log(t));
  }
  if (leaf.params.delta > theta1 && leaf.params.delta < theta2)
    cuts.push_back(std::log(leaf.params.delta));
  cuts.push_back(std::log(theta2));
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += piece_length(leaf, cuts[i], cuts[i + 1]);
  return total;
}

}  // namespace

LogScalar leaf_arc_length(const H2Leaf& leaf, double theta1, double theta2) {
  if (!(theta2 >= theta1)) throw ValidationError("arc needs theta1 <= theta2");
  double tmin = leaf.theta_min();
  if (!(theta1 >= tmin && theta2 <= kPi - tmin))
    throw DomainError("arc endpoints outside the leaf domain");
  if (theta1 == theta2) return LogScalar::from_value(0.0);

  double half = 0.5 * kPi;
  double total = 0.0;
  if (theta1 < half)
    total += canonical_length(leaf, theta1, std::min(theta2, half));
  if (theta2 > half)
    total += canonical_length(leaf, kPi - theta2,
                              kPi - std::max(theta1, half));

  hgeom::PolarPoint p1{theta1, leaf.rho(theta1), false};
  hgeom::PolarPoint p2{theta2, leaf.rho(theta2), false};
  double floor = hyp_distance(p1, p2).value;
  return LogScalar::from_value(std::max(total, floor));
}

}  // namespace folia::leafgen
