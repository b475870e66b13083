#include <algorithm>
#include <cmath>
#include <vector>

#include "folia/analysis.hpp"
#include "folia/error.hpp"
#include "folia/quadrature.hpp"

namespace folia::analysis {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

Vec2 velocity(const ParamCurve& curve, double t) {
  if (curve.vel) return curve.vel(t);
  double dt = 1e-6 * std::max(1.0, std::abs(curve.t1 - curve.t0));
  Vec2 a = curve.pos(t + dt);
  Vec2 b = curve.pos(t - dt);
  return (a - b) * (0.5 / dt);
}

}  // namespace

LawSample horocycle_law_sample(double a) {
  if (!(a > 0.0)) throw ValidationError("law sample needs a > 0");
  LawSample s;
  s.a = a;
  s.d_leaf = 2.0 * a;
  s.d_ambient = 2.0 * std::asinh(a);
  return s;
}

BoundReport exponential_bound_check(const ParamCurve& curve, int samples,
                                    double tol) {
  if (samples < 2) throw ValidationError("bound check needs >= 2 samples");
  if (!curve.pos) throw ValidationError("bound check needs a position map");

  BoundReport report;
  std::vector<double> ts(samples);
  std::vector<Vec2> ps(samples);
  for (int i = 0; i < samples; ++i) {
    double u = static_cast<double>(i) / static_cast<double>(samples - 1);
    ts[i] = curve.t0 + (curve.t1 - curve.t0) * u;
    ps[i] = curve.pos(ts[i]);
    if (!(ps[i].y > 0.0))
      throw DomainError("bound check needs the curve in the upper half plane");
  }

  for (int i = 0; i < samples; ++i) {
    double kappa = hgeom::hyp_curvature(curve, ts[i]);
    if (std::abs(kappa) > 1.0 + 1e-6) {
      report.verdict = BoundVerdict::inapplicable;
      report.at_s = ts[i];
      report.note = "curvature magnitude exceeds 1, bound not claimed";
      return report;
    }
  }

  auto speed = [&curve](double t) {
    Vec2 v = velocity(curve, t);
    Vec2 p = curve.pos(t);
    return v.norm() / p.y;
  };
  std::vector<double> arc(samples, 0.0);
  for (int i = 1; i < samples; ++i)
    arc[i] = arc[i - 1] + adaptive_simpson(speed, ts[i - 1], ts[i], 1e-11);

  bool first = true;
  for (int i = 0; i < samples; ++i) {
    hgeom::HPoint pi{ps[i].x, std::log(ps[i].y), false};
    for (int j = i + 1; j < samples; ++j) {
      hgeom::HPoint pj{ps[j].x, std::log(ps[j].y), false};
      double d_amb = hgeom::hyp_distance(pi, pj).value;
      double excess = (arc[j] - arc[i]) - 2.0 * std::sinh(0.5 * d_amb);
      if (first || excess > report.max_excess) {
        report.max_excess = excess;
        report.at_s = ts[i];
        report.at_s2 = ts[j];
        first = false;
      }
    }
  }
  report.verdict =
      report.max_excess > tol ? BoundVerdict::violated : BoundVerdict::holds;
  report.note = report.verdict == BoundVerdict::holds
                    ? "d_leaf <= 2 sinh(d_ambient / 2) on all sampled pairs"
                    : "bound exceeded";
  return report;
}

MonotonicityReport basepoint_monotonicity(const ParamCurve& curve,
                                          int samples) {
  if (samples < 2)
    throw ValidationError("basepoint tracking needs >= 2 samples");
  if (!curve.pos) throw ValidationError("basepoint tracking needs a position map");

  MonotonicityReport report;
  report.samples.reserve(samples);
  double min_step = 0.0;
  double max_step = 0.0;
  double prev_angle = 0.0;
  for (int i = 0; i < samples; ++i) {
    double u = static_cast<double>(i) / static_cast<double>(samples - 1);
    double t = curve.t0 + (curve.t1 - curve.t0) * u;
    Vec2 p = curve.pos(t);
    if (!(p.y > 0.0))
      throw DomainError("basepoint tracking needs the curve in the upper half plane");
    Vec2 v = velocity(curve, t);
    double speed = v.norm();
    if (!(speed > 0.0))
      throw AnalysisError("basepoint tracking hit a stationary point");
    hgeom::UnitVector n{-v.y / speed, v.x / speed};
    hgeom::Horocycle h =
        hgeom::osculating_horocycle({p.x, std::log(p.y), false}, n);
    double raw = hgeom::boundary_angle(h.basepoint);

    BasepointSample sample;
    sample.t = t;
    sample.basepoint = h.basepoint;
    sample.log_scale = h.log_scale;
    if (i == 0) {
      sample.angle = raw;
    } else {
      double d = raw - prev_angle;
      d -= kTwoPi * std::round(d / kTwoPi);
      sample.angle = prev_angle + d;
      if (i == 1) {
        min_step = max_step = d;
      } else {
        min_step = std::min(min_step, d);
        max_step = std::max(max_step, d);
      }
    }
    prev_angle = sample.angle;
    report.samples.push_back(sample);
  }
  report.winding =
      (report.samples.back().angle - report.samples.front().angle) / kTwoPi;
  report.monotone = min_step > -1e-12 || max_step < 1e-12;
  return report;
}

}  // namespace folia::analysis
