#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "folia/error.hpp"
#include "folia/intersect.hpp"

namespace folia::intersect {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int orient_sign(Vec2 a, Vec2 b, Vec2 c) {
  double abx = b.x - a.x, aby = b.y - a.y;
  double acx = c.x - a.x, acy = c.y - a.y;
  double det = abx * acy - aby * acx;
  double mag = std::abs(abx * acy) + std::abs(aby * acx);
  if (std::abs(det) > 4.0 * 2.220446049250313e-16 * mag)
    return det > 0.0 ? 1 : -1;
  Rational rabx(b.x); rabx -= Rational(a.x);
  Rational raby(b.y); raby -= Rational(a.y);
  Rational racx(c.x); racx -= Rational(a.x);
  Rational racy(c.y); racy -= Rational(a.y);
  Rational rdet = rabx * racy - raby * racx;
  if (rdet > 0) return 1;
  if (rdet < 0) return -1;
  return 0;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  int o1 = orient_sign(a, b, c);
  int o2 = orient_sign(a, b, d);
  int o3 = orient_sign(c, d, a);
  int o4 = orient_sign(c, d, b);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) return false;
  return o1 * o2 <= 0 && o3 * o4 <= 0;
}

struct SegRec {
  int i = 0;
  double xmin = 0.0, xmax = 0.0;
  double ymin = 0.0, ymax = 0.0;
};

// Two-variable Newton iteration on gamma(s) - gamma(s2) = 0.
bool refine_pair(const ParamCurve& curve, double* s, double* s2,
                 double* residual, Vec2* point) {
  auto vel = [&curve](double t) {
    if (curve.vel) return curve.vel(t);
    double dt = 1e-7 * std::max(1.0, std::abs(curve.t1 - curve.t0));
    return (curve.pos(t + dt) - curve.pos(t - dt)) * (0.5 / dt);
  };
  double a = *s, b = *s2;
  for (int iter = 0; iter < 25; ++iter) {
    Vec2 f = curve.pos(a) - curve.pos(b);
    Vec2 va = vel(a);
    Vec2 vb = vel(b);
    double det = -va.x * vb.y + va.y * vb.x;
    if (det == 0.0) break;
    double da = (-vb.y * f.x + vb.x * f.y) / det;
    double db = (-va.y * f.x + va.x * f.y) / det;
    a -= da;
    b -= db;
    if (std::abs(da) + std::abs(db) < 1e-15 * std::max(1.0, std::abs(a) + std::abs(b)))
      break;
  }
  Vec2 pa = curve.pos(a);
  Vec2 pb = curve.pos(b);
  *residual = (pa - pb).norm();
  *point = (pa + pb) * 0.5;
  *s = a;
  *s2 = b;
  return std::isfinite(a) && std::isfinite(b);
}

}  // namespace

std::vector<Crossing> self_intersections(const ParamCurve& curve,
                                         int samples) {
  if (samples < 8) throw ValidationError("intersection scan needs >= 8 samples");
  if (!curve.pos) throw ValidationError("intersection scan needs a position map");

  double span = curve.t1 - curve.t0;
  int n = samples;
  std::vector<double> ts(n + 1);
  std::vector<Vec2> pts(n + 1);
  for (int i = 0; i <= n; ++i) {
    // Half-step phase shift keeps closed-curve crossings that sit exactly on
    // sample points (like the figure eight at t = 0) off the seam.
    double u = curve.closed ? (static_cast<double>(i) + 0.5) / n
                            : static_cast<double>(i) / n;
    ts[i] = curve.t0 + span * u;
    pts[i] = curve.pos(ts[i]);
  }

  std::vector<SegRec> recs(n);
  for (int i = 0; i < n; ++i) {
    recs[i].i = i;
    recs[i].xmin = std::min(pts[i].x, pts[i + 1].x);
    recs[i].xmax = std::max(pts[i].x, pts[i + 1].x);
    recs[i].ymin = std::min(pts[i].y, pts[i + 1].y);
    recs[i].ymax = std::max(pts[i].y, pts[i + 1].y);
  }
  std::vector<SegRec> sorted = recs;
  std::sort(sorted.begin(), sorted.end(),
            [](const SegRec& a, const SegRec& b) { return a.xmin < b.xmin; });

  auto adjacent = [&](int i, int j) {
    if (std::abs(i - j) <= 1) return true;
    if (curve.closed && (i == 0 && j == n - 1)) return true;
    if (curve.closed && (j == 0 && i == n - 1)) return true;
    return false;
  };

  std::vector<Crossing> found;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    const SegRec& ra = sorted[a];
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      const SegRec& rb = sorted[b];
      if (rb.xmin > ra.xmax) break;
      if (rb.ymin > ra.ymax || ra.ymin > rb.ymax) continue;
      int i = std::min(ra.i, rb.i);
      int j = std::max(ra.i, rb.i);
      if (adjacent(i, j)) continue;
      if (!segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1])) continue;

      double s = 0.5 * (ts[i] + ts[i + 1]);
      double s2 = 0.5 * (ts[j] + ts[j + 1]);
      double residual = 0.0;
      Vec2 point;
      if (!refine_pair(curve, &s, &s2, &residual, &point)) continue;
      if (s > s2) std::swap(s, s2);
      if (std::abs(s2 - s) < 1e-6 * std::abs(span)) continue;

      bool dup = false;
      for (const Crossing& c : found) {
        double d1 = std::abs(c.s - s);
        double d2 = std::abs(c.s2 - s2);
        if (curve.closed) {
          double period = std::abs(span);
          d1 = std::min(d1, std::abs(period - d1));
          d2 = std::min(d2, std::abs(period - d2));
          double e1 = std::abs(c.s - s2);
          double e2 = std::abs(c.s2 - s);
          e1 = std::min(e1, std::abs(period - e1));
          e2 = std::min(e2, std::abs(period - e2));
          if (std::max(e1, e2) < 1e-4 * std::abs(span)) dup = true;
        }
        if (std::max(d1, d2) < 1e-4 * std::abs(span)) dup = true;
        if (dup) break;
      }
      if (dup) continue;

      Crossing c;
      c.s = s;
      c.s2 = s2;
      c.point = point;
      c.residual = residual;
      found.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Crossing& a, const Crossing& b) { return a.s < b.s; });
  return found;
}

}  // namespace folia::intersect
