#include "folia/hgeom.hpp"

#include <cmath>
#include <limits>

#include "folia/error.hpp"

namespace folia::hgeom {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ln sinh x for x > 0, stable across the whole double range.
double ln_sinh(double x) {
  if (x < 1e-4) return std::log(x) + std::log1p(x * x / 6.0);
  return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

}  // namespace

Distance hyp_distance(const HPoint& p, const HPoint& q) {
  double dx = q.x - p.x;
  double ln_tx = kNegInf;
  if (dx != 0.0)
    ln_tx = 2.0 * std::log(std::abs(dx)) - std::log(2.0) - (p.log_y + q.log_y);
  double dv = std::abs(q.log_y - p.log_y);
  double ln_ty = kNegInf;
  if (dv != 0.0) ln_ty = std::log(2.0) + 2.0 * ln_sinh(0.5 * dv);
  double ln_u = log_add_exp(ln_tx, ln_ty);
  return {arccosh1p_from_log(ln_u), p.saturated || q.saturated};
}

Distance hyp_distance(const PolarPoint& p, const PolarPoint& q) {
  if (!(p.theta > 0.0 && p.theta < kPi && q.theta > 0.0 && q.theta < kPi))
    throw DomainError("polar point angle must lie in (0, pi)");
  double dv = std::abs(q.log_r - p.log_r);
  double term_r = kNegInf;
  if (dv != 0.0) term_r = std::log(2.0) + 2.0 * ln_sinh(0.5 * dv);
  double a = std::abs(std::sin(0.5 * (q.theta - p.theta)));
  double term_t = kNegInf;
  if (a != 0.0) term_t = std::log(2.0) + 2.0 * std::log(a);
  double ln_u = log_add_exp(term_r, term_t) - std::log(std::sin(p.theta)) -
                std::log(std::sin(q.theta));
  return {arccosh1p_from_log(ln_u), p.saturated || q.saturated};
}

double symmetric_pair_distance(double theta) {
  if (!(theta > 0.0 && theta <= 0.5 * kPi + 1e-15))
    throw DomainError("symmetric pair angle must lie in (0, pi/2]");
  // The mirror angle pi - theta rounds back onto theta exactly at the
  // symmetry axis, where the pair degenerates to a single point.
  if (kPi - theta == theta) return 0.0;
  double c = std::abs(std::cos(theta));
  if (c == 0.0) return 0.0;
  double ln_u = std::log(2.0) + 2.0 * (std::log(c) - std::log(std::sin(theta)));
  return arccosh1p_from_log(ln_u);
}

namespace {

double curvature_from(const Vec2& p, const Vec2& v, const Vec2& a) {
  if (p.y <= 0.0) throw DomainError("curve left the upper half plane");
  double sp = v.norm();
  if (!(sp > 0.0)) throw AnalysisError("curve has a stationary point");
  double k_euc = cross(v, a) / (sp * sp * sp);
  return p.y * k_euc + v.x / sp;
}

}  // namespace

double hyp_curvature(const ParamCurve& curve, double t) {
  if (curve.vel && curve.acc)
    return curvature_from(curve.pos(t), curve.vel(t), curve.acc(t));
  return hyp_curvature_fd(curve, t);
}

double hyp_curvature_fd(const ParamCurve& curve, double t) {
  double dt0 = 1e-5 * std::max(1.0, std::abs(t));
  Vec2 c0 = (curve.pos(t + dt0) - curve.pos(t - dt0)) * (0.5 / dt0);
  double sp0 = c0.norm();
  if (!(sp0 > 0.0)) throw AnalysisError("cannot estimate curve speed");
  double dt = 1e-4 / sp0;
  Vec2 f = curve.pos(t + dt);
  Vec2 b = curve.pos(t - dt);
  Vec2 m = curve.pos(t);
  Vec2 v = (f - b) * (0.5 / dt);
  Vec2 a = (f + b - m * 2.0) * (1.0 / (dt * dt));
  return curvature_from(m, v, a);
}

Horocycle osculating_horocycle(const HPoint& p, const UnitVector& n) {
  double nn = std::hypot(n.ux, n.uy);
  if (std::abs(nn - 1.0) > 1e-6)
    throw ValidationError("osculating horocycle needs a unit normal");
  if (1.0 - n.uy <= 1e-9) return {{0.0, true}, p.log_y};
  if (p.log_y > kMaxExpLog)
    throw DomainError("point too high to place a finite basepoint");
  double y = std::exp(p.log_y);
  double r = y / (1.0 - n.uy);
  double log_scale = std::log(2.0) + p.log_y - std::log1p(-n.uy);
  return {{p.x + r * n.ux, false}, log_scale};
}

double boundary_angle(const BoundaryPoint& b) {
  if (b.at_infinity) return 0.0;
  double a = std::atan2(-2.0 * b.x, (b.x - 1.0) * (b.x + 1.0));
  // atan2 returns -pi for a negative zero ordinate; fold onto (-pi, pi].
  if (a == -kPi) return kPi;
  return a;
}

HPoint dilate(const HPoint& p, double log_t) {
  double nx = p.x * std::exp(log_t);
  bool sat = p.saturated;
  if (!std::isfinite(nx)) {
    nx = std::copysign(std::numeric_limits<double>::max(), p.x);
    sat = true;
  }
  return {nx, p.log_y + log_t, sat};
}

PolarPoint dilate(const PolarPoint& p, double log_t) {
  return {p.theta, p.log_r + log_t, p.saturated};
}

HPoint to_hpoint(const PolarPoint& p) {
  if (!(p.theta > 0.0 && p.theta < kPi))
    throw DomainError("polar point angle must lie in (0, pi)");
  double log_y = p.log_r + std::log(std::sin(p.theta));
  double c = std::cos(p.theta);
  if (p.log_r > kMaxExpLog)
    return {std::copysign(std::numeric_limits<double>::max(), c), log_y, true};
  return {std::exp(p.log_r) * c, log_y, p.saturated};
}

}  // namespace folia::hgeom
