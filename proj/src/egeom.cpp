#include "folia/egeom.hpp"

#include <cmath>
#include <limits>

#include "folia/error.hpp"
#include "folia/quadrature.hpp"

namespace folia::egeom {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Height as (sign, ln |y|); plain zero height maps to (+1, -inf).
struct SignedLog {
  double sign;
  double log_abs;
};

SignedLog signed_log(const EPoint& p) {
  if (p.log_form) return {1.0, p.log_y};
  if (p.y == 0.0) return {1.0, kNegInf};
  return {p.y > 0.0 ? 1.0 : -1.0, std::log(std::abs(p.y))};
}

}  // namespace

Distance euc_distance(const EPoint& p, const EPoint& q) {
  double dx = q.x - p.x;
  if (!p.log_form && !q.log_form) return {std::hypot(dx, q.y - p.y), false};
  SignedLog a = signed_log(p);
  SignedLog b = signed_log(q);
  double ln_dy;
  if (a.sign == b.sign)
    ln_dy = log_sub_exp(std::max(a.log_abs, b.log_abs),
                        std::min(a.log_abs, b.log_abs));
  else
    ln_dy = log_add_exp(a.log_abs, b.log_abs);
  if (ln_dy > kMaxExpLog) return {std::numeric_limits<double>::max(), true};
  return {std::hypot(dx, std::exp(ln_dy)), false};
}

double graph_curvature(const GraphFn& g, double x) {
  double d1, d2;
  if (g.df && g.d2f) {
    d1 = g.df(x);
    d2 = g.d2f(x);
  } else {
    double h = 1e-4;
    double f = g.f(x + h);
    double b = g.f(x - h);
    double m = g.f(x);
    d1 = (f - b) / (2.0 * h);
    d2 = (f + b - 2.0 * m) / (h * h);
  }
  double q = 1.0 + d1 * d1;
  return d2 / (q * std::sqrt(q));
}

double graph_arc_length(const GraphFn& g, double a, double b) {
  if (!(b >= a)) throw ValidationError("arc length needs a <= b");
  if (a == b) return 0.0;
  auto speed = [&](double x) {
    double d1;
    if (g.df) {
      d1 = g.df(x);
    } else {
      double h = 1e-4;
      d1 = (g.f(x + h) - g.f(x - h)) / (2.0 * h);
    }
    return std::sqrt(1.0 + d1 * d1);
  };
  double len = adaptive_simpson(speed, a, b, 1e-9);
  double chord = std::hypot(b - a, g.f(b) - g.f(a));
  return std::max(len, chord);
}

}  // namespace folia::egeom
