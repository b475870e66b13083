#pragma once

#include <cmath>
#include <limits>

namespace folia {

// Largest log value whose magnitude still materializes as a finite double.
// exp(700) ~ 1.01e304; anything above is carried in log form only.
inline constexpr double kMaxExpLog = 7.0e2;

// A positive magnitude stored as its natural logarithm.  Multiplying
// magnitudes is adding log values, which is exact in floating point as long
// as the logs themselves are representable.  `saturated` means the log value
// itself could no longer be computed exactly (e.g. iterated exponentials
// overflowing double range); such values are pinned at the largest finite
// double and every consumer must propagate the flag instead of exponentiating.
struct LogScalar {
  double log_value = 0.0;
  bool saturated = false;

  static LogScalar from_log(double lv) {
    if (!std::isfinite(lv) && lv > 0) return saturated_max();
    return LogScalar{lv, false};
  }

  static LogScalar from_value(double v) {
    if (std::isinf(v) && v > 0) return saturated_max();
    return LogScalar{std::log(v), false};
  }

  static LogScalar saturated_max() {
    return LogScalar{std::numeric_limits<double>::max(), true};
  }

  // True when exp(log_value) is a finite double.
  bool exp_representable() const {
    return !saturated && log_value <= kMaxExpLog;
  }

  // Materialize the magnitude.  Callers must check exp_representable()
  // first; out-of-range values come back as +inf so mistakes are loud.
  double to_double() const {
    if (!exp_representable()) return std::numeric_limits<double>::infinity();
    return std::exp(log_value);
  }

  LogScalar operator*(const LogScalar& o) const {
    double lv = log_value + o.log_value;
    bool sat = saturated || o.saturated;
    if (!std::isfinite(lv) && lv > 0) return saturated_max();
    return LogScalar{lv, sat};
  }
};

// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// log(exp(a) - exp(b)) for a > b; -inf when a == b.
inline double log_sub_exp(double a, double b) {
  if (std::isinf(b) && b < 0) return a;
  if (a == b) return -std::numeric_limits<double>::infinity();
  return a + std::log(-std::expm1(b - a));
}

// arccosh(1 + u) evaluated from ln(u), stable across the whole log range.
// Uses arccosh(1+u) = log1p(u + sqrt(u (u + 2))) for moderate u, the
// asymptotic ln(2u) once the sqrt would lose nothing (ln u > 40), and
// sqrt(2u) for tiny u (ln u < -40), where the next Taylor term u/12 is
// already below double precision.
inline double arccosh1p_from_log(double ln_u) {
  if (std::isinf(ln_u) && ln_u < 0) return 0.0;
  if (ln_u < -40.0) return std::sqrt(2.0) * std::exp(0.5 * ln_u);
  if (ln_u > 40.0) return std::log(2.0) + ln_u;
  double u = std::exp(ln_u);
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

}  // namespace folia
