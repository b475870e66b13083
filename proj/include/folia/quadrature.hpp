#pragma once

#include <cmath>
#include <functional>

#include "folia/error.hpp"

namespace folia {

namespace detail {

template <typename F>
double simpson(const F& f, double a, double fa, double b, double fb,
               double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_step(const F& f, double a, double fa, double b, double fb,
                     double fm, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = (left + right - whole) / 15.0;
  if (depth <= 0) {
    if (std::abs(err) > tol)
      throw AnalysisError("adaptive quadrature failed to converge");
    return left + right + err;
  }
  if (std::abs(err) <= tol) return left + right + err;
  return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with an absolute tolerance.  The tolerance is
// scaled once by the coarse estimate so steep integrands (values ~1e6) do not
// recurse forever chasing absolute 1e-9.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol,
                        int max_depth = 48) {
  if (a == b) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double tol = abs_tol * std::max(1.0, std::abs(whole));
  return detail::adaptive_step(f, a, fa, b, fb, fm, whole, tol, max_depth);
}

}  // namespace folia
