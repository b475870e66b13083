#pragma once

#include <array>

namespace folia {

// Quintic polynomial P(u) on u in [0, 1] mapped affinely onto [s0, s1],
// constructed from endpoint value / first / second derivative data given in
// s-units.  Evaluation at the endpoints reproduces the stored data exactly
// up to the usual Hermite basis rounding; anchor values themselves are kept
// separately by the leaf and never re-derived from the polynomial.
struct QuinticSegment {
  double s0 = 0.0;
  double s1 = 1.0;
  std::array<double, 6> c{};  // P(u) = sum c[i] u^i

  static QuinticSegment hermite(double s0, double s1, double v0, double g0,
                                double q0, double v1, double g1, double q1);

  double h() const { return s1 - s0; }

  // Value and first/second derivatives with respect to s.
  void eval(double s, double* v, double* g, double* gp) const;
};

}  // namespace folia
