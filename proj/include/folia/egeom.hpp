#pragma once

#include <functional>

#include "folia/log_scalar.hpp"

namespace folia::egeom {

// Point of the Euclidean plane whose height may be carried in log form when
// it exceeds double range (leaf heights reach e^{r_n} scale).
struct EPoint {
  double x = 0.0;
  double y = 0.0;       // valid when !log_form
  double log_y = 0.0;   // valid when log_form; height is +e^{log_y}
  bool log_form = false;

  static EPoint plain(double x, double y) { return {x, y, 0.0, false}; }
  static EPoint from_log(double x, double log_y) {
    return {x, 0.0, log_y, true};
  }
};

struct Distance {
  double value = 0.0;
  bool saturated = false;
};

// Euclidean distance with log-carried heights handled by the same saturation
// discipline as the hyperbolic side: equal log heights subtract to exactly
// zero; differences beyond double range come back flagged.
Distance euc_distance(const EPoint& p, const EPoint& q);

// A graph y = f(x) with optional analytic derivatives.
struct GraphFn {
  std::function<double(double)> f;
  std::function<double(double)> df;    // optional
  std::function<double(double)> d2f;   // optional
};

// Signed curvature f'' / (1 + f'^2)^{3/2} of the graph at x; derivatives by
// central differences (step 1e-4) when not supplied.
double graph_curvature(const GraphFn& g, double x);

// Arc length of the graph over [a, b] by adaptive Simpson quadrature with
// absolute tolerance 1e-9 (scaled once by the coarse estimate for steep
// integrands).  The result never falls below the chord length.
double graph_arc_length(const GraphFn& g, double a, double b);

}  // namespace folia::egeom
