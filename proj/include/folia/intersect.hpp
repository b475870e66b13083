#pragma once

#include <vector>

#include "folia/param_curve.hpp"

namespace folia::intersect {

struct Crossing {
  double s = 0.0;      // earlier parameter
  double s2 = 0.0;     // later parameter
  Vec2 point;
  double residual = 0.0;  // |gamma(s) - gamma(s2)| after refinement
};

// Self-intersections of a curve: dense polyline, x-sorted sweep over the
// segments with exact rational orientation tests (doubles are dyadic
// rationals, so the predicate is exact), then Newton refinement of the
// parameter pair.  Adjacent polyline segments are never reported; a closed
// curve's seam is treated as adjacent.
std::vector<Crossing> self_intersections(const ParamCurve& curve,
                                         int samples);

}  // namespace folia::intersect
