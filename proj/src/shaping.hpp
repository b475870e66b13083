#pragma once

#include <vector>

#include "folia/leafgen.hpp"
#include "folia/quintic.hpp"

namespace folia::leafgen::detail {

// Chooses the free anchor derivatives (d rho/ds, d^2 rho/ds^2 for the
// hyperbolic leaf; dx/dw, d^2x/dw^2 for the Euclidean one) by coordinate
// descent on sampled curvature, then returns the spike quintics.  Throws
// ConstructionError when no choice meets the pinch.
//
// s/v (resp. w/x) are anchor coordinates for indices 0..L; (g0, q0) are the
// derivatives forced at the junction anchor 0.

std::vector<QuinticSegment> shape_h2(const ConstructionParams& p,
                                     const std::vector<double>& s,
                                     const std::vector<double>& v, double g0,
                                     double q0);

std::vector<QuinticSegment> shape_e2(const ConstructionParams& p,
                                     const std::vector<double>& w,
                                     const std::vector<double>& x, double g0,
                                     double q0);

}  // namespace folia::leafgen::detail
