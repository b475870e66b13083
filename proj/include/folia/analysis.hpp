#pragma once

#include <string>
#include <vector>

#include "folia/hgeom.hpp"
#include "folia/leafgen.hpp"
#include "folia/log_scalar.hpp"
#include "folia/param_curve.hpp"

namespace folia::analysis {

// ----------------------------------------------------------------------------
// Distortion profile: for each spike depth n, compare the ambient distance
// between the mirror pair of anchor points at theta = delta/2^n (resp.
// x = +-(K + n)) with the distance measured inside the leaf.
// ----------------------------------------------------------------------------

struct DistortionSample {
  int n = 0;
  double theta = 0.0;       // anchor angle (H2) or abscissa (E2)
  double d_ambient = 0.0;
  LogScalar d_leaf;         // log of intra-leaf arc length
  bool saturated = false;
};

struct DistortionProfile {
  std::string geometry;     // "h2" or "e2"
  std::string oracle_id;
  std::vector<DistortionSample> samples;
};

DistortionProfile profile_h2(const leafgen::H2Leaf& leaf);
DistortionProfile profile_e2(const leafgen::E2Leaf& leaf);

std::string profile_to_csv(const DistortionProfile& profile);

// ----------------------------------------------------------------------------
// Curvature scanner: geodesic curvature of the leaf sampled on a fixed grid
// per piece, with a few rounds of local bisection refinement around the
// extrema.  Kernel-backed (scalar or SIMD, equivalence-tested).
// ----------------------------------------------------------------------------

struct CurvatureScan {
  double min_kappa = 0.0;
  double max_kappa = 0.0;
  double argmin = 0.0;      // theta (H2) or x (E2) of the extremum
  double argmax = 0.0;
  std::string worst_piece;  // label of the piece holding max |kappa - target|
};

CurvatureScan scan_h2(const leafgen::H2Leaf& leaf, int samples_per_segment);
CurvatureScan scan_e2(const leafgen::E2Leaf& leaf, int samples_per_segment);

// Throws ConstructionError when the scan leaves [target - eps, target + eps].
void require_pinched(const CurvatureScan& scan, double target, double epsilon);

// ----------------------------------------------------------------------------
// Horocycle distortion law: the pair (+-a, 1) on the unit horocircle has
// leaf distance 2a and ambient distance 2 arcsinh(a); the law
// d_leaf = 2 sinh(d_ambient / 2) is exact.  The exponential bound check
// asserts d_leaf <= 2 sinh(d_ambient / 2) + tol for curves with |kappa| <= 1
// and reports inapplicable otherwise.
// ----------------------------------------------------------------------------

struct LawSample {
  double a = 0.0;
  double d_leaf = 0.0;
  double d_ambient = 0.0;
};

LawSample horocycle_law_sample(double a);

enum class BoundVerdict { holds, violated, inapplicable };

struct BoundReport {
  BoundVerdict verdict = BoundVerdict::inapplicable;
  double max_excess = 0.0;  // d_leaf - 2 sinh(d_ambient / 2), worst pair
  double at_s = 0.0;
  double at_s2 = 0.0;
  std::string note;
};

BoundReport exponential_bound_check(const ParamCurve& curve, int samples,
                                    double tol = 1e-6);

// ----------------------------------------------------------------------------
// Osculating horocycle tracker: basepoints of the osculating horocycles
// along a curve, the unwrapped boundary angle, and its monotonicity.
// ----------------------------------------------------------------------------

struct BasepointSample {
  double t = 0.0;
  hgeom::BoundaryPoint basepoint;
  double angle = 0.0;        // unwrapped boundary angle
  double log_scale = 0.0;
};

struct MonotonicityReport {
  bool monotone = false;
  double winding = 0.0;      // total unwrapped angle / 2 pi
  std::vector<BasepointSample> samples;
};

MonotonicityReport basepoint_monotonicity(const ParamCurve& curve,
                                          int samples);

}  // namespace folia::analysis
