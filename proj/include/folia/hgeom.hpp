#pragma once

#include <cmath>

#include "folia/log_scalar.hpp"
#include "folia/param_curve.hpp"

namespace folia::hgeom {

// Point of the upper half plane with the height carried in log form, so
// points at heights like e^600 stay representable.
struct HPoint {
  double x = 0.0;
  double log_y = 0.0;
  bool saturated = false;
};

// Same point in polar form about the origin: (e^{log_r} cos theta,
// e^{log_r} sin theta), theta in (0, pi).
struct PolarPoint {
  double theta = 0.0;
  double log_r = 0.0;
  bool saturated = false;
};

struct UnitVector {
  double ux = 0.0;
  double uy = 0.0;
};

struct BoundaryPoint {
  double x = 0.0;
  bool at_infinity = false;
};

// Horocycle described by its basepoint on the ideal boundary.  For a finite
// basepoint log_scale is the log of the Euclidean diameter; for the basepoint
// at infinity it is the log of the height of the horizontal line.
struct Horocycle {
  BoundaryPoint basepoint;
  double log_scale = 0.0;
};

struct Distance {
  double value = 0.0;
  bool saturated = false;
};

// Hyperbolic distance in the upper half plane, computed entirely in the log
// domain: d = arccosh(1 + (dx^2 + dy^2) / (2 y_p y_q)).
Distance hyp_distance(const HPoint& p, const HPoint& q);

// Same distance for polar points, using
//   cosh d = 1 + (2 sinh^2(dlog_r/2) + 2 sin^2(dtheta/2)) / (sin t1 sin t2),
// which stays exact for radii like e^600 where the Cartesian form overflows.
Distance hyp_distance(const PolarPoint& p, const PolarPoint& q);

// Distance between the symmetric pair (r, theta), (r, pi - theta), which is
// arccosh(1 + 2 cot^2 theta) independently of r.  theta must be in (0, pi/2].
double symmetric_pair_distance(double theta);

// Signed geodesic curvature of a parametrized curve at parameter t, with the
// sign fixed so the horocycle y = 1 (positive side above) has curvature +1.
// Uses analytic derivatives when the curve provides them and central
// differences with arc-length step h = 1e-4 otherwise.
double hyp_curvature(const ParamCurve& curve, double t);

// Force the finite-difference path even when analytic derivatives exist.
double hyp_curvature_fd(const ParamCurve& curve, double t);

// Osculating horocycle at p for unit normal n (pointing to the positive
// side): Euclidean radius R = y / (1 - n_y), basepoint x + R n_x; when n_y
// is within 1e-9 of 1 the basepoint is at infinity.
Horocycle osculating_horocycle(const HPoint& p, const UnitVector& n);

// Angle of the image of a boundary point under the Cayley map
// z -> (z - i)/(z + i), in (-pi, pi].  Strictly anticlockwise monotone along
// the circular order of the boundary; infinity maps to angle 0.
double boundary_angle(const BoundaryPoint& b);

// Hyperbolic dilation z -> t z with t = e^{log_t}; an exact isometry.
HPoint dilate(const HPoint& p, double log_t);
PolarPoint dilate(const PolarPoint& p, double log_t);

// Conversion between the two point forms.  to_hpoint saturates (sets the
// flag, clamps the abscissa) when e^{log_r} exceeds double range.
HPoint to_hpoint(const PolarPoint& p);

}  // namespace folia::hgeom
