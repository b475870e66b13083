#pragma once

#include <cmath>
#include <functional>
#include <string>

namespace folia {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const { return std::hypot(x, y); }
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// A plane curve given by a parametrization.  Velocity and acceleration are
// optional; consumers fall back to central differences when they are absent.
struct ParamCurve {
  std::function<Vec2(double)> pos;
  std::function<Vec2(double)> vel;
  std::function<Vec2(double)> acc;
  double t0 = 0.0;
  double t1 = 1.0;
  bool closed = false;
  std::string name;
};

// Named test curves.  All of them live in the upper half plane so they can be
// fed to both the Euclidean and the hyperbolic analysis paths.

// The horizontal line y = height traversed left to right.
ParamCurve make_horocycle_line(double height);

// Upper semicircle |z| = radius traversed with increasing angle.
ParamCurve make_geodesic_semicircle(double radius);

// Euclidean circle, anticlockwise, starting at the rightmost point.
ParamCurve make_euclidean_circle(Vec2 center, double radius);

// Ray from the origin at angle theta0, unit Euclidean speed.
ParamCurve make_ray(double theta0, double r_start);

// Figure eight through (0, 2); crosses itself there at t = 0 and t = pi.
ParamCurve make_figure_eight();

// Spiral around (0, 3) whose radius oscillates while it winds, producing
// a genuine transversal self-crossing away from its endpoints.
ParamCurve make_crossing_spiral();

ParamCurve named_test_curve(const std::string& name);

}  // namespace folia
