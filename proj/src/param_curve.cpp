#include "folia/param_curve.hpp"

#include <cmath>

#include "folia/error.hpp"

namespace folia {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ParamCurve make_horocycle_line(double height) {
  if (!(height > 0.0)) throw ValidationError("horocycle height must be positive");
  ParamCurve c;
  c.pos = [height](double t) { return Vec2{t, height}; };
  c.vel = [](double) { return Vec2{1.0, 0.0}; };
  c.acc = [](double) { return Vec2{0.0, 0.0}; };
  c.t0 = -5.0;
  c.t1 = 5.0;
  c.name = "horocycle";
  return c;
}

ParamCurve make_geodesic_semicircle(double radius) {
  if (!(radius > 0.0)) throw ValidationError("geodesic radius must be positive");
  ParamCurve c;
  c.pos = [radius](double t) {
    return Vec2{radius * std::cos(t), radius * std::sin(t)};
  };
  c.vel = [radius](double t) {
    return Vec2{-radius * std::sin(t), radius * std::cos(t)};
  };
  c.acc = [radius](double t) {
    return Vec2{-radius * std::cos(t), -radius * std::sin(t)};
  };
  c.t0 = 0.1;
  c.t1 = kPi - 0.1;
  c.name = "geodesic";
  return c;
}

ParamCurve make_euclidean_circle(Vec2 center, double radius) {
  if (!(radius > 0.0)) throw ValidationError("circle radius must be positive");
  ParamCurve c;
  c.pos = [center, radius](double t) {
    return Vec2{center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
  };
  c.vel = [radius](double t) {
    return Vec2{-radius * std::sin(t), radius * std::cos(t)};
  };
  c.acc = [radius](double t) {
    return Vec2{-radius * std::cos(t), -radius * std::sin(t)};
  };
  c.t0 = 0.0;
  c.t1 = 2.0 * kPi;
  c.closed = true;
  c.name = "circle";
  return c;
}

ParamCurve make_ray(double theta0, double r_start) {
  if (!(std::sin(theta0) > 0.0))
    throw ValidationError("ray must point into the upper half plane");
  if (!(r_start > 0.0)) throw ValidationError("ray start radius must be positive");
  ParamCurve c;
  double cx = std::cos(theta0);
  double cy = std::sin(theta0);
  c.pos = [cx, cy, r_start](double t) {
    return Vec2{(r_start + t) * cx, (r_start + t) * cy};
  };
  c.vel = [cx, cy](double) { return Vec2{cx, cy}; };
  c.acc = [](double) { return Vec2{0.0, 0.0}; };
  c.t0 = 0.0;
  c.t1 = 10.0;
  c.name = "ray";
  return c;
}

ParamCurve make_figure_eight() {
  ParamCurve c;
  c.pos = [](double t) {
    return Vec2{std::sin(t) * std::cos(t), 2.0 + std::sin(t)};
  };
  c.vel = [](double t) { return Vec2{std::cos(2.0 * t), std::cos(t)}; };
  c.acc = [](double t) {
    return Vec2{-2.0 * std::sin(2.0 * t), -std::sin(t)};
  };
  c.t0 = 0.0;
  c.t1 = 2.0 * kPi;
  c.closed = true;
  c.name = "figure_eight";
  return c;
}

ParamCurve make_crossing_spiral() {
  ParamCurve c;
  auto r = [](double t) { return 0.8 + 0.3 * std::sin(2.2 * t); };
  auto dr = [](double t) { return 0.66 * std::cos(2.2 * t); };
  auto ddr = [](double t) { return -1.452 * std::sin(2.2 * t); };
  c.pos = [r](double t) {
    return Vec2{r(t) * std::cos(t), 3.0 + r(t) * std::sin(t)};
  };
  c.vel = [r, dr](double t) {
    double ct = std::cos(t), st = std::sin(t);
    return Vec2{dr(t) * ct - r(t) * st, dr(t) * st + r(t) * ct};
  };
  c.acc = [r, dr, ddr](double t) {
    double ct = std::cos(t), st = std::sin(t);
    return Vec2{ddr(t) * ct - 2.0 * dr(t) * st - r(t) * ct,
                ddr(t) * st + 2.0 * dr(t) * ct - r(t) * st};
  };
  c.t0 = 0.0;
  c.t1 = 4.0 * kPi;
  c.name = "spiral";
  return c;
}

ParamCurve named_test_curve(const std::string& name) {
  if (name == "horocycle") return make_horocycle_line(1.0);
  if (name == "geodesic") return make_geodesic_semicircle(1.0);
  if (name == "circle") return make_euclidean_circle({0.0, 2.0}, 1.0);
  if (name == "ray") return make_ray(1.0, 1.0);
  if (name == "figure_eight") return make_figure_eight();
  if (name == "spiral") return make_crossing_spiral();
  throw ValidationError("unknown test curve: " + name);
}

}  // namespace folia
