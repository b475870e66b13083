#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "folia/error.hpp"
#include "folia/hgeom.hpp"
#include "folia/param_curve.hpp"
#include "folia/quadrature.hpp"

using namespace folia;
using namespace folia::hgeom;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Independent oracle for the distance between (-1, 1) and (1, 1): both lie
// on the unit-radius... rather sqrt(2)-radius geodesic semicircle centered at
// the origin, so the distance is the hyperbolic length of that arc between
// polar angles pi/4 and 3pi/4: integral of csc(phi) d phi = ln(tan(3pi/8) /
// tan(pi/8)).
double geodesic_arc_oracle() {
  auto integrand = [](double phi) { return 1.0 / std::sin(phi); };
  return adaptive_simpson(integrand, kPi / 4.0, 3.0 * kPi / 4.0, 1e-12);
}

}  // namespace

TEST_CASE("vertical unit step has distance one") {
  Distance d = hyp_distance(HPoint{0.0, 0.0, false}, HPoint{0.0, 1.0, false});
  CHECK(d.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(d.saturated);
}

TEST_CASE("horizontal pair at unit height: arccosh(3) from three oracles") {
  double expected = std::acosh(3.0);
  CHECK(expected == doctest::Approx(1.7627471740390861).epsilon(1e-15));
  CHECK(geodesic_arc_oracle() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::log(std::tan(3.0 * kPi / 8.0) / std::tan(kPi / 8.0)) ==
        doctest::Approx(expected).epsilon(1e-14));

  Distance d =
      hyp_distance(HPoint{-1.0, 0.0, false}, HPoint{1.0, 0.0, false});
  CHECK(d.value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("distance identity and symmetry") {
  HPoint p{0.3, -2.0, false};
  HPoint q{-1.7, 4.0, false};
  CHECK(hyp_distance(p, p).value == 0.0);
  CHECK(hyp_distance(p, q).value ==
        doctest::Approx(hyp_distance(q, p).value).epsilon(1e-15));
  CHECK(hyp_distance(p, q).value > 0.0);
}

TEST_CASE("log-domain evaluation survives heights around e^600") {
  HPoint p{0.0, 600.0, false};
  HPoint q{0.0, 601.0, false};
  CHECK(hyp_distance(p, q).value == doctest::Approx(1.0).epsilon(1e-12));

  HPoint a{-1.0, 600.0, false};
  HPoint b{1.0, 600.0, false};
  double tiny = 2.0 * std::exp(-600.0);
  CHECK(hyp_distance(a, b).value == doctest::Approx(tiny).epsilon(1e-9));
}

TEST_CASE("symmetric pair distance closed form and r-independence") {
  CHECK(symmetric_pair_distance(kPi / 2.0) == 0.0);
  CHECK(symmetric_pair_distance(kPi / 4.0) ==
        doctest::Approx(std::acosh(3.0)).epsilon(1e-14));
  double th = 0.003125;
  double expected = std::acosh(1.0 + 2.0 / std::tan(th) / std::tan(th));
  CHECK(expected == doctest::Approx(12.9229).epsilon(1e-4));
  CHECK(symmetric_pair_distance(th) ==
        doctest::Approx(expected).epsilon(1e-14));

  for (double log_r : {0.0, 10.0, 100.0, 600.0}) {
    PolarPoint p{th, log_r, false};
    PolarPoint q{kPi - th, log_r, false};
    CHECK(hyp_distance(p, q).value ==
          doctest::Approx(expected).epsilon(1e-9));
  }

  CHECK_THROWS_AS(symmetric_pair_distance(0.0), DomainError);
  CHECK_THROWS_AS(symmetric_pair_distance(2.0), DomainError);
}

TEST_CASE("polar and cartesian distances agree at moderate radius") {
  PolarPoint p{0.3, 1.0, false};
  PolarPoint q{2.1, 1.5, false};
  Distance dp = hyp_distance(p, q);
  Distance dc = hyp_distance(to_hpoint(p), to_hpoint(q));
  CHECK(dp.value == doctest::Approx(dc.value).epsilon(1e-12));
}

TEST_CASE("curvature sanity: horocycle, geodesic, circle, ray") {
  ParamCurve horo = make_horocycle_line(1.0);
  ParamCurve geo = make_geodesic_semicircle(2.0);
  ParamCurve circle = make_euclidean_circle({0.0, 2.0}, 1.0);
  for (double t : {-0.7, 0.0, 1.3}) {
    CHECK(hyp_curvature(horo, t) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (double t : {0.4, kPi / 2.0, 2.6}) {
    CHECK(hyp_curvature(geo, t) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  }
  // Euclidean circle of radius R at height y0 > R: kappa = y kappa_e + n_y
  // with kappa_e = 1/R and n = inward normal; at every point kappa_hyp =
  // y/R - y/... evaluates to y0/R by the tangency algebra: here exactly 2.
  for (double t : {0.0, 1.0, 4.0}) {
    CHECK(hyp_curvature(circle, t) == doctest::Approx(2.0).epsilon(1e-12));
  }
  for (double th0 : {0.2, 0.9, 1.4}) {
    ParamCurve ray = make_ray(th0, 1.0);
    CHECK(hyp_curvature(ray, 2.0) ==
          doctest::Approx(std::cos(th0)).epsilon(1e-6));
  }
}

TEST_CASE("analytic and finite-difference curvature agree to 1e-5") {
  for (const char* name : {"horocycle", "geodesic", "circle", "figure_eight"}) {
    ParamCurve c = named_test_curve(name);
    double span = c.t1 - c.t0;
    for (int i = 1; i < 8; ++i) {
      double t = c.t0 + span * i / 8.0;
      double ka = hyp_curvature(c, t);
      double kf = hyp_curvature_fd(c, t);
      CHECK(ka == doctest::Approx(kf).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("curvature rejects curves leaving the upper half plane") {
  ParamCurve below;
  below.pos = [](double t) { return Vec2{t, -1.0}; };
  below.vel = [](double) { return Vec2{1.0, 0.0}; };
  below.acc = [](double) { return Vec2{0.0, 0.0}; };
  below.t0 = -1.0;
  below.t1 = 1.0;
  CHECK_THROWS_AS(hyp_curvature(below, 0.0), DomainError);
  CHECK_THROWS_AS(make_horocycle_line(-1.0), ValidationError);
}

TEST_CASE("osculating horocycle worked examples") {
  Horocycle up = osculating_horocycle({0.0, 0.0, false}, {0.0, 1.0});
  CHECK(up.basepoint.at_infinity);
  CHECK(up.log_scale == doctest::Approx(0.0));

  Horocycle side = osculating_horocycle({0.0, 0.0, false}, {1.0, 0.0});
  CHECK_FALSE(side.basepoint.at_infinity);
  CHECK(side.basepoint.x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::exp(side.log_scale) == doctest::Approx(2.0).epsilon(1e-14));

  Horocycle down =
      osculating_horocycle({0.0, std::log(2.0), false}, {0.0, -1.0});
  CHECK_FALSE(down.basepoint.at_infinity);
  CHECK(down.basepoint.x == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(std::exp(down.log_scale) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("boundary angle frozen values and strict monotonicity") {
  CHECK(boundary_angle({0.0, false}) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(boundary_angle({0.0, true}) == doctest::Approx(0.0).scale(1));
  CHECK(boundary_angle({1.0, false}) ==
        doctest::Approx(-kPi / 2.0).epsilon(1e-14));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  std::vector<double> bs;
  for (int i = 0; i < 200; ++i) bs.push_back(dist(rng));
  std::sort(bs.begin(), bs.end());
  // The angle increases strictly with b, wrapping once across the (-pi, pi]
  // branch cut as b passes 0 (negative b map near +pi, small positive b near
  // -pi); infinity sits at angle 0, closing the circle.
  for (std::size_t i = 1; i < bs.size(); ++i) {
    if (bs[i - 1] == bs[i]) continue;
    double a0 = boundary_angle({bs[i - 1], false});
    double a1 = boundary_angle({bs[i], false});
    bool wraps = bs[i - 1] < 0.0 && bs[i] >= 0.0;
    if (wraps)
      CHECK(a1 < a0);
    else
      CHECK(a1 > a0);
  }
}

TEST_CASE("dilation is an exact isometry at extreme scales") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xd(-5.0, 5.0);
  std::uniform_real_distribution<double> yd(-3.0, 3.0);
  std::uniform_real_distribution<double> td(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    HPoint p{xd(rng), yd(rng), false};
    HPoint q{xd(rng), yd(rng), false};
    double log_t = td(rng);
    double before = hyp_distance(p, q).value;
    double after = hyp_distance(dilate(p, log_t), dilate(q, log_t)).value;
    CHECK(after == doctest::Approx(before).epsilon(1e-12));
  }

  PolarPoint p{0.7, 0.0, false};
  PolarPoint moved = dilate(p, 69.0);
  CHECK(moved.theta == 0.7);
  CHECK(moved.log_r == 69.0);

  HPoint h{0.0, 0.0, false};
  HPoint e = dilate(h, 1.0);
  CHECK(e.log_y == doctest::Approx(1.0).epsilon(1e-15));
  HPoint same = dilate(h, 0.0);
  CHECK(same.x == h.x);
  CHECK(same.log_y == h.log_y);
}

TEST_CASE("polar dilation by t = 1e30 preserves the symmetric pair") {
  double th = 0.05;
  double log_t = 30.0 * std::log(10.0);
  PolarPoint p{th, 0.0, false};
  PolarPoint q{kPi - th, 0.0, false};
  double before = hyp_distance(p, q).value;
  double after = hyp_distance(dilate(p, log_t), dilate(q, log_t)).value;
  CHECK(after == doctest::Approx(before).epsilon(1e-12));
  CHECK(before ==
        doctest::Approx(symmetric_pair_distance(th)).epsilon(1e-12));
}
