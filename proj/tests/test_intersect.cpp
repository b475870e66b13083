#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/error.hpp"
#include "folia/intersect.hpp"
#include "folia/param_curve.hpp"

using namespace folia;
using folia::intersect::Crossing;
using folia::intersect::self_intersections;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("embedded curves report no self intersections") {
  for (const char* name : {"horocycle", "geodesic", "ray", "circle"}) {
    std::vector<Crossing> holes =
        self_intersections(named_test_curve(name), 2000);
    CHECK_MESSAGE(holes.empty(), "false positive on ", name);
  }
}

TEST_CASE("the figure eight crosses itself exactly once") {
  std::vector<Crossing> hits =
      self_intersections(make_figure_eight(), 4000);
  REQUIRE(hits.size() == 1);
  const Crossing& c = hits[0];
  CHECK(c.s == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(c.s2 == doctest::Approx(2.0 * kPi).epsilon(1e-9));
  CHECK(c.point.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(c.point.y == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c.residual <= 1e-8);
  CHECK(c.s < c.s2);
}

TEST_CASE("the crossing spiral has five transversal crossings") {
  std::vector<Crossing> hits =
      self_intersections(make_crossing_spiral(), 6000);
  REQUIRE(hits.size() == 5);
  double first[] = {0.42839899821678984, 1.856395658939423, 3.284392319662057,
                    4.71238898038469, 6.140385641107322};
  for (int i = 0; i < 5; ++i) {
    CHECK(hits[i].s == doctest::Approx(first[i]).epsilon(1e-8));
    CHECK(hits[i].s2 ==
          doctest::Approx(first[i] + 2.0 * kPi).epsilon(1e-8));
    CHECK(hits[i].residual <= 1e-10);
  }
  for (int i = 1; i < 5; ++i) CHECK(hits[i].s > hits[i - 1].s);
}

TEST_CASE("crossing counts are stable across sampling densities") {
  for (int samples : {600, 1500, 3000, 8000}) {
    CHECK(self_intersections(make_figure_eight(), samples).size() == 1);
    CHECK(self_intersections(make_crossing_spiral(), samples).size() == 5);
  }
}

TEST_CASE("intersection scan validation") {
  CHECK_THROWS_AS(self_intersections(make_figure_eight(), 7),
                  ValidationError);
  ParamCurve empty;
  empty.t0 = 0.0;
  empty.t1 = 1.0;
  CHECK_THROWS_AS(self_intersections(empty, 100), ValidationError);
}

TEST_CASE("a polyline corner is not a crossing") {
  // A tent path doubles back near its apex without crossing itself.
  ParamCurve tent;
  tent.pos = [](double t) {
    double x = t < 0.5 ? t : 1.0 - t;
    return Vec2{x, 1.0 + t};
  };
  tent.t0 = 0.0;
  tent.t1 = 1.0;
  CHECK(self_intersections(tent, 501).empty());
}
