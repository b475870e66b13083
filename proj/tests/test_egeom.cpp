#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "folia/egeom.hpp"
#include "folia/error.hpp"

using namespace folia;
using namespace folia::egeom;

TEST_CASE("plain distances") {
  CHECK(euc_distance(EPoint::plain(-3.0, 5.0), EPoint::plain(3.0, 5.0)).value ==
        6.0);
  CHECK(euc_distance(EPoint::plain(0.0, 0.0), EPoint::plain(3.0, 4.0)).value ==
        5.0);
  CHECK(euc_distance(EPoint::plain(1.0, 2.0), EPoint::plain(1.0, 2.0)).value ==
        0.0);
}

TEST_CASE("log heights at e^600: same height collapses to |dx|") {
  EPoint p = EPoint::from_log(-3.0, 600.0);
  EPoint q = EPoint::from_log(3.0, 600.0);
  Distance d = euc_distance(p, q);
  CHECK(d.value == 6.0);
  CHECK_FALSE(d.saturated);
}

TEST_CASE("log heights: differing heights dominate") {
  EPoint p = EPoint::from_log(0.0, 10.0);
  EPoint q = EPoint::from_log(0.0, 11.0);
  double expected = std::exp(11.0) - std::exp(10.0);
  CHECK(euc_distance(p, q).value == doctest::Approx(expected).epsilon(1e-12));

  EPoint lo = EPoint::plain(0.0, 1.0);
  EPoint hi = EPoint::from_log(0.0, 650.0);
  CHECK(euc_distance(lo, hi).value ==
        doctest::Approx(std::exp(650.0)).epsilon(1e-12));
}

TEST_CASE("height differences beyond double range saturate") {
  EPoint p = EPoint::from_log(0.0, 100.0);
  EPoint q = EPoint::from_log(0.0, 800.0);
  Distance d = euc_distance(p, q);
  CHECK(d.saturated);
}

TEST_CASE("graph curvature closed forms") {
  GraphFn parabola;
  parabola.f = [](double x) { return 0.05 * x * x; };
  CHECK(graph_curvature(parabola, 0.0) == doctest::Approx(0.1).epsilon(1e-8));

  GraphFn linear;
  linear.f = [](double x) { return 3.0 - 2.0 * x; };
  for (double x : {-1.0, 0.0, 2.0})
    CHECK(graph_curvature(linear, x) ==
          doctest::Approx(0.0).scale(1).epsilon(1e-8));

  GraphFn arc;
  arc.f = [](double x) { return 1.0 - std::sqrt(1.0 - x * x); };
  CHECK(graph_curvature(arc, 0.0) == doctest::Approx(1.0).epsilon(1e-6));

  GraphFn analytic;
  analytic.f = [](double x) { return std::sin(x); };
  analytic.df = [](double x) { return std::cos(x); };
  analytic.d2f = [](double x) { return -std::sin(x); };
  GraphFn sampled;
  sampled.f = analytic.f;
  for (double x : {0.3, 1.0, 2.2})
    CHECK(graph_curvature(analytic, x) ==
          doctest::Approx(graph_curvature(sampled, x)).epsilon(1e-5));
}

TEST_CASE("graph arc length: line, parabola, chord floor") {
  GraphFn line;
  line.f = [](double x) { return 2.0 * x; };
  line.df = [](double) { return 2.0; };
  CHECK(graph_arc_length(line, 0.0, 3.0) ==
        doctest::Approx(3.0 * std::sqrt(5.0)).epsilon(1e-12));

  // Parabola y = x^2 over [0, 1]: closed form (2 sqrt 5 + asinh 2) / 4.
  GraphFn parabola;
  parabola.f = [](double x) { return x * x; };
  parabola.df = [](double x) { return 2.0 * x; };
  double expected = (2.0 * std::sqrt(5.0) + std::asinh(2.0)) / 4.0;
  CHECK(graph_arc_length(parabola, 0.0, 1.0) ==
        doctest::Approx(expected).epsilon(1e-10));

  CHECK(graph_arc_length(line, 1.0, 1.0) == 0.0);
  CHECK(graph_arc_length(parabola, 0.0, 1.0) >= std::hypot(1.0, 1.0));
}
