#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "folia/analysis.hpp"
#include "folia/error.hpp"
#include "folia/growth.hpp"
#include "folia/hgeom.hpp"
#include "folia/leafgen.hpp"
#include "folia/param_curve.hpp"

using namespace folia;
using namespace folia::analysis;

namespace {

leafgen::H2Leaf tower_leaf() {
  leafgen::ConstructionParams p;
  return leafgen::build_h2_leaf(p, growth::GrowthOracle::tower());
}

leafgen::E2Leaf gentle_leaf() {
  leafgen::ConstructionParams p;
  p.delta = 0.05;
  p.k_width = 10.0;
  p.n_max = 3;
  return leafgen::build_e2_leaf(p, growth::GrowthOracle::parse("gentle"));
}

}  // namespace

TEST_CASE("the horocircle law ties leaf and ambient distances") {
  LawSample unit = horocycle_law_sample(1.0);
  CHECK(unit.a == 1.0);
  CHECK(unit.d_leaf == 2.0);
  CHECK(unit.d_ambient == doctest::Approx(1.7627471740390861).epsilon(1e-15));

  for (double a : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
    LawSample s = horocycle_law_sample(a);
    CHECK(s.d_leaf ==
          doctest::Approx(2.0 * std::sinh(0.5 * s.d_ambient)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(horocycle_law_sample(0.0), ValidationError);
  CHECK_THROWS_AS(horocycle_law_sample(-2.0), ValidationError);
}

TEST_CASE("distortion profile of the tower leaf matches frozen values") {
  DistortionProfile profile = profile_h2(tower_leaf());
  CHECK(profile.geometry == "h2");
  CHECK(profile.oracle_id == "tower");
  REQUIRE(profile.samples.size() == 5);

  double d_amb[] = {5.989796907535146, 7.377342180786638, 8.763949098883186,
                    10.150321588563626, 11.536635481156042};
  double log_leaf[] = {2.992391140505984, 3.9145375350173017,
                       5.159817960636842, 7.452726877137125,
                       16.593059996543097};
  for (int n = 0; n < 5; ++n) {
    const DistortionSample& s = profile.samples[n];
    CHECK(s.n == n);
    CHECK(s.theta == std::ldexp(0.1, -n));
    CHECK(s.d_ambient == doctest::Approx(d_amb[n]).epsilon(1e-12));
    CHECK(s.d_leaf.log_value == doctest::Approx(log_leaf[n]).epsilon(1e-10));
    CHECK_FALSE(s.saturated);

    double cot = std::cos(s.theta) / std::sin(s.theta);
    double oracle = std::acosh(1.0 + 2.0 * cot * cot);
    CHECK(s.d_ambient == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(s.d_leaf.log_value > std::log(s.d_ambient));
  }

  CHECK(profile.samples[0].d_leaf.log_value ==
        doctest::Approx(std::log(2.0 * std::cos(0.1) / std::sin(0.1)))
            .epsilon(1e-10));

  for (int n = 0; n < 5; ++n) {
    const DistortionSample& s = profile.samples[n];
    double envelope = 2.0 * std::sinh(0.5 * s.d_ambient);
    if (n == 0) {
      CHECK(s.d_leaf.to_double() == doctest::Approx(envelope).epsilon(1e-9));
    } else {
      CHECK(s.d_leaf.to_double() > envelope);
    }
  }
}

TEST_CASE("profile csv has the pinned header and digits") {
  DistortionProfile profile = profile_h2(tower_leaf());
  std::string text = profile_to_csv(profile);
  CHECK(text.rfind("n,theta,d_ambient,log_d_leaf,saturated\n", 0) == 0);
  CHECK(text.find("\n0,0.1,5.989796907535146,2.992391140505984,0\n") !=
        std::string::npos);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);
}

TEST_CASE("euclidean profile doubles the half graph") {
  leafgen::E2Leaf leaf = gentle_leaf();
  DistortionProfile profile = profile_e2(leaf);
  CHECK(profile.geometry == "e2");
  CHECK(profile.oracle_id == "gentle");
  REQUIRE(profile.samples.size() == 4);
  for (int n = 0; n < 4; ++n) {
    const DistortionSample& s = profile.samples[n];
    CHECK(s.theta == 10.0 + n);
    CHECK(s.d_ambient == 2.0 * (10.0 + n));
    LogScalar half = leaf.graph_length(0.0, 10.0 + n);
    CHECK(s.d_leaf.log_value ==
          doctest::Approx(std::log(2.0) + half.log_value).epsilon(1e-14));
    CHECK(s.d_leaf.to_double() > s.d_ambient);
    CHECK_FALSE(s.saturated);
  }
}

TEST_CASE("saturated anchors produce flagged rows") {
  leafgen::ConstructionParams p;
  p.n_max = 5;
  p.allow_saturated_tail = true;
  leafgen::H2Leaf leaf = leafgen::build_h2_leaf(p, growth::GrowthOracle::tower());
  DistortionProfile profile = profile_h2(leaf);
  REQUIRE(profile.samples.size() == 6);
  CHECK_FALSE(profile.samples[4].saturated);
  CHECK(profile.samples[5].saturated);
  CHECK_FALSE(profile.samples[5].d_leaf.exp_representable());
  std::string text = profile_to_csv(profile);
  CHECK(text.find(",1\n") != std::string::npos);
}

TEST_CASE("exponential bound holds for unit curvature curves") {
  BoundReport line = exponential_bound_check(make_horocycle_line(1.0), 40);
  CHECK(line.verdict == BoundVerdict::holds);
  CHECK(line.max_excess <= 1e-6);
  CHECK(line.max_excess >= -1e-6);
  CHECK(line.note == "d_leaf <= 2 sinh(d_ambient / 2) on all sampled pairs");

  BoundReport geo = exponential_bound_check(make_geodesic_semicircle(1.0), 40);
  CHECK(geo.verdict == BoundVerdict::holds);
  CHECK(geo.max_excess < 0.0);
}

TEST_CASE("exponential bound declines curves sharper than horocycles") {
  BoundReport rep =
      exponential_bound_check(make_euclidean_circle({0.0, 2.0}, 1.0), 40);
  CHECK(rep.verdict == BoundVerdict::inapplicable);
  CHECK(rep.note.find("exceeds 1") != std::string::npos);
}

TEST_CASE("exponential bound validation") {
  CHECK_THROWS_AS(exponential_bound_check(make_horocycle_line(1.0), 1),
                  ValidationError);
  CHECK_THROWS_AS(
      exponential_bound_check(make_euclidean_circle({0.0, 0.5}, 1.0), 16),
      DomainError);
}

TEST_CASE("osculating basepoints wind once around a circle") {
  MonotonicityReport rep =
      basepoint_monotonicity(make_euclidean_circle({0.0, 2.0}, 1.0), 1000);
  CHECK(rep.monotone);
  CHECK(rep.winding == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(rep.samples.size() == 1000);
  for (const BasepointSample& s : rep.samples)
    CHECK_FALSE(s.basepoint.at_infinity);
}

TEST_CASE("a horocycle keeps its basepoint fixed") {
  MonotonicityReport rep = basepoint_monotonicity(make_horocycle_line(1.0), 64);
  CHECK(rep.monotone);
  CHECK(rep.winding == 0.0);
  for (const BasepointSample& s : rep.samples) {
    CHECK(s.basepoint.at_infinity);
    CHECK(s.angle == 0.0);
  }
}

TEST_CASE("basepoint tracking validation") {
  CHECK_THROWS_AS(basepoint_monotonicity(make_horocycle_line(1.0), 1),
                  ValidationError);
  ParamCurve frozen;
  frozen.pos = [](double) { return Vec2{0.0, 1.0}; };
  frozen.t0 = 0.0;
  frozen.t1 = 1.0;
  CHECK_THROWS_AS(basepoint_monotonicity(frozen, 8), AnalysisError);
}

TEST_CASE("scan labels identify the worst piece") {
  leafgen::ConstructionParams p;
  p.n_max = 2;
  leafgen::H2Leaf h2 = leafgen::build_h2_leaf(p, growth::GrowthOracle::tower());
  CurvatureScan sh = scan_h2(h2, 4096);
  CHECK(sh.min_kappa >= 0.99);
  CHECK(sh.max_kappa <= 1.01);
  CHECK(sh.worst_piece == "spike 1");
  CHECK(sh.argmin > 0.0);
  CHECK(sh.argmax > 0.0);

  CurvatureScan se = scan_e2(gentle_leaf(), 4096);
  CHECK(se.worst_piece == "parabola");
  CHECK(se.max_kappa == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(scan_h2(h2, 8), ValidationError);
}

TEST_CASE("the pinch guard names the offending piece") {
  CurvatureScan bad;
  bad.min_kappa = 0.85;
  bad.max_kappa = 1.02;
  bad.argmin = 0.033;
  bad.argmax = 0.2;
  bad.worst_piece = "spike 2";
  try {
    require_pinched(bad, 1.0, 0.1);
    FAIL("deviation 0.15 must trip the guard");
  } catch (const ConstructionError& e) {
    CHECK(std::string(e.what()).find("spike 2") != std::string::npos);
  }

  CurvatureScan edge;
  edge.min_kappa = 0.95;
  edge.max_kappa = 1.05;
  CHECK_NOTHROW(require_pinched(edge, 1.0, 0.05));
}
