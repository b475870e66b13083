#include <cmath>

#include "folia/analysis.hpp"
#include "folia/csv.hpp"

namespace folia::analysis {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

DistortionProfile profile_h2(const leafgen::H2Leaf& leaf) {
  DistortionProfile profile;
  profile.geometry = "h2";
  profile.oracle_id = leaf.oracle_id;
  int usable = static_cast<int>(leaf.spikes.size());
  for (int n = 0; n < static_cast<int>(leaf.anchors.size()); ++n) {
    const leafgen::H2Anchor& a = leaf.anchors[n];
    DistortionSample s;
    s.n = n;
    s.theta = a.theta;
    s.d_ambient = hgeom::symmetric_pair_distance(a.theta);
    if (n <= usable && !a.saturated) {
      s.d_leaf = leafgen::leaf_arc_length(leaf, a.theta, kPi - a.theta);
      s.saturated = s.d_leaf.saturated;
    } else {
      s.d_leaf = LogScalar::saturated_max();
      s.saturated = true;
    }
    profile.samples.push_back(s);
  }
  return profile;
}

DistortionProfile profile_e2(const leafgen::E2Leaf& leaf) {
  DistortionProfile profile;
  profile.geometry = "e2";
  profile.oracle_id = leaf.oracle_id;
  int usable = static_cast<int>(leaf.spikes.size());
  for (int n = 0; n < static_cast<int>(leaf.anchors.size()); ++n) {
    const leafgen::E2Anchor& a = leaf.anchors[n];
    DistortionSample s;
    s.n = n;
    s.theta = a.x;
    s.d_ambient = 2.0 * a.x;
    if (n <= usable && !a.saturated) {
      LogScalar half = leaf.graph_length(0.0, a.x);
      s.d_leaf = LogScalar::from_value(2.0) * half;
      s.saturated = s.d_leaf.saturated;
    } else {
      s.d_leaf = LogScalar::saturated_max();
      s.saturated = true;
    }
    profile.samples.push_back(s);
  }
  return profile;
}

std::string profile_to_csv(const DistortionProfile& profile) {
  csv::Writer w({"n", "theta", "d_ambient", "log_d_leaf", "saturated"});
  for (const DistortionSample& s : profile.samples)
    w.add_row({csv::format_int(s.n), csv::format_double(s.theta),
               csv::format_double(s.d_ambient),
               csv::format_double(s.d_leaf.log_value),
               csv::format_int(s.saturated ? 1 : 0)});
  return w.str();
}

}  // namespace folia::analysis
