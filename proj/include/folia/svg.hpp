#pragma once

#include <string>
#include <vector>

#include "folia/param_curve.hpp"

namespace folia::svg {

struct Polyline {
  std::vector<Vec2> points;
  std::string stroke = "#1f4e79";
  double width = 1.0;
};

// Open circles mark special samples (saturated points in distortion charts).
struct Marker {
  Vec2 at;
  double radius = 3.0;
  std::string stroke = "#b22222";
  bool filled = false;
};

// Fixed 800x600 canvas, data bounds mapped with a 5% margin, deterministic
// byte output (no timestamps, to_chars number formatting).
std::string render(const std::vector<Polyline>& lines,
                   const std::vector<Marker>& markers, double y_axis = 0.0);

inline std::string render(const std::vector<Polyline>& lines,
                          double y_axis = 0.0) {
  return render(lines, {}, y_axis);
}

}  // namespace folia::svg
