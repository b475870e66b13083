#include <cmath>

#include "folia/error.hpp"
#include "folia/leafgen.hpp"

namespace folia::leafgen {

namespace {

// Monotone bisection for the offset c with value + c = target, bracketing
// first by doubling.  The map is linear, but bisection keeps the search
// insensitive to the magnitudes involved.
double solve_offset(double value, double target) {
  double lo = -1.0, hi = 1.0;
  for (int i = 0; i < 90 && value + lo > target; ++i) lo *= 2.0;
  for (int i = 0; i < 90 && value + hi < target; ++i) hi *= 2.0;
  if (value + lo > target || value + hi < target)
    throw DomainError("offset out of bracketable range");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (value + mid < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

H2Leaf H2Family::leaf_at(double log_t) const {
  H2Leaf leaf = base_;
  leaf.rho_offset = base_.rho_offset + log_t;
  return leaf;
}

double H2Family::leaf_through(double theta, double log_r) const {
  return solve_offset(base_.rho(theta), log_r);
}

E2Leaf E2Family::leaf_at(double offset) const {
  E2Leaf leaf = base_;
  leaf.y_offset = base_.y_offset + offset;
  return leaf;
}

double E2Family::leaf_through(double x, double y) const {
  return solve_offset(base_.height(x), y);
}

}  // namespace folia::leafgen
