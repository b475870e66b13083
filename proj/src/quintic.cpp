#include "folia/quintic.hpp"

#include "folia/error.hpp"
#include "quintic_core.hpp"

namespace folia {

QuinticSegment QuinticSegment::hermite(double s0, double s1, double v0,
                                       double g0, double q0, double v1,
                                       double g1, double q1) {
  if (!(s1 > s0)) throw ValidationError("quintic segment needs s1 > s0");
  double h = s1 - s0;
  double b0 = g0 * h;
  double b1 = g1 * h;
  double p0 = q0 * h * h;
  double p1 = q1 * h * h;
  double da = v1 - v0 - b0 - 0.5 * p0;
  double db = b1 - b0 - p0;
  double dc = p1 - p0;
  QuinticSegment seg;
  seg.s0 = s0;
  seg.s1 = s1;
  seg.c = {v0,
           b0,
           0.5 * p0,
           10.0 * da - 4.0 * db + 0.5 * dc,
           -15.0 * da + 7.0 * db - dc,
           6.0 * da - 3.0 * db + 0.5 * dc};
  return seg;
}

void QuinticSegment::eval(double s, double* v, double* g, double* gp) const {
  double inv_h = 1.0 / h();
  double u = (s - s0) * inv_h;
  kernelcore::quintic_eval_one(u, c.data(), inv_h, v, g, gp);
}

}  // namespace folia
