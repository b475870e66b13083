#pragma once

#include <cmath>

namespace folia::kernelcore {

// Reference element operations shared by the scalar kernels, the AVX2
// remainder path and QuinticSegment::eval.  The fma calls are explicit so the
// scalar and vector variants round identically; everything else is plain
// IEEE mul/add/sub/div/sqrt in a fixed order (the kernel translation units
// are built with contraction off).

inline void quintic_eval_one(double u, const double* c, double inv_h,
                             double* val, double* d1, double* d2) {
  double p = std::fma(c[5], u, c[4]);
  p = std::fma(p, u, c[3]);
  p = std::fma(p, u, c[2]);
  p = std::fma(p, u, c[1]);
  p = std::fma(p, u, c[0]);
  double dp = std::fma(5.0 * c[5], u, 4.0 * c[4]);
  dp = std::fma(dp, u, 3.0 * c[3]);
  dp = std::fma(dp, u, 2.0 * c[2]);
  dp = std::fma(dp, u, c[1]);
  double ddp = std::fma(20.0 * c[5], u, 12.0 * c[4]);
  ddp = std::fma(ddp, u, 6.0 * c[3]);
  ddp = std::fma(ddp, u, 2.0 * c[2]);
  *val = p;
  *d1 = dp * inv_h;
  *d2 = ddp * (inv_h * inv_h);
}

inline double kappa_h2_one(double theta, double sin_t, double cos_t, double g,
                           double gp) {
  double t2 = theta * theta;
  double g2 = g * g;
  double q2 = t2 + g2;
  double q = std::sqrt(q2);
  double num = gp - g - g2 - t2;
  double first = sin_t * theta * num / (q2 * q);
  double second = (theta * sin_t - g * cos_t) / q;
  return first + second;
}

}  // namespace folia::kernelcore
