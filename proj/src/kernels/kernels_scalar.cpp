#include "folia/kernels.hpp"

#include "../quintic_core.hpp"

namespace folia::kernels {

namespace {

void quintic_eval_scalar(const double* u, std::size_t n,
                         const QuinticCoeffs& q, double inv_h, double* val,
                         double* d1, double* d2) {
  for (std::size_t i = 0; i < n; ++i)
    kernelcore::quintic_eval_one(u[i], q.c, inv_h, &val[i], &d1[i], &d2[i]);
}

void kappa_h2_scalar(const double* theta, const double* sin_t,
                     const double* cos_t, const double* g, const double* gp,
                     std::size_t n, double* kappa) {
  for (std::size_t i = 0; i < n; ++i)
    kappa[i] = kernelcore::kappa_h2_one(theta[i], sin_t[i], cos_t[i], g[i],
                                        gp[i]);
}

MinMaxResult minmax_scalar(const double* x, std::size_t n) {
  MinMaxResult r{x[0], x[0], 0, 0};
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < r.min_v) {
      r.min_v = x[i];
      r.argmin = i;
    }
    if (x[i] > r.max_v) {
      r.max_v = x[i];
      r.argmax = i;
    }
  }
  return r;
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{quintic_eval_scalar, kappa_h2_scalar,
                             minmax_scalar, "scalar"};
  return set;
}

}  // namespace folia::kernels
