#include "kernels_internal.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include "../quintic_core.hpp"

namespace folia::kernels {

namespace {

void quintic_eval_neon(const double* u, std::size_t n, const QuinticCoeffs& q,
                       double inv_h, double* val, double* d1, double* d2) {
  float64x2_t c0 = vdupq_n_f64(q.c[0]);
  float64x2_t c1 = vdupq_n_f64(q.c[1]);
  float64x2_t c2 = vdupq_n_f64(q.c[2]);
  float64x2_t c3 = vdupq_n_f64(q.c[3]);
  float64x2_t c4 = vdupq_n_f64(q.c[4]);
  float64x2_t c5 = vdupq_n_f64(q.c[5]);
  float64x2_t w5 = vdupq_n_f64(5.0 * q.c[5]);
  float64x2_t w4 = vdupq_n_f64(4.0 * q.c[4]);
  float64x2_t w3 = vdupq_n_f64(3.0 * q.c[3]);
  float64x2_t w2 = vdupq_n_f64(2.0 * q.c[2]);
  float64x2_t v5 = vdupq_n_f64(20.0 * q.c[5]);
  float64x2_t v4 = vdupq_n_f64(12.0 * q.c[4]);
  float64x2_t v3 = vdupq_n_f64(6.0 * q.c[3]);
  float64x2_t v2 = vdupq_n_f64(2.0 * q.c[2]);
  float64x2_t ih = vdupq_n_f64(inv_h);
  float64x2_t ih2 = vdupq_n_f64(inv_h * inv_h);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t x = vld1q_f64(u + i);
    float64x2_t p = vfmaq_f64(c4, c5, x);
    p = vfmaq_f64(c3, p, x);
    p = vfmaq_f64(c2, p, x);
    p = vfmaq_f64(c1, p, x);
    p = vfmaq_f64(c0, p, x);
    float64x2_t dp = vfmaq_f64(w4, w5, x);
    dp = vfmaq_f64(w3, dp, x);
    dp = vfmaq_f64(w2, dp, x);
    dp = vfmaq_f64(c1, dp, x);
    float64x2_t ddp = vfmaq_f64(v4, v5, x);
    ddp = vfmaq_f64(v3, ddp, x);
    ddp = vfmaq_f64(v2, ddp, x);
    vst1q_f64(val + i, p);
    vst1q_f64(d1 + i, vmulq_f64(dp, ih));
    vst1q_f64(d2 + i, vmulq_f64(ddp, ih2));
  }
  for (; i < n; ++i)
    kernelcore::quintic_eval_one(u[i], q.c, inv_h, &val[i], &d1[i], &d2[i]);
}

void kappa_h2_neon(const double* theta, const double* sin_t,
                   const double* cos_t, const double* g, const double* gp,
                   std::size_t n, double* kappa) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t t = vld1q_f64(theta + i);
    float64x2_t st = vld1q_f64(sin_t + i);
    float64x2_t ct = vld1q_f64(cos_t + i);
    float64x2_t gv = vld1q_f64(g + i);
    float64x2_t gpv = vld1q_f64(gp + i);
    float64x2_t t2 = vmulq_f64(t, t);
    float64x2_t g2 = vmulq_f64(gv, gv);
    float64x2_t q2 = vaddq_f64(t2, g2);
    float64x2_t q = vsqrtq_f64(q2);
    float64x2_t num = vsubq_f64(vsubq_f64(vsubq_f64(gpv, gv), g2), t2);
    float64x2_t first =
        vdivq_f64(vmulq_f64(vmulq_f64(st, t), num), vmulq_f64(q2, q));
    float64x2_t second =
        vdivq_f64(vsubq_f64(vmulq_f64(t, st), vmulq_f64(gv, ct)), q);
    vst1q_f64(kappa + i, vaddq_f64(first, second));
  }
  for (; i < n; ++i)
    kappa[i] = kernelcore::kappa_h2_one(theta[i], sin_t[i], cos_t[i], g[i],
                                        gp[i]);
}

MinMaxResult minmax_neon(const double* x, std::size_t n) {
  MinMaxResult r{x[0], x[0], 0, 0};
  std::size_t i = 0;
  if (n >= 2) {
    const double lane_idx[2] = {0.0, 1.0};
    float64x2_t vmin = vld1q_f64(x);
    float64x2_t vmax = vmin;
    float64x2_t imin = vld1q_f64(lane_idx);
    float64x2_t imax = imin;
    float64x2_t idx = imin;
    float64x2_t two = vdupq_n_f64(2.0);
    for (i = 2; i + 2 <= n; i += 2) {
      float64x2_t v = vld1q_f64(x + i);
      idx = vaddq_f64(idx, two);
      uint64x2_t lt = vcltq_f64(v, vmin);
      vmin = vbslq_f64(lt, v, vmin);
      imin = vbslq_f64(lt, idx, imin);
      uint64x2_t gt = vcgtq_f64(v, vmax);
      vmax = vbslq_f64(gt, v, vmax);
      imax = vbslq_f64(gt, idx, imax);
    }
    double mv[2], mi[2], xv[2], xi[2];
    vst1q_f64(mv, vmin);
    vst1q_f64(mi, imin);
    vst1q_f64(xv, vmax);
    vst1q_f64(xi, imax);
    r = {mv[0], xv[0], static_cast<std::size_t>(mi[0]),
         static_cast<std::size_t>(xi[0])};
    std::size_t mk = static_cast<std::size_t>(mi[1]);
    std::size_t xk = static_cast<std::size_t>(xi[1]);
    if (mv[1] < r.min_v || (mv[1] == r.min_v && mk < r.argmin)) {
      r.min_v = mv[1];
      r.argmin = mk;
    }
    if (xv[1] > r.max_v || (xv[1] == r.max_v && xk < r.argmax)) {
      r.max_v = xv[1];
      r.argmax = xk;
    }
  }
  for (; i < n; ++i) {
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

const KernelSet* neon_impl() {
  static const KernelSet set{quintic_eval_neon, kappa_h2_neon, minmax_neon,
                             "neon"};
  return &set;
}

}  // namespace folia::kernels

#else

namespace folia::kernels {

const KernelSet* neon_impl() { return nullptr; }

}  // namespace folia::kernels

#endif
