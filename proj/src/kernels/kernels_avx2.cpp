#include "kernels_internal.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include "../quintic_core.hpp"

namespace folia::kernels {

namespace {

void quintic_eval_avx2(const double* u, std::size_t n, const QuinticCoeffs& q,
                       double inv_h, double* val, double* d1, double* d2) {
  __m256d c0 = _mm256_set1_pd(q.c[0]);
  __m256d c1 = _mm256_set1_pd(q.c[1]);
  __m256d c2 = _mm256_set1_pd(q.c[2]);
  __m256d c3 = _mm256_set1_pd(q.c[3]);
  __m256d c4 = _mm256_set1_pd(q.c[4]);
  __m256d c5 = _mm256_set1_pd(q.c[5]);
  __m256d w5 = _mm256_set1_pd(5.0 * q.c[5]);
  __m256d w4 = _mm256_set1_pd(4.0 * q.c[4]);
  __m256d w3 = _mm256_set1_pd(3.0 * q.c[3]);
  __m256d w2 = _mm256_set1_pd(2.0 * q.c[2]);
  __m256d v5 = _mm256_set1_pd(20.0 * q.c[5]);
  __m256d v4 = _mm256_set1_pd(12.0 * q.c[4]);
  __m256d v3 = _mm256_set1_pd(6.0 * q.c[3]);
  __m256d v2 = _mm256_set1_pd(2.0 * q.c[2]);
  __m256d ih = _mm256_set1_pd(inv_h);
  __m256d ih2 = _mm256_set1_pd(inv_h * inv_h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(u + i);
    __m256d p = _mm256_fmadd_pd(c5, x, c4);
    p = _mm256_fmadd_pd(p, x, c3);
    p = _mm256_fmadd_pd(p, x, c2);
    p = _mm256_fmadd_pd(p, x, c1);
    p = _mm256_fmadd_pd(p, x, c0);
    __m256d dp = _mm256_fmadd_pd(w5, x, w4);
    dp = _mm256_fmadd_pd(dp, x, w3);
    dp = _mm256_fmadd_pd(dp, x, w2);
    dp = _mm256_fmadd_pd(dp, x, c1);
    __m256d ddp = _mm256_fmadd_pd(v5, x, v4);
    ddp = _mm256_fmadd_pd(ddp, x, v3);
    ddp = _mm256_fmadd_pd(ddp, x, v2);
    _mm256_storeu_pd(val + i, p);
    _mm256_storeu_pd(d1 + i, _mm256_mul_pd(dp, ih));
    _mm256_storeu_pd(d2 + i, _mm256_mul_pd(ddp, ih2));
  }
  for (; i < n; ++i)
    kernelcore::quintic_eval_one(u[i], q.c, inv_h, &val[i], &d1[i], &d2[i]);
}

void kappa_h2_avx2(const double* theta, const double* sin_t,
                   const double* cos_t, const double* g, const double* gp,
                   std::size_t n, double* kappa) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_loadu_pd(theta + i);
    __m256d st = _mm256_loadu_pd(sin_t + i);
    __m256d ct = _mm256_loadu_pd(cos_t + i);
    __m256d gv = _mm256_loadu_pd(g + i);
    __m256d gpv = _mm256_loadu_pd(gp + i);
    __m256d t2 = _mm256_mul_pd(t, t);
    __m256d g2 = _mm256_mul_pd(gv, gv);
    __m256d q2 = _mm256_add_pd(t2, g2);
    __m256d q = _mm256_sqrt_pd(q2);
    __m256d num = _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(gpv, gv), g2), t2);
    __m256d first = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(st, t), num),
                                  _mm256_mul_pd(q2, q));
    __m256d second = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(t, st), _mm256_mul_pd(gv, ct)), q);
    _mm256_storeu_pd(kappa + i, _mm256_add_pd(first, second));
  }
  for (; i < n; ++i)
    kappa[i] = kernelcore::kappa_h2_one(theta[i], sin_t[i], cos_t[i], g[i],
                                        gp[i]);
}

MinMaxResult minmax_avx2(const double* x, std::size_t n) {
  MinMaxResult r{x[0], x[0], 0, 0};
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vmin = _mm256_loadu_pd(x);
    __m256d vmax = vmin;
    __m256d imin = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    __m256d imax = imin;
    __m256d idx = imin;
    __m256d four = _mm256_set1_pd(4.0);
    for (i = 4; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(x + i);
      idx = _mm256_add_pd(idx, four);
      __m256d lt = _mm256_cmp_pd(v, vmin, _CMP_LT_OQ);
      vmin = _mm256_blendv_pd(vmin, v, lt);
      imin = _mm256_blendv_pd(imin, idx, lt);
      __m256d gt = _mm256_cmp_pd(v, vmax, _CMP_GT_OQ);
      vmax = _mm256_blendv_pd(vmax, v, gt);
      imax = _mm256_blendv_pd(imax, idx, gt);
    }
    double mv[4], mi[4], xv[4], xi[4];
    _mm256_storeu_pd(mv, vmin);
    _mm256_storeu_pd(mi, imin);
    _mm256_storeu_pd(xv, vmax);
    _mm256_storeu_pd(xi, imax);
    r = {mv[0], xv[0], static_cast<std::size_t>(mi[0]),
         static_cast<std::size_t>(xi[0])};
    for (int k = 1; k < 4; ++k) {
      std::size_t mk = static_cast<std::size_t>(mi[k]);
      std::size_t xk = static_cast<std::size_t>(xi[k]);
      if (mv[k] < r.min_v || (mv[k] == r.min_v && mk < r.argmin)) {
        r.min_v = mv[k];
        r.argmin = mk;
      }
      if (xv[k] > r.max_v || (xv[k] == r.max_v && xk < r.argmax)) {
        r.max_v = xv[k];
        r.argmax = xk;
      }
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

const KernelSet* avx2_impl() {
  static const KernelSet set{quintic_eval_avx2, kappa_h2_avx2, minmax_avx2,
                             "avx2"};
  return &set;
}

}  // namespace folia::kernels

#else

namespace folia::kernels {

const KernelSet* avx2_impl() { return nullptr; }

}  // namespace folia::kernels

#endif
