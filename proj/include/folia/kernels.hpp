#pragma once

#include <cstddef>

namespace folia::kernels {

// ============================================================================
// Batch kernels behind the curvature scanner and the spline shaping search.
// Each kernel has a scalar reference implementation plus SIMD variants
// (AVX2+FMA on x86-64, NEON on AArch64) compiled into separate translation
// units; the active set is chosen once at runtime.  All variants execute the
// same operation sequence (explicit fma in the polynomial evaluation, plain
// mul/add elsewhere), so their results are bitwise identical and the
// equivalence tests assert exactly that.
// ============================================================================

struct QuinticCoeffs {
  double c[6];
};

// Evaluate P, P', P'' of a quintic at u[i] in [0, 1]; first and second
// derivatives are rescaled by inv_h and inv_h^2 into s-units.
using QuinticEvalFn = void (*)(const double* u, std::size_t n,
                               const QuinticCoeffs& q, double inv_h,
                               double* val, double* d1, double* d2);

// Signed hyperbolic curvature of a log-polar leaf graph rho(ln theta) from
// precomputed grid transcendentals and spline derivatives g = d rho/ds,
// gp = d^2 rho/ds^2:
//   kappa = sin*theta*(gp - g - g^2 - theta^2) / q^3
//         + (theta*sin - g*cos) / q,        q = sqrt(theta^2 + g^2).
using KappaH2Fn = void (*)(const double* theta, const double* sin_t,
                           const double* cos_t, const double* g,
                           const double* gp, std::size_t n, double* kappa);

struct MinMaxResult {
  double min_v;
  double max_v;
  std::size_t argmin;
  std::size_t argmax;
};

// Min and max with the lowest index winning ties, so every variant reports
// the same extremum location.
using MinMaxFn = MinMaxResult (*)(const double* x, std::size_t n);

struct KernelSet {
  QuinticEvalFn quintic_eval;
  KappaH2Fn kappa_h2;
  MinMaxFn minmax;
  const char* name;
};

const KernelSet& scalar();

// AVX2+FMA set, or nullptr when the CPU (or the build) lacks support.
const KernelSet* avx2();

// NEON set, or nullptr outside AArch64 builds.
const KernelSet* neon();

// Best available set; resolved once.
const KernelSet& active();

}  // namespace folia::kernels
