#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "folia/kernels.hpp"

namespace folia::scan_detail {

// Sample grid over one spline segment with precomputed transcendentals.
// The grid is fixed while shaping varies the spline, so sin/cos/exp are paid
// once and every objective evaluation is pure kernel work.

struct H2Grid {
  double s0 = 0.0, s1 = 0.0;
  std::vector<double> u, theta, sin_t, cos_t;
  std::vector<double> val, d1, d2, kappa;

  void init(double a, double b, int n) {
    s0 = a;
    s1 = b;
    u.resize(n);
    theta.resize(n);
    sin_t.resize(n);
    cos_t.resize(n);
    val.resize(n);
    d1.resize(n);
    d2.resize(n);
    kappa.resize(n);
    double h = b - a;
    for (int i = 0; i < n; ++i) {
      u[i] = static_cast<double>(i) / static_cast<double>(n - 1);
      double s = a + u[i] * h;
      theta[i] = std::exp(s);
      sin_t[i] = std::sin(theta[i]);
      cos_t[i] = std::cos(theta[i]);
    }
  }

  void kappa_quintic(const kernels::KernelSet& ks,
                     const std::array<double, 6>& c) {
    kernels::QuinticCoeffs qc;
    for (int k = 0; k < 6; ++k) qc.c[k] = c[k];
    double inv_h = 1.0 / (s1 - s0);
    ks.quintic_eval(u.data(), u.size(), qc, inv_h, val.data(), d1.data(),
                    d2.data());
    ks.kappa_h2(theta.data(), sin_t.data(), cos_t.data(), d1.data(), d2.data(),
                u.size(), kappa.data());
  }

  // Exact horocircle derivatives g = -theta cot theta, g' = g + theta^2
  // csc^2 theta, fed through the same curvature kernel.
  void kappa_core(const kernels::KernelSet& ks) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      double t = theta[i];
      double g = -t * cos_t[i] / sin_t[i];
      d1[i] = g;
      d2[i] = g + t * t / (sin_t[i] * sin_t[i]);
    }
    ks.kappa_h2(theta.data(), sin_t.data(), cos_t.data(), d1.data(), d2.data(),
                u.size(), kappa.data());
  }
};

struct E2Grid {
  double w0 = 0.0, w1 = 0.0;
  std::vector<double> u, w, en;  // en = exp(-w)
  std::vector<double> val, d1, d2, kappa;

  void init(double a, double b, int n) {
    w0 = a;
    w1 = b;
    u.resize(n);
    w.resize(n);
    en.resize(n);
    val.resize(n);
    d1.resize(n);
    d2.resize(n);
    kappa.resize(n);
    double h = b - a;
    for (int i = 0; i < n; ++i) {
      u[i] = static_cast<double>(i) / static_cast<double>(n - 1);
      w[i] = a + u[i] * h;
      en[i] = std::exp(-w[i]);
    }
  }

  // Signed curvature of the w-parametrized graph piece (x(w), e^w):
  //   kappa = (x' - x'') e^{-2w} / (1 + p^2)^{3/2},  p = x' e^{-w}.
  void kappa_quintic(const kernels::KernelSet& ks,
                     const std::array<double, 6>& c) {
    kernels::QuinticCoeffs qc;
    for (int k = 0; k < 6; ++k) qc.c[k] = c[k];
    double inv_h = 1.0 / (w1 - w0);
    ks.quintic_eval(u.data(), u.size(), qc, inv_h, val.data(), d1.data(),
                    d2.data());
    for (std::size_t i = 0; i < u.size(); ++i) {
      double p = d1[i] * en[i];
      double q = 1.0 + p * p;
      kappa[i] = (d1[i] - d2[i]) * (en[i] * en[i]) / (q * std::sqrt(q));
    }
  }
};

}  // namespace folia::scan_detail
