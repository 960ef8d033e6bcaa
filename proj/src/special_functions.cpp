/*
 * Copyright 2026 The sparsekern Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */

#include "sparsekern/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sparsekern {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLogTwoPi = 1.8378770664093454836;  // ln(2*pi)
constexpr double kInf = std::numeric_limits<double>::infinity();

// ln cosh(u) without overflow.
double log_cosh(double u) {
  u = std::abs(u);
  return u + std::log1p(std::exp(-2.0 * u)) - kLn2;
}

// Log-integrand of the representation K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt,
// with nu >= 0.
struct BesselKIntegrand {
  double x;
  double nu;
  double value(double t) const { return -x * std::cosh(t) + log_cosh(nu * t); }
  double deriv(double t) const { return -x * std::sinh(t) + nu * std::tanh(nu * t); }
};

// Location of the maximum of the log-integrand. t = 0 is the maximum iff
// nu^2 <= x; otherwise there is a unique interior maximum which Newton with
// a bisection safeguard locates.
double integrand_peak(const BesselKIntegrand& f) {
  if (f.nu * f.nu <= f.x) return 0.0;
  double lo = 0.0;                               // f' >= 0 here
  double hi = std::asinh(f.nu / f.x) + 1.0;      // f' < 0 here
  double t = std::min(hi - 0.5, std::asinh(f.nu / f.x));
  for (int it = 0; it < 60; ++it) {
    double d1 = f.deriv(t);
    if (d1 > 0.0) lo = t; else hi = t;
    // f'' along the search path
    double d2 = -f.x * std::cosh(t);
    double sech = 1.0 / std::cosh(f.nu * t);
    d2 += f.nu * f.nu * sech * sech;
    double step = (d2 != 0.0) ? -d1 / d2 : 0.0;
    double next = t + step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-12 * (1.0 + std::abs(t))) return next;
    t = next;
  }
  return t;
}

// Progressive tanh-sinh nodes on (-1, 1). Level L introduces the abscissas
// at odd multiples of h0 / 2^L; level 0 holds all multiples of h0.
struct TanhSinhTables {
  static constexpr double kH0 = 1.0;
  static constexpr double kUmax = 3.7;
  static constexpr int kMaxLevel = 9;
  // nodes for u > 0 only; u = 0 handled separately (x = 0, w = pi/2)
  std::vector<std::vector<double>> abscissa;  // per level
  std::vector<std::vector<double>> weight;

  TanhSinhTables() {
    abscissa.resize(kMaxLevel + 1);
    weight.resize(kMaxLevel + 1);
    for (int level = 0; level <= kMaxLevel; ++level) {
      const double h = kH0 / double(1 << level);
      const int stride = (level == 0) ? 1 : 2;
      for (int k = (level == 0) ? 1 : 1; ; k += stride) {
        const double u = k * h;
        if (u > kUmax) break;
        const double s = std::numbers::pi / 2.0 * std::sinh(u);
        const double x = std::tanh(s);
        const double c = std::cosh(s);
        const double w = std::numbers::pi / 2.0 * std::cosh(u) / (c * c);
        abscissa[level].push_back(x);
        weight[level].push_back(w);
      }
    }
  }
};

const TanhSinhTables& tanh_sinh_tables() {
  static const TanhSinhTables tables;
  return tables;
}

// Integrates g over [a, b] with progressive tanh-sinh quadrature, where
// g(t) = exp(logf(t) - shift) is smooth and bounded by ~1. Returns the
// integral (linear scale; the caller folds `shift` back in).
template <typename LogF>
double tanh_sinh_integrate(const LogF& logf, double a, double b, double shift,
                           double rel_tol) {
  if (!(b > a)) return 0.0;
  const TanhSinhTables& tab = tanh_sinh_tables();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto eval = [&](double xi) {
    const double arg = logf(mid + half * xi) - shift;
    return (arg < -745.0) ? 0.0 : std::exp(arg);
  };

  double h = TanhSinhTables::kH0;
  // level 0: u = 0 plus the tabulated positive nodes (mirrored)
  double sum = std::numbers::pi / 2.0 * eval(0.0);
  for (std::size_t i = 0; i < tab.abscissa[0].size(); ++i) {
    const double x = tab.abscissa[0][i];
    const double w = tab.weight[0][i];
    sum += w * (eval(x) + eval(-x));
  }
  double integral = h * sum;
  for (int level = 1; level <= TanhSinhTables::kMaxLevel; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (std::size_t i = 0; i < tab.abscissa[level].size(); ++i) {
      const double x = tab.abscissa[level][i];
      const double w = tab.weight[level][i];
      add += w * (eval(x) + eval(-x));
    }
    const double refined = 0.5 * integral + h * add;
    const double change = std::abs(refined - integral);
    integral = refined;
    if (level >= 3 && change <= rel_tol * std::abs(integral)) break;
  }
  return half * integral;
}

// Log-scale quadrature of the integral representation. Valid on the whole
// domain; used directly for moderate x and as the reference branch.
double log_bessel_k_quadrature(double nu, double x) {
  const BesselKIntegrand f{x, nu};
  const double tstar = integrand_peak(f);
  const double peak = f.value(tstar);
  const double drop = 70.0;  // integrand below exp(-70) is discarded

  // right cut: first try the Gaussian width from the curvature, then expand
  double sech = 1.0 / std::cosh(nu * tstar);
  double curv = -x * std::cosh(tstar) + nu * nu * sech * sech;
  double w0 = (curv < -1e-8) ? std::sqrt(2.0 * drop / -curv) : 1.0;
  double thi = tstar + w0;
  for (int i = 0; i < 200 && f.value(thi) - peak > -drop; ++i) thi += w0;
  {  // sharpen by bisection
    double lo = tstar, hi = thi;
    for (int i = 0; i < 40; ++i) {
      double mid = 0.5 * (lo + hi);
      if (f.value(mid) - peak > -drop) lo = mid; else hi = mid;
    }
    thi = hi;
  }

  // left cut: 0 unless the integrand already dropped below the threshold there
  double tlo = 0.0;
  if (tstar > 0.0 && f.value(0.0) - peak < -drop) {
    double lo = 0.0, hi = tstar;
    for (int i = 0; i < 40; ++i) {
      double mid = 0.5 * (lo + hi);
      if (f.value(mid) - peak < -drop) lo = mid; else hi = mid;
    }
    tlo = lo;
  }

  auto logf = [&](double t) { return f.value(t); };
  const double rel_tol = 1e-13;
  double integral = tanh_sinh_integrate(logf, tlo, tstar, peak, rel_tol) +
                    tanh_sinh_integrate(logf, tstar, thi, peak, rel_tol);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw std::runtime_error("log_bessel_k: quadrature failed");
  }
  return peak + std::log(integral);
}

// Large-argument expansion K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum_k a_k with
// a_0 = 1, a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8 x k). The remainder is
// bounded by the first omitted term once k >= nu - 1/2, so the sum
// self-certifies: accept only if a term falls below 1e-12 * |sum| before the
// terms start growing.
bool log_bessel_k_asymptotic(double nu, double x, double* out) {
  if (x < 6.0) return false;
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  double prev_mag = kInf;
  for (int k = 1; k <= 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * x * k);
    const double mag = std::abs(term);
    if (mag > prev_mag && k > nu - 0.5) return false;  // divergence reached first
    sum += term;
    if (mag <= 1e-12 * std::abs(sum)) {
      if (!(sum > 0.0)) return false;
      *out = 0.5 * std::log(std::numbers::pi / (2.0 * x)) - x + std::log(sum);
      return true;
    }
    prev_mag = mag;
  }
  return false;
}

void check_bessel_args(double order, double x) {
  if (!std::isfinite(order) || !std::isfinite(x)) {
    throw std::domain_error("log_bessel_k: non-finite argument");
  }
  if (x <= 0.0) {
    throw std::domain_error("log_bessel_k: requires x > 0");
  }
}

}  // namespace

double log_bessel_k(double order, double x) {
  check_bessel_args(order, x);
  const double nu = std::abs(order);  // K_{-nu} = K_nu
  double result;
  if (log_bessel_k_asymptotic(nu, x, &result)) return result;
  return log_bessel_k_quadrature(nu, x);
}

double dlog_bessel_k_dorder(double order, double x) {
  check_bessel_args(order, x);
  // Richardson-extrapolated central differences on the quadrature branch
  // (single-branch evaluation keeps the difference free of branch seams).
  const double h0 = 1e-4 * std::max(1.0, std::abs(order));
  auto central = [&](double h) {
    const double fp = log_bessel_k_quadrature(std::abs(order + h), x);
    const double fm = log_bessel_k_quadrature(std::abs(order - h), x);
    return (fp - fm) / (2.0 * h);
  };
  const double d0 = central(h0);
  const double d1 = central(0.5 * h0);
  const double d2 = central(0.25 * h0);
  const double r0 = (4.0 * d1 - d0) / 3.0;
  const double r1 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

GigMoments gig_moments(const GigParams& params) {
  if (!std::isfinite(params.p) || !std::isfinite(params.a) ||
      !std::isfinite(params.b) || params.a <= 0.0 || params.b <= 0.0) {
    throw std::domain_error("gig_moments: requires finite p and a > 0, b > 0");
  }
  const double eta = std::sqrt(params.a) * std::sqrt(params.b);
  const double lk = log_bessel_k(params.p, eta);
  const double lk_up = log_bessel_k(params.p + 1.0, eta);
  const double lk_dn = log_bessel_k(params.p - 1.0, eta);
  const double half_log_ba = 0.5 * (std::log(params.b) - std::log(params.a));
  GigMoments m;
  m.mean_alpha = std::exp(half_log_ba + lk_up - lk);
  m.mean_inv_alpha = std::exp(-half_log_ba + lk_dn - lk);
  m.mean_log_alpha = half_log_ba + dlog_bessel_k_dorder(params.p, eta);
  if (!std::isfinite(m.mean_alpha) || !std::isfinite(m.mean_inv_alpha) ||
      !std::isfinite(m.mean_log_alpha)) {
    throw std::runtime_error("gig_moments: Bessel evaluation failed");
  }
  return m;
}

double variance_gamma_logpdf(double w, double shape_a, double scale_b) {
  if (!std::isfinite(w) || !(shape_a > 0.0) || !(scale_b > 0.0)) {
    throw std::domain_error("variance_gamma_logpdf: requires a > 0, b > 0 and finite w");
  }
  if (w == 0.0) {
    if (shape_a <= 0.5) return kInf;  // Bessel singularity dominates
    // limit E[sqrt(alpha / 2 pi)] under InverseGamma(a, b)
    return -0.5 * kLogTwoPi + 0.5 * std::log(scale_b) +
           std::lgamma(shape_a - 0.5) - std::lgamma(shape_a);
  }
  const double nu = 0.5 - shape_a;
  const double z = std::sqrt(2.0 * scale_b) * std::abs(w);
  return kLn2 + shape_a * std::log(scale_b) - 0.5 * kLogTwoPi -
         std::lgamma(shape_a) - nu * (std::log(std::abs(w)) - 0.5 * std::log(2.0 * scale_b)) +
         log_bessel_k(nu, z);
}

double student_marginal_logpdf(double w, double shape_a, double rate_b) {
  if (!std::isfinite(w) || !(shape_a > 0.0) || !(rate_b > 0.0)) {
    throw std::domain_error("student_marginal_logpdf: requires a > 0, b > 0 and finite w");
  }
  return std::lgamma(shape_a + 0.5) - std::lgamma(shape_a) +
         shape_a * std::log(rate_b) - 0.5 * kLogTwoPi -
         (shape_a + 0.5) * std::log(rate_b + 0.5 * w * w);
}

double log_binomial_real(int total, double df) {
  if (total <= 0) {
    throw std::domain_error("log_binomial_real: total must be positive");
  }
  if (!(df >= 0.0) || !(df <= double(total))) {
    throw std::domain_error("log_binomial_real: df outside [0, total]");
  }
  return std::lgamma(double(total) + 1.0) - std::lgamma(df + 1.0) -
         std::lgamma(double(total) - df + 1.0);
}

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: requires x > 0");
  }
  double shift = 0.0;
  while (x < 6.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // asymptotic series with Bernoulli coefficients
  double series = std::log(x) - 0.5 * inv -
                  inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                          inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return shift + series;
}

}  // namespace sparsekern
