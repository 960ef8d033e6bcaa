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

// Test-only reference implementations. Everything here is deliberately
// independent of the library code paths: adaptive Simpson instead of
// tanh-sinh, Ridders differentiation instead of fixed-step Richardson, a
// local Lanczos log-gamma instead of std::lgamma. Long double throughout.

#ifndef SPARSEKERN_TESTS_ORACLES_HPP
#define SPARSEKERN_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace oracles {

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;
inline constexpr long double kLn2 = 0.69314718055994530941723212145817657L;

// ---------------------------------------------------------------------------
// adaptive Simpson
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
long double simpson_step(const F& f, long double a, long double b,
                         long double fa, long double fm, long double fb) {
  return (b - a) / 6.0L * (fa + 4.0L * fm + fb);
}

template <typename F>
long double adapt(const F& f, long double a, long double b, long double fa,
                  long double fm, long double fb, long double whole,
                  long double tol, int depth) {
  const long double m = 0.5L * (a + b);
  const long double lm = 0.5L * (a + m);
  const long double rm = 0.5L * (m + b);
  const long double flm = f(lm);
  const long double frm = f(rm);
  const long double left = simpson_step(f, a, m, fa, flm, fm);
  const long double right = simpson_step(f, m, b, fm, frm, fb);
  const long double delta = left + right - whole;
  if (depth <= 0 || fabsl(delta) <= 15.0L * tol) {
    return left + right + delta / 15.0L;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}

}  // namespace detail

template <typename F>
long double adaptive_simpson(const F& f, long double a, long double b,
                             long double tol, int depth = 48) {
  const long double m = 0.5L * (a + b);
  const long double fa = f(a), fm = f(m), fb = f(b);
  const long double whole = detail::simpson_step(f, a, b, fa, fm, fb);
  return detail::adapt(f, a, b, fa, fm, fb, whole, tol, depth);
}

// ---------------------------------------------------------------------------
// log-scale integration of exp(logf) over [lo, hi]
// ---------------------------------------------------------------------------

// Scans for the peak on a dense grid, then integrates exp(logf - peak) with
// adaptive Simpson split at the peak. Returns ln of the integral.
template <typename LogF>
long double log_integral(const LogF& logf, long double lo, long double hi,
                         long double tol = 1e-16L) {
  const int kScan = 20000;
  long double speak = lo, fpeak = -std::numeric_limits<long double>::infinity();
  for (int i = 0; i <= kScan; ++i) {
    const long double s = lo + (hi - lo) * i / kScan;
    const long double v = logf(s);
    if (v > fpeak) { fpeak = v; speak = s; }
  }
  auto g = [&](long double s) {
    const long double v = logf(s) - fpeak;
    return (v < -11000.0L) ? 0.0L : expl(v);
  };
  const long double scale = fabsl(hi - lo);
  long double integral =
      adaptive_simpson(g, lo, speak, tol * scale) +
      adaptive_simpson(g, speak, hi, tol * scale);
  return fpeak + logl(integral);
}

// ---------------------------------------------------------------------------
// ln K_nu(x) from the integral representation
// ---------------------------------------------------------------------------

inline long double log_cosh(long double u) {
  u = fabsl(u);
  return u + log1pl(expl(-2.0L * u)) - kLn2;
}

inline long double log_bessel_k(long double nu, long double x) {
  nu = fabsl(nu);
  auto logf = [&](long double t) { return -x * coshl(t) + log_cosh(nu * t); };
  // expand the upper limit until the integrand is 120 log-units below the
  // running maximum
  long double t_hi = 0.5L, running_max = logf(0.0L);
  for (int i = 0; i < 10000; ++i) {
    const long double v = logf(t_hi);
    if (v > running_max) running_max = v;
    if (v < running_max - 120.0L) break;
    t_hi += 0.25L;
  }
  return log_integral(logf, 0.0L, t_hi);
}

// ---------------------------------------------------------------------------
// Ridders derivative of ln K w.r.t. the order
// ---------------------------------------------------------------------------

inline long double dlog_bessel_k_dorder(long double nu, long double x) {
  const int kTab = 8;
  long double tab[kTab][kTab];
  long double h = 0.05L * std::max<long double>(1.0L, fabsl(nu));
  auto central = [&](long double hh) {
    return (log_bessel_k(nu + hh, x) - log_bessel_k(nu - hh, x)) / (2.0L * hh);
  };
  tab[0][0] = central(h);
  long double best = tab[0][0];
  long double err = std::numeric_limits<long double>::max();
  const long double shrink = 1.6L;
  for (int i = 1; i < kTab; ++i) {
    h /= shrink;
    tab[0][i] = central(h);
    long double fac = shrink * shrink;
    for (int j = 1; j <= i; ++j) {
      tab[j][i] = (tab[j - 1][i] * fac - tab[j - 1][i - 1]) / (fac - 1.0L);
      fac *= shrink * shrink;
      const long double e = std::max(fabsl(tab[j][i] - tab[j - 1][i]),
                                     fabsl(tab[j][i] - tab[j - 1][i - 1]));
      if (e <= err) { err = e; best = tab[j][i]; }
    }
    if (fabsl(tab[i][i] - tab[i - 1][i - 1]) >= 2.0L * err) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// GIG moments by quadrature (alpha = e^s substitution)
// ---------------------------------------------------------------------------

struct GigOracle {
  long double log_normalizer;  // ln of int alpha^{p-1} exp(-(a alpha + b/alpha)/2)
  long double mean_alpha;
  long double mean_inv_alpha;
  long double mean_log_alpha;
};

inline GigOracle gig_moments(long double p, long double a, long double b) {
  auto base = [&](long double q) {
    return [q, a, b](long double s) {
      return q * s - 0.5L * (a * expl(s) + b * expl(-s));
    };
  };
  // mass is centered at the stationary point of the q = p integrand; widen
  // until both tails are far below the peak
  auto g = base(p);
  long double u = (p + sqrtl(p * p + a * b)) / a;
  long double center = logl(u);
  long double lo = center, hi = center;
  const long double peak = g(center);
  while (g(lo) > peak - 140.0L) lo -= 0.5L;
  while (g(hi) > peak - 140.0L) hi += 0.5L;
  // widen once more so the shifted exponents q = p +- 1 stay covered
  lo -= 60.0L; hi += 60.0L;

  GigOracle out;
  out.log_normalizer = log_integral(g, lo, hi);
  out.mean_alpha = expl(log_integral(base(p + 1.0L), lo, hi) - out.log_normalizer);
  out.mean_inv_alpha = expl(log_integral(base(p - 1.0L), lo, hi) - out.log_normalizer);
  // signed integrand: integrate s * exp(g - peak) directly
  const long double mpeak = out.log_normalizer;
  auto signed_f = [&](long double s) {
    const long double v = g(s) - mpeak;
    return (v < -11000.0L) ? 0.0L : s * expl(v);
  };
  long double num = adaptive_simpson(signed_f, lo, center, 1e-18L * (hi - lo)) +
                    adaptive_simpson(signed_f, center, hi, 1e-18L * (hi - lo));
  out.mean_log_alpha = num;
  return out;
}

// ---------------------------------------------------------------------------
// scale-mixture marginals of the weight prior
// ---------------------------------------------------------------------------

// ln of int N(w | 0, 1/alpha) InverseGamma(alpha | a, b) dalpha
inline long double variance_gamma_mixture_logpdf(long double w, long double a,
                                                 long double b) {
  auto logf = [&](long double s) {
    return (0.5L - a) * s - 0.5L * logl(2.0L * kPi) + a * logl(b) -
           lgammal(a) - 0.5L * w * w * expl(s) - b * expl(-s);
  };
  // peak of the exponent in s; bracket generously
  long double lo = -40.0L, hi = 40.0L;
  while (logf(lo) > logf(lo + 1.0L)) lo -= 10.0L;
  while (logf(hi) > logf(hi - 1.0L)) hi += 10.0L;
  return log_integral(logf, lo, hi);
}

// ln of int N(w | 0, 1/alpha) Gamma(alpha | a, b) dalpha
inline long double student_mixture_logpdf(long double w, long double a,
                                          long double b) {
  auto logf = [&](long double s) {
    return (a + 0.5L) * s - 0.5L * logl(2.0L * kPi) + a * logl(b) -
           lgammal(a) - (0.5L * w * w + b) * expl(s);
  };
  long double lo = -60.0L, hi = 60.0L;
  while (logf(lo) > logf(lo + 1.0L)) lo -= 10.0L;
  while (logf(hi) > logf(hi - 1.0L)) hi += 10.0L;
  return log_integral(logf, lo, hi);
}

// ---------------------------------------------------------------------------
// Lanczos log-gamma (independent of std::lgamma)
// ---------------------------------------------------------------------------

inline long double lanczos_lgamma(long double x) {
  static const long double kCoef[9] = {
      0.99999999999980993L,  676.5203681218851L,   -1259.1392167224028L,
      771.32342877765313L,   -176.61502916214059L, 12.507343278686905L,
      -0.13857109526572012L, 9.9843695780195716e-6L, 1.5056327351493116e-7L};
  if (x < 0.5L) {  // reflection
    return logl(kPi / sinl(kPi * x)) - lanczos_lgamma(1.0L - x);
  }
  x -= 1.0L;
  long double acc = kCoef[0];
  for (int i = 1; i < 9; ++i) acc += kCoef[i] / (x + i);
  const long double t = x + 7.5L;
  return 0.5L * logl(2.0L * kPi) + (x + 0.5L) * logl(t) - t + logl(acc);
}

}  // namespace oracles

#endif  // SPARSEKERN_TESTS_ORACLES_HPP
