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

#ifndef SPARSEKERN_SPECIAL_FUNCTIONS_HPP
#define SPARSEKERN_SPECIAL_FUNCTIONS_HPP

namespace sparsekern {

/// Parameters of a generalized inverse Gaussian distribution with density
/// proportional to alpha^{p-1} exp(-(a*alpha + b/alpha)/2) on alpha > 0.
/// Requires a > 0 and b > 0 (both strictly); the normalizer is
/// (a/b)^{p/2} / (2 K_p(sqrt(a b))).
struct GigParams {
  double p;  ///< real order
  double a;  ///< coefficient of alpha in the exponent
  double b;  ///< coefficient of 1/alpha in the exponent
};

struct GigMoments {
  double mean_alpha;      ///< E[alpha]
  double mean_inv_alpha;  ///< E[1/alpha]
  double mean_log_alpha;  ///< E[ln alpha]
};

/// ln K_{|order|}(x) for real order and x > 0, computed so that the result
/// stays finite for x in [1e-12, 1e6] and |order| <= 200. Uses the symmetry
/// K_{-nu} = K_nu. Throws std::domain_error on x <= 0 or non-finite input.
double log_bessel_k(double order, double x);

/// d/dnu ln K_nu(x) evaluated at nu = order. Odd in the order; exactly zero
/// at order 0. Same domain requirements as log_bessel_k.
double dlog_bessel_k_dorder(double order, double x);

/// First moment, inverse moment and log moment of a GIG distribution.
/// All Bessel ratios are evaluated in the log domain; E[1/alpha] uses the
/// recurrence-stabilized form sqrt(a/b) K_{p-1}/K_p, which is algebraically
/// identical to sqrt(a/b) K_{p+1}/K_p - 2p/b but immune to the cancellation
/// that form suffers when p is close to 1/2 and b is large.
GigMoments gig_moments(const GigParams& params);

/// Log density at w of the variance gamma distribution obtained by mixing
/// N(w | 0, 1/alpha) over alpha ~ InverseGamma(shape_a, scale_b).
/// At w = 0 the density diverges for shape_a <= 1/2; +infinity is returned
/// rather than throwing.
double variance_gamma_logpdf(double w, double shape_a, double scale_b);

/// Log density at w of the scaled Student-t marginal obtained by mixing
/// N(w | 0, 1/alpha) over alpha ~ Gamma(shape_a, rate_b).
double student_marginal_logpdf(double w, double shape_a, double rate_b);

/// ln C(total, df) for real-valued df in [0, total], via log-gamma:
/// lgamma(total+1) - lgamma(df+1) - lgamma(total-df+1).
double log_binomial_real(int total, double df);

/// Digamma function for x > 0.
double digamma(double x);

}  // namespace sparsekern

#endif  // SPARSEKERN_SPECIAL_FUNCTIONS_HPP
