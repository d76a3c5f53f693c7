// SPDX-License-Identifier: Apache-2.0
//
// risdl: capacity analysis of RIS-assisted opportunistic downlinks
// Copyright (C) 2026 The risdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Closed-form statistics of the optimized composite channel power
// X = (|h| + sigma_g sqrt(Q) ||f||)^2 and of its maximum over K users.
//
// Two surrogate laws for X are provided:
//   * hardening:  the reflected amplitude is replaced by its mean, so X is a
//     shifted-Rayleigh square;
//   * gamma:      X is matched in its first two moments by a gamma law with
//     shape 2 m_hat and scale omega_hat / m_hat.
// The maximum of K draws is then approximated by a Gumbel law whose
// location/scale follow from the surrogate's quantile at 1 - 1/K.

#include <cstdint>
#include <functional>

#include "risdl/specfun.hpp"

namespace risdl::analytics {

inline constexpr double kEulerMascheroni = specfun::kEulerGamma;

struct GumbelParams {
    double a_k = 1.0;  // scale
    double b_k = 0.0;  // location
};

struct GammaApproxParams {
    double m_hat = 0.5;
    double omega_hat = 0.5;

    double shape() const { return 2.0 * m_hat; }
    double scale() const { return omega_hat / m_hat; }
};

struct HardeningApproxParams {
    double mean_z2 = 0.0;  // E[sigma_g sqrt(Q) ||f||]
    double sigma_h_sq = 1.0;
};

struct XMoments {
    double m1 = 0.0;  // E[X]
    double m2 = 0.0;  // E[X^2]
};

/// A nonnegative law given by its cdf and pdf. `scale` is a typical
/// magnitude used to seed root brackets and `lower` the left end of the
/// support.
struct Distribution {
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    double scale = 1.0;
    double lower = 0.0;
};

// --- moments and surrogate laws -------------------------------------------

/// Exact E[X] and E[X^2]. sigma_f == 0 or sigma_h == 0 reduce to the
/// single-path cases.
XMoments x_moments(double sigma_h, double sigma_f, double sigma_g, std::int64_t q);

/// omega_hat = m1 / 2, m_hat = m1^2 / (2 (m2 - m1^2)).
GammaApproxParams moment_match(const XMoments& m);
GammaApproxParams moment_match(double sigma_h, double sigma_f, double sigma_g, std::int64_t q);

double approx2_pdf(double alpha, const GammaApproxParams& p);
double approx2_cdf(double alpha, const GammaApproxParams& p);

/// Uses the exact Nakagami mean of the reflected amplitude.
HardeningApproxParams hardening_params(double sigma_h, double sigma_f, double sigma_g,
                                       std::int64_t q);

/// 1 - exp(-(sqrt(alpha) - E[Z2])^2 / sigma_h^2) above alpha = E[Z2]^2, zero
/// below. The support edge is the squared mean because alpha = z^2.
double approx1_cdf(double alpha, const HardeningApproxParams& p);
double approx1_pdf(double alpha, const HardeningApproxParams& p);

Distribution exponential_law(double mean);
Distribution approx1_law(const HardeningApproxParams& p);
Distribution approx2_law(const GammaApproxParams& p);

// --- Gumbel constants -----------------------------------------------------

/// b_K = F^{-1}(1 - 1/K) by bracketed bisection, a_K = 1 / (K f(b_K)).
GumbelParams gumbel_constants_numeric(const Distribution& law, std::int64_t k);

/// Large-Q closed form under channel hardening (Stirling mean sigma_f sigma_g Q):
///   b_K = (sigma_f sigma_g Q + sigma_h sqrt(ln K))^2
///   a_K = sigma_h^2 + sigma_f sigma_g sigma_h Q / sqrt(ln K)
/// Q == 0 gives the surface-free constants.
GumbelParams gumbel_constants_approx1(std::int64_t k, std::int64_t q, double sigma_h,
                                      double sigma_f, double sigma_g);

/// Closed form for the moment-matched gamma law, evaluated in the log domain.
GumbelParams gumbel_constants_approx2(std::int64_t k, const GammaApproxParams& p);

/// Exponential |h|^2 with mean sigma_h^2: (sigma_h^2, sigma_h^2 ln K).
GumbelParams gumbel_constants_no_ris(std::int64_t k, double sigma_h_sq);

double gumbel_cdf(double alpha, const GumbelParams& g);
double gumbel_pdf(double alpha, const GumbelParams& g);

// --- capacity and SNR -----------------------------------------------------

/// E[log2(1 + p_tx alpha)] with alpha Gumbel-distributed, integrated over
/// [max(0, b - 20a), b + 50a].
double ergodic_capacity_gumbel(const GumbelParams& g, double p_tx);

/// E[log2(1 + p_tx max_k X_k)] for K i.i.d. draws of `law`, integrated
/// over the law's [1e-12, 1 - 1e-12] quantile range.
double ergodic_capacity_finite_k(const Distribution& law, std::int64_t k, double p_tx);

/// p_tx (b_K + C a_K), the mean of the Gumbel law scaled by the power.
double avg_receive_snr(const GumbelParams& g, double p_tx);

struct SnrDecomposition {
    double total = 0.0;
    double no_ris_part = 0.0;
    double q_squared_part = 0.0;
    double cross_part = 0.0;
};

SnrDecomposition hardening_snr_decomposition(std::int64_t k, std::int64_t q, double sigma_h,
                                             double sigma_f, double sigma_g, double p_tx);

/// Limit of avg SNR / Q^2 when Q grows linearly with K.
double q_linear_regime_limit(double sigma_f, double sigma_g, double p_tx);

/// Limit of avg SNR / ln K when Q = chi sqrt(ln K).
double sqrt_log_regime_limit(double chi, double sigma_h, double sigma_f, double sigma_g,
                             double p_tx);

}  // namespace risdl::analytics
