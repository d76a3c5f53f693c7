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

#include "risdl/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "risdl/errors.hpp"
#include "risdl/channel.hpp"
#include "risdl/quadrature.hpp"

namespace risdl::analytics {

namespace {

constexpr double kQuadTol = 1e-9;
constexpr int kQuadMaxSubdivisions = 10000;
constexpr double kTailMass = 1e-12;

void require_k(std::int64_t k, std::int64_t min, const char* who) {
    if (k < min) {
        throw DomainError(std::string(who) + ": K must be >= " + std::to_string(min) +
                          ", got " + std::to_string(k));
    }
}

void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be nonnegative and finite");
    }
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

// Smallest x in [law.lower, inf) with F(x) >= y, by bracket expansion and
// bisection down to a relative width of a few ulps.
double quantile(const Distribution& law, double y) {
    double lo = law.lower;
    double hi = std::max(law.scale, law.lower + law.scale);
    if (!(hi > lo)) hi = lo + 1.0;
    int expansions = 0;
    while (law.cdf(hi) < y) {
        lo = hi;
        hi = law.lower + 2.0 * (hi - law.lower);
        if (++expansions > 2000 || !std::isfinite(hi)) {
            throw SearchFailureError("quantile: could not bracket probability " +
                                     std::to_string(y));
        }
    }
    for (int it = 0; it < 1000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (law.cdf(mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

XMoments x_moments(double sigma_h, double sigma_f, double sigma_g, std::int64_t q) {
    require_nonneg(sigma_h, "sigma_h");
    require_nonneg(sigma_f, "sigma_f");
    require_nonneg(sigma_g, "sigma_g");
    if (q < 1) throw DomainError("x_moments: Q must be >= 1");
    const double qd = static_cast<double>(q);
    const double s = sigma_f * sigma_g;  // reflected amplitude scale
    const double h = sigma_h;
    const double r1 = specfun::gamma_ratio(q, 1);  // Gamma(Q + 1/2) / Gamma(Q)
    const double r3 = specfun::gamma_ratio(q, 3);  // Gamma(Q + 3/2) / Gamma(Q)
    const double sqrt_q_pi = std::sqrt(qd * std::numbers::pi);

    // Written in h^2 so that s = 0 gives m2 = 2 m1^2 bit for bit.
    const double hh = h * h;
    XMoments m;
    m.m1 = hh + s * s * qd * qd + s * h * sqrt_q_pi * r1;
    m.m2 = 2.0 * hh * hh + 3.0 * s * h * hh * sqrt_q_pi * r1 + 6.0 * s * s * hh * qd * qd +
           2.0 * s * s * s * h * qd * sqrt_q_pi * r3 + s * s * s * s * qd * qd * qd * (qd + 1.0);
    return m;
}

GammaApproxParams moment_match(const XMoments& m) {
    const double var = m.m2 - m.m1 * m.m1;
    if (!(m.m1 > 0.0) || !(var > 0.0)) {
        throw NumericalDegeneracyError("moment_match: requires m1 > 0 and m2 > m1^2");
    }
    return {m.m1 * m.m1 / (2.0 * var), m.m1 / 2.0};
}

GammaApproxParams moment_match(double sigma_h, double sigma_f, double sigma_g, std::int64_t q) {
    return moment_match(x_moments(sigma_h, sigma_f, sigma_g, q));
}

double approx2_pdf(double alpha, const GammaApproxParams& p) {
    if (alpha < 0.0) return 0.0;
    const double theta = p.scale();
    return specfun::gamma_density(alpha / theta, p.shape()) / theta;
}

double approx2_cdf(double alpha, const GammaApproxParams& p) {
    if (alpha <= 0.0) return 0.0;
    return specfun::reg_lower_inc_gamma(alpha / p.scale(), p.shape());
}

HardeningApproxParams hardening_params(double sigma_h, double sigma_f, double sigma_g,
                                       std::int64_t q) {
    require_nonneg(sigma_h, "sigma_h");
    return {nakagami_refl_stats(q, sigma_f, sigma_g).mean, sigma_h * sigma_h};
}

double approx1_cdf(double alpha, const HardeningApproxParams& p) {
    if (!(alpha > p.mean_z2 * p.mean_z2)) return 0.0;
    const double gap = std::sqrt(alpha) - p.mean_z2;
    return -std::expm1(-gap * gap / p.sigma_h_sq);
}

double approx1_pdf(double alpha, const HardeningApproxParams& p) {
    if (!(alpha > p.mean_z2 * p.mean_z2)) return 0.0;
    const double root = std::sqrt(alpha);
    const double gap = root - p.mean_z2;
    return gap / (p.sigma_h_sq * root) * std::exp(-gap * gap / p.sigma_h_sq);
}

Distribution exponential_law(double mean) {
    if (!(mean > 0.0)) throw DomainError("exponential_law: mean must be positive");
    return {[mean](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x / mean); },
            [mean](double x) { return x < 0.0 ? 0.0 : std::exp(-x / mean) / mean; }, mean, 0.0};
}

Distribution approx1_law(const HardeningApproxParams& p) {
    if (!(p.sigma_h_sq > 0.0)) throw DomainError("approx1_law: sigma_h^2 must be positive");
    const double edge = p.mean_z2 * p.mean_z2;
    const double scale = std::max(p.sigma_h_sq, edge);
    return {[p](double x) { return approx1_cdf(x, p); },
            [p](double x) { return approx1_pdf(x, p); }, scale, edge};
}

Distribution approx2_law(const GammaApproxParams& p) {
    if (!(p.m_hat > 0.0) || !(p.omega_hat > 0.0)) {
        throw DomainError("approx2_law: m_hat and omega_hat must be positive");
    }
    return {[p](double x) { return approx2_cdf(x, p); },
            [p](double x) { return approx2_pdf(x, p); }, 2.0 * p.omega_hat, 0.0};
}

GumbelParams gumbel_constants_numeric(const Distribution& law, std::int64_t k) {
    require_k(k, 2, "gumbel_constants_numeric");
    const double target = 1.0 - 1.0 / static_cast<double>(k);
    const double b = quantile(law, target);
    const double density = law.pdf(b);
    if (!(density > 0.0)) throw SearchFailureError("gumbel_constants_numeric: zero density at b_K");
    return {1.0 / (static_cast<double>(k) * density), b};
}

GumbelParams gumbel_constants_approx1(std::int64_t k, std::int64_t q, double sigma_h,
                                      double sigma_f, double sigma_g) {
    require_k(k, 2, "gumbel_constants_approx1");
    if (q < 0) throw DomainError("gumbel_constants_approx1: Q must be >= 0");
    const double root_log_k = std::sqrt(std::log(static_cast<double>(k)));
    const double reflected = sigma_f * sigma_g * static_cast<double>(q);
    const double amp = reflected + sigma_h * root_log_k;
    return {sigma_h * sigma_h + reflected * sigma_h / root_log_k, amp * amp};
}

GumbelParams gumbel_constants_approx2(std::int64_t k, const GammaApproxParams& p) {
    require_k(k, 2, "gumbel_constants_approx2");
    const double kd = static_cast<double>(k);
    const double shape = p.shape();
    const double y = specfun::inv_reg_lower_inc_gamma(1.0 - 1.0 / kd, shape);
    const double log_a = std::log(p.scale()) + specfun::log_gamma(shape) - std::log(kd) -
                         (shape - 1.0) * std::log(y) + y;
    return {std::exp(log_a), p.scale() * y};
}

GumbelParams gumbel_constants_no_ris(std::int64_t k, double sigma_h_sq) {
    require_k(k, 1, "gumbel_constants_no_ris");
    return {sigma_h_sq, sigma_h_sq * std::log(static_cast<double>(k))};
}

double gumbel_cdf(double alpha, const GumbelParams& g) {
    return std::exp(-std::exp(-(alpha - g.b_k) / g.a_k));
}

double gumbel_pdf(double alpha, const GumbelParams& g) {
    const double t = (alpha - g.b_k) / g.a_k;
    return std::exp(-t - std::exp(-t)) / g.a_k;
}

double ergodic_capacity_gumbel(const GumbelParams& g, double p_tx) {
    if (!(g.a_k > 0.0)) throw DomainError("ergodic_capacity_gumbel: a_K must be positive");
    if (!(p_tx > 0.0)) throw DomainError("ergodic_capacity_gumbel: p_tx must be positive");
    // Standardized variable t = (alpha - b) / a.
    const double t_lo = std::max(-g.b_k / g.a_k, -20.0);
    const double t_hi = 50.0;
    if (!(t_hi > t_lo)) return 0.0;
    auto integrand = [&](double t) {
        const double alpha = std::max(0.0, g.b_k + g.a_k * t);
        return log2_1p(p_tx * alpha) * std::exp(-t - std::exp(-t));
    };
    return integrate_adaptive(integrand, t_lo, t_hi, kQuadTol, kQuadMaxSubdivisions).value;
}

double ergodic_capacity_finite_k(const Distribution& law, std::int64_t k, double p_tx) {
    require_k(k, 1, "ergodic_capacity_finite_k");
    if (!(p_tx > 0.0)) throw DomainError("ergodic_capacity_finite_k: p_tx must be positive");
    const double lo = quantile(law, kTailMass);
    const double hi = quantile(law, 1.0 - kTailMass);
    const double kd = static_cast<double>(k);
    auto integrand = [&](double alpha) {
        const double f = law.pdf(alpha);
        if (f == 0.0) return 0.0;
        const double lead = k == 1 ? 1.0 : std::pow(law.cdf(alpha), kd - 1.0);
        return log2_1p(p_tx * alpha) * kd * f * lead;
    };
    return integrate_adaptive(integrand, lo, hi, kQuadTol, kQuadMaxSubdivisions).value;
}

double avg_receive_snr(const GumbelParams& g, double p_tx) {
    return p_tx * (g.b_k + kEulerMascheroni * g.a_k);
}

SnrDecomposition hardening_snr_decomposition(std::int64_t k, std::int64_t q, double sigma_h,
                                             double sigma_f, double sigma_g, double p_tx) {
    require_k(k, 2, "hardening_snr_decomposition");
    if (q < 0) throw DomainError("hardening_snr_decomposition: Q must be >= 0");
    const double log_k = std::log(static_cast<double>(k));
    const double qd = static_cast<double>(q);
    const double s = sigma_f * sigma_g;
    SnrDecomposition d;
    d.no_ris_part = p_tx * sigma_h * sigma_h * (kEulerMascheroni + log_k);
    d.q_squared_part = p_tx * s * s * qd * qd;
    d.cross_part = p_tx * s * sigma_h * qd * (2.0 * log_k + kEulerMascheroni) / std::sqrt(log_k);
    d.total = d.no_ris_part + d.q_squared_part + d.cross_part;
    return d;
}

double q_linear_regime_limit(double sigma_f, double sigma_g, double p_tx) {
    return p_tx * sigma_f * sigma_f * sigma_g * sigma_g;
}

double sqrt_log_regime_limit(double chi, double sigma_h, double sigma_f, double sigma_g,
                             double p_tx) {
    const double s = sigma_f * sigma_g * chi;
    return p_tx * ((s + sigma_h) * (s + sigma_h) + kEulerMascheroni * s * sigma_h);
}

}  // namespace risdl::analytics
