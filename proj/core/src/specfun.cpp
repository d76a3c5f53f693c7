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

#include "risdl/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "risdl/errors.hpp"

namespace risdl::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

// Stirling remainder ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], x >= 8.
double stirling_remainder(double x) {
    const double r = 1.0 / x;
    const double r2 = r * r;
    return r * (1.0 / 12.0 +
           r2 * (-1.0 / 360.0 +
           r2 * (1.0 / 1260.0 +
           r2 * (-1.0 / 1680.0 +
           r2 * (1.0 / 1188.0 +
           r2 * (-691.0 / 360360.0 +
           r2 * (1.0 / 156.0 +
           r2 * (-3617.0 / 122400.0))))))));
}

// zeta(k) - 1 for k = 2..kZetaTerms+1 by Euler-Maclaurin summation.
constexpr int kZetaTerms = 40;

std::array<double, kZetaTerms> make_zeta_minus_one() {
    constexpr int n_cut = 20;
    // B_{2j} / (2j)!
    constexpr std::array<double, 6> bern = {
        1.0 / 12.0,           // B2/2!
        -1.0 / 720.0,         // B4/4!
        1.0 / 30240.0,        // B6/6!
        -1.0 / 1209600.0,     // B8/8!
        1.0 / 47900160.0,     // B10/10!
        -691.0 / 1307674368000.0,  // B12/12!
    };
    std::array<double, kZetaTerms> out{};
    for (int i = 0; i < kZetaTerms; ++i) {
        const double s = i + 2.0;
        // Sum from the small end up so the dominant 2^-s term is added last.
        double tail = std::pow(n_cut, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n_cut, -s);
        double rising = s;
        double npow = std::pow(n_cut, -s - 1.0);
        for (std::size_t j = 0; j < bern.size(); ++j) {
            tail += bern[j] * rising * npow;
            rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
            npow /= static_cast<double>(n_cut) * n_cut;
        }
        double sum = tail;
        for (int n = n_cut - 1; n >= 2; --n) sum += std::pow(n, -s);
        out[i] = sum;
    }
    return out;
}

// ln Gamma(1 + z) for |z| <= 1/2:
//   -log1p(z) + z (1 - gamma) + sum_k (-1)^k (zeta(k) - 1) z^k / k
double log_gamma_1p(double z) {
    static const std::array<double, kZetaTerms> zm1 = make_zeta_minus_one();
    double series = 0.0;
    double pw = -z;
    for (int i = 0; i < kZetaTerms; ++i) {
        pw *= -z;  // (-z)^k
        const double term = zm1[i] * pw / (i + 2.0);
        series += term;
        if (std::abs(term) <= kEps * 1e-3 * std::abs(series)) break;
    }
    return -std::log1p(z) + z * (1.0 - kEulerGamma) + series;
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " +
                          std::to_string(x));
    }
}

// x^a e^{-x} / Gamma(a), with the large-a form evaluated around x = a.
double gamma_prefix(double x, double a) {
    if (x == 0.0) return 0.0;
    if (a < 10.0) {
        return std::exp(a * std::log(x) - x - log_gamma(a));
    }
    const double d = (x - a) / a;
    const double expo = a * (std::log1p(d) - d) + 0.5 * std::log(a / (2.0 * std::numbers::pi)) -
                        stirling_remainder(a);
    return std::exp(expo);
}

constexpr int kMaxSeriesTerms = 200000;

// sum_{n>=0} x^n / ((a+1)...(a+n)) / a, so P = prefix * series.
double lower_series(double x, double a) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) return sum;
    }
    throw IntegrationError("incomplete gamma series did not converge", std::abs(term));
}

// Continued fraction for Q = prefix * cf (modified Lentz).
double upper_fraction(double x, double a) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxSeriesTerms; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw IntegrationError("incomplete gamma continued fraction did not converge", 0.0);
}

struct PQ {
    double p;
    double q;
};

PQ incomplete_gamma_pair(double x, double a) {
    if (x == 0.0) return {0.0, 1.0};
    if (std::isinf(x)) return {1.0, 0.0};
    const double prefix = gamma_prefix(x, a);
    if (x < a + 1.0) {
        const double p = std::min(1.0, prefix * lower_series(x, a));
        return {p, 1.0 - p};
    }
    const double q = std::min(1.0, prefix * upper_fraction(x, a));
    return {1.0 - q, q};
}

void check_incomplete_args(double x, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("incomplete gamma: shape a must be positive, got " + std::to_string(a));
    }
    if (!(x >= 0.0)) {
        throw DomainError("incomplete gamma: x must be nonnegative, got " + std::to_string(x));
    }
}

// Acklam's rational approximation to the standard normal quantile.
double normal_quantile(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double initial_quantile_guess(double y, double a) {
    // Wilson-Hilferty: (X/a)^{1/3} is approximately normal.
    const double z = normal_quantile(y);
    const double s = 1.0 / (9.0 * a);
    const double cube = 1.0 - s + z * std::sqrt(s);
    double guess = a * cube * cube * cube;
    if (a >= 1.0 && guess > 0.0) return guess;
    // Small shape or far lower tail: P(x, a) ~ x^a / Gamma(a + 1).
    const double small = std::exp((std::log(y) + log_gamma(a + 1.0)) / a);
    if (!(guess > 0.0) || small < guess) guess = small;
    return guess;
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma argument");
    if (x == 1.0 || x == 2.0) return 0.0;
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    if (x < 1.5) return log_gamma_1p(x - 1.0);
    if (x < 2.5) {
        const double z = x - 2.0;
        return std::log1p(z) + log_gamma_1p(z);
    }
    if (x < 8.0) {
        // Downward recurrence onto [1.5, 2.5); every factor exceeds 1.
        double prod = 1.0;
        double y = x;
        while (y >= 2.5) {
            y -= 1.0;
            prod *= y;
        }
        return std::log(prod) + log_gamma(y);
    }
    return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + stirling_remainder(x);
}

double gamma_ratio(std::int64_t q, int half_steps) {
    if (q < 1) throw DomainError("gamma_ratio: q must be >= 1, got " + std::to_string(q));
    if (half_steps < 0) throw DomainError("gamma_ratio: half_steps must be >= 0");
    if (half_steps == 0) return 1.0;
    const double qd = static_cast<double>(q);
    const double delta = 0.5 * half_steps;
    if (qd < 8.0) return std::exp(log_gamma(qd + delta) - log_gamma(qd));
    // Difference of two Stirling expansions, arranged so no O(q ln q) terms cancel.
    const double log_ratio = (qd - 0.5) * std::log1p(delta / qd) + delta * std::log(qd + delta) -
                             delta + stirling_remainder(qd + delta) - stirling_remainder(qd);
    return std::exp(log_ratio);
}

double gamma_ratio_half(std::int64_t q) {
    if (q < 1) throw DomainError("gamma_ratio_half: Q must be >= 1, got " + std::to_string(q));
    return gamma_ratio(q, 1);
}

double gamma_ratio_half_stirling(std::int64_t q) {
    if (q < 1) throw DomainError("gamma_ratio_half_stirling: Q must be >= 1");
    return std::sqrt(static_cast<double>(q));
}

double reg_lower_inc_gamma(double x, double a) {
    check_incomplete_args(x, a);
    return incomplete_gamma_pair(x, a).p;
}

double reg_upper_inc_gamma(double x, double a) {
    check_incomplete_args(x, a);
    return incomplete_gamma_pair(x, a).q;
}

double gamma_density(double x, double a) {
    if (!(a > 0.0)) throw DomainError("gamma_density: shape must be positive");
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (a < 1.0) return std::numeric_limits<double>::infinity();
        return a == 1.0 ? 1.0 : 0.0;
    }
    if (std::isinf(x)) return 0.0;
    return gamma_prefix(x, a) / x;
}

double inv_reg_lower_inc_gamma(double y, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("inv_reg_lower_inc_gamma: shape must be positive");
    }
    if (y == 1.0) {
        throw DomainError("inv_reg_lower_inc_gamma: y = 1 has an unbounded quantile");
    }
    if (!(y >= 0.0 && y < 1.0)) {
        throw DomainError("inv_reg_lower_inc_gamma: y must lie in [0, 1), got " +
                          std::to_string(y));
    }
    if (y == 0.0) return 0.0;

    // Newton on log P - log y (or log(1 - y) - log Q in the upper half).
    // Both forms are increasing in x and stay well scaled deep in the tails.
    const bool upper = y > 0.5;
    const double log_target = upper ? std::log1p(-y) : std::log(y);
    struct Eval {
        double phi;
        double slope;
    };
    auto evaluate = [&](double x) -> Eval {
        const PQ pq = incomplete_gamma_pair(x, a);
        const double tail = upper ? pq.q : pq.p;
        if (tail <= 0.0) {
            const double inf = std::numeric_limits<double>::infinity();
            return {upper ? inf : -inf, 0.0};
        }
        const double phi = upper ? log_target - std::log(tail) : std::log(tail) - log_target;
        return {phi, gamma_density(x, a) / tail};
    };

    double x = initial_quantile_guess(y, a);
    if (!(x > 0.0) || !std::isfinite(x)) x = a;

    double lo = 0.0;
    double hi = std::max(x, a) * 2.0 + 1.0;
    while (evaluate(hi).phi < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) throw SearchFailureError("inv_reg_lower_inc_gamma: no upper bracket");
    }
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

    constexpr int kMaxIter = 100;
    for (int it = 0; it < kMaxIter; ++it) {
        const Eval e = evaluate(x);
        if (e.phi == 0.0) return x;
        if (e.phi < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        double next = e.slope > 0.0 ? x - e.phi / e.slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (step <= 4.0 * kEps * x) return x;
        if (hi - lo <= 4.0 * kEps * hi) return x;
    }
    return x;
}

}  // namespace risdl::specfun
