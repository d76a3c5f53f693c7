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

#include "doctest.h"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "risdl/errors.hpp"
#include "risdl/specfun.hpp"

using namespace risdl;
using namespace risdl::specfun;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Composite Simpson rule, test-only.
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Test-only bisection quantile of P(., a).
double bisect_quantile(double y, double a) {
    double lo = 0.0, hi = 1.0;
    while (reg_lower_inc_gamma(hi, a) < y) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (reg_lower_inc_gamma(mid, a) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("log_gamma reference values") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(rel_err(log_gamma(0.5), 0.5 * std::log(std::numbers::pi)) < 1e-15);
    CHECK(std::abs(log_gamma(0.5) - 0.5723649429) < 1e-10);
    double factorial = 1.0;
    for (int i = 2; i <= 10; ++i) factorial *= i;
    CHECK(rel_err(log_gamma(11.0), std::log(factorial)) < 1e-15);
    CHECK(std::abs(log_gamma(11.0) - 15.1044125731) < 1e-10);
}

TEST_CASE("log_gamma relative accuracy over [0.5, 1e6]") {
    double worst = 0.0;
    for (double x = 0.5; x <= 1e6; x *= 1.0071) {
        worst = std::max(worst, rel_err(log_gamma(x), boost::math::lgamma(x)));
    }
    // Neighbourhoods of the roots at 1 and 2.
    for (double d : {1e-12, 1e-9, 1e-6, 1e-3, -1e-3, -1e-6, -1e-9}) {
        worst = std::max(worst, rel_err(log_gamma(1.0 + d), boost::math::lgamma(1.0 + d)));
        worst = std::max(worst, rel_err(log_gamma(2.0 + d), boost::math::lgamma(2.0 + d)));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("log_gamma rejects non-positive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
}

TEST_CASE("gamma_ratio_half") {
    CHECK(rel_err(gamma_ratio_half(1), std::sqrt(std::numbers::pi) / 2.0) < 1e-14);
    CHECK(rel_err(gamma_ratio_half(2), 3.0 * std::sqrt(std::numbers::pi) / 4.0) < 1e-14);
    const double big = gamma_ratio_half(10000) / gamma_ratio_half_stirling(10000);
    CHECK(big >= 0.99998);
    CHECK(big <= 1.0);
    CHECK(gamma_ratio_half_stirling(10000) == 100.0);
    CHECK_THROWS_AS(gamma_ratio_half(0), DomainError);

    SUBCASE("recurrence r(Q+1) = r(Q) (Q + 1/2) / Q") {
        double worst = 0.0;
        for (std::int64_t q = 1; q < 10000; ++q) {
            const double lhs = gamma_ratio_half(q + 1);
            const double rhs = gamma_ratio_half(q) * (q + 0.5) / q;
            worst = std::max(worst, rel_err(lhs, rhs));
        }
        CHECK(worst <= 1e-12);
    }
    SUBCASE("agrees with boost tgamma_delta_ratio") {
        for (std::int64_t q : {1, 3, 7, 8, 9, 30, 100, 1024, 10000}) {
            const double want = 1.0 / boost::math::tgamma_delta_ratio(double(q), 0.5);
            CHECK(rel_err(gamma_ratio_half(q), want) < 1e-13);
            const double want3 = 1.0 / boost::math::tgamma_delta_ratio(double(q), 1.5);
            CHECK(rel_err(gamma_ratio(q, 3), want3) < 1e-13);
        }
    }
}

TEST_CASE("reg_lower_inc_gamma reference values") {
    CHECK(reg_lower_inc_gamma(0.0, 0.7) == 0.0);
    CHECK(reg_lower_inc_gamma(0.0, 30.0) == 0.0);
    CHECK(std::abs(reg_lower_inc_gamma(1.0, 1.0) - (1.0 - std::exp(-1.0))) < 1e-15);
    const double oracle =
        simpson([](double t) { return t * std::exp(-t); }, 0.0, 3.0, 2000);  // Gamma(2) = 1
    CHECK(std::abs(oracle - 0.8008517265) < 1e-10);
    CHECK(std::abs(reg_lower_inc_gamma(3.0, 2.0) - oracle) < 1e-12);
    CHECK_THROWS_AS(reg_lower_inc_gamma(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(reg_lower_inc_gamma(1.0, 0.0), DomainError);
}

TEST_CASE("reg_lower_inc_gamma matches boost::math::gamma_p") {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 7.3, 50.0, 200.0, 3000.0}) {
        for (double u = 0.01; u < 6.0; u += 0.037) {
            const double x = a * u;
            worst = std::max(worst, std::abs(reg_lower_inc_gamma(x, a) - boost::math::gamma_p(a, x)));
            worst = std::max(worst, std::abs(reg_upper_inc_gamma(x, a) - boost::math::gamma_q(a, x)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("reg_lower_inc_gamma is monotone in x") {
    for (double a : {0.5, 1.0, 2.0, 7.3, 50.0}) {
        double prev = 0.0;
        for (double x = 0.0; x < 10.0 * a + 20.0; x += 0.01 * (a + 1.0)) {
            const double p = reg_lower_inc_gamma(x, a);
            CHECK(p >= prev);
            CHECK(p <= 1.0);
            prev = p;
        }
    }
}

TEST_CASE("inv_reg_lower_inc_gamma reference values") {
    CHECK(inv_reg_lower_inc_gamma(0.0, 3.0) == 0.0);
    CHECK(std::abs(inv_reg_lower_inc_gamma(1.0 - 1.0 / 10.0, 1.0) - std::log(10.0)) < 1e-12);
    const double oracle = bisect_quantile(0.5, 3.0);
    CHECK(std::abs(oracle - 2.674060313723559) < 1e-12);
    CHECK(std::abs(inv_reg_lower_inc_gamma(0.5, 3.0) - oracle) < 1e-12);
    CHECK(rel_err(inv_reg_lower_inc_gamma(0.5, 3.0), boost::math::gamma_p_inv(3.0, 0.5)) < 1e-13);
}

TEST_CASE("inv_reg_lower_inc_gamma domain") {
    CHECK_THROWS_AS(inv_reg_lower_inc_gamma(1.0, 2.0), DomainError);
    CHECK_THROWS_AS(inv_reg_lower_inc_gamma(-0.1, 2.0), DomainError);
    CHECK_THROWS_AS(inv_reg_lower_inc_gamma(1.5, 2.0), DomainError);
    CHECK_THROWS_AS(inv_reg_lower_inc_gamma(0.5, 0.0), DomainError);
}

TEST_CASE("inverse round trip on random (y, a)") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uy(1e-6, 1.0 - 1e-6);
    std::uniform_real_distribution<double> ua(0.5, 200.0);
    double worst_p = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double y = uy(rng);
        const double a = ua(rng);
        const double x = inv_reg_lower_inc_gamma(y, a);
        worst_p = std::max(worst_p, std::abs(reg_lower_inc_gamma(x, a) - y));
    }
    CHECK(worst_p <= 1e-10);
}

TEST_CASE("x -> P -> inverse recovers x") {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 3.0, 20.0, 150.0}) {
        for (double u : {0.05, 0.3, 1.0, 2.0, 4.0}) {
            const double x = a * u;
            const double y = reg_lower_inc_gamma(x, a);
            if (y >= 1.0 - 1e-9) continue;
            worst = std::max(worst, rel_err(inv_reg_lower_inc_gamma(y, a), x));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("extreme upper quantiles 1 - 1/K") {
    for (double a : {1.0, 15.0, 400.0}) {
        for (double k : {10.0, 1e3, 1e6}) {
            const double x = inv_reg_lower_inc_gamma(1.0 - 1.0 / k, a);
            CHECK(rel_err(x, boost::math::gamma_q_inv(a, 1.0 / k)) < 1e-11);
        }
    }
}
