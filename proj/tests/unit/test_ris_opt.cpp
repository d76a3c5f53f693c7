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

#include <cmath>
#include <vector>

#include "risdl/errors.hpp"
#include "risdl/ris_opt.hpp"

using namespace risdl;

namespace {

constexpr cplx J{0.0, 1.0};

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Uniform on the complex sphere of radius sqrt(Q).
ReflectionVector random_reflection(int q, RandomStream& rng) {
    ReflectionVector g{std::vector<cplx>(q)};
    double n2 = 0.0;
    for (auto& x : g.gamma) {
        x = rng.complex_normal(1.0);
        n2 += std::norm(x);
    }
    const double s = std::sqrt(q / n2);
    for (auto& x : g.gamma) x *= s;
    return g;
}

QuadraticObjective random_objective(int q, RandomStream& rng) {
    QuadraticObjective obj{rng.complex_normal(1.0), std::vector<cplx>(q)};
    for (auto& x : obj.v) x = rng.complex_normal(1.0);
    return obj;
}

ChannelRealization hand_built(std::vector<cplx> h, std::vector<cplx> f, std::vector<cplx> g) {
    ChannelRealization r;
    r.users = static_cast<int>(h.size());
    r.elements = static_cast<int>(g.size());
    r.h = std::move(h);
    r.f = std::move(f);
    r.g = std::move(g);
    return r;
}

}  // namespace

TEST_CASE("optimal_reflection examples") {
    const auto g1 = optimal_reflection({1.0, {1.0}}, 1);
    REQUIRE(g1.gamma.size() == 1);
    CHECK(std::abs(g1.gamma[0] - cplx(1.0)) < 1e-15);

    const auto g2 = optimal_reflection({J, {1.0, J}}, 2);
    REQUIRE(g2.gamma.size() == 2);
    CHECK(std::abs(g2.gamma[0] - J) < 1e-15);
    CHECK(std::abs(g2.gamma[1] - cplx(-1.0)) < 1e-15);
}

TEST_CASE("optimal_reflection meets the passivity constraint") {
    RandomStream rng(8, 0);
    for (int q : {1, 3, 16, 100}) {
        const auto obj = random_objective(q, rng);
        CHECK(rel_err(optimal_reflection(obj, q).squared_norm(), q) < 1e-12);
    }
}

TEST_CASE("optimal_reflection degenerate inputs") {
    CHECK_THROWS_AS(optimal_reflection({1.0, {0.0, 0.0}}, 2), DegenerateReflectionError);
    CHECK_THROWS_AS(optimal_reflection({1.0, {1.0, 1.0}}, 3), DimensionMismatchError);
    // h = 0: phase factor taken as 1.
    const auto g = optimal_reflection({0.0, {2.0, 0.0}}, 2);
    CHECK(std::abs(g.gamma[0] - cplx(std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(g.gamma[1]) == 0.0);
}

TEST_CASE("evaluate_objective") {
    SUBCASE("closed form at the optimum") {
        RandomStream rng(2, 0);
        for (int i = 0; i < 100; ++i) {
            const int q = 1 + i % 9;
            const auto obj = random_objective(q, rng);
            double vn = 0.0;
            for (auto x : obj.v) vn += std::norm(x);
            const double amp = std::abs(obj.h) + std::sqrt(q * vn);
            CHECK(rel_err(evaluate_objective(obj, optimal_reflection(obj, q)), amp * amp) < 1e-10);
            CHECK(rel_err(closed_form_objective(obj, q), amp * amp) < 1e-14);
        }
    }
    SUBCASE("equals |h + v^H gamma|^2") {
        RandomStream rng(4, 0);
        const auto obj = random_objective(5, rng);
        const auto g = random_reflection(5, rng);
        cplx s = obj.h;
        for (int i = 0; i < 5; ++i) s += std::conj(obj.v[i]) * g.gamma[i];
        CHECK(rel_err(evaluate_objective(obj, g), std::norm(s)) < 1e-12);
    }
    SUBCASE("no direct path obeys Cauchy-Schwarz") {
        RandomStream rng(6, 0);
        auto obj = random_objective(6, rng);
        obj.h = 0.0;
        double vn = 0.0;
        for (auto x : obj.v) vn += std::norm(x);
        for (int i = 0; i < 100; ++i) {
            CHECK(evaluate_objective(obj, random_reflection(6, rng)) <= 6.0 * vn * (1.0 + 1e-12));
        }
    }
    SUBCASE("random sampling never beats the closed form (Q = 4)") {
        RandomStream rng(10, 0);
        const auto obj = random_objective(4, rng);
        const double best = closed_form_objective(obj, 4);
        double worst_excess = -1e300;
        for (int i = 0; i < 10000; ++i) {
            worst_excess = std::max(worst_excess, evaluate_objective(obj, random_reflection(4, rng)) - best);
        }
        CHECK(worst_excess <= 1e-10);
    }
    CHECK_THROWS_AS(evaluate_objective({1.0, {1.0, 2.0}}, ReflectionVector{{1.0}}), DimensionMismatchError);
}

TEST_CASE("QuadraticObjective::from_channels forms v = diag(f*) g") {
    const std::vector<cplx> f{{1.0, 2.0}, {0.5, -1.0}};
    const std::vector<cplx> g{{0.0, 1.0}, {3.0, 0.0}};
    const auto obj = QuadraticObjective::from_channels(J, f, g);
    CHECK(std::abs(obj.v[0] - std::conj(f[0]) * g[0]) < 1e-15);
    CHECK(std::abs(obj.v[1] - std::conj(f[1]) * g[1]) < 1e-15);
    CHECK_THROWS_AS(QuadraticObjective::from_channels(J, f, std::vector<cplx>{1.0}), DimensionMismatchError);
}

TEST_CASE("schedule") {
    SUBCASE("single user") {
        const auto r = hand_built({{0.6, 0.8}}, {{1.0, 1.0}, {0.0, -2.0}}, {{2.0, 0.0}, {0.0, 2.0}});
        const auto out = schedule(r);
        CHECK(out.k_max == 0);
        // |h| = 1, sigma_g ||f|| = 2 sqrt(6), Q = 2.
        const double amp = 1.0 + std::sqrt(2.0) * 2.0 * std::sqrt(6.0);
        CHECK(rel_err(out.alpha_opt, amp * amp) < 1e-14);
        CHECK(rel_err(out.gamma_opt.squared_norm(), 2.0) < 1e-14);
    }
    SUBCASE("second user dominates") {
        const auto r = hand_built({0.1, 2.0, 0.3}, {0.1, 0.1, 1.5, 1.5, 0.2, 0.2}, {1.0, 1.0});
        CHECK(schedule(r).k_max == 1);
        CHECK(schedule_alpha(r) == schedule(r).alpha_opt);
    }
    SUBCASE("ties go to the lowest index") {
        const auto r = hand_built({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0});
        CHECK(schedule(r).k_max == 0);
    }
    SUBCASE("selected user without a reflected path") {
        const auto r = hand_built({5.0, 0.1}, {0.0, 0.0, 0.1, 0.1}, {1.0, 1.0});
        const auto out = schedule(r);
        CHECK(out.k_max == 0);
        CHECK(out.alpha_opt == 25.0);
        CHECK(out.gamma_opt.gamma[0] == cplx(std::sqrt(2.0)));
    }
    SUBCASE("surface-free realization") {
        const auto r = hand_built({1.0, J * 3.0}, {}, {});
        const auto out = schedule(r);
        CHECK(out.k_max == 1);
        CHECK(out.alpha_opt == doctest::Approx(9.0));
        CHECK(out.gamma_opt.gamma.empty());
    }
}

TEST_CASE("schedule agrees with brute force over users") {
    DerivedLinkStats stats{1.0, 2.0, 0.5, 1.0, 0.3, 0.2};
    ScenarioConfig cfg;
    cfg.users = 7;
    cfg.qx = 3;
    cfg.qy = 2;
    const ChannelModel model(stats, cfg);
    for (int t = 0; t < 300; ++t) {
        RandomStream rng(21, t);
        const auto r = model.draw(rng);
        double best = -1.0;
        int arg = -1;
        for (int k = 0; k < r.users; ++k) {
            const auto obj = QuadraticObjective::from_channels(r.h[k], r.f_row(k), r.g);
            const double v = evaluate_objective(obj, optimal_reflection(obj, r.elements));
            if (v > best) {
                best = v;
                arg = k;
            }
        }
        const auto out = schedule(r);
        CHECK(out.k_max == arg);
        CHECK(rel_err(out.alpha_opt, best) < 1e-10);
    }
}

TEST_CASE("schedule invariances") {
    DerivedLinkStats stats{1.0, 1.5, 0.8, 1.0, 0.7, -0.1};
    ScenarioConfig cfg;
    cfg.users = 5;
    cfg.qx = 4;
    cfg.qy = 2;
    const ChannelModel model(stats, cfg);
    for (int t = 0; t < 100; ++t) {
        RandomStream rng(31, t);
        auto r = model.draw(rng);
        const auto base = schedule(r);

        SUBCASE("scale equivariance") {
            auto scaled = r;
            const double s = 0.37 + t * 0.1;
            for (auto& x : scaled.h) x *= s;
            for (auto& x : scaled.f) x *= s;  // scales every composite channel by s
            const auto out = schedule(scaled);
            CHECK(out.k_max == base.k_max);
            CHECK(rel_err(out.alpha_opt, s * s * base.alpha_opt) < 1e-12);
        }
        SUBCASE("any unit-modulus signature gives the same alpha") {
            auto other = r;
            RandomStream phases(32, t);
            for (auto& x : other.g) x = std::sqrt(1.5) * std::polar(1.0, 6.283185307179586 * phases.uniform());
            CHECK(rel_err(schedule(other).alpha_opt, base.alpha_opt) < 1e-10);
        }
    }
}

TEST_CASE("sum_rate") {
    CHECK(sum_rate(5.0, 0.0) == 0.0);
    CHECK(sum_rate(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sum_rate(3.0, 5.0) == doctest::Approx(4.0).epsilon(1e-15));
}
