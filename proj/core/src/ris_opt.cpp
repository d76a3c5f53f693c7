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

#include "risdl/ris_opt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "risdl/errors.hpp"

namespace risdl {

namespace {

double norm2(std::span<const cplx> x) {
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return s;
}

// ||diag(f*) g|| without materializing the product.
double reflected_norm(std::span<const cplx> f, std::span<const cplx> g) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::norm(std::conj(f[i]) * g[i]);
    return std::sqrt(s);
}

double user_alpha(const ChannelRealization& r, int k) {
    const double direct = std::abs(r.h[k]);
    if (r.elements == 0) return direct * direct;
    const double amp = direct + std::sqrt(static_cast<double>(r.elements)) *
                                    reflected_norm(r.f_row(k), r.g);
    return amp * amp;
}

}  // namespace

double ReflectionVector::squared_norm() const { return norm2(gamma); }

QuadraticObjective QuadraticObjective::from_channels(cplx h, std::span<const cplx> f,
                                                     std::span<const cplx> g) {
    if (f.size() != g.size()) {
        throw DimensionMismatchError("QuadraticObjective: f has " + std::to_string(f.size()) +
                                     " entries, g has " + std::to_string(g.size()));
    }
    QuadraticObjective obj{h, std::vector<cplx>(f.size())};
    for (std::size_t i = 0; i < f.size(); ++i) obj.v[i] = std::conj(f[i]) * g[i];
    return obj;
}

ReflectionVector optimal_reflection(const QuadraticObjective& obj, int q) {
    if (q < 1 || static_cast<std::size_t>(q) != obj.v.size()) {
        throw DimensionMismatchError("optimal_reflection: Q does not match the objective size");
    }
    const double vnorm = std::sqrt(norm2(obj.v));
    if (vnorm == 0.0) {
        throw DegenerateReflectionError("optimal_reflection: reflected path vanishes");
    }
    const double habs = std::abs(obj.h);
    const cplx phase = habs > 0.0 ? obj.h / habs : cplx(1.0, 0.0);
    const cplx scale = std::sqrt(static_cast<double>(q)) * phase / vnorm;
    ReflectionVector out{std::vector<cplx>(obj.v.size())};
    for (std::size_t i = 0; i < obj.v.size(); ++i) out.gamma[i] = scale * obj.v[i];
    return out;
}

double evaluate_objective(const QuadraticObjective& obj, const ReflectionVector& gamma) {
    if (gamma.gamma.size() != obj.v.size()) {
        throw DimensionMismatchError("evaluate_objective: gamma and v differ in length");
    }
    // s = v^H gamma, so beta^H gamma = conj(h) s and gamma^H B gamma = |s|^2.
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < obj.v.size(); ++i) s += std::conj(obj.v[i]) * gamma.gamma[i];
    const double cross = 2.0 * std::real(std::conj(obj.h) * s);
    return std::norm(obj.h) + cross + std::norm(s);
}

double closed_form_objective(const QuadraticObjective& obj, int q) {
    const double amp = std::abs(obj.h) + std::sqrt(static_cast<double>(q) * norm2(obj.v));
    return amp * amp;
}

double schedule_alpha(const ChannelRealization& r) {
    double best = -1.0;
    for (int k = 0; k < r.users; ++k) best = std::max(best, user_alpha(r, k));
    return best;
}

SchedulingOutcome schedule(const ChannelRealization& r) {
    if (r.users < 1) throw DomainError("schedule: realization has no users");
    SchedulingOutcome out;
    out.alpha_opt = -1.0;
    for (int k = 0; k < r.users; ++k) {
        const double a = user_alpha(r, k);
        if (a > out.alpha_opt) {
            out.alpha_opt = a;
            out.k_max = k;
        }
    }
    if (r.elements > 0) {
        const auto obj = QuadraticObjective::from_channels(r.h[out.k_max], r.f_row(out.k_max), r.g);
        try {
            out.gamma_opt = optimal_reflection(obj, r.elements);
        } catch (const DegenerateReflectionError&) {
            out.gamma_opt.gamma.assign(static_cast<std::size_t>(r.elements), cplx{});
            out.gamma_opt.gamma[0] = std::sqrt(static_cast<double>(r.elements));
        }
    }
    return out;
}

double sum_rate(double p_tx, double alpha) {
    return std::log1p(p_tx * alpha) / std::numbers::ln2;
}

}  // namespace risdl
