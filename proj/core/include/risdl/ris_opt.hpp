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

// Closed-form reflection design under the global passivity constraint
// ||gamma||^2 = Q, opportunistic user selection and the resulting rate.

#include <span>
#include <vector>

#include "risdl/channel.hpp"

namespace risdl {

struct ReflectionVector {
    std::vector<cplx> gamma;

    double squared_norm() const;
};

/// Per-user quadratic objective |h|^2 + 2 Re{beta^H gamma} + gamma^H B gamma
/// with beta = h v and B = v v^H, where v = diag(f*) g. B is never formed.
struct QuadraticObjective {
    cplx h;
    std::vector<cplx> v;

    static QuadraticObjective from_channels(cplx h, std::span<const cplx> f,
                                            std::span<const cplx> g);
};

/// gamma = sqrt(Q) (h/|h|) v/||v||, with h/|h| := 1 when h == 0.
/// Throws DegenerateReflectionError when ||v|| == 0.
ReflectionVector optimal_reflection(const QuadraticObjective& obj, int q);

double evaluate_objective(const QuadraticObjective& obj, const ReflectionVector& gamma);

/// (|h| + sqrt(Q) ||v||)^2, the value attained by optimal_reflection.
double closed_form_objective(const QuadraticObjective& obj, int q);

struct SchedulingOutcome {
    int k_max = 0;  // zero-based user index
    double alpha_opt = 0.0;
    ReflectionVector gamma_opt;
};

/// Picks the user with the largest optimized composite channel power; ties
/// go to the lowest index. When the selected user's reflected path vanishes
/// gamma_opt is sqrt(Q) e_1.
SchedulingOutcome schedule(const ChannelRealization& r);

/// alpha_opt alone (no reflection vector), for the trial loop.
double schedule_alpha(const ChannelRealization& r);

/// log2(1 + p_tx alpha) in bits/s/Hz.
double sum_rate(double p_tx, double alpha);

}  // namespace risdl
