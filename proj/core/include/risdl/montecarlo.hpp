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

// Monte Carlo trial engine. Trial t always uses RandomStream(seed, t), and
// results are reduced in fixed-size blocks combined in index order, so the
// output does not depend on the number of worker threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "risdl/channel.hpp"

namespace risdl {

struct MeanEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct TrialOptions {
    unsigned workers = 0;                 // 0: hardware concurrency
    std::size_t sample_cap = 1'000'000;   // alpha samples kept verbatim
    bool ris_enabled = true;              // false: Q = 0 baseline
};

struct TrialBatchResult {
    std::vector<double> alpha_samples;  // first min(n, cap) trials, in order
    MeanEstimate capacity;              // log2(1 + p_tx alpha), bits/s/Hz
    MeanEstimate snr;                   // p_tx alpha
    std::size_t n_trials = 0;
    std::uint64_t master_seed = 0;
};

TrialBatchResult run_trials(const ScenarioConfig& cfg, std::size_t n_trials,
                            std::uint64_t master_seed, const TrialOptions& options = {});

TrialBatchResult run_trials(const ChannelModel& model, std::size_t n_trials,
                            std::uint64_t master_seed, const TrialOptions& options = {});

/// Evaluates `trial(t)` for t in [0, n) on `workers` threads and returns
/// the values in index order.
std::vector<double> parallel_map(std::size_t n, unsigned workers,
                                 const std::function<double(std::size_t)>& trial);

struct SampleMoments {
    double m1 = 0.0;
    double m2 = 0.0;
    double m1_std_error = 0.0;
    double m2_std_error = 0.0;
};

/// Sample means of x and x^2 with their standard errors. Needs n >= 2.
SampleMoments empirical_moments(std::span<const double> samples);

/// One-sample Kolmogorov-Smirnov distance sup |F_n - F|.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Mean and standard error of `values` via Welford blocks merged in order.
MeanEstimate mean_estimate(std::span<const double> values);

}  // namespace risdl
