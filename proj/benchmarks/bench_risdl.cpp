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

#include <benchmark/benchmark.h>

#include <cmath>

#include "risdl/analytics.hpp"
#include "risdl/channel.hpp"
#include "risdl/montecarlo.hpp"
#include "risdl/ris_opt.hpp"
#include "risdl/specfun.hpp"

namespace {

risdl::ScenarioConfig reference(int users, int q) {
    risdl::ScenarioConfig cfg;
    cfg.users = users;
    cfg.qx = q;
    cfg.gain_calibration = 100.0;
    return cfg;
}

void BM_DrawRealization(benchmark::State& state) {
    const auto cfg = reference(10, static_cast<int>(state.range(0)));
    const risdl::ChannelModel model(risdl::derive_link_stats(cfg), cfg);
    risdl::ChannelRealization r;
    std::uint64_t t = 0;
    for (auto _ : state) {
        risdl::RandomStream rng(1, t++);
        model.draw_into(rng, r);
        benchmark::DoNotOptimize(r.f.data());
    }
}
BENCHMARK(BM_DrawRealization)->Arg(10)->Arg(30)->Arg(100);

void BM_ScheduleAlpha(benchmark::State& state) {
    const auto cfg = reference(10, static_cast<int>(state.range(0)));
    const risdl::ChannelModel model(risdl::derive_link_stats(cfg), cfg);
    risdl::RandomStream rng(2, 0);
    const auto r = model.draw(rng);
    for (auto _ : state) benchmark::DoNotOptimize(risdl::schedule_alpha(r));
}
BENCHMARK(BM_ScheduleAlpha)->Arg(10)->Arg(30)->Arg(100);

void BM_InverseIncompleteGamma(benchmark::State& state) {
    const double shape = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(risdl::specfun::inv_reg_lower_inc_gamma(0.9, shape));
    }
}
BENCHMARK(BM_InverseIncompleteGamma)->Arg(1)->Arg(20)->Arg(2000);

void BM_GumbelCapacity(benchmark::State& state) {
    const auto p = risdl::analytics::moment_match(1.0, 1.0, 1.0, 30);
    const auto g = risdl::analytics::gumbel_constants_approx2(10, p);
    for (auto _ : state) benchmark::DoNotOptimize(risdl::analytics::ergodic_capacity_gumbel(g, 1e3));
}
BENCHMARK(BM_GumbelCapacity);

void BM_FiniteKCapacity(benchmark::State& state) {
    const auto law = risdl::analytics::approx2_law(risdl::analytics::moment_match(1.0, 1.0, 1.0, 30));
    for (auto _ : state) benchmark::DoNotOptimize(risdl::analytics::ergodic_capacity_finite_k(law, 10, 1e3));
}
BENCHMARK(BM_FiniteKCapacity);

void BM_RunTrials(benchmark::State& state) {
    const auto cfg = reference(10, 30);
    for (auto _ : state) {
        benchmark::DoNotOptimize(risdl::run_trials(cfg, 1000, 3, {1}).capacity.mean);
    }
}
BENCHMARK(BM_RunTrials)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
