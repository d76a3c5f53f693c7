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

#include "risdl/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "risdl/errors.hpp"
#include "risdl/ris_opt.hpp"

namespace risdl {

namespace {

constexpr std::size_t kBlock = 4096;

// Running mean / sum of squared deviations (Welford), mergeable (Chan et al.).
struct Accumulator {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Accumulator& o) {
        if (o.count == 0.0) return;
        const double n = count + o.count;
        const double delta = o.mean - mean;
        mean += delta * o.count / n;
        m2 += o.m2 + delta * delta * count * o.count / n;
        count = n;
    }

    MeanEstimate estimate() const {
        if (count < 2.0) return {mean, 0.0};
        const double var = m2 / (count - 1.0);
        return {mean, std::sqrt(var / count)};
    }
};

struct BlockResult {
    Accumulator capacity;
    Accumulator snr;
};

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Runs body(block_index) for every block on a pool of threads.
template <class Body>
void for_each_block(std::size_t n_blocks, unsigned workers, Body&& body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), n_blocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) body(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t b = next++; b < n_blocks; b = next++) body(b);
        });
    }
}

}  // namespace

TrialBatchResult run_trials(const ScenarioConfig& cfg, std::size_t n_trials,
                            std::uint64_t master_seed, const TrialOptions& options) {
    const ChannelModel model(derive_link_stats(cfg), cfg, options.ris_enabled);
    return run_trials(model, n_trials, master_seed, options);
}

TrialBatchResult run_trials(const ChannelModel& model, std::size_t n_trials,
                            std::uint64_t master_seed, const TrialOptions& options) {
    if (n_trials == 0) throw DomainError("run_trials: n_trials must be positive");
    const double p_tx = model.stats().p_tx;
    const std::size_t n_blocks = (n_trials + kBlock - 1) / kBlock;
    const std::size_t kept = std::min(n_trials, options.sample_cap);

    TrialBatchResult out;
    out.n_trials = n_trials;
    out.master_seed = master_seed;
    out.alpha_samples.resize(kept);
    std::vector<BlockResult> blocks(n_blocks);

    for_each_block(n_blocks, options.workers, [&](std::size_t b) {
        ChannelRealization scratch;
        BlockResult& res = blocks[b];
        const std::size_t end = std::min(n_trials, (b + 1) * kBlock);
        for (std::size_t t = b * kBlock; t < end; ++t) {
            RandomStream rng(master_seed, t);
            model.draw_into(rng, scratch);
            const double alpha = schedule_alpha(scratch);
            if (t < kept) out.alpha_samples[t] = alpha;
            res.capacity.add(sum_rate(p_tx, alpha));
            res.snr.add(p_tx * alpha);
        }
    });

    BlockResult total;
    for (const auto& b : blocks) {
        total.capacity.merge(b.capacity);
        total.snr.merge(b.snr);
    }
    out.capacity = total.capacity.estimate();
    out.snr = total.snr.estimate();
    return out;
}

std::vector<double> parallel_map(std::size_t n, unsigned workers,
                                 const std::function<double(std::size_t)>& trial) {
    std::vector<double> out(n);
    const std::size_t n_blocks = (n + kBlock - 1) / kBlock;
    for_each_block(n_blocks, workers, [&](std::size_t b) {
        const std::size_t end = std::min(n, (b + 1) * kBlock);
        for (std::size_t t = b * kBlock; t < end; ++t) out[t] = trial(t);
    });
    return out;
}

MeanEstimate mean_estimate(std::span<const double> values) {
    Accumulator total;
    for (std::size_t start = 0; start < values.size(); start += kBlock) {
        Accumulator block;
        const std::size_t end = std::min(values.size(), start + kBlock);
        for (std::size_t i = start; i < end; ++i) block.add(values[i]);
        total.merge(block);
    }
    return total.estimate();
}

SampleMoments empirical_moments(std::span<const double> samples) {
    if (samples.size() < 2) throw DomainError("empirical_moments: need at least two samples");
    std::vector<double> squares(samples.size());
    std::transform(samples.begin(), samples.end(), squares.begin(),
                   [](double x) { return x * x; });
    const MeanEstimate first = mean_estimate(samples);
    const MeanEstimate second = mean_estimate(squares);
    return {first.mean, second.mean, first.std_error, second.std_error};
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_statistic: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max({d, (i + 1.0) / n - f, f - i / n});
    }
    return d;
}

}  // namespace risdl
