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

#include "risdl/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "risdl/analytics.hpp"
#include "risdl/errors.hpp"
#include "risdl/montecarlo.hpp"
#include "risdl/quadrature.hpp"
#include "risdl/ris_opt.hpp"
#include "risdl/scenario_file.hpp"
#include "risdl/version.hpp"

namespace risdl::experiments {

namespace an = risdl::analytics;

namespace {

struct Sigmas {
    double h, f, g, p_tx;
};

Sigmas sigmas_of(const ScenarioConfig& cfg) {
    const auto s = derive_link_stats(cfg);
    return {std::sqrt(s.sigma_h_sq), std::sqrt(s.sigma_f_sq), std::sqrt(s.sigma_g_sq), s.p_tx};
}

ScenarioConfig at_point(ScenarioConfig cfg, std::int64_t k, std::int64_t q, double rho_db) {
    cfg.users = static_cast<int>(k);
    if (q > 0) {
        cfg.qx = static_cast<int>(q);
        cfg.qy = 1;
    }
    cfg.rho_db = rho_db;
    return cfg;
}

MeanEstimate mc_capacity(const ExperimentSpec& spec, const ScenarioConfig& cfg, std::uint64_t seed,
                         bool ris) {
    TrialOptions opts;
    opts.workers = spec.workers;
    opts.sample_cap = 0;
    opts.ris_enabled = ris;
    return run_trials(cfg, spec.trials, seed, opts).capacity;
}

std::string rho_label(double rho) { return "rho=" + format_value(rho); }

template <class T>
void require_increasing(const std::vector<T>& v, const char* what) {
    if (v.empty()) throw ConfigError(std::string(what) + " must not be empty");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) throw ConfigError(std::string(what) + " must be strictly increasing");
    }
}

Table capacity_versus_q(const ExperimentSpec& spec, bool hardening) {
    check_spec(spec);
    const std::int64_t k = spec.scenario.users;
    if (k < 2) throw ConfigError("capacity sweep needs at least 2 users");
    Table t;
    t.columns = {"q", "rho_db", "mc_capacity", "mc_stderr", "analytic_capacity",
                 "no_ris_capacity", "no_ris_stderr", "no_ris_analytic"};

    const auto base_cfg = at_point(spec.scenario, k, 0, spec.scenario.rho_db);
    const auto base = mc_capacity(spec, base_cfg, point_seed(spec.seed, k, 0, 0.0), false);
    const auto s0 = sigmas_of(base_cfg);
    const double base_analytic =
        an::ergodic_capacity_gumbel(an::gumbel_constants_no_ris(k, s0.h * s0.h), s0.p_tx);

    for (const double rho : spec.rho_db) {
        for (const std::int64_t q : spec.q_grid) {
            const auto cfg = at_point(spec.scenario, k, q, rho);
            const auto s = sigmas_of(cfg);
            const auto mc = mc_capacity(spec, cfg, point_seed(spec.seed, k, q, rho), true);
            const auto g = hardening ? an::gumbel_constants_approx1(k, q, s.h, s.f, s.g)
                                     : an::gumbel_constants_approx2(k, an::moment_match(s.h, s.f, s.g, q));
            const double analytic = an::ergodic_capacity_gumbel(g, s.p_tx);
            const double qd = static_cast<double>(q);
            t.rows.push_back({qd, rho, mc.mean, mc.std_error, analytic, base.mean, base.std_error,
                              base_analytic});
            t.plot.push_back({qd, mc.mean, "mc " + rho_label(rho)});
            t.plot.push_back({qd, analytic, "analytic " + rho_label(rho)});
        }
    }
    for (const std::int64_t q : spec.q_grid) {
        t.plot.push_back({static_cast<double>(q), base.mean, "no_ris"});
    }
    return t;
}

// ---- validation suites ----------------------------------------------------

ReflectionVector random_reflection(int q, RandomStream& rng) {
    ReflectionVector g{std::vector<cplx>(q)};
    double n2 = 0.0;
    for (auto& x : g.gamma) {
        x = rng.complex_normal(1.0);
        n2 += std::norm(x);
    }
    const double scale = std::sqrt(q / n2);
    for (auto& x : g.gamma) x *= scale;
    return g;
}

void check_reflection(const ExperimentSpec& spec, ValidationReport& r) {
    double slack = 0.0, closed_err = 0.0;
    const int qs[] = {1, 2, 4, 8};
    for (int i = 0; i < 50; ++i) {
        RandomStream rng(spec.seed, 1000 + i);
        const int q = qs[i % 4];
        QuadraticObjective obj{rng.complex_normal(1.0), std::vector<cplx>(q)};
        double vn = 0.0;
        for (auto& x : obj.v) {
            x = rng.complex_normal(1.0);
            vn += std::norm(x);
        }
        const double best = evaluate_objective(obj, optimal_reflection(obj, q));
        const double amp = std::abs(obj.h) + std::sqrt(q * vn);
        closed_err = std::max(closed_err, std::abs(best - amp * amp) / (amp * amp));
        for (int j = 0; j < 2000; ++j) {
            slack = std::max(slack, evaluate_objective(obj, random_reflection(q, rng)) - best);
        }
    }
    r.checks.push_back({"reflection optimality slack", slack, 1e-10, false});
    r.checks.push_back({"reflection closed form", closed_err, 1e-10, false});
}

void check_moments(const ExperimentSpec& spec, ValidationReport& r) {
    const auto cfg = at_point(spec.scenario, 1, 30, spec.scenario.rho_db);
    const auto s = sigmas_of(cfg);
    TrialOptions opts;
    opts.workers = spec.workers;
    const auto res = run_trials(cfg, 200000, spec.seed, opts);
    const auto emp = empirical_moments(res.alpha_samples);
    const auto m = an::x_moments(s.h, s.f, s.g, 30);
    const double z = std::max(std::abs(emp.m1 - m.m1) / emp.m1_std_error,
                              std::abs(emp.m2 - m.m2) / emp.m2_std_error);
    r.checks.push_back({"moment oracle (z-score)", z, 3.0, false});

    double roundtrip = 0.0;
    for (std::int64_t q : {1, 30, 100, 1000}) {
        const auto mq = an::x_moments(s.h, s.f, s.g, q);
        const auto p = an::moment_match(mq);
        const double second = 2.0 * p.omega_hat * p.omega_hat * (2.0 * p.m_hat + 1.0) / p.m_hat;
        roundtrip = std::max({roundtrip, std::abs(2.0 * p.omega_hat - mq.m1) / mq.m1,
                              std::abs(second - mq.m2) / mq.m2});
    }
    r.checks.push_back({"moment matching round trip", roundtrip, 1e-12, false});

    const auto p0 = an::moment_match(s.h, 0.0, s.g, 30);
    const double var_h = s.h * s.h;
    double sup = std::abs(p0.m_hat - 0.5) + std::abs(p0.omega_hat - var_h / 2.0) / var_h;
    const auto expo = an::exponential_law(var_h);
    for (int i = 0; i <= 400; ++i) {
        const double a = var_h * i * 0.05;
        sup = std::max(sup, std::abs(an::approx2_cdf(a, p0) - expo.cdf(a)));
    }
    r.checks.push_back({"no-reflection reduction", sup, 1e-12, false});
}

void check_gumbel(const ExperimentSpec& spec, ValidationReport& r) {
    double worst = 0.0, ident = 0.0, norm_err = 0.0;
    for (double m_hat : {0.5, 2.0, 10.0, 50.0}) {
        const an::GammaApproxParams p{m_hat, 1.0};
        for (std::int64_t k : {10, 100, 1000}) {
            const auto cf = an::gumbel_constants_approx2(k, p);
            const auto num = an::gumbel_constants_numeric(an::approx2_law(p), k);
            worst = std::max({worst, std::abs(cf.a_k - num.a_k) / num.a_k,
                              std::abs(cf.b_k - num.b_k) / num.b_k});
            ident = std::max(ident, std::abs(cf.a_k * k * an::approx2_pdf(cf.b_k, p) - 1.0));
        }
        const double mode = std::max(0.0, (p.shape() - 1.0) * p.scale());
        const double hi = p.scale() * (p.shape() + 60.0 * std::sqrt(p.shape()) + 60.0);
        auto pdf = [&](double a) { return an::approx2_pdf(a, p); };
        double total = integrate_adaptive(pdf, mode, hi).value;
        if (mode > 0.0) total += integrate_adaptive(pdf, 0.0, mode).value;
        norm_err = std::max(norm_err, std::abs(total - 1.0));
    }
    r.checks.push_back({"gamma Gumbel constants, closed vs numeric", worst, 1e-8, false});
    r.checks.push_back({"gamma Gumbel scale identity", ident, 1e-9, false});
    r.checks.push_back({"gamma pdf normalization", norm_err, 1e-8, false});

    const auto cfg = at_point(spec.scenario, 200, 30, spec.scenario.rho_db);
    const auto s = sigmas_of(cfg);
    TrialOptions opts;
    opts.workers = spec.workers;
    const auto res = run_trials(cfg, 20000, spec.seed, opts);
    const auto g = an::gumbel_constants_approx2(200, an::moment_match(s.h, s.f, s.g, 30));
    const double d = ks_statistic(res.alpha_samples, [&](double a) { return an::gumbel_cdf(a, g); });
    r.checks.push_back({"Gumbel law KS distance (K=200, Q=30)", d, 0.03, false});
}

void check_scaling(const ExperimentSpec& spec, ValidationReport& r) {
    const auto s = sigmas_of(spec.scenario);
    double hard = 0.0;
    for (std::int64_t q : {256, 1024, 65536}) {
        const auto st = nakagami_refl_stats(q, s.f, s.g);
        hard = std::max(hard, std::abs(st.variance / (st.mean * st.mean) * 4.0 * q - 1.0));
    }
    r.checks.push_back({"hardening ratio", hard, 0.01, false});

    double ident = 0.0;
    for (std::int64_t k : {2, 10, 1000}) {
        for (std::int64_t q : {0, 30, 256}) {
            const auto d = an::hardening_snr_decomposition(k, q, s.h, s.f, s.g, s.p_tx);
            const double direct =
                an::avg_receive_snr(an::gumbel_constants_approx1(k, q, s.h, s.f, s.g), s.p_tx);
            ident = std::max(ident, std::abs(d.total - direct) / direct);
        }
    }
    r.checks.push_back({"SNR decomposition identity", ident, 1e-9, false});
}

void check_engine(const ExperimentSpec& spec, ValidationReport& r) {
    const auto cfg = at_point(spec.scenario, 5, 8, spec.scenario.rho_db);
    const auto a = run_trials(cfg, 10000, spec.seed, {1});
    const auto b = run_trials(cfg, 10000, spec.seed, {3});
    double diff = std::abs(a.capacity.mean - b.capacity.mean);
    for (std::size_t i = 0; i < a.alpha_samples.size(); ++i) {
        diff = std::max(diff, std::abs(a.alpha_samples[i] - b.alpha_samples[i]));
    }
    r.checks.push_back({"worker-count determinism", diff, 0.0, false});

    const double p = derive_link_stats(cfg).p_tx;
    double sum = 0.0;
    for (double x : a.alpha_samples) sum += sum_rate(p, x);
    const double post = sum / static_cast<double>(a.alpha_samples.size());
    r.checks.push_back({"streaming vs post-hoc mean", std::abs(post - a.capacity.mean) / post, 1e-12,
                        false});
}

}  // namespace

std::vector<std::int64_t> default_k_grid() { return {2, 5, 10, 20, 50, 100}; }
std::vector<std::int64_t> default_q_grid() { return {5, 10, 20, 30, 50, 75, 100}; }
std::vector<double> default_rho_list() { return {-10.0, -5.0, 0.0, 5.0, 10.0}; }
std::vector<std::int64_t> default_scaling_k_grid() {
    return {10, 100, 200, 1000, 10000, 100000, 1000000};
}

void check_spec(const ExperimentSpec& spec) {
    require_increasing(spec.k_grid, "K grid");
    require_increasing(spec.q_grid, "Q grid");
    require_increasing(spec.rho_db, "rho list");
    if (spec.trials < 2) throw ConfigError("trials must be at least 2");
    if (spec.k_grid.front() < 2) throw ConfigError("K grid entries must be >= 2");
    if (spec.q_grid.front() < 1) throw ConfigError("Q grid entries must be >= 1");
}

std::uint64_t point_seed(std::uint64_t master_seed, std::int64_t k, std::int64_t q, double rho_db) {
    const auto rho_bits = std::bit_cast<std::uint64_t>(rho_db);
    const Philox4x32::Key key{static_cast<std::uint32_t>(master_seed) ^ 0x5eed5eedu,
                              static_cast<std::uint32_t>(master_seed >> 32) ^ 0x0b5e55edu};
    const Philox4x32::Block ctr{static_cast<std::uint32_t>(k) ^ static_cast<std::uint32_t>(q >> 32),
                                static_cast<std::uint32_t>(q),
                                static_cast<std::uint32_t>(rho_bits),
                                static_cast<std::uint32_t>(rho_bits >> 32)};
    const auto out = Philox4x32::generate(ctr, key);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

Table run_fig1(const ExperimentSpec& spec) {
    check_spec(spec);
    Table t;
    t.columns = {"k", "rho_db", "mc_delta", "mc_stderr", "analytic_delta"};
    const std::int64_t q = spec.scenario.elements();
    for (const double rho : spec.rho_db) {
        for (const std::int64_t k : spec.k_grid) {
            auto cfg = spec.scenario;
            cfg.users = static_cast<int>(k);
            cfg.rho_db = rho;
            const auto s = sigmas_of(cfg);
            const auto ris = mc_capacity(spec, cfg, point_seed(spec.seed, k, q, rho), true);
            const auto base = mc_capacity(spec, cfg, point_seed(spec.seed, k, 0, 0.0), false);
            const double with_ris = an::ergodic_capacity_gumbel(
                an::gumbel_constants_approx2(k, an::moment_match(s.h, s.f, s.g, q)), s.p_tx);
            const double without =
                an::ergodic_capacity_gumbel(an::gumbel_constants_no_ris(k, s.h * s.h), s.p_tx);
            const double kd = static_cast<double>(k);
            const double delta = ris.mean - base.mean;
            t.rows.push_back({kd, rho, delta, std::hypot(ris.std_error, base.std_error), with_ris - without});
            t.plot.push_back({kd, delta, "mc " + rho_label(rho)});
            t.plot.push_back({kd, with_ris - without, "analytic " + rho_label(rho)});
        }
    }
    return t;
}

Table run_fig2(const ExperimentSpec& spec) { return capacity_versus_q(spec, true); }
Table run_fig3(const ExperimentSpec& spec) { return capacity_versus_q(spec, false); }

Table run_snr_scaling(const ExperimentSpec& spec) {
    require_increasing(spec.k_grid, "K grid");
    if (spec.k_grid.front() < 2) throw ConfigError("K grid entries must be >= 2");
    if (!(spec.chi >= 0.0) || !std::isfinite(spec.chi)) throw ConfigError("chi must be nonnegative");
    const bool linear = spec.regime == ScalingRegime::q_linear_in_k;
    if (linear && spec.chi == 0.0) throw ConfigError("q_linear_in_k needs chi > 0");
    const auto s = sigmas_of(spec.scenario);
    const double limit = linear ? an::q_linear_regime_limit(s.f, s.g, s.p_tx)
                                : an::sqrt_log_regime_limit(spec.chi, s.h, s.f, s.g, s.p_tx);
    Table t;
    t.columns = {"k", "q", "avg_snr", "normalized_snr", "limit", "relative_gap"};
    for (const std::int64_t k : spec.k_grid) {
        const double log_k = std::log(static_cast<double>(k));
        const double qd = std::ceil(linear ? spec.chi * static_cast<double>(k) : spec.chi * std::sqrt(log_k));
        const auto q = static_cast<std::int64_t>(qd);
        const double snr = an::avg_receive_snr(an::gumbel_constants_approx1(k, q, s.h, s.f, s.g), s.p_tx);
        const double normalized = linear ? snr / (qd * qd) : snr / log_k;
        const double kd = static_cast<double>(k);
        t.rows.push_back({kd, qd, snr, normalized, limit, (normalized - limit) / limit});
        t.plot.push_back({kd, normalized, "normalized"});
        t.plot.push_back({kd, limit, "limit"});
    }
    return t;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string ValidationReport::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s  %-44s measured=%-12.4g tolerance=%.4g\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
        out += buf;
    }
    for (const auto& n : notes) out += "note: " + n + "\n";
    out += passed() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

ValidationReport run_validate(const ExperimentSpec& spec) {
    if (!(spec.tolerance_scale >= 0.0)) throw ConfigError("tolerance scale must be nonnegative");
    ValidationReport r;
    check_reflection(spec, r);
    check_moments(spec, r);
    check_gumbel(spec, r);
    check_scaling(spec, r);
    check_engine(spec, r);
    for (auto& c : r.checks) {
        c.tolerance *= spec.tolerance_scale;
        c.pass = c.measured <= c.tolerance;
    }
    r.notes.push_back(
        "the hardening approximation's cdf is supported on alpha > (E[Z2])^2, the squared mean "
        "reflected amplitude. A threshold at E[Z2] itself mixes amplitude and power units and "
        "would not let the cdf start at 0, so the squared form is used.");
    return r;
}

std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string comment_line(const ExperimentSpec& spec) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# risdl %s experiment=%s config_hash=%016llx seed=%llu trials=%zu\n",
                  kVersion, spec.id.c_str(),
                  static_cast<unsigned long long>(scenario_hash(spec.scenario)),
                  static_cast<unsigned long long>(spec.seed), spec.trials);
    return buf;
}

}  // namespace

std::string to_csv(const Table& table, const ExperimentSpec& spec) {
    std::string out = comment_line(spec);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_plot_csv(const Table& table, const ExperimentSpec& spec) {
    std::string out = comment_line(spec) + "x,y,series\n";
    for (const auto& p : table.plot) {
        out += format_value(p.x) + "," + format_value(p.y) + "," + p.series + "\n";
    }
    return out;
}

}  // namespace risdl::experiments
