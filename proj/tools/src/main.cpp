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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "risdl/errors.hpp"
#include "risdl/experiments.hpp"
#include "risdl/scenario_file.hpp"
#include "risdl/version.hpp"

namespace ex = risdl::experiments;

namespace {

struct Options {
    std::string config;
    std::string out = "-";
    std::string plot;
    ex::ExperimentSpec spec;
    std::vector<std::int64_t> k_grid;
    std::vector<std::int64_t> q_grid;
    std::vector<double> rho;
    std::string regime = "q_linear_in_k";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config, "Scenario file (key = value)")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.spec.seed, "Master seed")->capture_default_str();
    cmd->add_option("--trials", o.spec.trials, "Monte Carlo trials per point")->capture_default_str();
    cmd->add_option("--out", o.out, "Output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--workers", o.spec.workers, "Worker threads, 0 for all cores")->capture_default_str();
}

void add_sweep(CLI::App* cmd, Options& o) {
    cmd->add_option("--k-grid", o.k_grid, "Comma-separated user counts")->delimiter(',');
    cmd->add_option("--q-grid", o.q_grid, "Comma-separated element counts")->delimiter(',');
    cmd->add_option("--rho", o.rho, "Comma-separated reflected-to-direct ratios in dB")->delimiter(',');
    cmd->add_option("--plot", o.plot, "Also write (x, y, series) triples here");
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path);
}

void resolve(Options& o) {
    if (o.config.empty()) {
        o.spec.scenario = risdl::with_random_steering({}, o.spec.seed);
    } else {
        const auto loaded = risdl::load_scenario_file(o.config);
        o.spec.scenario = loaded.steering_specified
                              ? loaded.config
                              : risdl::with_random_steering(loaded.config, o.spec.seed);
    }
    o.spec.k_grid = o.k_grid.empty() ? ex::default_k_grid() : o.k_grid;
    o.spec.q_grid = o.q_grid.empty() ? ex::default_q_grid() : o.q_grid;
    o.spec.rho_db = o.rho.empty() ? ex::default_rho_list() : o.rho;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"risdl: sum-rate capacity of RIS-assisted opportunistic downlinks"};
    app.set_version_flag("--version", std::string(risdl::kVersion));
    app.require_subcommand(1);

    Options o;
    auto* fig1 = app.add_subcommand("fig1", "Capacity gain from the surface versus K");
    auto* fig2 = app.add_subcommand("fig2", "Capacity versus Q, hardening approximation");
    auto* fig3 = app.add_subcommand("fig3", "Capacity versus Q, gamma approximation");
    auto* validate = app.add_subcommand("validate", "Run the invariant suites");
    auto* scaling = app.add_subcommand("snr-scaling", "Average receive SNR growth laws (analytic)");
    for (auto* cmd : {fig1, fig2, fig3, validate, scaling}) add_common(cmd, o);
    for (auto* cmd : {fig1, fig2, fig3, scaling}) add_sweep(cmd, o);
    validate->add_option("--inject-tolerance-scale", o.spec.tolerance_scale,
                         "Multiply every tolerance (negative testing)");
    const std::map<std::string, ex::ScalingRegime> regimes{
        {"q_linear_in_k", ex::ScalingRegime::q_linear_in_k},
        {"q_sqrt_log_k", ex::ScalingRegime::q_sqrt_log_k}};
    scaling->add_option("--regime", o.spec.regime, "q_linear_in_k | q_sqrt_log_k")
        ->transform(CLI::CheckedTransformer(regimes, CLI::ignore_case));
    scaling->add_option("--chi", o.spec.chi, "Growth constant of Q")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        resolve(o);
        if (scaling->parsed() && o.k_grid.empty()) o.spec.k_grid = ex::default_scaling_k_grid();
        const auto* cmd = app.get_subcommands().front();
        o.spec.id = cmd->get_name();

        if (validate->parsed()) {
            const auto report = ex::run_validate(o.spec);
            write_text(o.out, report.to_text());
            return report.passed() ? 0 : 1;
        }
        ex::Table table;
        if (fig1->parsed()) table = ex::run_fig1(o.spec);
        else if (fig2->parsed()) table = ex::run_fig2(o.spec);
        else if (fig3->parsed()) table = ex::run_fig3(o.spec);
        else table = ex::run_snr_scaling(o.spec);
        write_text(o.out, ex::to_csv(table, o.spec));
        if (!o.plot.empty()) write_text(o.plot, ex::to_plot_csv(table, o.spec));
    } catch (const risdl::ConfigError& e) {
        std::fprintf(stderr, "risdl: configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "risdl: %s\n", e.what());
        return 1;
    }
    return 0;
}
