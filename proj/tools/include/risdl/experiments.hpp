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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "risdl/channel.hpp"

namespace risdl::experiments {

enum class ScalingRegime { q_linear_in_k, q_sqrt_log_k };

struct ExperimentSpec {
    std::string id;
    ScenarioConfig scenario;
    std::vector<std::int64_t> k_grid;
    std::vector<std::int64_t> q_grid;
    std::vector<double> rho_db;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    ScalingRegime regime = ScalingRegime::q_linear_in_k;
    double chi = 1.0;
    double tolerance_scale = 1.0;  // validate only; scales every tolerance
};

std::vector<std::int64_t> default_k_grid();
std::vector<std::int64_t> default_q_grid();
std::vector<double> default_rho_list();
std::vector<std::int64_t> default_scaling_k_grid();

/// Throws ConfigError when a grid is empty or not strictly increasing.
void check_spec(const ExperimentSpec& spec);

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    std::string series;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<PlotPoint> plot;
};

Table run_fig1(const ExperimentSpec& spec);
Table run_fig2(const ExperimentSpec& spec);
Table run_fig3(const ExperimentSpec& spec);
Table run_snr_scaling(const ExperimentSpec& spec);

struct CheckLine {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<CheckLine> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::string to_text() const;
};

ValidationReport run_validate(const ExperimentSpec& spec);

/// Text with 12 significant digits, "nan"/"inf" spelled out.
std::string format_value(double v);

/// Comment line (config hash, seed, version), header row, data rows.
std::string to_csv(const Table& table, const ExperimentSpec& spec);

/// Companion file of (x, y, series) triples.
std::string to_plot_csv(const Table& table, const ExperimentSpec& spec);

/// Derived seed for one sweep point; the same point gets the same seed in
/// every experiment.
std::uint64_t point_seed(std::uint64_t master_seed, std::int64_t k, std::int64_t q, double rho_db);

}  // namespace risdl::experiments
