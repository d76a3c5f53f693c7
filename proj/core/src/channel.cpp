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

#include "risdl/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "risdl/errors.hpp"
#include "risdl/specfun.hpp"

namespace risdl {

namespace {

// Reserved stream for per-scenario draws; trial streams count up from 0.
constexpr std::uint64_t kSetupStream = std::numeric_limits<std::uint64_t>::max();

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double link_variance(double gain_dbi, double dist, double eta, double lambda) {
    const double four_pi = 4.0 * std::numbers::pi;
    return db_to_linear(gain_dbi) * std::pow(dist, -eta) * lambda * lambda / (four_pi * four_pi);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError("scenario: " + msg);
}

}  // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void ScenarioConfig::validate() const {
    require(users >= 1, "users (K) must be >= 1");
    require(qx >= 1 && qy >= 1, "qx and qy must be >= 1");
    require(carrier_freq_hz > 0.0, "carrier frequency must be positive");
    require(pathloss_exponent > 0.0, "pathloss exponent must be positive");
    require(spacing_ratio > 0.0, "spacing ratio must be positive");
    require(gain_calibration > 0.0, "gain calibration must be positive");
    require(azimuth_rad >= 0.0 && azimuth_rad < 2.0 * std::numbers::pi,
            "azimuth must lie in [0, 2pi)");
    require(elevation_rad >= -0.5 * std::numbers::pi && elevation_rad < 0.5 * std::numbers::pi,
            "elevation must lie in [-pi/2, pi/2)");
}

ScenarioConfig with_random_steering(ScenarioConfig cfg, std::uint64_t master_seed) {
    RandomStream rng(master_seed, kSetupStream);
    cfg.azimuth_rad = 2.0 * std::numbers::pi * rng.uniform();
    cfg.elevation_rad = std::numbers::pi * (rng.uniform() - 0.5);
    return cfg;
}

DerivedLinkStats derive_link_stats(const ScenarioConfig& cfg) {
    cfg.validate();
    const double d_g = distance(cfg.bs_position, cfg.ris_position);
    const double d_h = distance(cfg.bs_position, cfg.cluster_center);
    if (d_g == 0.0) throw ZeroDistanceError("BS and RIS positions coincide");
    if (d_h == 0.0) throw ZeroDistanceError("BS and cluster center coincide");

    const double lambda = cfg.wavelength();
    DerivedLinkStats s;
    s.sigma_g_sq = link_variance(cfg.gain_ris_dbi, d_g, cfg.pathloss_exponent, lambda);
    s.sigma_h_sq = cfg.gain_calibration *
                   link_variance(cfg.gain_ue_dbi, d_h, cfg.pathloss_exponent, lambda);
    s.sigma_f_sq = db_to_linear(cfg.rho_db) * s.sigma_h_sq / s.sigma_g_sq;
    s.p_tx = db_to_linear(cfg.eirp_dbm - cfg.noise_dbm);
    s.u_x = std::sin(cfg.azimuth_rad) * std::cos(cfg.elevation_rad);
    s.u_y = std::sin(cfg.azimuth_rad) * std::sin(cfg.elevation_rad);
    return s;
}

std::vector<cplx> steering_vector(int qx, int qy, double u_x, double u_y, double spacing_ratio) {
    if (qx < 1 || qy < 1) throw DomainError("steering_vector: qx and qy must be >= 1");
    if (std::abs(u_x) > 1.0 || std::abs(u_y) > 1.0) {
        throw DomainError("steering_vector: directional cosines must lie in [-1, 1]");
    }
    const double k = 2.0 * std::numbers::pi * spacing_ratio;
    std::vector<cplx> a(static_cast<std::size_t>(qx) * qy);
    for (int p = 0; p < qx; ++p) {
        for (int q = 0; q < qy; ++q) {
            a[static_cast<std::size_t>(p) * qy + q] = std::polar(1.0, k * (p * u_x + q * u_y));
        }
    }
    return a;
}

ChannelModel::ChannelModel(const DerivedLinkStats& stats, const ScenarioConfig& cfg,
                           bool ris_enabled)
    : stats_(stats), users_(cfg.users) {
    if (users_ < 1) throw DomainError("ChannelModel: users must be >= 1");
    if (ris_enabled) {
        g_ = steering_vector(cfg.qx, cfg.qy, stats.u_x, stats.u_y, cfg.spacing_ratio);
        const double sigma_g = std::sqrt(stats.sigma_g_sq);
        for (auto& x : g_) x *= sigma_g;
    }
}

void ChannelModel::draw_into(RandomStream& rng, ChannelRealization& out) const {
    const int q = elements();
    out.users = users_;
    out.elements = q;
    out.h.resize(static_cast<std::size_t>(users_));
    out.f.resize(static_cast<std::size_t>(users_) * q);
    out.g.assign(g_.begin(), g_.end());
    // User-major order: h_k then f_k, so user k's draws do not depend on Q
    // of any other user.
    for (int k = 0; k < users_; ++k) {
        out.h[k] = rng.complex_normal(stats_.sigma_h_sq);
        for (auto& x : out.f_row(k)) x = rng.complex_normal(stats_.sigma_f_sq);
    }
}

ChannelRealization ChannelModel::draw(RandomStream& rng) const {
    ChannelRealization r;
    draw_into(rng, r);
    return r;
}

ChannelRealization draw_realization(const DerivedLinkStats& stats, const ScenarioConfig& cfg,
                                    RandomStream& rng) {
    return ChannelModel(stats, cfg).draw(rng);
}

ReflectionAmplitudeStats nakagami_refl_stats(std::int64_t q, double sigma_f, double sigma_g) {
    if (q < 1) throw DomainError("nakagami_refl_stats: Q must be >= 1");
    const double qd = static_cast<double>(q);
    const double scale = sigma_f * sigma_g;
    const double r = specfun::gamma_ratio_half(q);
    ReflectionAmplitudeStats s;
    s.mean = scale * std::sqrt(qd) * r;
    // 1 - r^2/Q is small for large Q; r^2/Q = exp(2 ln r - ln Q) keeps it accurate
    // through expm1.
    const double deficit = -std::expm1(2.0 * std::log(r) - std::log(qd));
    s.variance = scale * scale * qd * qd * deficit;
    s.mean_stirling = scale * qd;
    s.variance_stirling = scale * scale * qd / 4.0;
    return s;
}

}  // namespace risdl
