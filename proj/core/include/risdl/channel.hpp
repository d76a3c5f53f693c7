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

// Scenario geometry, link budgets, RIS steering vectors and random channel
// draws for a single-antenna BS serving a cluster of K single-antenna users
// through a Q-element reflecting surface.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "risdl/random.hpp"

namespace risdl {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point2 a, Point2 b);

/// Everything needed to derive the link statistics of one scenario.
/// Defaults reproduce the reference deployment: BS at (0,0), RIS at (10,0),
/// users clustered around (40,-10), 25 GHz carrier, quarter-wavelength
/// spacing, 25/5 dBi gains, 33 dBm EIRP and -100 dBm noise.
struct ScenarioConfig {
    Point2 bs_position{0.0, 0.0};
    Point2 ris_position{10.0, 0.0};
    Point2 cluster_center{40.0, -10.0};
    int users = 10;
    int qx = 30;
    int qy = 1;
    double carrier_freq_hz = 25e9;
    double spacing_ratio = 0.25;  // d_RIS / lambda0
    double pathloss_exponent = 1.6;
    double gain_ris_dbi = 25.0;
    double gain_ue_dbi = 5.0;
    double eirp_dbm = 33.0;
    double noise_dbm = -100.0;
    double rho_db = 0.0;  // (sigma_f^2 sigma_g^2) / sigma_h^2
    double azimuth_rad = 0.0;
    double elevation_rad = 0.0;
    // Multiplies sigma_h^2 (and through rho also sigma_f^2); absorbs the
    // unstated BS antenna gain of the direct link.
    double gain_calibration = 1.0;

    int elements() const { return qx * qy; }
    double wavelength() const { return kSpeedOfLight / carrier_freq_hz; }

    /// Throws DomainError when an invariant is violated.
    void validate() const;
};

/// Returns a copy of `cfg` with azimuth and elevation drawn uniformly from
/// [0, 2pi) x [-pi/2, pi/2) using a stream reserved for scenario setup.
ScenarioConfig with_random_steering(ScenarioConfig cfg, std::uint64_t master_seed);

struct DerivedLinkStats {
    double sigma_h_sq = 1.0;  // BS -> UE
    double sigma_g_sq = 1.0;  // BS -> RIS
    double sigma_f_sq = 1.0;  // RIS -> UE
    double p_tx = 1.0;        // transmit power normalized to the noise power
    double u_x = 0.0;
    double u_y = 0.0;
};

/// Link variances from the geometry: sigma^2 = G d^-eta lambda0^2 / (4 pi)^2.
DerivedLinkStats derive_link_stats(const ScenarioConfig& cfg);

/// Kronecker-ordered planar-array signature; entry p * qy + q is
/// exp(j 2 pi spacing_ratio (p u_x + q u_y)).
std::vector<cplx> steering_vector(int qx, int qy, double u_x, double u_y, double spacing_ratio);

/// One fading draw. `f` holds the K x Q reflection channels row-major.
struct ChannelRealization {
    int users = 0;
    int elements = 0;
    std::vector<cplx> h;
    std::vector<cplx> f;
    std::vector<cplx> g;

    std::span<const cplx> f_row(int k) const {
        return {f.data() + static_cast<std::size_t>(k) * elements,
                static_cast<std::size_t>(elements)};
    }
    std::span<cplx> f_row(int k) {
        return {f.data() + static_cast<std::size_t>(k) * elements,
                static_cast<std::size_t>(elements)};
    }
};

/// Immutable sampler holding the deterministic BS->RIS channel. With the
/// surface disabled it draws only the direct channels (Q = 0 baseline).
class ChannelModel {
public:
    ChannelModel(const DerivedLinkStats& stats, const ScenarioConfig& cfg, bool ris_enabled = true);

    ChannelRealization draw(RandomStream& rng) const;

    /// Draws into `out`, reusing its buffers.
    void draw_into(RandomStream& rng, ChannelRealization& out) const;

    int users() const { return users_; }
    int elements() const { return static_cast<int>(g_.size()); }
    const DerivedLinkStats& stats() const { return stats_; }
    std::span<const cplx> bs_ris_channel() const { return g_; }

private:
    DerivedLinkStats stats_;
    int users_;
    std::vector<cplx> g_;
};

ChannelRealization draw_realization(const DerivedLinkStats& stats, const ScenarioConfig& cfg,
                                    RandomStream& rng);

/// Mean and variance of Z2 = sigma_g sqrt(Q) ||f||, a Nakagami variate with
/// shape Q and spread sigma_f^2 sigma_g^2 Q^2, exactly and in Stirling form.
struct ReflectionAmplitudeStats {
    double mean = 0.0;
    double variance = 0.0;
    double mean_stirling = 0.0;
    double variance_stirling = 0.0;
};

ReflectionAmplitudeStats nakagami_refl_stats(std::int64_t q, double sigma_f, double sigma_g);

}  // namespace risdl
