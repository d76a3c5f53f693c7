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

// Scenario files: flat `key = value` text, one entry per line, `#` starts a
// comment. Points are written as `x, y`. Unknown or repeated keys are
// rejected; omitted keys keep the ScenarioConfig defaults.
//
//   keys: bs_position ris_position cluster_center users qx qy
//         carrier_freq_hz spacing_ratio pathloss_exponent gain_ris_dbi
//         gain_ue_dbi eirp_dbm noise_dbm rho_db azimuth_rad elevation_rad
//         gain_calibration

#include <filesystem>
#include <string>
#include <string_view>

#include "risdl/channel.hpp"

namespace risdl {

struct LoadedScenario {
    ScenarioConfig config;
    bool steering_specified = false;  // both azimuth_rad and elevation_rad given
};

LoadedScenario parse_scenario(std::string_view text);
LoadedScenario load_scenario_file(const std::filesystem::path& path);

/// Canonical text form listing every key; parse_scenario(format_scenario(c))
/// reproduces c exactly.
std::string format_scenario(const ScenarioConfig& cfg);

/// 64-bit FNV-1a of the canonical text.
std::uint64_t scenario_hash(const ScenarioConfig& cfg);

}  // namespace risdl
