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

#include "risdl/scenario_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "risdl/errors.hpp"

namespace risdl {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("scenario line " + std::to_string(line) + ": " + msg);
}

double parse_double(std::string_view s, int line) {
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        fail(line, "expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

int parse_int(std::string_view s, int line) {
    s = trim(s);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        fail(line, "expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

Point2 parse_point(std::string_view s, int line) {
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) fail(line, "expected 'x, y'");
    return {parse_double(s.substr(0, comma), line), parse_double(s.substr(comma + 1), line)};
}

// %.17g round-trips every double.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

LoadedScenario parse_scenario(std::string_view text) {
    LoadedScenario out;
    ScenarioConfig& c = out.config;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");

        if (key == "bs_position") c.bs_position = parse_point(value, line_no);
        else if (key == "ris_position") c.ris_position = parse_point(value, line_no);
        else if (key == "cluster_center") c.cluster_center = parse_point(value, line_no);
        else if (key == "users") c.users = parse_int(value, line_no);
        else if (key == "qx") c.qx = parse_int(value, line_no);
        else if (key == "qy") c.qy = parse_int(value, line_no);
        else if (key == "carrier_freq_hz") c.carrier_freq_hz = parse_double(value, line_no);
        else if (key == "spacing_ratio") c.spacing_ratio = parse_double(value, line_no);
        else if (key == "pathloss_exponent") c.pathloss_exponent = parse_double(value, line_no);
        else if (key == "gain_ris_dbi") c.gain_ris_dbi = parse_double(value, line_no);
        else if (key == "gain_ue_dbi") c.gain_ue_dbi = parse_double(value, line_no);
        else if (key == "eirp_dbm") c.eirp_dbm = parse_double(value, line_no);
        else if (key == "noise_dbm") c.noise_dbm = parse_double(value, line_no);
        else if (key == "rho_db") c.rho_db = parse_double(value, line_no);
        else if (key == "azimuth_rad") c.azimuth_rad = parse_double(value, line_no);
        else if (key == "elevation_rad") c.elevation_rad = parse_double(value, line_no);
        else if (key == "gain_calibration") c.gain_calibration = parse_double(value, line_no);
        else fail(line_no, "unknown key '" + key + "'");
    }
    out.steering_specified = seen.contains("azimuth_rad") && seen.contains("elevation_rad");
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return out;
}

LoadedScenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string format_scenario(const ScenarioConfig& c) {
    std::string s;
    auto kv = [&s](const char* key, const std::string& v) {
        s += key;
        s += " = ";
        s += v;
        s += '\n';
    };
    auto pt = [](Point2 p) { return num(p.x) + ", " + num(p.y); };
    kv("bs_position", pt(c.bs_position));
    kv("ris_position", pt(c.ris_position));
    kv("cluster_center", pt(c.cluster_center));
    kv("users", std::to_string(c.users));
    kv("qx", std::to_string(c.qx));
    kv("qy", std::to_string(c.qy));
    kv("carrier_freq_hz", num(c.carrier_freq_hz));
    kv("spacing_ratio", num(c.spacing_ratio));
    kv("pathloss_exponent", num(c.pathloss_exponent));
    kv("gain_ris_dbi", num(c.gain_ris_dbi));
    kv("gain_ue_dbi", num(c.gain_ue_dbi));
    kv("eirp_dbm", num(c.eirp_dbm));
    kv("noise_dbm", num(c.noise_dbm));
    kv("rho_db", num(c.rho_db));
    kv("azimuth_rad", num(c.azimuth_rad));
    kv("elevation_rad", num(c.elevation_rad));
    kv("gain_calibration", num(c.gain_calibration));
    return s;
}

std::uint64_t scenario_hash(const ScenarioConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : format_scenario(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace risdl
