// SPDX-License-Identifier: Apache-2.0
//
// hapsim - link-level simulator for relay-assisted HAP MIMO X networks
// Copyright (C) 2026 The hapsim authors
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

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "hapsim/errors.hpp"
#include "hapsim/network_config.hpp"
#include "hapsim/simulator.hpp"

namespace hapsim::cli {

// Validation failure in a scenario file; the message names the key.
class ScenarioError : public DomainError {
public:
    using DomainError::DomainError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SnrSweepSection {
    double start_db = 0.0;
    double stop_db = 30.0;
    double step_db = 2.5;
    bool baseline = true;
    bool operator==(const SnrSweepSection &) const = default;
};

struct AltitudeSweepSection {
    double start_m = 1000.0;
    double stop_m = 17500.0;
    double step_m = 250.0;
    bool operator==(const AltitudeSweepSection &) const = default;
};

struct SearchSection {
    double lo_m = 1000.0;
    double hi_m = 17500.0;
    double tol_m = 10.0;
    bool operator==(const SearchSection &) const = default;
};

/// Effective configuration after defaults are filled in. Powers are kept in
/// dB as written in the file; `network` carries the linear values.
struct Scenario {
    NetworkConfig network;
    double hap_power_db = 14.5;
    double relay_power_db = 14.5;
    double noise_power_db = 0.0;
    double geometry_dof_beta = 1.0;
    SnrSweepSection snr_sweep;
    AltitudeSweepSection altitude_sweep;
    SearchSection optimal_altitude;
    sim::MonteCarlo monte_carlo;

    bool operator==(const Scenario &) const = default;

    sim::SweepSpec snr_spec() const;
    sim::SweepSpec altitude_spec() const;
};

/// Parses and validates a scenario document. Unknown keys are rejected and
/// missing keys take their defaults.
Scenario parse_scenario(const nlohmann::json &doc);
Scenario load_scenario(const std::filesystem::path &path);

/// Fully resolved document; parse_scenario(to_json(s)) == s.
nlohmann::json to_json(const Scenario &s);

} // namespace hapsim::cli
