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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hapsim/capacity.hpp"
#include "hapsim/network_config.hpp"

namespace hapsim::sim {

enum class SweepVariable { snr_db, relay_altitude_m };

struct MonteCarlo {
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::size_t threads = 0; // 0: hardware concurrency

    bool operator==(const MonteCarlo &) const = default;
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::snr_db;
    double start = 0.0;
    double stop = 30.0;
    double step = 5.0;
    MonteCarlo monte_carlo;

    void validate() const;
    /// start + k * step for every k that stays within stop (1e-9 step slack).
    std::vector<double> grid() const;
};

struct SweepPoint {
    double x = 0.0;
    double mean_rate = 0.0;    // NaN when every trial failed
    double std_err = 0.0;
    std::size_t trials_failed = 0;
    std::optional<std::string> error;
};

struct SumRateCurve {
    std::vector<SweepPoint> points;
    double argmax_x = 0.0; // smallest x among maximal means; NaN if no point succeeded

    bool all_failed() const;
};

struct SnrSweepResult {
    SumRateCurve relay;
    std::optional<SumRateCurve> baseline;
};

/// NLoS draws of one Monte Carlo trial. They depend only on
/// (master seed, trial), never on the sweep point.
struct TrialDraw {
    std::vector<ComplexMatrix> uplink;
    std::vector<ComplexMatrix> downlink;
    std::vector<ComplexMatrix> direct; // row-major (hap, gs); empty unless requested
};

TrialDraw draw_trial(const NetworkConfig &cfg, std::uint64_t master_seed, std::size_t trial,
                     bool with_direct);

struct TrialChannels {
    std::vector<ComplexMatrix> uplink;
    std::vector<ComplexMatrix> downlink;
    capacity::DirectChannels direct;
};

/// Full link matrices (LoS, Rician mixing, path loss) for one trial.
TrialChannels build_channels(const NetworkConfig &cfg, const TrialDraw &draw);

/// Config with both hops set to per-stream SNR power / (sigma^2 N_T) = snr.
NetworkConfig at_snr(const NetworkConfig &cfg, double snr_db);
NetworkConfig at_relay_altitude(const NetworkConfig &cfg, double relay_altitude_m);

enum class Metric { relay, baseline };

/// Per-trial rates; nullopt marks a trial that raised SingularityError.
std::vector<std::optional<double>> evaluate_trials(const NetworkConfig &cfg,
                                                   const MonteCarlo &mc, Metric metric);

SweepPoint summarize(double x, const std::vector<std::optional<double>> &rates);

SnrSweepResult run_snr_sweep(const NetworkConfig &cfg, const SweepSpec &spec,
                             bool with_baseline);

SumRateCurve run_altitude_sweep(const NetworkConfig &cfg, const SweepSpec &spec);

/// Golden-section search for the relay altitude maximizing the Monte Carlo
/// mean DF capacity. Every evaluation reuses the same trial seeds.
double find_optimal_altitude(const NetworkConfig &cfg, double lo_m, double hi_m, double tol_m,
                             const MonteCarlo &mc);

} // namespace hapsim::sim
