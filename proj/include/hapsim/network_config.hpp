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
#include <optional>
#include <vector>

#include "hapsim/channel.hpp"
#include "hapsim/geometry.hpp"

namespace hapsim {

// Where the swept SNR is referenced. `transmit` applies power / (sigma^2 N_T)
// before path loss; `receive` drops the path-loss factor so the SNR is the
// per-stream value seen at the receiver.
enum class SnrReference { transmit, receive };

/// Full scenario for the M x N X network with one decode-and-forward relay.
///
/// Uplink channels H_i (HAP i -> relay) are relay_antennas x antennas_per_node.
/// Downlink channels G_j (relay -> GS j) are antennas_per_node x relay_antennas.
/// Direct channels (HAP i -> GS j, used by the no-relay baseline) are
/// antennas_per_node x antennas_per_node.
struct NetworkConfig {
    int num_haps = 3;
    int num_gs = 3;
    int antennas_per_node = 4;
    int relay_antennas = 4;

    // Linear powers.
    double hap_power = 1.0;
    double relay_power = 1.0;
    double noise_power = 1.0;
    // Streams per transmitter N_T; unset means the column count of each channel.
    std::optional<int> streams_per_tx;

    std::vector<double> kappa_up_db;     // one per HAP
    std::vector<double> kappa_down_db;   // one per GS
    std::vector<double> kappa_direct_db; // one per GS; empty means kappa_down_db
    std::vector<double> ref_gains_up;    // alpha_i, one per HAP
    std::vector<double> ref_gains_down;  // psi_j, one per GS

    geometry::ScenarioLayout layout;

    double wavelength_m = 0.00625;
    double element_spacing_m = 0.003125;
    // Steering angles; link l uses entry l modulo the list length
    // (uplinks first, then downlinks, then direct links in row-major order).
    std::vector<double> aoa_deg{30.0};
    std::vector<double> aod_deg{30.0};

    bool sum_all_streams = false;
    SnrReference snr_reference = SnrReference::transmit;

    /// Defaults for an M x N network: relay with max(1, (M-1)(N-1)) antennas,
    /// the same count at every HAP and GS, kappa_up = 30 dB, kappa_down = 15 dB,
    /// unit powers and reference gains.
    static NetworkConfig make(int num_haps, int num_gs);

    /// (M-1)(N-1), the relay antenna count interference alignment needs.
    int required_relay_antennas() const;

    void validate() const;

    channel::RicianLink uplink(int hap) const;
    channel::RicianLink downlink(int gs) const;
    channel::RicianLink direct(int hap, int gs) const;

    bool operator==(const NetworkConfig &) const = default;
};

} // namespace hapsim
