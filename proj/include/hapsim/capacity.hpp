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

#include <optional>
#include <span>
#include <vector>

#include "hapsim/linalg.hpp"
#include "hapsim/network_config.hpp"

namespace hapsim::capacity {

/// Degrees of freedom of the M x N X network with A antennas per node,
/// MNA / (M + N - 1).
double dof(int num_tx, int num_rx, int antennas);

/// Leading high-SNR term beta * log2(snr). Requires snr_linear > 1.
double asymptotic_capacity(double dof_beta, double snr_linear);

/// Sum over channels of log2(1 + zero-forcing SNR). By default one stream per
/// channel is counted, the first column against the rest; with
/// `all_streams` every column contributes.
double hop_sum_rate(std::span<const ComplexMatrix> channels, double power, double noise,
                    int streams, bool all_streams = false);

struct CapacityBreakdown {
    double uplink_rate = 0.0;   // bits/s/Hz, HAPs -> relay
    double downlink_rate = 0.0; // bits/s/Hz, relay -> GSs
    double dof_prefactor = 0.0; // MN / (M + N - 1)
    double total = 0.0;
};

/// Decode-and-forward relay capacity
/// MN / (M + N - 1) * min(C_uplink, C_downlink).
CapacityBreakdown df_capacity(std::span<const ComplexMatrix> uplink_channels,
                              std::span<const ComplexMatrix> downlink_channels,
                              const NetworkConfig &cfg);

/// Direct HAP -> GS channels, stored row-major by (hap, gs).
class DirectChannels {
public:
    DirectChannels() = default;
    DirectChannels(int num_haps, int num_gs);

    int num_haps() const { return num_haps_; }
    int num_gs() const { return num_gs_; }
    ComplexMatrix &at(int hap, int gs);
    const ComplexMatrix &at(int hap, int gs) const;

private:
    int num_haps_ = 0;
    int num_gs_ = 0;
    std::vector<ComplexMatrix> links_;
};

/// Relay-free reference: orthogonal time sharing over the MN pairs, each
/// decoding all of its streams with zero-forcing.
double no_relay_baseline(const DirectChannels &direct, const NetworkConfig &cfg);

} // namespace hapsim::capacity
