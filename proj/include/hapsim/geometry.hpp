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

namespace hapsim::geometry {

// Far-field requirement: link distance must exceed this multiple of the
// largest antenna spacing.
inline constexpr double kFarFieldFactor = 100.0;

/// One transmitter-receiver link as seen by the steering-vector model.
struct LinkGeometry {
    double link_distance_m = 1000.0;
    double wavelength_m = 0.00625;
    double aoa_rad = 0.0;      ///< angle of arrival at the receive array
    double aod_rad = 0.0;      ///< angle of departure at the transmit array
    double rx_spacing_m = 0.003125;
    double tx_spacing_m = 0.003125;

    /// Throws DomainError if a field is non-positive or the link is not far-field.
    void validate() const;
};

/// Vertical stack: HAPs above the relay above the ground stations.
struct ScenarioLayout {
    double hap_altitude_m = 18000.0;
    double relay_altitude_m = 17000.0;
    double gs_altitude_m = 0.0;
    double hap_spacing_m = 1125.0;
    double gs_spacing_m = 0.1;

    void validate() const;

    bool operator==(const ScenarioLayout &) const = default;
};

struct LinkDistances {
    double source_destination_m; // HAP to ground station
    double source_relay_m;       // HAP to relay
    double relay_destination_m;  // relay to ground station
};

/// Minimal inter-HAP spacing for uncorrelated LoS-MIMO links:
/// d_HAP = L * lambda / (beta * d_GS).
double min_hap_separation(double link_distance_m, double wavelength_m, double dof_beta,
                          double gs_spacing_m);

/// Distances along the vertical stack. source_relay_m + relay_destination_m
/// equals source_destination_m exactly (bitwise).
LinkDistances link_distances(const ScenarioLayout &layout);

} // namespace hapsim::geometry
