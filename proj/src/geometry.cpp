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

#include "hapsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hapsim/errors.hpp"

namespace hapsim::geometry {

namespace {

void require_positive(double value, const char *field)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(std::string(field) + " must be strictly positive and finite, got " +
                          std::to_string(value));
}

} // namespace

void LinkGeometry::validate() const
{
    require_positive(link_distance_m, "link_distance_m");
    require_positive(wavelength_m, "wavelength_m");
    require_positive(rx_spacing_m, "rx_spacing_m");
    require_positive(tx_spacing_m, "tx_spacing_m");
    if (!std::isfinite(aoa_rad) || !std::isfinite(aod_rad))
        throw DomainError("aoa_rad and aod_rad must be finite");

    const double spacing = std::max(rx_spacing_m, tx_spacing_m);
    if (!(link_distance_m > kFarFieldFactor * spacing))
        throw DomainError("link_distance_m must exceed 100 x max(rx_spacing_m, tx_spacing_m)");
}

void ScenarioLayout::validate() const
{
    require_positive(hap_altitude_m, "hap_altitude_m");
    require_positive(relay_altitude_m, "relay_altitude_m");
    require_positive(hap_spacing_m, "hap_spacing_m");
    require_positive(gs_spacing_m, "gs_spacing_m");
    if (!(gs_altitude_m >= 0.0) || !std::isfinite(gs_altitude_m))
        throw DomainError("gs_altitude_m must be non-negative and finite");
    if (!(gs_altitude_m < relay_altitude_m && relay_altitude_m < hap_altitude_m))
        throw DomainError("relay_altitude_m must lie strictly between gs_altitude_m and "
                          "hap_altitude_m");
}

double min_hap_separation(double link_distance_m, double wavelength_m, double dof_beta,
                          double gs_spacing_m)
{
    require_positive(link_distance_m, "link_distance_m");
    require_positive(wavelength_m, "wavelength_m");
    require_positive(dof_beta, "dof_beta");
    require_positive(gs_spacing_m, "gs_spacing_m");
    return (link_distance_m * wavelength_m) / (dof_beta * gs_spacing_m);
}

LinkDistances link_distances(const ScenarioLayout &layout)
{
    layout.validate();
    const double sd = layout.hap_altitude_m - layout.gs_altitude_m;
    double rd = layout.relay_altitude_m - layout.gs_altitude_m;
    double sr = sd - rd;
    // Subtracting from sd is exact when the subtrahend is at least sd/2, so
    // recompute the shorter leg from the longer one and the sum is exact.
    if (rd < sr)
        rd = sd - sr;
    if (!(sr > 0.0) || !(rd > 0.0))
        throw DomainError("link distances must be strictly positive");

    return {sd, sr, rd};
}

} // namespace hapsim::geometry
