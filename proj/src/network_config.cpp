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

#include "hapsim/network_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hapsim/errors.hpp"

namespace hapsim {

namespace {

void require_positive(double value, const std::string &field)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError(field + " must be strictly positive and finite");
}

void require_size(const std::vector<double> &v, int expected, const std::string &field)
{
    if (static_cast<int>(v.size()) != expected)
        throw DomainError(field + " must have " + std::to_string(expected) + " entries, has " +
                          std::to_string(v.size()));
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

double pick(const std::vector<double> &angles, std::size_t link)
{
    return angles[link % angles.size()];
}

} // namespace

NetworkConfig NetworkConfig::make(int num_haps, int num_gs)
{
    NetworkConfig cfg;
    cfg.num_haps = num_haps;
    cfg.num_gs = num_gs;
    cfg.relay_antennas = std::max(1, (num_haps - 1) * (num_gs - 1));
    cfg.antennas_per_node = cfg.relay_antennas;
    cfg.kappa_up_db.assign(static_cast<std::size_t>(std::max(num_haps, 0)), 30.0);
    cfg.kappa_down_db.assign(static_cast<std::size_t>(std::max(num_gs, 0)), 15.0);
    cfg.ref_gains_up.assign(static_cast<std::size_t>(std::max(num_haps, 0)), 1.0);
    cfg.ref_gains_down.assign(static_cast<std::size_t>(std::max(num_gs, 0)), 1.0);
    return cfg;
}

int NetworkConfig::required_relay_antennas() const { return (num_haps - 1) * (num_gs - 1); }

void NetworkConfig::validate() const
{
    if (num_haps < 1)
        throw DomainError("num_haps must be at least 1");
    if (num_gs < 1)
        throw DomainError("num_gs must be at least 1");
    if (antennas_per_node < 1)
        throw DomainError("antennas_per_node must be at least 1");
    if (relay_antennas < 1)
        throw DomainError("relay_antennas must be at least 1");
    if (relay_antennas < required_relay_antennas())
        throw DomainError("relay_antennas must be at least (num_haps-1)*(num_gs-1) = " +
                          std::to_string(required_relay_antennas()));
    // H_i is relay x A and G_j is A x relay; both have full column rank only
    // when the two counts agree.
    if (antennas_per_node != relay_antennas)
        throw DomainError("antennas_per_node must equal relay_antennas so that both hop "
                          "channels can have full column rank");
    require_positive(hap_power, "hap_power");
    require_positive(relay_power, "relay_power");
    require_positive(noise_power, "noise_power");
    if (streams_per_tx && *streams_per_tx < 1)
        throw DomainError("streams_per_tx must be at least 1");

    require_size(kappa_up_db, num_haps, "kappa_up_db");
    require_size(kappa_down_db, num_gs, "kappa_down_db");
    if (!kappa_direct_db.empty())
        require_size(kappa_direct_db, num_gs, "kappa_direct_db");
    require_size(ref_gains_up, num_haps, "ref_gains_up");
    require_size(ref_gains_down, num_gs, "ref_gains_down");
    for (const auto *v : {&kappa_up_db, &kappa_down_db, &kappa_direct_db})
        for (double k : *v)
            if (std::isnan(k) || k == std::numeric_limits<double>::infinity())
                throw DomainError("Rician factors in dB must be finite or -inf");
    for (double g : ref_gains_up)
        require_positive(g, "ref_gains_up");
    for (double g : ref_gains_down)
        require_positive(g, "ref_gains_down");

    layout.validate();
    require_positive(wavelength_m, "wavelength_m");
    require_positive(element_spacing_m, "element_spacing_m");
    if (aoa_deg.empty() || aod_deg.empty())
        throw DomainError("aoa_deg and aod_deg need at least one entry");
    for (const auto *v : {&aoa_deg, &aod_deg})
        for (double a : *v)
            if (!std::isfinite(a))
                throw DomainError("steering angles must be finite");
}

channel::RicianLink NetworkConfig::uplink(int hap) const
{
    const auto d = geometry::link_distances(layout);
    const auto i = static_cast<std::size_t>(hap);
    channel::RicianLink link;
    link.kappa = channel::db_to_linear(kappa_up_db.at(i));
    link.ref_gain = ref_gains_up.at(i);
    link.distance_m = d.source_relay_m;
    link.rows = relay_antennas;
    link.cols = antennas_per_node;
    link.geometry = {d.source_relay_m, wavelength_m, deg_to_rad(pick(aoa_deg, i)),
                     deg_to_rad(pick(aod_deg, i)), element_spacing_m, element_spacing_m};
    return link;
}

channel::RicianLink NetworkConfig::downlink(int gs) const
{
    const auto d = geometry::link_distances(layout);
    const auto j = static_cast<std::size_t>(gs);
    const std::size_t l = static_cast<std::size_t>(num_haps) + j;
    channel::RicianLink link;
    link.kappa = channel::db_to_linear(kappa_down_db.at(j));
    link.ref_gain = ref_gains_down.at(j);
    link.distance_m = d.relay_destination_m;
    link.rows = antennas_per_node;
    link.cols = relay_antennas;
    link.geometry = {d.relay_destination_m, wavelength_m, deg_to_rad(pick(aoa_deg, l)),
                     deg_to_rad(pick(aod_deg, l)), element_spacing_m, element_spacing_m};
    return link;
}

channel::RicianLink NetworkConfig::direct(int hap, int gs) const
{
    const auto d = geometry::link_distances(layout);
    const auto i = static_cast<std::size_t>(hap);
    const auto j = static_cast<std::size_t>(gs);
    const std::size_t l = static_cast<std::size_t>(num_haps + num_gs) +
                          i * static_cast<std::size_t>(num_gs) + j;
    const auto &kappas = kappa_direct_db.empty() ? kappa_down_db : kappa_direct_db;
    channel::RicianLink link;
    link.kappa = channel::db_to_linear(kappas.at(j));
    link.ref_gain = ref_gains_up.at(i);
    link.distance_m = d.source_destination_m;
    link.rows = antennas_per_node;
    link.cols = antennas_per_node;
    link.geometry = {d.source_destination_m, wavelength_m, deg_to_rad(pick(aoa_deg, l)),
                     deg_to_rad(pick(aod_deg, l)), element_spacing_m, element_spacing_m};
    return link;
}

} // namespace hapsim
