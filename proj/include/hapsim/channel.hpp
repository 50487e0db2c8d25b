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

#include "hapsim/geometry.hpp"
#include "hapsim/linalg.hpp"
#include "hapsim/random.hpp"

namespace hapsim::channel {

double db_to_linear(double db);

/// Parameters of one synthesized Rician link.
struct RicianLink {
    double kappa = 0.0;      ///< linear LoS-to-NLoS power ratio
    double ref_gain = 1.0;   ///< channel gain at the 1 m reference distance
    double distance_m = 1.0;
    Index rows = 1;          ///< receive antennas
    Index cols = 1;          ///< transmit antennas
    geometry::LinkGeometry geometry;

    void validate() const;
};

/// Rank-one LoS channel a_R * a_T^T built from uniform-linear-array steering
/// vectors, a[m] = exp(j 2 pi (d / lambda) m sin(theta)).
ComplexMatrix los_channel(const geometry::LinkGeometry &geometry, Index rows, Index cols);

/// I.i.d. CN(0, 1) entries.
ComplexMatrix rayleigh_channel(Index rows, Index cols, RandomStream &rng);

/// sqrt(kappa / (1 + kappa)) * los + sqrt(1 / (1 + kappa)) * nlos
ComplexMatrix rician_mix(double kappa, const ComplexMatrix &los, const ComplexMatrix &nlos);

/// (ref_gain / distance^2) * h_bar
ComplexMatrix apply_path_loss(const ComplexMatrix &h_bar, double ref_gain, double distance_m);

// Builds the link from an already drawn NLoS matrix. Sweeps use this to reuse
// one set of draws at every sweep point.
ComplexMatrix compose_link(const RicianLink &link, const ComplexMatrix &nlos);

ComplexMatrix synth_link(const RicianLink &link, RandomStream &rng);

} // namespace hapsim::channel
