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

#include "hapsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hapsim/errors.hpp"

namespace hapsim::channel {

namespace {

ComplexVector steering_vector(double spacing_over_lambda, double angle_rad, Index n)
{
    const double phase_step = 2.0 * std::numbers::pi * spacing_over_lambda * std::sin(angle_rad);
    ComplexVector a(n);
    for (Index m = 0; m < n; ++m)
        a(m) = std::polar(1.0, phase_step * static_cast<double>(m));
    return a;
}

void require_dims(Index rows, Index cols)
{
    if (rows < 1 || cols < 1)
        throw DomainError("channel dimensions must be at least 1x1, got " + std::to_string(rows) +
                          "x" + std::to_string(cols));
}

} // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void RicianLink::validate() const
{
    if (!(kappa >= 0.0) || std::isnan(kappa))
        throw DomainError("kappa must be non-negative");
    if (!(ref_gain > 0.0) || !std::isfinite(ref_gain))
        throw DomainError("ref_gain must be strictly positive");
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("distance_m must be strictly positive");
    require_dims(rows, cols);
    geometry.validate();
}

ComplexMatrix los_channel(const geometry::LinkGeometry &geometry, Index rows, Index cols)
{
    require_dims(rows, cols);
    const ComplexVector a_rx =
        steering_vector(geometry.rx_spacing_m / geometry.wavelength_m, geometry.aoa_rad, rows);
    const ComplexVector a_tx =
        steering_vector(geometry.tx_spacing_m / geometry.wavelength_m, geometry.aod_rad, cols);
    return a_rx * a_tx.transpose();
}

ComplexMatrix rayleigh_channel(Index rows, Index cols, RandomStream &rng)
{
    require_dims(rows, cols);
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));
    ComplexMatrix h(rows, cols);
    // Column-major fill order is part of the reproducibility contract.
    for (Index c = 0; c < cols; ++c)
        for (Index r = 0; r < rows; ++r) {
            const double re = component(rng);
            const double im = component(rng);
            h(r, c) = Complex(re, im);
        }
    return h;
}

ComplexMatrix rician_mix(double kappa, const ComplexMatrix &los, const ComplexMatrix &nlos)
{
    if (!(kappa >= 0.0) || std::isnan(kappa))
        throw DomainError("kappa must be non-negative");
    if (los.rows() != nlos.rows() || los.cols() != nlos.cols())
        throw DomainError("rician_mix: los is " + std::to_string(los.rows()) + "x" +
                          std::to_string(los.cols()) + " but nlos is " +
                          std::to_string(nlos.rows()) + "x" + std::to_string(nlos.cols()));
    if (std::isinf(kappa))
        return los;
    const double w_los = std::sqrt(kappa / (1.0 + kappa));
    const double w_nlos = std::sqrt(1.0 / (1.0 + kappa));
    return w_los * los + w_nlos * nlos;
}

ComplexMatrix apply_path_loss(const ComplexMatrix &h_bar, double ref_gain, double distance_m)
{
    if (!(ref_gain > 0.0) || !std::isfinite(ref_gain))
        throw DomainError("ref_gain must be strictly positive");
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw DomainError("distance_m must be strictly positive");
    return (ref_gain / (distance_m * distance_m)) * h_bar;
}

ComplexMatrix compose_link(const RicianLink &link, const ComplexMatrix &nlos)
{
    link.validate();
    return apply_path_loss(rician_mix(link.kappa, los_channel(link.geometry, link.rows, link.cols),
                                      nlos),
                           link.ref_gain, link.distance_m);
}

ComplexMatrix synth_link(const RicianLink &link, RandomStream &rng)
{
    link.validate();
    return compose_link(link, rayleigh_channel(link.rows, link.cols, rng));
}

} // namespace hapsim::channel
