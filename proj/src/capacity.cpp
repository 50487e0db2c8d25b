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

#include "hapsim/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hapsim/errors.hpp"
#include "hapsim/zf.hpp"

namespace hapsim::capacity {

namespace {

// log2(1 + snr) without losing tiny SNRs to rounding.
double bits(double snr_linear)
{
    return std::log1p(snr_linear) / std::numbers::ln2;
}

int uniform_columns(std::span<const ComplexMatrix> channels, const char *hop)
{
    if (channels.empty())
        throw DomainError(std::string(hop) + ": no channels supplied");
    const Index cols = channels.front().cols();
    for (const auto &h : channels)
        if (h.cols() != cols)
            throw DomainError(std::string(hop) + ": channels differ in column count");
    return static_cast<int>(cols);
}

} // namespace

double dof(int num_tx, int num_rx, int antennas)
{
    if (num_tx < 1 || num_rx < 1 || antennas < 1)
        throw DomainError("dof: M, N and A must be at least 1");
    return static_cast<double>(num_tx) * num_rx * antennas / (num_tx + num_rx - 1);
}

double asymptotic_capacity(double dof_beta, double snr_linear)
{
    if (!(snr_linear > 1.0))
        throw DomainError("asymptotic_capacity: snr_linear must exceed 1");
    return dof_beta * std::log2(snr_linear);
}

double hop_sum_rate(std::span<const ComplexMatrix> channels, double power, double noise,
                    int streams, bool all_streams)
{
    if (!(power > 0.0) || !(noise > 0.0))
        throw DomainError("hop_sum_rate: power and noise must be strictly positive");
    if (streams < 1)
        throw DomainError("hop_sum_rate: streams must be at least 1");
    const double snr_scale = power / (noise * streams);

    double rate = 0.0;
    for (const auto &h : channels) {
        if (all_streams) {
            for (const auto &s : zf::zf_all_streams(h, snr_scale))
                rate += bits(s.snr_linear);
        } else {
            rate += bits(zf::zf_stream_snr(h, 0, snr_scale).snr_linear);
        }
    }
    return rate;
}

CapacityBreakdown df_capacity(std::span<const ComplexMatrix> uplink_channels,
                              std::span<const ComplexMatrix> downlink_channels,
                              const NetworkConfig &cfg)
{
    const int m = cfg.num_haps;
    const int n = cfg.num_gs;
    if (static_cast<int>(uplink_channels.size()) != m)
        throw DomainError("df_capacity: expected " + std::to_string(m) + " uplink channels, got " +
                          std::to_string(uplink_channels.size()));
    if (static_cast<int>(downlink_channels.size()) != n)
        throw DomainError("df_capacity: expected " + std::to_string(n) +
                          " downlink channels, got " + std::to_string(downlink_channels.size()));

    const int up_streams = cfg.streams_per_tx.value_or(uniform_columns(uplink_channels, "uplink"));
    const int down_streams =
        cfg.streams_per_tx.value_or(uniform_columns(downlink_channels, "downlink"));

    CapacityBreakdown out;
    out.uplink_rate = hop_sum_rate(uplink_channels, cfg.hap_power, cfg.noise_power, up_streams,
                                   cfg.sum_all_streams);
    out.downlink_rate = hop_sum_rate(downlink_channels, cfg.relay_power, cfg.noise_power,
                                     down_streams, cfg.sum_all_streams);
    out.dof_prefactor = static_cast<double>(m) * n / (m + n - 1);
    out.total = out.dof_prefactor * std::min(out.uplink_rate, out.downlink_rate);
    return out;
}

DirectChannels::DirectChannels(int num_haps, int num_gs)
    : num_haps_(num_haps), num_gs_(num_gs),
      links_(static_cast<std::size_t>(num_haps) * static_cast<std::size_t>(num_gs))
{
}

ComplexMatrix &DirectChannels::at(int hap, int gs)
{
    if (hap < 0 || hap >= num_haps_ || gs < 0 || gs >= num_gs_)
        throw DomainError("DirectChannels: index out of range");
    return links_[static_cast<std::size_t>(hap) * num_gs_ + gs];
}

const ComplexMatrix &DirectChannels::at(int hap, int gs) const
{
    return const_cast<DirectChannels *>(this)->at(hap, gs);
}

double no_relay_baseline(const DirectChannels &direct, const NetworkConfig &cfg)
{
    const int m = cfg.num_haps;
    const int n = cfg.num_gs;
    if (direct.num_haps() != m || direct.num_gs() != n)
        throw DomainError("no_relay_baseline: direct channel grid does not match M x N");
    if (!(cfg.hap_power > 0.0) || !(cfg.noise_power > 0.0))
        throw DomainError("no_relay_baseline: power and noise must be strictly positive");

    double rate = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const auto &h = direct.at(i, j);
            const int streams = cfg.streams_per_tx.value_or(static_cast<int>(h.cols()));
            const double scale = cfg.hap_power / (cfg.noise_power * streams);
            for (const auto &s : zf::zf_all_streams(h, scale))
                rate += bits(s.snr_linear);
        }
    return rate / (static_cast<double>(m) * n);
}

} // namespace hapsim::capacity
