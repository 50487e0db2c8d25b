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

#include "hapsim/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hapsim::cli {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

void write_snr_csv(std::ostream &os, const sim::SnrSweepResult &result)
{
    os << "snr_db,mean_rate_bps_hz,std_err,trials_failed,baseline_rate_bps_hz\n";
    const auto &pts = result.relay.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto &p = pts[i];
        os << format_number(p.x) << ',' << format_number(p.mean_rate) << ','
           << format_number(p.std_err) << ',' << p.trials_failed << ',';
        if (result.baseline)
            os << format_number(result.baseline->points.at(i).mean_rate);
        os << '\n';
    }
}

void write_altitude_csv(std::ostream &os, const sim::SumRateCurve &curve)
{
    os << "relay_altitude_m,mean_rate_bps_hz,std_err,trials_failed\n";
    for (const auto &p : curve.points)
        os << format_number(p.x) << ',' << format_number(p.mean_rate) << ','
           << format_number(p.std_err) << ',' << p.trials_failed << '\n';
}

} // namespace hapsim::cli
