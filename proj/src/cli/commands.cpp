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

#include "hapsim/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hapsim/capacity.hpp"
#include "hapsim/cli/csv.hpp"
#include "hapsim/cli/scenario.hpp"
#include "hapsim/geometry.hpp"
#include "hapsim/simulator.hpp"

namespace hapsim::cli {

namespace {

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> threads;
    bool dump_config = false;
    bool cross_check = false;
};

void add_common(CLI::App *cmd, Options &o, bool with_out)
{
    cmd->add_option("--config", o.config, "Scenario file (JSON)");
    if (with_out)
        cmd->add_option("--out", o.out, "Output CSV path (default: standard output)");
    cmd->add_option("--seed", o.seed, "Master seed override");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    cmd->add_flag("--dump-config", o.dump_config, "Print the effective scenario and exit");
}

Scenario load(const Options &o)
{
    Scenario s = o.config.empty() ? parse_scenario(nlohmann::json::object())
                                  : load_scenario(o.config);
    if (o.seed)
        s.monte_carlo.master_seed = *o.seed;
    if (o.trials)
        s.monte_carlo.trials = *o.trials;
    if (o.threads)
        s.monte_carlo.threads = *o.threads;
    return s;
}

void emit(const Options &o, const std::string &text, std::ostream &out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open output file " + o.out);
    f << text;
    f.close();
    if (!f)
        throw IoError("failed writing output file " + o.out);
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_geometry(const Scenario &s, std::ostream &out)
{
    const auto &net = s.network;
    const auto d = geometry::link_distances(net.layout);
    const double d_hap = geometry::min_hap_separation(d.source_destination_m, net.wavelength_m,
                                                      s.geometry_dof_beta, net.layout.gs_spacing_m);
    const int required = net.required_relay_antennas();
    const double far_field =
        geometry::kFarFieldFactor * net.element_spacing_m;

    out << "min_hap_separation_m=" << format_number(d_hap) << '\n'
        << "link_distance_m=" << format_number(d.source_destination_m) << '\n'
        << "wavelength_m=" << format_number(net.wavelength_m) << '\n'
        << "dof_beta=" << format_number(s.geometry_dof_beta) << '\n'
        << "gs_spacing_m=" << format_number(net.layout.gs_spacing_m) << '\n'
        << "relay_antennas_required=" << required << '\n'
        << "relay_antennas_configured=" << net.relay_antennas << '\n'
        << "network_dof=" << format_number(capacity::dof(net.num_haps, net.num_gs,
                                                         net.antennas_per_node))
        << '\n'
        << "d_SD_m=" << format_number(d.source_destination_m) << '\n'
        << "d_SR_m=" << format_number(d.source_relay_m) << '\n'
        << "d_RD_m=" << format_number(d.relay_destination_m) << '\n'
        << "hap_spacing_feasible=" << yes_no(net.layout.hap_spacing_m >= d_hap) << '\n'
        << "relay_antennas_feasible=" << yes_no(net.relay_antennas >= required) << '\n'
        << "far_field_feasible="
        << yes_no(d.source_relay_m > far_field && d.relay_destination_m > far_field) << '\n';
    return kExitOk;
}

int cmd_snr_sweep(const Scenario &s, const Options &o, std::ostream &out)
{
    const auto result = sim::run_snr_sweep(s.network, s.snr_spec(), s.snr_sweep.baseline);
    std::ostringstream csv;
    write_snr_csv(csv, result);
    emit(o, csv.str(), out);
    return result.relay.all_failed() ? kExitSingular : kExitOk;
}

int cmd_altitude_sweep(const Scenario &s, const Options &o, std::ostream &out)
{
    const auto spec = s.altitude_spec();
    const auto curve = sim::run_altitude_sweep(s.network, spec);
    std::ostringstream csv;
    write_altitude_csv(csv, curve);
    emit(o, csv.str(), out);
    if (curve.all_failed())
        return kExitSingular;

    // With the CSV on standard output the summary goes after it.
    out << "optimal_altitude_m=" << format_number(curve.argmax_x) << '\n';
    if (o.cross_check) {
        const double golden = sim::find_optimal_altitude(s.network, spec.start, spec.stop,
                                                         s.optimal_altitude.tol_m, s.monte_carlo);
        const double allowed = std::max(s.optimal_altitude.tol_m, spec.step);
        out << "golden_section_altitude_m=" << format_number(golden) << '\n'
            << "cross_check=" << (std::abs(golden - curve.argmax_x) <= allowed ? "agree" : "disagree")
            << '\n';
    }
    return kExitOk;
}

int cmd_optimal_altitude(const Scenario &s, std::ostream &out)
{
    const auto &q = s.optimal_altitude;
    const double x = sim::find_optimal_altitude(s.network, q.lo_m, q.hi_m, q.tol_m, s.monte_carlo);
    out << "optimal_altitude_m=" << format_number(x) << '\n';
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Sum-rate simulator for HAP MIMO X networks with a tethered-balloon relay",
                 "hapsim"};
    app.require_subcommand(1);

    Options o;
    auto *geometry = app.add_subcommand("geometry", "Report HAP spacing and relay feasibility");
    add_common(geometry, o, false);
    auto *snr = app.add_subcommand("snr-sweep", "Sum-rate versus SNR");
    add_common(snr, o, true);
    auto *alt = app.add_subcommand("altitude-sweep", "Sum-rate versus relay altitude");
    add_common(alt, o, true);
    alt->add_flag("--cross-check", o.cross_check,
                  "Also run the golden-section search and compare with the grid argmax");
    auto *opt = app.add_subcommand("optimal-altitude", "Golden-section search for the relay altitude");
    add_common(opt, o, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        const Scenario s = load(o);
        if (o.dump_config) {
            out << to_json(s).dump(2) << '\n';
            return kExitOk;
        }
        if (geometry->parsed())
            return cmd_geometry(s, out);
        if (snr->parsed())
            return cmd_snr_sweep(s, o, out);
        if (alt->parsed())
            return cmd_altitude_sweep(s, o, out);
        return cmd_optimal_altitude(s, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SingularityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitSingular;
    }
}

} // namespace hapsim::cli
