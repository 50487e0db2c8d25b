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

#include "hapsim/cli/scenario.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "hapsim/channel.hpp"

namespace hapsim::cli {

using nlohmann::json;

namespace {

// Reads one object section and records which keys were consumed so that
// leftovers can be reported as unknown.
class Section {
public:
    Section(const json &doc, std::string name) : name_(std::move(name))
    {
        if (doc.contains(name_)) {
            obj_ = &doc.at(name_);
            if (!obj_->is_object())
                throw ScenarioError(name_ + ": expected an object");
        }
    }

    bool has(const std::string &key)
    {
        seen_.insert(key);
        return obj_ && obj_->contains(key) && !obj_->at(key).is_null();
    }

    std::string path(const std::string &key) const { return name_ + "." + key; }

    double number(const std::string &key, double fallback)
    {
        if (!has(key))
            return fallback;
        const auto &v = obj_->at(key);
        if (!v.is_number())
            throw ScenarioError(path(key) + ": expected a number");
        return v.get<double>();
    }

    std::int64_t integer(const std::string &key, std::int64_t fallback)
    {
        if (!has(key))
            return fallback;
        const auto &v = obj_->at(key);
        if (!v.is_number_integer())
            throw ScenarioError(path(key) + ": expected an integer");
        return v.get<std::int64_t>();
    }

    std::optional<std::int64_t> optional_integer(const std::string &key)
    {
        if (!has(key))
            return std::nullopt;
        return integer(key, 0);
    }

    std::uint64_t unsigned_integer(const std::string &key, std::uint64_t fallback)
    {
        if (!has(key))
            return fallback;
        const auto &v = obj_->at(key);
        if (v.is_number_unsigned())
            return v.get<std::uint64_t>();
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw ScenarioError(path(key) + ": expected a non-negative integer");
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }

    bool boolean(const std::string &key, bool fallback)
    {
        if (!has(key))
            return fallback;
        const auto &v = obj_->at(key);
        if (!v.is_boolean())
            throw ScenarioError(path(key) + ": expected true or false");
        return v.get<bool>();
    }

    std::string string(const std::string &key, const std::string &fallback)
    {
        if (!has(key))
            return fallback;
        const auto &v = obj_->at(key);
        if (!v.is_string())
            throw ScenarioError(path(key) + ": expected a string");
        return v.get<std::string>();
    }

    // A scalar is broadcast to `count` entries; an array must have exactly `count`.
    std::vector<double> per_node(const std::string &key, double fallback, int count)
    {
        const auto n = static_cast<std::size_t>(std::max(count, 0));
        if (!has(key))
            return std::vector<double>(n, fallback);
        const auto &v = obj_->at(key);
        if (v.is_number())
            return std::vector<double>(n, v.get<double>());
        auto out = number_list(key);
        if (out.size() != n)
            throw ScenarioError(path(key) + ": expected " + std::to_string(n) +
                                " entries, got " + std::to_string(out.size()));
        return out;
    }

    std::vector<double> list(const std::string &key, std::vector<double> fallback)
    {
        if (!has(key))
            return fallback;
        if (obj_->at(key).is_number())
            return {obj_->at(key).get<double>()};
        auto out = number_list(key);
        if (out.empty())
            throw ScenarioError(path(key) + ": needs at least one entry");
        return out;
    }

    void reject_unknown() const
    {
        if (!obj_)
            return;
        for (const auto &[key, value] : obj_->items())
            if (!seen_.count(key))
                throw ScenarioError("unknown key '" + path(key) + "'");
    }

private:
    std::vector<double> number_list(const std::string &key)
    {
        const auto &v = obj_->at(key);
        if (!v.is_array())
            throw ScenarioError(path(key) + ": expected a number or an array of numbers");
        std::vector<double> out;
        for (const auto &e : v) {
            if (!e.is_number())
                throw ScenarioError(path(key) + ": array entries must be numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::string name_;
    const json *obj_ = nullptr;
    std::set<std::string> seen_;
};

const std::set<std::string> kSections{"network",  "layout",         "propagation",
                                      "geometry", "snr_sweep",      "altitude_sweep",
                                      "optimal_altitude", "monte_carlo"};

int checked_int(std::int64_t v, const std::string &path, std::int64_t min)
{
    if (v < min || v > std::numeric_limits<int>::max())
        throw ScenarioError(path + ": must be an integer >= " + std::to_string(min));
    return static_cast<int>(v);
}

void require_positive(double v, const std::string &path)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw ScenarioError(path + ": must be strictly positive");
}

json optional_to_json(const std::optional<int> &v) { return v ? json(*v) : json(nullptr); }

} // namespace

sim::SweepSpec Scenario::snr_spec() const
{
    sim::SweepSpec spec;
    spec.variable = sim::SweepVariable::snr_db;
    spec.start = snr_sweep.start_db;
    spec.stop = snr_sweep.stop_db;
    spec.step = snr_sweep.step_db;
    spec.monte_carlo = monte_carlo;
    return spec;
}

sim::SweepSpec Scenario::altitude_spec() const
{
    sim::SweepSpec spec;
    spec.variable = sim::SweepVariable::relay_altitude_m;
    spec.start = altitude_sweep.start_m;
    spec.stop = altitude_sweep.stop_m;
    spec.step = altitude_sweep.step_m;
    spec.monte_carlo = monte_carlo;
    return spec;
}

Scenario parse_scenario(const json &doc)
{
    if (!doc.is_object())
        throw ScenarioError("scenario document must be a JSON object");
    for (const auto &[key, value] : doc.items())
        if (!kSections.count(key))
            throw ScenarioError("unknown key '" + key + "'");

    Scenario s;
    auto &net = s.network;

    Section n(doc, "network");
    net.num_haps = checked_int(n.integer("num_haps", 3), n.path("num_haps"), 1);
    net.num_gs = checked_int(n.integer("num_gs", 3), n.path("num_gs"), 1);
    const int required = std::max(1, (net.num_haps - 1) * (net.num_gs - 1));
    net.relay_antennas =
        checked_int(n.integer("relay_antennas", required), n.path("relay_antennas"), 1);
    net.antennas_per_node = checked_int(n.integer("antennas_per_node", net.relay_antennas),
                                        n.path("antennas_per_node"), 1);
    s.hap_power_db = n.number("hap_power_db", s.hap_power_db);
    s.relay_power_db = n.number("relay_power_db", s.relay_power_db);
    s.noise_power_db = n.number("noise_power_db", s.noise_power_db);
    if (auto st = n.optional_integer("streams_per_tx"))
        net.streams_per_tx = checked_int(*st, n.path("streams_per_tx"), 1);
    else
        net.streams_per_tx.reset();
    net.kappa_up_db = n.per_node("kappa_up_db", 30.0, net.num_haps);
    net.kappa_down_db = n.per_node("kappa_down_db", 15.0, net.num_gs);
    net.kappa_direct_db =
        n.has("kappa_direct_db") ? n.per_node("kappa_direct_db", 0.0, net.num_gs)
                                 : std::vector<double>{};
    net.ref_gains_up = n.per_node("ref_gain_up", 1.0, net.num_haps);
    net.ref_gains_down = n.per_node("ref_gain_down", 1.0, net.num_gs);
    net.sum_all_streams = n.boolean("sum_all_streams", false);
    const std::string ref = n.string("snr_reference", "transmit");
    if (ref == "transmit")
        net.snr_reference = SnrReference::transmit;
    else if (ref == "receive")
        net.snr_reference = SnrReference::receive;
    else
        throw ScenarioError(n.path("snr_reference") + ": expected \"transmit\" or \"receive\"");
    n.reject_unknown();

    for (auto [v, key] : {std::pair{s.hap_power_db, "hap_power_db"},
                          std::pair{s.relay_power_db, "relay_power_db"},
                          std::pair{s.noise_power_db, "noise_power_db"}})
        if (!std::isfinite(v))
            throw ScenarioError(n.path(key) + ": must be finite");
    net.hap_power = channel::db_to_linear(s.hap_power_db);
    net.relay_power = channel::db_to_linear(s.relay_power_db);
    net.noise_power = channel::db_to_linear(s.noise_power_db);

    Section l(doc, "layout");
    auto &lay = net.layout;
    lay.hap_altitude_m = l.number("hap_altitude_m", lay.hap_altitude_m);
    lay.relay_altitude_m = l.number("relay_altitude_m", lay.relay_altitude_m);
    lay.gs_altitude_m = l.number("gs_altitude_m", lay.gs_altitude_m);
    lay.hap_spacing_m = l.number("hap_spacing_m", lay.hap_spacing_m);
    lay.gs_spacing_m = l.number("gs_spacing_m", lay.gs_spacing_m);
    l.reject_unknown();

    Section p(doc, "propagation");
    net.wavelength_m = p.number("wavelength_m", net.wavelength_m);
    net.element_spacing_m = p.number("element_spacing_m", net.element_spacing_m);
    net.aoa_deg = p.list("aoa_deg", net.aoa_deg);
    net.aod_deg = p.list("aod_deg", net.aod_deg);
    p.reject_unknown();

    Section g(doc, "geometry");
    s.geometry_dof_beta = g.number("dof_beta", s.geometry_dof_beta);
    require_positive(s.geometry_dof_beta, g.path("dof_beta"));
    g.reject_unknown();

    Section ss(doc, "snr_sweep");
    s.snr_sweep.start_db = ss.number("start_db", s.snr_sweep.start_db);
    s.snr_sweep.stop_db = ss.number("stop_db", s.snr_sweep.stop_db);
    s.snr_sweep.step_db = ss.number("step_db", s.snr_sweep.step_db);
    s.snr_sweep.baseline = ss.boolean("baseline", s.snr_sweep.baseline);
    ss.reject_unknown();

    Section as(doc, "altitude_sweep");
    s.altitude_sweep.start_m = as.number("start_m", s.altitude_sweep.start_m);
    s.altitude_sweep.stop_m = as.number("stop_m", s.altitude_sweep.stop_m);
    s.altitude_sweep.step_m = as.number("step_m", s.altitude_sweep.step_m);
    as.reject_unknown();

    Section oa(doc, "optimal_altitude");
    s.optimal_altitude.lo_m = oa.number("lo_m", s.optimal_altitude.lo_m);
    s.optimal_altitude.hi_m = oa.number("hi_m", s.optimal_altitude.hi_m);
    s.optimal_altitude.tol_m = oa.number("tol_m", s.optimal_altitude.tol_m);
    require_positive(s.optimal_altitude.tol_m, oa.path("tol_m"));
    oa.reject_unknown();

    Section mc(doc, "monte_carlo");
    s.monte_carlo.trials = mc.unsigned_integer("trials", s.monte_carlo.trials);
    if (s.monte_carlo.trials < 1)
        throw ScenarioError(mc.path("trials") + ": must be at least 1");
    s.monte_carlo.master_seed = mc.unsigned_integer("master_seed", s.monte_carlo.master_seed);
    s.monte_carlo.threads = mc.unsigned_integer("threads", s.monte_carlo.threads);
    mc.reject_unknown();

    try {
        net.validate();
    } catch (const DomainError &e) {
        throw ScenarioError(std::string("network: ") + e.what());
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scenario file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ScenarioError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return parse_scenario(doc);
}

json to_json(const Scenario &s)
{
    const auto &net = s.network;
    json doc;
    doc["network"] = {
        {"num_haps", net.num_haps},
        {"num_gs", net.num_gs},
        {"antennas_per_node", net.antennas_per_node},
        {"relay_antennas", net.relay_antennas},
        {"hap_power_db", s.hap_power_db},
        {"relay_power_db", s.relay_power_db},
        {"noise_power_db", s.noise_power_db},
        {"streams_per_tx", optional_to_json(net.streams_per_tx)},
        {"kappa_up_db", net.kappa_up_db},
        {"kappa_down_db", net.kappa_down_db},
        {"kappa_direct_db", net.kappa_direct_db.empty() ? json(nullptr) : json(net.kappa_direct_db)},
        {"ref_gain_up", net.ref_gains_up},
        {"ref_gain_down", net.ref_gains_down},
        {"sum_all_streams", net.sum_all_streams},
        {"snr_reference", net.snr_reference == SnrReference::transmit ? "transmit" : "receive"},
    };
    doc["layout"] = {
        {"hap_altitude_m", net.layout.hap_altitude_m},
        {"relay_altitude_m", net.layout.relay_altitude_m},
        {"gs_altitude_m", net.layout.gs_altitude_m},
        {"hap_spacing_m", net.layout.hap_spacing_m},
        {"gs_spacing_m", net.layout.gs_spacing_m},
    };
    doc["propagation"] = {
        {"wavelength_m", net.wavelength_m},
        {"element_spacing_m", net.element_spacing_m},
        {"aoa_deg", net.aoa_deg},
        {"aod_deg", net.aod_deg},
    };
    doc["geometry"] = {{"dof_beta", s.geometry_dof_beta}};
    doc["snr_sweep"] = {
        {"start_db", s.snr_sweep.start_db},
        {"stop_db", s.snr_sweep.stop_db},
        {"step_db", s.snr_sweep.step_db},
        {"baseline", s.snr_sweep.baseline},
    };
    doc["altitude_sweep"] = {
        {"start_m", s.altitude_sweep.start_m},
        {"stop_m", s.altitude_sweep.stop_m},
        {"step_m", s.altitude_sweep.step_m},
    };
    doc["optimal_altitude"] = {
        {"lo_m", s.optimal_altitude.lo_m},
        {"hi_m", s.optimal_altitude.hi_m},
        {"tol_m", s.optimal_altitude.tol_m},
    };
    doc["monte_carlo"] = {
        {"trials", s.monte_carlo.trials},
        {"master_seed", s.monte_carlo.master_seed},
        {"threads", s.monte_carlo.threads},
    };
    return doc;
}

} // namespace hapsim::cli
