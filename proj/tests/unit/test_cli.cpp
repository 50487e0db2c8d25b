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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>
#include <string>

#include "hapsim/cli/commands.hpp"
#include "hapsim/cli/csv.hpp"
#include "hapsim/cli/scenario.hpp"

using namespace hapsim;
using namespace hapsim::cli;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir()
{
    const auto dir = fs::temp_directory_path() / "hapsim_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_json(const std::string &name, const json &doc)
{
    const auto path = scratch_dir() / name;
    std::ofstream(path) << doc.dump(2);
    return path;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

bool has_line(const std::string &text, const std::string &line)
{
    for (const auto &l : lines(text))
        if (l == line)
            return true;
    return false;
}

std::string value_of(const std::string &text, const std::string &key)
{
    for (const auto &l : lines(text))
        if (l.rfind(key + "=", 0) == 0)
            return l.substr(key.size() + 1);
    return {};
}

std::vector<std::string> split(const std::string &row)
{
    std::vector<std::string> out;
    std::istringstream in(row);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    return out;
}

struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
};

} // namespace

TEST_CASE("geometry command with the default scenario")
{
    const auto r = run({"geometry"});
    REQUIRE(r.code == kExitOk);
    CHECK(has_line(r.out, "min_hap_separation_m=1125"));
    CHECK(has_line(r.out, "relay_antennas_required=4"));
    CHECK(has_line(r.out, "d_SD_m=18000"));
    CHECK(has_line(r.out, "hap_spacing_feasible=yes"));
    CHECK(has_line(r.out, "far_field_feasible=yes"));
}

TEST_CASE("geometry command reports the relay antenna requirement")
{
    const auto p23 = write_json("m2n3.json", {{"network", {{"num_haps", 2}, {"num_gs", 3}}}});
    const auto r = run({"geometry", "--config", p23.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(has_line(r.out, "relay_antennas_required=2"));

    const auto p33 = write_json("m3n3.json", {{"network", {{"num_haps", 3}, {"num_gs", 3}}}});
    CHECK(has_line(run({"geometry", "--config", p33.string()}).out, "relay_antennas_required=4"));

    const auto tight = write_json("tight.json", {{"layout", {{"hap_spacing_m", 1000.0}}}});
    CHECK(has_line(run({"geometry", "--config", tight.string()}).out, "hap_spacing_feasible=no"));
}

TEST_CASE("scenario parsing fills defaults and rejects bad input by key")
{
    const auto s = parse_scenario(json::object());
    CHECK(s.network.num_haps == 3);
    CHECK(s.network.relay_antennas == 4);
    CHECK(s.network.kappa_up_db == std::vector<double>(3, 30.0));
    CHECK(s.network.hap_power == doctest::Approx(std::pow(10.0, 1.45)));
    CHECK(s.monte_carlo.trials == 1000);

    CHECK_THROWS_WITH_AS(parse_scenario({{"network", {{"num_hap", 3}}}}),
                         doctest::Contains("network.num_hap"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"extras", json::object()}}),
                         doctest::Contains("extras"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"network", {{"num_haps", "three"}}}}),
                         doctest::Contains("network.num_haps"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"network", {{"kappa_up_db", {1.0, 2.0}}}}}),
                         doctest::Contains("network.kappa_up_db"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"network", {{"relay_antennas", 2}}}}),
                         doctest::Contains("relay_antennas"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"monte_carlo", {{"trials", 0}}}}),
                         doctest::Contains("monte_carlo.trials"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"network", {{"snr_reference", "somewhere"}}}}),
                         doctest::Contains("network.snr_reference"), ScenarioError);
    CHECK_THROWS_WITH_AS(parse_scenario({{"layout", {{"relay_altitude_m", 19000.0}}}}),
                         doctest::Contains("relay_altitude_m"), ScenarioError);
}

TEST_CASE("dumped configuration re-parses to the same effective scenario")
{
    const std::vector<json> docs{
        json::object(),
        {{"network", {{"num_haps", 2}, {"kappa_down_db", {15.0, 20.0, 25.5}}, {"streams_per_tx", 2},
                      {"hap_power_db", 14.5}, {"ref_gain_up", 0.37}, {"kappa_direct_db", 12.0}}},
         {"layout", {{"relay_altitude_m", 15500.0}}},
         {"propagation", {{"aoa_deg", {10.0, 20.0, 33.3}}, {"wavelength_m", 0.006245}}},
         {"monte_carlo", {{"trials", 17}, {"master_seed", 18446744073709551615ULL}}}},
        {{"network", {{"snr_reference", "receive"}, {"sum_all_streams", true}, {"noise_power_db", -3.1}}},
         {"snr_sweep", {{"start_db", -5.0}, {"stop_db", 7.0}, {"step_db", 0.1}, {"baseline", false}}}},
    };
    for (const auto &doc : docs) {
        const auto s = parse_scenario(doc);
        const auto path = write_json("roundtrip.json", doc);
        const auto r = run({"snr-sweep", "--config", path.string(), "--dump-config"});
        REQUIRE(r.code == kExitOk);
        CHECK(parse_scenario(json::parse(r.out)) == s);
        CHECK(parse_scenario(to_json(s)) == s);
    }
}

TEST_CASE("command-line overrides")
{
    const auto r = run({"snr-sweep", "--dump-config", "--seed", "42", "--trials", "7", "--threads", "2"});
    REQUIRE(r.code == kExitOk);
    const auto s = parse_scenario(json::parse(r.out));
    CHECK(s.monte_carlo.master_seed == 42);
    CHECK(s.monte_carlo.trials == 7);
    CHECK(s.monte_carlo.threads == 2);
}

TEST_CASE("snr-sweep CSV layout and byte stability")
{
    const auto cfg = write_json("snr3.json", {{"snr_sweep", {{"start_db", 0.0}, {"stop_db", 20.0}, {"step_db", 10.0}}},
                                              {"monte_carlo", {{"trials", 1}, {"master_seed", 5}}}});
    const auto out1 = scratch_dir() / "snr_a.csv";
    const auto out2 = scratch_dir() / "snr_b.csv";
    REQUIRE(run({"snr-sweep", "--config", cfg.string(), "--out", out1.string()}).code == kExitOk);
    REQUIRE(run({"snr-sweep", "--config", cfg.string(), "--out", out2.string(), "--threads", "3"}).code == kExitOk);
    const auto text = slurp(out1);
    CHECK(text == slurp(out2));
    const auto rows = lines(text);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "snr_db,mean_rate_bps_hz,std_err,trials_failed,baseline_rate_bps_hz");
    CHECK(split(rows[1])[0] == "0");
    CHECK(split(rows[3])[0] == "20");
    CHECK(split(rows[2]).size() == 5);
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("snr-sweep reproduces the kappa ordering at 25 dB")
{
    std::vector<double> at25;
    for (double kl : {15.0, 20.0, 30.0}) {
        const auto cfg = write_json("fig2.json", {{"network", {{"kappa_up_db", 30.0}, {"kappa_down_db", kl}}},
                                                  {"layout", {{"relay_altitude_m", 17000.0}}},
                                                  {"snr_sweep", {{"start_db", 0.0}, {"stop_db", 30.0}, {"step_db", 5.0}}},
                                                  {"monte_carlo", {{"trials", 200}}}});
        const auto r = run({"snr-sweep", "--config", cfg.string()});
        REQUIRE(r.code == kExitOk);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 8);
        const auto fields = split(rows[6]);
        REQUIRE(fields[0] == "25");
        at25.push_back(std::stod(fields[1]));
    }
    CHECK(at25[0] > at25[1]);
    CHECK(at25[1] > at25[2]);
}

TEST_CASE("empty sweep range is a validation error")
{
    const auto cfg = write_json("empty.json", {{"snr_sweep", {{"start_db", 10.0}, {"stop_db", 10.0}}}});
    const auto r = run({"snr-sweep", "--config", cfg.string()});
    CHECK(r.code == kExitValidation);
    CHECK(r.out.empty());
    CHECK(r.err.find("start") != std::string::npos);
}

TEST_CASE("exit codes for I/O failure, singular sweeps and bad arguments")
{
    const auto small = write_json("small.json", {{"monte_carlo", {{"trials", 2}}},
                                                 {"snr_sweep", {{"start_db", 0.0}, {"stop_db", 5.0}, {"step_db", 5.0}}}});
    CHECK(run({"snr-sweep", "--config", small.string(), "--out", "/nonexistent-dir/x.csv"}).code == kExitIo);
    CHECK(run({"geometry", "--config", "/nonexistent-dir/s.json"}).code == kExitIo);

    const auto singular = write_json("singular.json", {{"network", {{"kappa_up_db", 160.0}, {"kappa_down_db", 160.0}}},
                                                       {"monte_carlo", {{"trials", 2}}},
                                                       {"snr_sweep", {{"start_db", 0.0}, {"stop_db", 5.0}, {"step_db", 5.0}}}});
    const auto r = run({"snr-sweep", "--config", singular.string()});
    CHECK(r.code == kExitSingular);
    CHECK(lines(r.out).size() == 3);
    CHECK(split(lines(r.out)[1])[1] == "nan");

    CHECK(run({"no-such-command"}).code == kExitValidation);
    CHECK(run({}).code == kExitValidation);

    const auto broken = scratch_dir() / "broken.json";
    std::ofstream(broken) << "{ not json";
    CHECK(run({"geometry", "--config", broken.string()}).code == kExitValidation);
}

TEST_CASE("altitude-sweep summary and cross-check")
{
    const auto cfg = write_json("sym.json", {{"network", {{"kappa_up_db", 20.0}, {"kappa_down_db", 20.0}}},
                                             {"altitude_sweep", {{"start_m", 1000.0}, {"stop_m", 17000.0}, {"step_m", 500.0}}},
                                             {"optimal_altitude", {{"tol_m", 50.0}}},
                                             {"monte_carlo", {{"trials", 150}}}});
    const auto out = scratch_dir() / "alt.csv";
    const auto r = run({"altitude-sweep", "--config", cfg.string(), "--out", out.string(), "--cross-check"});
    REQUIRE(r.code == kExitOk);
    const double opt = std::stod(value_of(r.out, "optimal_altitude_m"));
    CHECK(std::abs(opt - 9000.0) <= 500.0);
    CHECK(value_of(r.out, "cross_check") == "agree");
    const auto rows = lines(slurp(out));
    REQUIRE(rows.size() == 34);
    CHECK(rows[0] == "relay_altitude_m,mean_rate_bps_hz,std_err,trials_failed");

    const auto o = run({"optimal-altitude", "--config", cfg.string()});
    REQUIRE(o.code == kExitOk);
    CHECK(std::abs(std::stod(value_of(o.out, "optimal_altitude_m")) - 9000.0) <= 500.0);
}

TEST_CASE("altitude-sweep power invariance through the CLI")
{
    std::vector<double> opts;
    for (double p : {14.5, 30.0}) {
        const auto cfg = write_json("power.json", {{"network", {{"kappa_down_db", 20.0}, {"hap_power_db", p}, {"relay_power_db", p}}},
                                                   {"altitude_sweep", {{"start_m", 1000.0}, {"stop_m", 17000.0}, {"step_m", 250.0}}},
                                                   {"monte_carlo", {{"trials", 100}}}});
        const auto r = run({"altitude-sweep", "--config", cfg.string(), "--out", (scratch_dir() / "p.csv").string()});
        REQUIRE(r.code == kExitOk);
        opts.push_back(std::stod(value_of(r.out, "optimal_altitude_m")));
    }
    CHECK(std::abs(opts[0] - opts[1]) <= 250.0);
}

TEST_CASE("number formatting ignores the global locale")
{
    const auto previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1125.0) == "1125");
    CHECK(format_number(1e-17) == "1e-17");
    std::ostringstream os;
    sim::SumRateCurve c;
    c.points.push_back({2.5, 0.25, 0.125, 0, std::nullopt});
    write_altitude_csv(os, c);
    CHECK(lines(os.str())[1] == "2.5,0.25,0.125,0");
    std::locale::global(previous);
}
