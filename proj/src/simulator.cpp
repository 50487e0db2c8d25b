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

#include "hapsim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "hapsim/channel.hpp"
#include "hapsim/errors.hpp"
#include "hapsim/random.hpp"

namespace hapsim::sim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t resolve_threads(std::size_t requested, std::size_t work)
{
    std::size_t n = requested != 0 ? requested : std::thread::hardware_concurrency();
    return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(work, 1));
}

// Runs fn(i) for i in [0, count). Each index writes only its own output slot,
// so results do not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn &&fn)
{
    const std::size_t workers = resolve_threads(threads, count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

std::vector<TrialDraw> draw_all(const NetworkConfig &cfg, const MonteCarlo &mc, bool with_direct)
{
    std::vector<TrialDraw> draws(mc.trials);
    parallel_for(mc.trials, mc.threads, [&](std::size_t t) {
        draws[t] = draw_trial(cfg, mc.master_seed, t, with_direct);
    });
    return draws;
}

std::optional<double> evaluate_one(const NetworkConfig &cfg, const TrialChannels &ch,
                                   Metric metric)
{
    try {
        if (metric == Metric::relay)
            return capacity::df_capacity(ch.uplink, ch.downlink, cfg).total;
        return capacity::no_relay_baseline(ch.direct, cfg);
    } catch (const SingularityError &) {
        return std::nullopt;
    }
}

std::vector<std::optional<double>> evaluate_draws(const NetworkConfig &cfg,
                                                  const std::vector<TrialDraw> &draws,
                                                  Metric metric, std::size_t threads)
{
    std::vector<std::optional<double>> rates(draws.size());
    parallel_for(draws.size(), threads, [&](std::size_t t) {
        rates[t] = evaluate_one(cfg, build_channels(cfg, draws[t]), metric);
    });
    return rates;
}

double argmax_of(const std::vector<SweepPoint> &points)
{
    double best_x = kNaN;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto &p : points)
        if (!std::isnan(p.mean_rate) && p.mean_rate > best) {
            best = p.mean_rate;
            best_x = p.x;
        }
    return best_x;
}

void require_inside_band(const NetworkConfig &cfg, double altitude_m, const char *what)
{
    const auto &l = cfg.layout;
    if (!(altitude_m > l.gs_altitude_m && altitude_m < l.hap_altitude_m))
        throw DomainError(std::string(what) + " " + std::to_string(altitude_m) +
                          " m lies outside the open interval (gs_altitude_m, hap_altitude_m)");
}

void require_transmit_reference(const NetworkConfig &cfg)
{
    if (cfg.snr_reference != SnrReference::transmit)
        throw DomainError("relay altitude optimization needs snr_reference = transmit; with a "
                          "receive-side reference the path loss does not enter the rate");
}

} // namespace

void SweepSpec::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
        throw DomainError("sweep start must be finite and strictly less than stop");
    if (!(step > 0.0) || !std::isfinite(step))
        throw DomainError("sweep step must be strictly positive");
    if (monte_carlo.trials < 1)
        throw DomainError("trials must be at least 1");
    if (grid().size() < 2)
        throw DomainError("sweep range must contain at least 2 points");
}

std::vector<double> SweepSpec::grid() const
{
    std::vector<double> xs;
    if (!(step > 0.0) || !(start <= stop))
        return xs;
    const double span = (stop - start) / step;
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    xs.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        xs.push_back(start + static_cast<double>(k) * step);
    return xs;
}

bool SumRateCurve::all_failed() const
{
    return std::all_of(points.begin(), points.end(),
                       [](const SweepPoint &p) { return std::isnan(p.mean_rate); });
}

TrialDraw draw_trial(const NetworkConfig &cfg, std::uint64_t master_seed, std::size_t trial,
                     bool with_direct)
{
    const auto m = static_cast<std::uint64_t>(cfg.num_haps);
    const auto n = static_cast<std::uint64_t>(cfg.num_gs);
    const Index a = cfg.antennas_per_node;
    const Index r = cfg.relay_antennas;

    TrialDraw draw;
    draw.uplink.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        auto rng = substream(master_seed, trial, i);
        draw.uplink.push_back(channel::rayleigh_channel(r, a, rng));
    }
    draw.downlink.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j) {
        auto rng = substream(master_seed, trial, m + j);
        draw.downlink.push_back(channel::rayleigh_channel(a, r, rng));
    }
    if (with_direct) {
        draw.direct.reserve(m * n);
        for (std::uint64_t l = 0; l < m * n; ++l) {
            auto rng = substream(master_seed, trial, m + n + l);
            draw.direct.push_back(channel::rayleigh_channel(a, a, rng));
        }
    }
    return draw;
}

TrialChannels build_channels(const NetworkConfig &cfg, const TrialDraw &draw)
{
    const bool path_loss = cfg.snr_reference == SnrReference::transmit;
    auto compose = [&](channel::RicianLink link, const ComplexMatrix &nlos) {
        if (!path_loss) {
            link.ref_gain = 1.0;
            link.distance_m = 1.0;
        }
        return channel::compose_link(link, nlos);
    };

    TrialChannels ch;
    for (std::size_t i = 0; i < draw.uplink.size(); ++i)
        ch.uplink.push_back(compose(cfg.uplink(static_cast<int>(i)), draw.uplink[i]));
    for (std::size_t j = 0; j < draw.downlink.size(); ++j)
        ch.downlink.push_back(compose(cfg.downlink(static_cast<int>(j)), draw.downlink[j]));
    if (!draw.direct.empty()) {
        ch.direct = capacity::DirectChannels(cfg.num_haps, cfg.num_gs);
        for (int i = 0; i < cfg.num_haps; ++i)
            for (int j = 0; j < cfg.num_gs; ++j)
                ch.direct.at(i, j) = compose(
                    cfg.direct(i, j), draw.direct[static_cast<std::size_t>(i * cfg.num_gs + j)]);
    }
    return ch;
}

NetworkConfig at_snr(const NetworkConfig &cfg, double snr_db)
{
    NetworkConfig out = cfg;
    const double gamma = channel::db_to_linear(snr_db);
    const int up_streams = cfg.streams_per_tx.value_or(cfg.antennas_per_node);
    const int down_streams = cfg.streams_per_tx.value_or(cfg.relay_antennas);
    out.hap_power = gamma * cfg.noise_power * up_streams;
    out.relay_power = gamma * cfg.noise_power * down_streams;
    return out;
}

NetworkConfig at_relay_altitude(const NetworkConfig &cfg, double relay_altitude_m)
{
    NetworkConfig out = cfg;
    out.layout.relay_altitude_m = relay_altitude_m;
    return out;
}

std::vector<std::optional<double>> evaluate_trials(const NetworkConfig &cfg,
                                                   const MonteCarlo &mc, Metric metric)
{
    cfg.validate();
    if (mc.trials < 1)
        throw DomainError("trials must be at least 1");
    return evaluate_draws(cfg, draw_all(cfg, mc, metric == Metric::baseline), metric,
                          mc.threads);
}

SweepPoint summarize(double x, const std::vector<std::optional<double>> &rates)
{
    SweepPoint p;
    p.x = x;
    double sum = 0.0;
    std::size_t ok = 0;
    for (const auto &r : rates) {
        if (r) {
            sum += *r;
            ++ok;
        } else {
            ++p.trials_failed;
        }
    }
    if (ok == 0) {
        p.mean_rate = kNaN;
        p.std_err = kNaN;
        p.error = "all trials singular";
        return p;
    }
    p.mean_rate = sum / static_cast<double>(ok);
    if (ok > 1) {
        double ss = 0.0;
        for (const auto &r : rates)
            if (r)
                ss += (*r - p.mean_rate) * (*r - p.mean_rate);
        p.std_err = std::sqrt(ss / static_cast<double>(ok - 1) / static_cast<double>(ok));
    }
    return p;
}

SnrSweepResult run_snr_sweep(const NetworkConfig &cfg, const SweepSpec &spec, bool with_baseline)
{
    if (spec.variable != SweepVariable::snr_db)
        throw DomainError("run_snr_sweep needs an snr_db sweep");
    spec.validate();
    cfg.validate();

    const auto &mc = spec.monte_carlo;
    const auto draws = draw_all(cfg, mc, with_baseline);
    // Only the powers change along an SNR sweep, so channels are built once.
    std::vector<TrialChannels> channels(draws.size());
    parallel_for(draws.size(), mc.threads,
                 [&](std::size_t t) { channels[t] = build_channels(cfg, draws[t]); });

    SnrSweepResult result;
    if (with_baseline)
        result.baseline.emplace();
    for (double x : spec.grid()) {
        const NetworkConfig point = at_snr(cfg, x);
        std::vector<std::optional<double>> relay(channels.size());
        std::vector<std::optional<double>> base(with_baseline ? channels.size() : 0);
        parallel_for(channels.size(), mc.threads, [&](std::size_t t) {
            relay[t] = evaluate_one(point, channels[t], Metric::relay);
            if (with_baseline)
                base[t] = evaluate_one(point, channels[t], Metric::baseline);
        });
        result.relay.points.push_back(summarize(x, relay));
        if (with_baseline)
            result.baseline->points.push_back(summarize(x, base));
    }
    result.relay.argmax_x = argmax_of(result.relay.points);
    if (with_baseline)
        result.baseline->argmax_x = argmax_of(result.baseline->points);
    return result;
}

SumRateCurve run_altitude_sweep(const NetworkConfig &cfg, const SweepSpec &spec)
{
    if (spec.variable != SweepVariable::relay_altitude_m)
        throw DomainError("run_altitude_sweep needs a relay_altitude_m sweep");
    spec.validate();
    cfg.validate();
    require_transmit_reference(cfg);
    const auto xs = spec.grid();
    require_inside_band(cfg, xs.front(), "sweep start");
    require_inside_band(cfg, xs.back(), "sweep stop");

    const auto draws = draw_all(cfg, spec.monte_carlo, false);
    SumRateCurve curve;
    for (double x : xs) {
        const NetworkConfig point = at_relay_altitude(cfg, x);
        curve.points.push_back(
            summarize(x, evaluate_draws(point, draws, Metric::relay, spec.monte_carlo.threads)));
    }
    curve.argmax_x = argmax_of(curve.points);
    return curve;
}

double find_optimal_altitude(const NetworkConfig &cfg, double lo_m, double hi_m, double tol_m,
                             const MonteCarlo &mc)
{
    cfg.validate();
    require_transmit_reference(cfg);
    if (!(lo_m < hi_m))
        throw DomainError("find_optimal_altitude: lo must be strictly less than hi");
    if (!(tol_m > 0.0))
        throw DomainError("find_optimal_altitude: tol must be strictly positive");
    if (mc.trials < 1)
        throw DomainError("trials must be at least 1");
    require_inside_band(cfg, lo_m, "search lower bound");
    require_inside_band(cfg, hi_m, "search upper bound");

    const auto draws = draw_all(cfg, mc, false);
    auto objective = [&](double x) {
        const auto p = summarize(
            x, evaluate_draws(at_relay_altitude(cfg, x), draws, Metric::relay, mc.threads));
        return std::isnan(p.mean_rate) ? -std::numeric_limits<double>::infinity() : p.mean_rate;
    };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo_m;
    double b = hi_m;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > tol_m) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace hapsim::sim
