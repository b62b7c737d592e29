// SPDX-License-Identifier: Apache-2.0
//
// swradar - spatial wideband MIMO FMCW radar simulation and estimation
// Copyright (C) 2026 swradar contributors
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

#include "swradar/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "swradar/transform.hpp"

namespace swradar
{

namespace
{
constexpr double two_pi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t scene_seed(std::uint64_t base, std::size_t trial)
{
    return splitmix64(base ^ splitmix64(std::uint64_t(trial) + 1));
}

std::uint64_t noise_seed(std::uint64_t base, std::size_t trial, std::size_t snr_index)
{
    return splitmix64(scene_seed(base, trial) ^ splitmix64(0xC0FFEEull + snr_index));
}

double uniform01(std::mt19937_64& rng)
{
    return double(rng() >> 11) * 0x1.0p-53;
}

// AoA of an estimated frequency, clamped into [-90, 90] so matching never
// rejects an entry by throwing.
double safe_aoa_deg(double omega_angle, const RadarConfig& cfg)
{
    double s = omega_angle * cfg.wavelength_m() / cfg.spacing_m();
    s = std::clamp(s, -1.0, 1.0);
    return std::asin(s) * (180.0 / 3.141592653589793238462643383279502884);
}

} // namespace

MatchResult match_targets(const Signature& est, const Signature& truth, double tol_range_m,
                          double tol_aoa_deg, const RadarConfig& cfg)
{
    if (!(tol_range_m > 0.0) || !(tol_aoa_deg > 0.0))
        throw std::invalid_argument("match_targets: tolerances must be positive");

    struct Cand
    {
        std::size_t t, e;
        double combined, range_err, aoa_err, amp_err;
    };
    std::vector<Cand> cands;
    for (std::size_t t = 0; t < truth.count(); ++t)
    {
        const double r_true = omega_to_range(truth.entries[t].omega_range, cfg);
        const double a_true = safe_aoa_deg(truth.entries[t].omega_angle, cfg);
        for (std::size_t e = 0; e < est.count(); ++e)
        {
            const double dr = std::abs(omega_to_range(est.entries[e].omega_range, cfg) - r_true);
            const double da = std::abs(safe_aoa_deg(est.entries[e].omega_angle, cfg) - a_true);
            if (dr <= tol_range_m && da <= tol_aoa_deg)
                cands.push_back({t, e, dr / tol_range_m + da / tol_aoa_deg, dr, da,
                                 std::abs(est.entries[e].amplitude - truth.entries[t].amplitude)});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.combined != b.combined)
            return a.combined < b.combined;
        return a.t != b.t ? a.t < b.t : a.e < b.e;
    });

    MatchResult out;
    std::vector<bool> t_used(truth.count(), false), e_used(est.count(), false);
    for (const auto& c : cands)
    {
        if (t_used[c.t] || e_used[c.e])
            continue;
        t_used[c.t] = true;
        e_used[c.e] = true;
        out.hits.push_back({c.t, c.e, c.range_err, c.aoa_err, c.amp_err});
    }
    for (std::size_t t = 0; t < truth.count(); ++t)
        if (!t_used[t])
            out.misses.push_back(t);
    for (std::size_t e = 0; e < est.count(); ++e)
        if (!e_used[e])
            out.false_alarms.push_back(e);
    return out;
}

RmseTriple rmse(const std::vector<MatchResult>& results)
{
    double sr = 0.0, sa = 0.0, sm = 0.0;
    std::size_t n = 0;
    for (const auto& r : results)
        for (const auto& h : r.hits)
        {
            sr += h.range_error_m * h.range_error_m;
            sa += h.aoa_error_deg * h.aoa_error_deg;
            sm += h.amp_error * h.amp_error;
            ++n;
        }
    if (n == 0)
        throw std::runtime_error("no hits: RMSE undefined");
    return {std::sqrt(sr / double(n)), std::sqrt(sa / double(n)), std::sqrt(sm / double(n))};
}

std::string method_name(Method m)
{
    switch (m)
    {
    case Method::proposed:
        return "proposed";
    case Method::music2d:
        return "music2d";
    case Method::omp2d:
        return "omp2d";
    case Method::rotation:
        return "rotation";
    }
    return "unknown";
}

Method method_from_name(const std::string& name)
{
    if (name == "proposed")
        return Method::proposed;
    if (name == "music2d")
        return Method::music2d;
    if (name == "omp2d")
        return Method::omp2d;
    if (name == "rotation")
        return Method::rotation;
    throw std::invalid_argument("unknown method: " + name);
}

std::vector<Target> draw_scene(const BenchmarkSpec& spec, std::uint64_t base_seed,
                               std::size_t index)
{
    const RadarConfig& cfg = spec.cfg;
    double lo = spec.range_min_m, hi = spec.range_max_m;
    if (lo == hi)
    {
        lo = 0.1 * cfg.max_unambiguous_range_m();
        hi = 0.9 * cfg.max_unambiguous_range_m();
    }

    // Blocks must stay disjoint along at least one axis; the coupled spread
    // is symmetric, so the same guard applies to both.
    const double block = double(default_min_separation(cfg).first);
    const double Q = double(cfg.num_elements);
    const double N = double(cfg.num_fast_time);

    std::mt19937_64 rng(scene_seed(base_seed, index));
    std::vector<Target> targets(spec.num_targets);
    for (int attempt = 0; attempt < 10000; ++attempt)
    {
        for (auto& t : targets)
        {
            t.range_m = lo + uniform01(rng) * (hi - lo);
            t.aoa_deg = spec.aoa_min_deg + uniform01(rng) * (spec.aoa_max_deg - spec.aoa_min_deg);
            t.amplitude = std::polar(1.0, two_pi * uniform01(rng));
        }
        if (!spec.enforce_separation)
            break;

        bool ok = true;
        for (std::size_t a = 0; a < targets.size() && ok; ++a)
            for (std::size_t b = a + 1; b < targets.size() && ok; ++b)
            {
                double dw = std::abs(aoa_to_omega(targets[a].aoa_deg, cfg) -
                                     aoa_to_omega(targets[b].aoa_deg, cfg));
                double du = std::min(dw, 1.0 - dw) * Q;
                double dv = std::abs(range_to_omega(targets[a].range_m, cfg) -
                                     range_to_omega(targets[b].range_m, cfg)) * N;
                ok = du > block || dv > block;
            }
        if (ok)
            break;
    }
    return targets;
}

namespace
{

struct CellStat
{
    std::size_t hits = 0, est = 0, runs = 0;
    double sq_range = 0.0, sq_aoa = 0.0, sq_amp = 0.0;
    double runtime = 0.0;
};

Signature run_method(Method m, const IFDataMatrix& y, const BenchmarkSpec& spec,
                     const DictionaryPair& dict, const MusicGrid& grid)
{
    switch (m)
    {
    case Method::proposed:
        return estimate_signature(y, spec.cfg, spec.pipeline).estimated;
    case Method::omp2d:
    {
        auto guard = default_min_separation(spec.cfg);
        std::size_t k_hat =
            find_peaks(dft2(y), guard, spec.pipeline.threshold_factor).count();
        return omp2d_baseline(y, dict, k_hat);
    }
    case Method::rotation:
        return rotation_baseline(y, spec.cfg, spec.pipeline);
    case Method::music2d:
    {
        MusicParams mp;
        mp.eig = spec.music_eig;
        return music2d_signature(y, spec.num_targets, grid, mp);
    }
    }
    throw std::logic_error("run_method: unreachable");
}

} // namespace

std::vector<BenchmarkRecord> monte_carlo(const BenchmarkSpec& spec,
                                         const std::vector<Method>& methods, std::size_t trials,
                                         std::uint64_t base_seed, std::size_t threads)
{
    spec.cfg.validate();
    if (trials == 0)
        throw std::invalid_argument("monte_carlo: trials must be at least 1");
    if (spec.snr_db.empty() || methods.empty())
        throw std::invalid_argument("monte_carlo: empty SNR list or method list");
    if (threads == 0)
        threads = 1;

    const std::size_t n_snr = spec.snr_db.size();
    const std::size_t n_methods = methods.size();

    std::vector<std::size_t> method_trials(n_methods, trials);
    for (std::size_t m = 0; m < n_methods; ++m)
    {
        auto it = spec.trial_cap.find(methods[m]);
        if (it != spec.trial_cap.end())
            method_trials[m] = std::min(trials, it->second);
    }

    DictionaryPair dict =
        build_dictionaries(spec.pipeline.oversample * spec.cfg.num_fast_time,
                           spec.pipeline.oversample * spec.cfg.num_elements, spec.cfg);
    MusicGrid grid;
    bool need_music = false;
    for (auto m : methods)
        need_music |= (m == Method::music2d);
    if (need_music)
        grid = default_music_grid(spec.cfg, spec.music_oversample);

    // Per-(method, snr, trial) slots keep aggregation order independent of
    // the worker schedule.
    struct Slot
    {
        std::size_t hits = 0, est = 0;
        bool ran = false;
        double sq_range = 0.0, sq_aoa = 0.0, sq_amp = 0.0;
        double runtime = 0.0;
    };
    std::vector<Slot> slots(n_methods * n_snr * trials);
    auto slot_at = [&](std::size_t m, std::size_t s, std::size_t t) -> Slot& {
        return slots[(m * n_snr + s) * trials + t];
    };

    std::atomic<std::size_t> next_trial{0};
    auto worker = [&]() {
        for (;;)
        {
            std::size_t t = next_trial.fetch_add(1);
            if (t >= trials)
                return;
            Signature truth = to_signature(draw_scene(spec, base_seed, t), spec.cfg);
            for (std::size_t s = 0; s < n_snr; ++s)
            {
                const double sigma = std::pow(10.0, -spec.snr_db[s] / 20.0);
                IFDataMatrix y = synthesize_wideband(truth, spec.cfg, sigma,
                                                     noise_seed(base_seed, t, s));
                for (std::size_t m = 0; m < n_methods; ++m)
                {
                    if (t >= method_trials[m])
                        continue;
                    auto t0 = std::chrono::steady_clock::now();
                    Signature est = run_method(methods[m], y, spec, dict, grid);
                    auto t1 = std::chrono::steady_clock::now();

                    MatchResult mr =
                        match_targets(est, truth, spec.tol_range_m, spec.tol_aoa_deg, spec.cfg);
                    Slot& slot = slot_at(m, s, t);
                    slot.ran = true;
                    slot.hits = mr.hits.size();
                    slot.est = est.count();
                    for (const auto& h : mr.hits)
                    {
                        slot.sq_range += h.range_error_m * h.range_error_m;
                        slot.sq_aoa += h.aoa_error_deg * h.aoa_error_deg;
                        slot.sq_amp += h.amp_error * h.amp_error;
                    }
                    slot.runtime = std::chrono::duration<double>(t1 - t0).count();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::vector<BenchmarkRecord> records;
    for (std::size_t m = 0; m < n_methods; ++m)
        for (std::size_t s = 0; s < n_snr; ++s)
        {
            CellStat cell;
            for (std::size_t t = 0; t < trials; ++t)
            {
                const Slot& slot = slot_at(m, s, t);
                if (!slot.ran)
                    continue;
                ++cell.runs;
                cell.hits += slot.hits;
                cell.est += slot.est;
                cell.sq_range += slot.sq_range;
                cell.sq_aoa += slot.sq_aoa;
                cell.sq_amp += slot.sq_amp;
                cell.runtime += slot.runtime;
            }

            BenchmarkRecord rec;
            rec.method = methods[m];
            rec.snr_db = spec.snr_db[s];
            rec.alpha = spec.cfg.frac_bandwidth;
            rec.Q = spec.cfg.num_elements;
            rec.N = spec.cfg.num_fast_time;
            rec.K = spec.num_targets;
            rec.trials = cell.runs;
            rec.hit_count = cell.hits;
            rec.estimate_count = cell.est;
            rec.hit_rate = double(cell.hits) / double(spec.num_targets * cell.runs);
            rec.false_rate =
                cell.est > 0 ? double(cell.est - cell.hits) / double(cell.est) : 0.0;
            if (cell.hits > 0)
            {
                rec.rmse_range_m = std::sqrt(cell.sq_range / double(cell.hits));
                rec.rmse_aoa_deg = std::sqrt(cell.sq_aoa / double(cell.hits));
                rec.rmse_amp = std::sqrt(cell.sq_amp / double(cell.hits));
            }
            else
            {
                rec.rmse_range_m = rec.rmse_aoa_deg = rec.rmse_amp =
                    std::numeric_limits<double>::quiet_NaN();
            }
            rec.mean_runtime_s = cell.runs > 0 ? cell.runtime / double(cell.runs) : 0.0;
            records.push_back(rec);
        }
    return records;
}

} // namespace swradar
