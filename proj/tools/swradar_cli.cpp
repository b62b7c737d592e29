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

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "swradar/baselines.hpp"
#include "swradar/cs.hpp"
#include "swradar/io.hpp"
#include "swradar/metrics.hpp"
#include "swradar/pipeline.hpp"
#include "swradar/synth.hpp"
#include "swradar/transform.hpp"
#include "swradar/types.hpp"

namespace
{

using namespace swradar;

struct EstimateOptions
{
    std::string in_path;
    std::string method = "proposed";
    std::size_t oversample = 8;
    std::string gate_policy = "spectral";
    double mask_fraction = 0.25;
    double gate_gamma = 0.0;
    double threshold_factor = default_threshold_factor;
    std::size_t num_sources = 0; // 0: use the coarse peak count
    std::string music_eig = "dense";
    std::string report_path;
    std::string map_path;
};

PipelineParams pipeline_params(const EstimateOptions& opt)
{
    PipelineParams p;
    p.oversample = opt.oversample;
    p.threshold_factor = opt.threshold_factor;
    p.gate_policy.kind = opt.gate_policy == "timedomain"
                             ? GatePolicy::Kind::time_domain_threshold
                             : GatePolicy::Kind::spectral_mask;
    p.gate_policy.mask_fraction = opt.mask_fraction;
    p.gate_policy.gamma = opt.gate_gamma;
    return p;
}

void emit_report(const std::string& path, const std::string& method,
                 const std::vector<ReportRow>& rows)
{
    if (path.empty() || path == "-")
    {
        write_report(std::cout, method, rows);
        return;
    }
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    write_report(os, method, rows);
}

double clamped_aoa_deg(double omega_angle, const RadarConfig& cfg)
{
    double s = omega_angle * cfg.wavelength_m() / cfg.spacing_m();
    s = std::min(1.0, std::max(-1.0, s));
    return std::asin(s) * (180.0 / 3.141592653589793238462643383279502884);
}

int run_estimate(const EstimateOptions& opt)
{
    IFDataMatrix y = read_if_dump(opt.in_path);
    const RadarConfig& cfg = y.cfg;
    PipelineParams params = pipeline_params(opt);

    if (!opt.map_path.empty())
    {
        std::ofstream os(opt.map_path);
        if (!os)
            throw std::runtime_error("cannot write " + opt.map_path);
        write_power_map_csv(os, dft2(y).power);
    }

    std::vector<ReportRow> rows;
    auto push_entry = [&](const SignatureEntry& e, double residual) {
        ReportRow row;
        row.range_m = omega_to_range(e.omega_range, cfg);
        row.aoa_deg = clamped_aoa_deg(e.omega_angle, cfg);
        row.amplitude = e.amplitude;
        row.residual_energy = residual;
        rows.push_back(row);
    };

    if (opt.method == "proposed")
    {
        EstimationReport report = estimate_signature(y, cfg, params);
        for (std::size_t k = 0; k < report.estimated.count(); ++k)
            push_entry(report.estimated.entries[k], report.per_target_log[k].residual_energy);
    }
    else
    {
        auto guard = default_min_separation(cfg);
        PeakList peaks = find_peaks(dft2(y), guard, params.threshold_factor);
        std::size_t k_hat = opt.num_sources > 0 ? opt.num_sources : peaks.count();
        if (k_hat > 0)
        {
            if (opt.method == "omp2d")
            {
                DictionaryPair dict = build_dictionaries(opt.oversample * cfg.num_fast_time,
                                                         opt.oversample * cfg.num_elements, cfg);
                Signature sig = omp2d_baseline(y, dict, k_hat);
                for (const auto& e : sig.entries)
                    push_entry(e, 0.0);
            }
            else if (opt.method == "rotation")
            {
                Signature sig = rotation_baseline(y, cfg, params);
                for (const auto& e : sig.entries)
                    push_entry(e, 0.0);
            }
            else if (opt.method == "music2d")
            {
                MusicParams mp;
                mp.eig = opt.music_eig == "subspace" ? MusicParams::Eig::subspace
                                                     : MusicParams::Eig::dense;
                Signature sig = music2d_signature(y, k_hat,
                                                  default_music_grid(cfg, opt.oversample), mp);
                for (const auto& e : sig.entries)
                    push_entry(e, 0.0);
            }
            else
                throw CLI::ValidationError("--method", "unknown method " + opt.method);
        }
    }

    emit_report(opt.report_path, opt.method, rows);
    return rows.empty() ? 2 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spatial wideband MIMO FMCW radar simulator and estimator"};
    app.require_subcommand(1);

    // synth
    std::string scene_path, out_path;
    double sigma = 0.0;
    std::uint64_t seed = 1;
    auto* synth = app.add_subcommand("synth", "synthesize an IF dump from a scene file");
    synth->add_option("scene", scene_path, "scene file")->required();
    synth->add_option("--out", out_path, "output dump path")->required();
    synth->add_option("--sigma", sigma, "complex noise std deviation (default 0)");
    synth->add_option("--seed", seed, "noise seed (default 1)");

    // estimate
    EstimateOptions eopt;
    auto* estimate = app.add_subcommand("estimate", "estimate the signature of an IF dump");
    estimate->add_option("dump", eopt.in_path, "IF dump file")->required();
    estimate->add_option("--method", eopt.method, "proposed|music2d|omp2d|rotation")
        ->check(CLI::IsMember({"proposed", "music2d", "omp2d", "rotation"}));
    estimate->add_option("--oversample", eopt.oversample, "dictionary oversampling (default 8)");
    estimate->add_option("--gate-policy", eopt.gate_policy, "spectral|timedomain")
        ->check(CLI::IsMember({"spectral", "timedomain"}));
    estimate->add_option("--mask-fraction", eopt.mask_fraction, "spectral gate fraction");
    estimate->add_option("--gate-gamma", eopt.gate_gamma, "time-domain gate threshold");
    estimate->add_option("--threshold-factor", eopt.threshold_factor,
                         "peak threshold over median power");
    estimate->add_option("--num-sources", eopt.num_sources,
                         "source count for music2d (default: coarse peak count)");
    estimate->add_option("--music-eig", eopt.music_eig, "dense|subspace")
        ->check(CLI::IsMember({"dense", "subspace"}));
    estimate->add_option("--report", eopt.report_path, "report path ('-' for stdout)");
    estimate->add_option("--export-map", eopt.map_path, "also export the power map CSV");

    // bench
    std::string bench_path, csv_path;
    std::size_t trials_override = 0, threads = 1;
    std::uint64_t bench_seed = 1;
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Monte-Carlo benchmark sweep");
    bench->add_option("spec", bench_path, "bench spec file")->required();
    bench->add_option("--out", csv_path, "output CSV path")->required();
    bench->add_option("--trials", trials_override, "override the spec trial count");
    bench->add_option("--seed", bench_seed, "base seed (default 1)");
    bench->add_option("--threads", threads, "worker threads (default 1)");
    bench->add_flag("--no-timing", no_timing,
                    "omit wall-clock columns and timing rows for reproducible output");

    // map
    std::string map_in, map_out;
    auto* mapcmd = app.add_subcommand("map", "export the range-angle power map as CSV");
    mapcmd->add_option("dump", map_in, "IF dump file")->required();
    mapcmd->add_option("--out", map_out, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (synth->parsed())
        {
            SceneFile scene = read_scene_file(scene_path);
            Signature sig = to_signature(scene.targets, scene.cfg);
            write_if_dump(out_path, synthesize_wideband(sig, scene.cfg, sigma, seed));
            return 0;
        }
        if (estimate->parsed())
            return run_estimate(eopt);
        if (mapcmd->parsed())
        {
            IFDataMatrix y = read_if_dump(map_in);
            std::ofstream os(map_out);
            if (!os)
                throw std::runtime_error("cannot write " + map_out);
            write_power_map_csv(os, dft2(y).power);
            return 0;
        }
        if (bench->parsed())
        {
            BenchFile bf = read_bench_file(bench_path);
            std::size_t trials = trials_override > 0 ? trials_override : bf.trials;
            auto records = monte_carlo(bf.spec, bf.methods, trials, bench_seed, threads);

            std::ofstream os(csv_path);
            if (!os)
                throw std::runtime_error("cannot write " + csv_path);
            write_benchmark_csv(os, records, !no_timing);

            if (!no_timing)
            {
                // One timed single-scene run per method at the highest SNR.
                BenchmarkSpec tspec = bf.spec;
                double top_snr = *std::max_element(tspec.snr_db.begin(), tspec.snr_db.end());
                tspec.snr_db = {top_snr};
                tspec.trial_cap.clear();
                for (auto m : bf.methods)
                {
                    auto t0 = std::chrono::steady_clock::now();
                    auto rec = monte_carlo(tspec, {m}, 1, bench_seed, 1);
                    auto t1 = std::chrono::steady_clock::now();
                    rec.front().mean_runtime_s = std::chrono::duration<double>(t1 - t0).count();
                    append_benchmark_csv_row(os, "timing_" + method_name(m), rec.front(), true);
                }
            }
            return 0;
        }
    }
    catch (const std::exception& ex)
    {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
