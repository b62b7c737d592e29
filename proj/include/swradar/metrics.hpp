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

#ifndef SWRADAR_METRICS_HPP
#define SWRADAR_METRICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "swradar/baselines.hpp"
#include "swradar/pipeline.hpp"
#include "swradar/types.hpp"

namespace swradar
{

struct MatchedPair
{
    std::size_t true_index = 0;
    std::size_t est_index = 0;
    double range_error_m = 0.0;
    double aoa_error_deg = 0.0;
    double amp_error = 0.0; // |a_est - a_true|
};

/// hits + misses partition the true set; hits + false_alarms partition the
/// estimate set.
struct MatchResult
{
    std::vector<MatchedPair> hits;
    std::vector<std::size_t> misses;
    std::vector<std::size_t> false_alarms;
};

constexpr double default_tol_range_m = 0.02;
constexpr double default_tol_aoa_deg = 1.0;

/// Greedy matching in ascending combined normalized error
/// (range/tol_range + aoa/tol_aoa); an estimate outside both tolerances of
/// every unmatched truth is a false alarm.
MatchResult match_targets(const Signature& est, const Signature& truth, double tol_range_m,
                          double tol_aoa_deg, const RadarConfig& cfg);

struct RmseTriple
{
    double range_m = 0.0;
    double aoa_deg = 0.0;
    double amplitude = 0.0;
};

/// Root mean square errors over all hits in the batch; throws
/// "no hits: RMSE undefined" when the batch contains none.
RmseTriple rmse(const std::vector<MatchResult>& results);

enum class Method
{
    proposed,
    music2d,
    omp2d,
    rotation,
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Monte-Carlo scenario description. Ranges default to the alias-free
/// interval [0.1, 0.9] * R_max when range_min_m == range_max_m.
struct BenchmarkSpec
{
    RadarConfig cfg;
    std::size_t num_targets = 3;
    std::vector<double> snr_db;
    double range_min_m = 0.0;
    double range_max_m = 0.0;
    double aoa_min_deg = 0.0;
    double aoa_max_deg = 80.0;
    bool enforce_separation = true;
    double tol_range_m = default_tol_range_m;
    double tol_aoa_deg = default_tol_aoa_deg;
    PipelineParams pipeline;
    std::size_t music_oversample = 8;
    MusicParams::Eig music_eig = MusicParams::Eig::dense;
    // Optional per-method trial caps (expensive baselines run on the first
    // min(cap, trials) scenes so statistics stay comparable).
    std::map<Method, std::size_t> trial_cap;
};

struct BenchmarkRecord
{
    Method method = Method::proposed;
    double snr_db = 0.0;
    double alpha = 0.0;
    std::size_t Q = 0;
    std::size_t N = 0;
    std::size_t K = 0;
    std::size_t trials = 0;
    double hit_rate = 0.0;
    double false_rate = 0.0;
    double rmse_range_m = 0.0; // NaN when the cell has no hits
    double rmse_aoa_deg = 0.0;
    double rmse_amp = 0.0;
    double mean_runtime_s = 0.0;
    std::size_t hit_count = 0;
    std::size_t estimate_count = 0;
};

/// Deterministic scene draw for trial `index`: ranges and AoAs uniform over
/// the spec intervals, unit amplitudes with uniform phases, minimum pairwise
/// separation enforced by whole-scene redraws.
std::vector<Target> draw_scene(const BenchmarkSpec& spec, std::uint64_t base_seed,
                               std::size_t index);

/// Runs every method over trials x SNR points on shared synthesized data.
/// Aggregates are bit-identical for any worker count; per-trial seeds derive
/// from (base_seed, trial, snr index).
std::vector<BenchmarkRecord> monte_carlo(const BenchmarkSpec& spec,
                                         const std::vector<Method>& methods, std::size_t trials,
                                         std::uint64_t base_seed, std::size_t threads = 1);

} // namespace swradar

#endif
