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

#include "swradar/pipeline.hpp"

#include <cmath>

#include "swradar/cs.hpp"
#include "swradar/transform.hpp"

namespace swradar
{

EstimationReport estimate_signature(const IFDataMatrix& y, const RadarConfig& cfg,
                                    const PipelineParams& params)
{
    y.validate();
    if (!y.data.is_finite())
        throw std::invalid_argument("estimate_signature: input contains non-finite values");

    EstimationReport report;
    report.parameters = params;

    auto guard = default_min_separation(cfg);
    if (params.min_separation_u > 0)
        guard.first = params.min_separation_u;
    if (params.min_separation_v > 0)
        guard.second = params.min_separation_v;

    RangeAngleMap map = dft2(y);
    PeakList peaks = find_peaks(map, guard, params.threshold_factor);
    Signature coarse = coarse_signature(peaks, cfg);
    if (peaks.count() == 0)
        return report;

    DictionaryPair dict =
        build_dictionaries(params.oversample * cfg.num_fast_time,
                           params.oversample * cfg.num_elements, cfg);

    IFDataMatrix working = y; // peaks are already ordered strongest-first

    for (std::size_t k = 0; k < peaks.count(); ++k)
    {
        TargetLog log;
        log.coarse_bin = {peaks.peaks[k].u, peaks.peaks[k].v};
        log.coarse_omega_range = coarse.entries[k].omega_range;
        log.coarse_omega_angle = coarse.entries[k].omega_angle;

        IFDataMatrix comp = params.apply_compensation
                                ? compensate(working, log.coarse_omega_angle, cfg)
                                : working;
        IFDataMatrix gated = gate(comp, log.coarse_bin, params.gate_policy);

        if (arma::norm(gated.data, "fro") == 0.0)
        {
            // Nothing left in this block; report the coarse estimate with a
            // zero coefficient so the count still matches the peak count.
            log.refined_omega_range = log.coarse_omega_range;
            log.refined_omega_angle = log.coarse_omega_angle;
        }
        else
        {
            auto [omega_range, omega_angle] = refine_single(gated, dict);
            log.refined_omega_range = omega_range;
            log.refined_omega_angle = omega_angle;
            log.coefficient =
                estimate_coefficient(working, omega_range, omega_angle, cfg);
        }

        SignatureEntry entry{log.refined_omega_range, log.refined_omega_angle, log.coefficient};
        working = eliminate(working, entry, cfg);
        log.residual_energy = std::pow(arma::norm(working.data, "fro"), 2);

        report.estimated.entries.push_back(entry);
        report.per_target_log.push_back(log);
    }
    return report;
}

} // namespace swradar
