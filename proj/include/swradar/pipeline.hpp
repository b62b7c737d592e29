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

#ifndef SWRADAR_PIPELINE_HPP
#define SWRADAR_PIPELINE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "swradar/compensate.hpp"
#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

struct PipelineParams
{
    double threshold_factor = 8.0;
    // 0 selects default_min_separation of the config.
    std::size_t min_separation_u = 0;
    std::size_t min_separation_v = 0;
    std::size_t oversample = 8; // G_R = oversample*N, G_theta = oversample*Q
    GatePolicy gate_policy;
    bool apply_compensation = true;
};

struct TargetLog
{
    std::pair<std::size_t, std::size_t> coarse_bin; // (u, v)
    double coarse_omega_range = 0.0;
    double coarse_omega_angle = 0.0;
    double refined_omega_range = 0.0;
    double refined_omega_angle = 0.0;
    std::complex<double> coefficient = {0.0, 0.0};
    double residual_energy = 0.0; // working-matrix energy after elimination
};

struct EstimationReport
{
    Signature estimated;
    std::vector<TargetLog> per_target_log;
    PipelineParams parameters;
};

/// Coarse-to-fine signature estimation: 2D-DFT peak search for the coarse
/// signature, then per block (strongest first) SWE compensation by the coarse
/// angle, gating, sparsity-1 dictionary refinement, projection-based
/// coefficient estimation, and elimination of the refined model from the
/// working matrix. The estimate count always equals the coarse peak count.
EstimationReport estimate_signature(const IFDataMatrix& y, const RadarConfig& cfg,
                                    const PipelineParams& params);

} // namespace swradar

#endif
