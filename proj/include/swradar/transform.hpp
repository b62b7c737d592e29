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

#ifndef SWRADAR_TRANSFORM_HPP
#define SWRADAR_TRANSFORM_HPP

#include <armadillo>
#include <cstddef>
#include <utility>
#include <vector>

#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

/// Unnormalized 2D-DFT of the IF data. Row index u is the angle bin, column
/// index v is the range bin.
struct RangeAngleMap
{
    arma::cx_mat spectrum; // Q x N
    arma::mat power;       // |spectrum|^2
};

struct Peak
{
    std::size_t u = 0; // angle bin
    std::size_t v = 0; // range bin
    double power = 0.0;
};

/// Detected block peaks, sorted by descending power; pairwise separation
/// honours the guard spacing used to detect them.
struct PeakList
{
    std::vector<Peak> peaks;

    std::size_t count() const { return peaks.size(); }
};

RangeAngleMap dft2(const IFDataMatrix& y);

/// Inverse of dft2 (for round-trip checks and transform-domain gating).
IFDataMatrix idft2(const RangeAngleMap& map, const RadarConfig& cfg);

/// Guard spacing wide enough to cover one SWE-spread block. The coupled
/// term smears a target by about alpha*|W_T|*Q bins along both axes, so the
/// guard is symmetric: w = ceil(alpha*Q/2) + 2 in each direction.
std::pair<std::size_t, std::size_t> default_min_separation(const RadarConfig& cfg);

constexpr double default_threshold_factor = 8.0;

/// Blob sidelobe skirts scale with the signal, not the noise, so candidates
/// must also reach this fraction of the strongest map cell.
constexpr double default_min_peak_fraction = 0.01;

/// Cyclic local maxima of the power map above
/// max(threshold_factor * median, min_peak_fraction * max), greedily
/// accepted in descending power; candidates inside the rectangular exclusion
/// zone of an accepted peak are dropped. Ties break toward the lower (u, v)
/// pair.
PeakList find_peaks(const RangeAngleMap& map, std::pair<std::size_t, std::size_t> min_separation_bins,
                    double threshold_factor,
                    double min_peak_fraction = default_min_peak_fraction);

/// Bin-to-frequency mapping: omega_range = v/N; omega_angle = u/Q shifted to
/// [-0.5, 0.5). Amplitudes are left unset.
Signature coarse_signature(const PeakList& peaks, const RadarConfig& cfg);

} // namespace swradar

#endif
