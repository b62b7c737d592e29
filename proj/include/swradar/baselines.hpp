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

#ifndef SWRADAR_BASELINES_HPP
#define SWRADAR_BASELINES_HPP

#include <armadillo>
#include <cstddef>
#include <vector>

#include "swradar/cs.hpp"
#include "swradar/pipeline.hpp"
#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

struct RangeAoA
{
    double range_m = 0.0;
    double aoa_deg = 0.0;
};

/// Scan grid for the subspace search, in physical units.
struct MusicGrid
{
    arma::vec angles_deg;
    arma::vec ranges_m;
};

/// Grid matching the CS dictionary convention: uniform in normalized
/// frequency (oversample*Q angle points, oversample*N range points), mapped
/// to degrees and meters.
MusicGrid default_music_grid(const RadarConfig& cfg, std::size_t oversample = 8);

struct MusicParams
{
    enum class Eig
    {
        dense,    // full eigendecomposition of the smoothed covariance
        subspace, // deterministic block subspace iteration for the top pairs
    };
    Eig eig = Eig::dense;
    std::size_t subspace_iterations = 50;
};

/// Narrowband 2D-MUSIC with 2D spatial smoothing: overlapping (Q/2 x N/2)
/// subarrays form the covariance; the noise subspace excludes the
/// num_sources principal eigenvectors; the pseudo-spectrum is scanned over
/// the grid for the num_sources largest peaks. Throws "insufficient rank"
/// when the smoothed covariance cannot support num_sources sources.
std::vector<RangeAoA> music2d(const IFDataMatrix& y, std::size_t num_sources,
                              const MusicGrid& grid, const MusicParams& params = {});

/// Pseudo-spectrum over the grid (rows = angle points, columns = range
/// points); real and non-negative.
arma::mat music_pseudospectrum(const IFDataMatrix& y, std::size_t num_sources,
                               const MusicGrid& grid, const MusicParams& params = {});

/// Descending eigenvalues of the smoothed covariance (dense path); a
/// rank/diagnostic hook for tests and reports.
arma::vec smoothed_covariance_eigenvalues(const IFDataMatrix& y);

/// music2d plus narrowband-projection amplitudes, for report and benchmark
/// uniformity.
Signature music2d_signature(const IFDataMatrix& y, std::size_t num_sources,
                            const MusicGrid& grid, const MusicParams& params = {});

/// Conventional 2D-OMP applied directly to the wideband data (no SWE
/// compensation), k_hat atoms.
Signature omp2d_baseline(const IFDataMatrix& y, const DictionaryPair& dict, std::size_t k_hat);

/// Rotation-style wideband estimation (reconstructed): per coarse peak,
/// de-rotate by the coarse bin angle, re-estimate by DFT peak with local
/// quadratic interpolation, project the coefficient, eliminate, repeat.
Signature rotation_baseline(const IFDataMatrix& y, const RadarConfig& cfg,
                            const PipelineParams& params = {});

} // namespace swradar

#endif
