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

#ifndef SWRADAR_SYNTH_HPP
#define SWRADAR_SYNTH_HPP

#include <armadillo>
#include <cstdint>
#include <utility>

#include "swradar/types.hpp"

namespace swradar
{

/// Dechirped IF data: rows are virtual elements q in [0, Q), columns are
/// fast-time samples n in [0, N).
struct IFDataMatrix
{
    arma::cx_mat data; // Q x N
    RadarConfig cfg;

    std::size_t num_elements() const { return data.n_rows; }
    std::size_t num_fast_time() const { return data.n_cols; }

    /// Throws when the matrix shape disagrees with cfg.
    void validate() const;
};

/// Spatial wideband IF model:
///   y_q[n] = sum_k a_k exp(j2pi W_R n) exp(j2pi W_T q) exp(j2pi (alpha/N) W_T q n) + w_q[n]
/// Noise is i.i.d. circularly-symmetric complex Gaussian, variance
/// noise_sigma^2 per sample; bit-identical output for identical arguments.
IFDataMatrix synthesize_wideband(const Signature& scene, const RadarConfig& cfg,
                                 double noise_sigma, std::uint64_t seed);

/// Same mixture without the coupled time-antenna term (2D tones only).
IFDataMatrix synthesize_narrowband(const Signature& scene, const RadarConfig& cfg,
                                   double noise_sigma, std::uint64_t seed);

/// Worst-case absolute phases (radians) of the two neglected quadratic-delay
/// exponents, evaluated at sin(theta) = 1:
///   cross term  2*pi*slope*2*R*Q*d/c^2,  q^2 term  pi*slope*Q^2*d^2/c^2.
/// Simulator-fidelity diagnostic only; never applied to signals.
std::pair<double, double> quadratic_phase_bound(const RadarConfig& cfg, double max_range_m);

} // namespace swradar

#endif
