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

#ifndef SWRADAR_COMPENSATE_HPP
#define SWRADAR_COMPENSATE_HPP

#include <armadillo>
#include <cstddef>
#include <utility>

#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

/// Unit-modulus wideband phase matrix, entry (q, n) = exp(j2pi (alpha/N) W_T q n).
struct PhaseMatrix
{
    arma::cx_mat theta; // Q x N
};

PhaseMatrix swe_phase_matrix(double omega_theta, const RadarConfig& cfg);

/// Element-wise de-rotation by the conjugate phase matrix of the coarse angle
/// estimate. Multiplying back with -omega_theta_hat restores the input.
IFDataMatrix compensate(const IFDataMatrix& y, double omega_theta_hat, const RadarConfig& cfg);

/// Target-isolation policy used between compensation and refinement.
struct GatePolicy
{
    enum class Kind
    {
        // Transform-domain mask: keep bins near the coarse peak whose power
        // reaches mask_fraction of the block peak, zero the rest, invert.
        spectral_mask,
        // Literal time-domain rule: zero samples with |y_q[n]| < gamma.
        time_domain_threshold,
    };

    Kind kind = Kind::spectral_mask;
    double mask_fraction = 0.25;
    double gamma = 0.0;
    // Half-extents of the retained neighbourhood; 0 selects the
    // default_min_separation guard of the config.
    std::size_t neighborhood_u = 0;
    std::size_t neighborhood_v = 0;
};

/// Isolates the target owning coarse_bin from compensated data. The
/// neighbourhood rectangle is clipped at the matrix bounds.
IFDataMatrix gate(const IFDataMatrix& y_comp, std::pair<std::size_t, std::size_t> coarse_bin,
                  const GatePolicy& policy);

} // namespace swradar

#endif
