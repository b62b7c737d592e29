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

#ifndef SWRADAR_CS_HPP
#define SWRADAR_CS_HPP

#include <armadillo>
#include <cstddef>
#include <utility>
#include <vector>

#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

/// Range steering vector b(omega) = [1, e^{j2pi w}, ..., e^{j2pi w (len-1)}]^T.
arma::cx_vec steering_vector(double omega, std::size_t len);

/// Separable overcomplete dictionaries over normalized range and angle
/// frequency grids. Columns of B are b(rho_g) (length N), columns of C are
/// c(phi_g) (length Q).
struct DictionaryPair
{
    arma::cx_mat B;        // N x G_R
    arma::cx_mat C;        // Q x G_theta
    arma::vec range_grid;  // strictly increasing, subset of [0, 1)
    arma::vec angle_grid;  // strictly increasing, subset of [-0.5, 0.5)

    // Set when both grids are uniform with step 1/G starting at grid(0);
    // enables the padded-FFT correlation path.
    bool uniform = false;

    std::size_t size_range() const { return B.n_cols; }
    std::size_t size_angle() const { return C.n_cols; }
};

/// Uniform grids: rho_g = g/G_R over [0, 1), phi_g = -0.5 + g/G_theta over
/// [-0.5, 0.5). Throws when a grid size is zero.
DictionaryPair build_dictionaries(std::size_t G_R, std::size_t G_theta, const RadarConfig& cfg);

/// All atom correlations c(phi_i)^H Y b^*(rho_j) as a G_theta x G_R matrix.
/// Uses a zero-padded FFT when the dictionary grids allow it; identical to
/// the dense product either way.
arma::cx_mat atom_correlations(const arma::cx_mat& Y, const DictionaryPair& dict);

struct AtomSelection
{
    std::size_t angle_index = 0;
    std::size_t range_index = 0;
    std::complex<double> coefficient = {0.0, 0.0};
    double residual_energy = 0.0; // squared Frobenius norm after this atom
};

/// 2D orthogonal matching pursuit on the separable model Y ~ C Z B^T.
/// Each iteration selects the atom pair maximizing the normalized
/// correlation magnitude, jointly re-fits all selected coefficients by least
/// squares, and updates the residual. Stops at max_atoms, when the relative
/// residual energy drops below residual_tol, or when no new atom improves
/// the fit. Exact correlation ties resolve to the lowest
/// (angle_index, range_index).
std::vector<AtomSelection> omp2d(const arma::cx_mat& Y, const DictionaryPair& dict,
                                 std::size_t max_atoms, double residual_tol);

/// Sparsity-1 refinement of a gated single-target matrix; returns
/// (omega_range, omega_angle) of the selected atom. Throws on all-zero input.
std::pair<double, double> refine_single(const IFDataMatrix& y_k, const DictionaryPair& dict);

/// Projection-based least-squares amplitude for the rank-1 wideband model at
/// the given frequencies:
///   a = c^H(W_T) (Y_wideband o conj(Theta(W_T))) b^*(W_R) / (N*Q).
/// Y_wideband is the uncompensated (wideband-domain) measurement matrix.
std::complex<double> estimate_coefficient(const IFDataMatrix& y_wideband, double omega_range,
                                          double omega_angle, const RadarConfig& cfg);

/// Subtracts the full wideband single-target model
/// a * exp(j2pi W_R n) exp(j2pi W_T q) exp(j2pi (alpha/N) W_T q n) from Y.
IFDataMatrix eliminate(const IFDataMatrix& y, const SignatureEntry& entry, const RadarConfig& cfg);

} // namespace swradar

#endif
