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

#include "swradar/cs.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "swradar/compensate.hpp"

namespace swradar
{

namespace
{
constexpr double two_pi = 6.283185307179586476925286766559;

// Unit-amplitude wideband single-target matrix of Eq.-(4) form.
arma::cx_mat wideband_atom(double omega_range, double omega_angle, const RadarConfig& cfg)
{
    arma::cx_vec b = steering_vector(omega_range, cfg.num_fast_time);
    arma::cx_vec c = steering_vector(omega_angle, cfg.num_elements);
    return (c * b.st()) % swe_phase_matrix(omega_angle, cfg).theta;
}

// Row-major argmax of |P| with strict improvement, so exact ties resolve to
// the lowest (angle, range) pair.
std::pair<std::size_t, std::size_t> select_atom(const arma::cx_mat& P)
{
    std::size_t best_i = 0, best_j = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < P.n_rows; ++i)
        for (std::size_t j = 0; j < P.n_cols; ++j)
        {
            double m = std::norm(P(i, j));
            if (m > best)
            {
                best = m;
                best_i = i;
                best_j = j;
            }
        }
    return {best_i, best_j};
}

} // namespace

arma::cx_vec steering_vector(double omega, std::size_t len)
{
    arma::cx_vec v(len);
    for (std::size_t k = 0; k < len; ++k)
        v(k) = std::polar(1.0, two_pi * omega * double(k));
    return v;
}

DictionaryPair build_dictionaries(std::size_t G_R, std::size_t G_theta, const RadarConfig& cfg)
{
    cfg.validate();
    if (G_R == 0 || G_theta == 0)
        throw std::invalid_argument("build_dictionaries: grid sizes must be positive");

    DictionaryPair d;
    d.range_grid.set_size(G_R);
    d.angle_grid.set_size(G_theta);
    d.B.set_size(cfg.num_fast_time, G_R);
    d.C.set_size(cfg.num_elements, G_theta);

    for (std::size_t g = 0; g < G_R; ++g)
    {
        d.range_grid(g) = double(g) / double(G_R);
        d.B.col(g) = steering_vector(d.range_grid(g), cfg.num_fast_time);
    }
    for (std::size_t g = 0; g < G_theta; ++g)
    {
        d.angle_grid(g) = -0.5 + double(g) / double(G_theta);
        d.C.col(g) = steering_vector(d.angle_grid(g), cfg.num_elements);
    }
    d.uniform = true;
    return d;
}

arma::cx_mat atom_correlations(const arma::cx_mat& Y, const DictionaryPair& dict)
{
    const std::size_t Gt = dict.size_angle();
    const std::size_t Gr = dict.size_range();
    if (Y.n_rows != dict.C.n_rows || Y.n_cols != dict.B.n_rows)
        throw std::invalid_argument("atom_correlations: shape mismatch with dictionary");

    if (dict.uniform && Gt >= Y.n_rows && Gr >= Y.n_cols)
    {
        // With uniform step-1/G grids the correlation grid is the zero-padded
        // 2D-DFT of Y modulated by the grid origins.
        const double phi0 = dict.angle_grid(0);
        const double rho0 = dict.range_grid(0);
        arma::cx_mat mod(Y.n_rows, Y.n_cols);
        for (std::size_t q = 0; q < Y.n_rows; ++q)
        {
            arma::cx_double row = std::polar(1.0, -two_pi * phi0 * double(q));
            for (std::size_t n = 0; n < Y.n_cols; ++n)
                mod(q, n) = Y(q, n) * row * std::polar(1.0, -two_pi * rho0 * double(n));
        }
        return detail::fft2_padded(mod, Gt, Gr);
    }
    return dict.C.t() * Y * arma::conj(dict.B);
}

std::vector<AtomSelection> omp2d(const arma::cx_mat& Y, const DictionaryPair& dict,
                                 std::size_t max_atoms, double residual_tol)
{
    if (!Y.is_finite())
        throw std::invalid_argument("omp2d: input contains non-finite values");

    std::vector<AtomSelection> selected;
    const double energy0 = std::pow(arma::norm(Y, "fro"), 2);
    if (energy0 == 0.0 || max_atoms == 0)
        return selected;

    const std::size_t QN = Y.n_rows * Y.n_cols;
    arma::cx_mat residual = Y;
    arma::cx_mat atoms(QN, 0); // vectorized rank-1 atoms of the support

    for (std::size_t it = 0; it < max_atoms; ++it)
    {
        arma::cx_mat P = atom_correlations(residual, dict);
        auto [i, j] = select_atom(P);

        bool duplicate = false;
        for (const auto& s : selected)
            duplicate |= (s.angle_index == i && s.range_index == j);
        if (duplicate)
            break; // re-selecting a support atom cannot improve the fit

        selected.push_back({i, j, {0.0, 0.0}, 0.0});
        atoms.insert_cols(atoms.n_cols, arma::vectorise(dict.C.col(i) * dict.B.col(j).st()));

        // Joint least-squares re-fit of every selected coefficient (QR).
        arma::cx_vec z = arma::solve(atoms, arma::vectorise(Y));
        residual = Y;
        for (std::size_t m = 0; m < selected.size(); ++m)
        {
            selected[m].coefficient = z(m);
            residual -= z(m) * dict.C.col(selected[m].angle_index) *
                        dict.B.col(selected[m].range_index).st();
        }

        const double energy = std::pow(arma::norm(residual, "fro"), 2);
        selected.back().residual_energy = energy;
        if (energy / energy0 < residual_tol)
            break;
    }
    return selected;
}

std::pair<double, double> refine_single(const IFDataMatrix& y_k, const DictionaryPair& dict)
{
    y_k.validate();
    if (arma::norm(y_k.data, "fro") == 0.0)
        throw std::invalid_argument("no signal to refine");
    auto sel = omp2d(y_k.data, dict, 1, 0.0);
    return {dict.range_grid(sel.front().range_index), dict.angle_grid(sel.front().angle_index)};
}

std::complex<double> estimate_coefficient(const IFDataMatrix& y_wideband, double omega_range,
                                          double omega_angle, const RadarConfig& cfg)
{
    y_wideband.validate();
    arma::cx_vec b = steering_vector(omega_range, cfg.num_fast_time);
    arma::cx_vec c = steering_vector(omega_angle, cfg.num_elements);
    arma::cx_mat derotated = y_wideband.data % arma::conj(swe_phase_matrix(omega_angle, cfg).theta);
    arma::cx_double num = arma::as_scalar(c.t() * derotated * arma::conj(b));
    return num / double(cfg.num_fast_time * cfg.num_elements);
}

IFDataMatrix eliminate(const IFDataMatrix& y, const SignatureEntry& entry, const RadarConfig& cfg)
{
    y.validate();
    IFDataMatrix out;
    out.cfg = cfg;
    out.data = y.data - entry.amplitude * wideband_atom(entry.omega_range, entry.omega_angle, cfg);
    return out;
}

} // namespace swradar
