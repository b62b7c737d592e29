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

#include "swradar/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fft.hpp"
#include "swradar/compensate.hpp"
#include "swradar/transform.hpp"

namespace swradar
{

namespace
{

struct Smoothing
{
    std::size_t Q2, N2; // subarray dims
    std::size_t Pq, Pn; // offset counts
    std::size_t snapshots() const { return Pq * Pn; }
    std::size_t dim() const { return Q2 * N2; }
};

Smoothing smoothing_for(const IFDataMatrix& y)
{
    Smoothing s;
    s.Q2 = std::max<std::size_t>(1, y.num_elements() / 2);
    s.N2 = std::max<std::size_t>(1, y.num_fast_time() / 2);
    s.Pq = y.num_elements() - s.Q2 + 1;
    s.Pn = y.num_fast_time() - s.N2 + 1;
    return s;
}

arma::cx_mat snapshot_matrix(const arma::cx_mat& Y, const Smoothing& s)
{
    arma::cx_mat X(s.dim(), s.snapshots());
    std::size_t col = 0;
    for (std::size_t t = 0; t < s.Pn; ++t)
        for (std::size_t p = 0; p < s.Pq; ++p)
            X.col(col++) = arma::vectorise(Y.submat(p, t, p + s.Q2 - 1, t + s.N2 - 1));
    return X;
}

// Covariance-vector products without forming R, via two FFT correlations per
// block column. Circular sums never wrap because all window offsets stay in
// range.
class SmoothedCovarianceOp
{
  public:
    SmoothedCovarianceOp(const arma::cx_mat& Y, const Smoothing& s) : Y_(Y), s_(s)
    {
        FY_ = detail::fft2(Y);
        FYc_ = detail::fft2(arma::conj(Y));
    }

    // W is Q2 x N2; returns the Q2 x N2 image of R * vec(W).
    arma::cx_mat apply(const arma::cx_mat& W) const
    {
        const std::size_t Q = Y_.n_rows, N = Y_.n_cols;

        arma::cx_mat kernel(Q, N, arma::fill::zeros);
        kernel.submat(0, 0, s_.Q2 - 1, s_.N2 - 1) = arma::conj(W);
        arma::cx_mat corr = detail::ifft2(FYc_ % arma::conj(detail::fft2(kernel)));

        arma::cx_mat weights(Q, N, arma::fill::zeros);
        weights.submat(0, 0, s_.Pq - 1, s_.Pn - 1) =
            arma::conj(corr.submat(0, 0, s_.Pq - 1, s_.Pn - 1));
        arma::cx_mat acc = detail::ifft2(FY_ % arma::conj(detail::fft2(weights)));

        return acc.submat(0, 0, s_.Q2 - 1, s_.N2 - 1) / double(s_.snapshots());
    }

  private:
    const arma::cx_mat& Y_;
    Smoothing s_;
    arma::cx_mat FY_, FYc_;
};

struct SignalSubspace
{
    arma::cx_mat basis;    // dim x num_sources
    arma::vec eigenvalues; // descending, at least num_sources entries
};

SignalSubspace dense_subspace(const arma::cx_mat& Y, const Smoothing& s, std::size_t num_sources)
{
    arma::cx_mat X = snapshot_matrix(Y, s);
    arma::cx_mat R = X * X.t() / double(s.snapshots());
    X.reset();

    arma::vec eval;
    arma::cx_mat evec;
    if (!arma::eig_sym(eval, evec, R, "dc"))
        throw std::runtime_error("music2d: eigendecomposition failed");

    SignalSubspace out;
    out.eigenvalues = arma::reverse(eval);
    out.basis = arma::fliplr(evec.tail_cols(num_sources));
    return out;
}

SignalSubspace iterated_subspace(const arma::cx_mat& Y, const Smoothing& s,
                                 std::size_t num_sources, std::size_t iterations)
{
    const std::size_t D = s.dim();
    const std::size_t block = std::min(D, num_sources + 8);
    SmoothedCovarianceOp op(Y, s);

    // Deterministic start block.
    std::mt19937_64 rng(0x5eedba5eu);
    arma::cx_mat V(D, block);
    for (auto& v : V)
        v = {double(rng() >> 11) * 0x1.0p-53 - 0.5, double(rng() >> 11) * 0x1.0p-53 - 0.5};

    arma::cx_mat Rq, W(D, block);
    for (std::size_t it = 0; it < iterations; ++it)
    {
        for (std::size_t b = 0; b < block; ++b)
        {
            arma::cx_mat img = op.apply(arma::reshape(V.col(b), s.Q2, s.N2));
            W.col(b) = arma::vectorise(img);
        }
        if (!arma::qr_econ(V, Rq, W))
            throw std::runtime_error("music2d: orthogonalization failed");
    }

    // Rayleigh-Ritz on the converged block.
    for (std::size_t b = 0; b < block; ++b)
        W.col(b) = arma::vectorise(op.apply(arma::reshape(V.col(b), s.Q2, s.N2)));
    arma::cx_mat H = V.t() * W;
    H = (H + H.t()) / 2.0;

    arma::vec eval;
    arma::cx_mat evec;
    if (!arma::eig_sym(eval, evec, H))
        throw std::runtime_error("music2d: projected eigendecomposition failed");

    SignalSubspace out;
    out.eigenvalues = arma::reverse(eval);
    out.basis = V * arma::fliplr(evec.tail_cols(num_sources));
    return out;
}

// Steering dictionaries for the subarray over the scan grid, in normalized
// frequency units.
DictionaryPair subarray_dictionary(const MusicGrid& grid, const RadarConfig& cfg,
                                   const Smoothing& s)
{
    DictionaryPair d;
    d.range_grid.set_size(grid.ranges_m.n_elem);
    d.angle_grid.set_size(grid.angles_deg.n_elem);
    d.B.set_size(s.N2, grid.ranges_m.n_elem);
    d.C.set_size(s.Q2, grid.angles_deg.n_elem);
    for (std::size_t g = 0; g < grid.ranges_m.n_elem; ++g)
    {
        d.range_grid(g) = range_to_omega(grid.ranges_m(g), cfg);
        d.B.col(g) = steering_vector(d.range_grid(g), s.N2);
    }
    for (std::size_t g = 0; g < grid.angles_deg.n_elem; ++g)
    {
        d.angle_grid(g) = aoa_to_omega(grid.angles_deg(g), cfg);
        d.C.col(g) = steering_vector(d.angle_grid(g), s.Q2);
    }
    d.uniform = true; // atom_correlations re-checks the step structure
    return d;
}

// Strict local maxima of a non-cyclic grid surface, descending, padded with
// the largest remaining values when the surface has too few maxima.
std::vector<std::pair<std::size_t, std::size_t>> grid_peaks(const arma::mat& PS, std::size_t count)
{
    struct Cand
    {
        std::size_t i, j;
        double value;
    };
    std::vector<Cand> maxima;
    for (std::size_t i = 0; i < PS.n_rows; ++i)
        for (std::size_t j = 0; j < PS.n_cols; ++j)
        {
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di)
                for (int dj = -1; dj <= 1; ++dj)
                {
                    if (di == 0 && dj == 0)
                        continue;
                    long ii = long(i) + di, jj = long(j) + dj;
                    if (ii < 0 || jj < 0 || ii >= long(PS.n_rows) || jj >= long(PS.n_cols))
                        continue;
                    if (!(PS(i, j) > PS(std::size_t(ii), std::size_t(jj))))
                    {
                        is_max = false;
                        break;
                    }
                }
            if (is_max)
                maxima.push_back({i, j, PS(i, j)});
        }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [](const Cand& a, const Cand& b) { return a.value > b.value; });

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& m : maxima)
    {
        if (out.size() == count)
            break;
        out.emplace_back(m.i, m.j);
    }
    if (out.size() < count)
    {
        arma::uvec order = arma::sort_index(arma::vectorise(PS), "descend");
        for (std::size_t k = 0; k < order.n_elem && out.size() < count; ++k)
        {
            std::size_t i = order(k) % PS.n_rows, j = order(k) / PS.n_rows;
            bool taken = false;
            for (auto& p : out)
                taken |= (p.first == i && p.second == j);
            if (!taken)
                out.emplace_back(i, j);
        }
    }
    return out;
}

arma::mat pseudospectrum_impl(const IFDataMatrix& y, std::size_t num_sources,
                              const MusicGrid& grid, const MusicParams& params)
{
    y.validate();
    if (num_sources == 0)
        throw std::invalid_argument("music2d: num_sources must be at least 1");
    Smoothing s = smoothing_for(y);
    if (num_sources > s.dim())
        throw std::invalid_argument("music2d: num_sources exceeds the subarray dimension");

    SignalSubspace sub = params.eig == MusicParams::Eig::dense
                             ? dense_subspace(y.data, s, num_sources)
                             : iterated_subspace(y.data, s, num_sources,
                                                 params.subspace_iterations);

    if (!(sub.eigenvalues(num_sources - 1) > 1e-10 * std::max(sub.eigenvalues(0), 0.0)) ||
        !(sub.eigenvalues(0) > 0.0))
        throw std::runtime_error("insufficient rank");

    DictionaryPair d = subarray_dictionary(grid, y.cfg, s);
    const double D = double(s.dim());

    arma::mat projected(grid.angles_deg.n_elem, grid.ranges_m.n_elem, arma::fill::zeros);
    for (std::size_t k = 0; k < num_sources; ++k)
    {
        arma::cx_mat M = arma::reshape(sub.basis.col(k), s.Q2, s.N2);
        projected += arma::square(arma::abs(atom_correlations(M, d)));
    }

    // a^H P_noise a = ||a||^2 - ||E_s^H a||^2, floored to keep the spectrum
    // finite and non-negative.
    arma::mat den = D - projected;
    den.transform([&](double v) { return std::max(v, 1e-12 * D); });
    return 1.0 / den;
}

// Vertex offset of the parabola through three cyclic power samples.
double parabolic_offset(double pm, double p0, double pp)
{
    double denom = 2.0 * (pm + pp - 2.0 * p0);
    if (denom == 0.0)
        return 0.0;
    double delta = (pm - pp) / denom;
    return std::clamp(delta, -0.5, 0.5);
}

} // namespace

MusicGrid default_music_grid(const RadarConfig& cfg, std::size_t oversample)
{
    cfg.validate();
    if (oversample == 0)
        throw std::invalid_argument("default_music_grid: oversample must be positive");

    const std::size_t Gr = oversample * cfg.num_fast_time;
    const std::size_t Gt = oversample * cfg.num_elements;

    MusicGrid g;
    g.ranges_m.set_size(Gr);
    for (std::size_t k = 0; k < Gr; ++k)
        g.ranges_m(k) = omega_to_range(double(k) / double(Gr), cfg);

    // Keep only angle frequencies inside the visible region.
    std::vector<double> angles;
    angles.reserve(Gt);
    for (std::size_t k = 0; k < Gt; ++k)
    {
        double omega = -0.5 + double(k) / double(Gt);
        double s = omega * cfg.wavelength_m() / cfg.spacing_m();
        if (s > -1.0 && s < 1.0)
            angles.push_back(omega_to_aoa(omega, cfg));
    }
    g.angles_deg = arma::vec(angles);
    return g;
}

arma::mat music_pseudospectrum(const IFDataMatrix& y, std::size_t num_sources,
                               const MusicGrid& grid, const MusicParams& params)
{
    return pseudospectrum_impl(y, num_sources, grid, params);
}

arma::vec smoothed_covariance_eigenvalues(const IFDataMatrix& y)
{
    y.validate();
    Smoothing s = smoothing_for(y);
    arma::cx_mat X = snapshot_matrix(y.data, s);
    arma::cx_mat R = X * X.t() / double(s.snapshots());
    arma::vec eval;
    if (!arma::eig_sym(eval, R))
        throw std::runtime_error("smoothed_covariance_eigenvalues: decomposition failed");
    return arma::reverse(eval);
}

std::vector<RangeAoA> music2d(const IFDataMatrix& y, std::size_t num_sources,
                              const MusicGrid& grid, const MusicParams& params)
{
    arma::mat PS = pseudospectrum_impl(y, num_sources, grid, params);
    std::vector<RangeAoA> out;
    for (auto [i, j] : grid_peaks(PS, num_sources))
        out.push_back({grid.ranges_m(j), grid.angles_deg(i)});
    return out;
}

Signature music2d_signature(const IFDataMatrix& y, std::size_t num_sources,
                            const MusicGrid& grid, const MusicParams& params)
{
    auto estimates = music2d(y, num_sources, grid, params);
    const double QN = double(y.num_elements() * y.num_fast_time());

    Signature sig;
    for (const auto& e : estimates)
    {
        SignatureEntry entry;
        entry.omega_range = range_to_omega(e.range_m, y.cfg);
        entry.omega_angle = aoa_to_omega(e.aoa_deg, y.cfg);
        // Narrowband projection; a narrowband method has no phase matrix.
        arma::cx_vec b = steering_vector(entry.omega_range, y.num_fast_time());
        arma::cx_vec c = steering_vector(entry.omega_angle, y.num_elements());
        entry.amplitude = arma::as_scalar(c.t() * y.data * arma::conj(b)) / QN;
        sig.entries.push_back(entry);
    }
    return sig;
}

Signature omp2d_baseline(const IFDataMatrix& y, const DictionaryPair& dict, std::size_t k_hat)
{
    y.validate();
    Signature sig;
    for (const auto& s : omp2d(y.data, dict, k_hat, 0.0))
        sig.entries.push_back({dict.range_grid(s.range_index), dict.angle_grid(s.angle_index),
                               s.coefficient});
    return sig;
}

Signature rotation_baseline(const IFDataMatrix& y, const RadarConfig& cfg,
                            const PipelineParams& params)
{
    y.validate();
    auto guard = default_min_separation(cfg);
    if (params.min_separation_u > 0)
        guard.first = params.min_separation_u;
    if (params.min_separation_v > 0)
        guard.second = params.min_separation_v;

    const std::size_t Q = cfg.num_elements;
    const std::size_t N = cfg.num_fast_time;

    RangeAngleMap map = dft2(y);
    PeakList peaks = find_peaks(map, guard, params.threshold_factor);
    Signature coarse = coarse_signature(peaks, cfg);

    Signature sig;
    IFDataMatrix working = y;
    for (std::size_t k = 0; k < peaks.count(); ++k)
    {
        IFDataMatrix comp = compensate(working, coarse.entries[k].omega_angle, cfg);
        arma::mat power = arma::square(arma::abs(detail::fft2(comp.data)));

        // Strongest bin inside this block's guard window (cyclic).
        std::size_t bu = peaks.peaks[k].u, bv = peaks.peaks[k].v;
        double best = -1.0;
        for (long du = -long(guard.first); du <= long(guard.first); ++du)
            for (long dv = -long(guard.second); dv <= long(guard.second); ++dv)
            {
                std::size_t u = std::size_t(long(peaks.peaks[k].u) + du + long(Q)) % Q;
                std::size_t v = std::size_t(long(peaks.peaks[k].v) + dv + long(N)) % N;
                if (power(u, v) > best)
                {
                    best = power(u, v);
                    bu = u;
                    bv = v;
                }
            }

        double du = parabolic_offset(power((bu + Q - 1) % Q, bv), power(bu, bv),
                                     power((bu + 1) % Q, bv));
        double dv = parabolic_offset(power(bu, (bv + N - 1) % N), power(bu, bv),
                                     power(bu, (bv + 1) % N));

        SignatureEntry entry;
        double u_frac = (double(bu) + du) / double(Q);
        u_frac -= std::floor(u_frac);
        entry.omega_angle = u_frac < 0.5 ? u_frac : u_frac - 1.0;
        double v_frac = (double(bv) + dv) / double(N);
        entry.omega_range = v_frac - std::floor(v_frac);
        entry.amplitude = estimate_coefficient(working, entry.omega_range, entry.omega_angle, cfg);

        working = eliminate(working, entry, cfg);
        sig.entries.push_back(entry);
    }
    return sig;
}

} // namespace swradar
