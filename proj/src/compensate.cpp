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

#include "swradar/compensate.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "swradar/transform.hpp"

namespace swradar
{

namespace
{
constexpr double two_pi = 6.283185307179586476925286766559;
} // namespace

PhaseMatrix swe_phase_matrix(double omega_theta, const RadarConfig& cfg)
{
    cfg.validate();
    const std::size_t Q = cfg.num_elements;
    const std::size_t N = cfg.num_fast_time;
    const double scale = cfg.frac_bandwidth / double(N) * omega_theta;

    PhaseMatrix pm;
    pm.theta.set_size(Q, N);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t n = 0; n < N; ++n)
            pm.theta(q, n) = std::polar(1.0, two_pi * scale * double(q) * double(n));
    return pm;
}

IFDataMatrix compensate(const IFDataMatrix& y, double omega_theta_hat, const RadarConfig& cfg)
{
    y.validate();
    IFDataMatrix out;
    out.cfg = cfg;
    out.data = y.data % arma::conj(swe_phase_matrix(omega_theta_hat, cfg).theta);
    return out;
}

IFDataMatrix gate(const IFDataMatrix& y_comp, std::pair<std::size_t, std::size_t> coarse_bin,
                  const GatePolicy& policy)
{
    y_comp.validate();
    const std::size_t Q = y_comp.num_elements();
    const std::size_t N = y_comp.num_fast_time();

    if (policy.kind == GatePolicy::Kind::time_domain_threshold)
    {
        IFDataMatrix out = y_comp;
        out.data.for_each([&](arma::cx_double& val) {
            if (std::abs(val) < policy.gamma)
                val = 0.0;
        });
        return out;
    }

    // Spectral mask around the coarse bin, clipped at the map bounds.
    auto guard = default_min_separation(y_comp.cfg);
    const std::size_t hu = policy.neighborhood_u > 0 ? policy.neighborhood_u : guard.first;
    const std::size_t hv = policy.neighborhood_v > 0 ? policy.neighborhood_v : guard.second;

    const std::size_t u0 = coarse_bin.first >= hu ? coarse_bin.first - hu : 0;
    const std::size_t u1 = std::min(coarse_bin.first + hu, Q - 1);
    const std::size_t v0 = coarse_bin.second >= hv ? coarse_bin.second - hv : 0;
    const std::size_t v1 = std::min(coarse_bin.second + hv, N - 1);
    if (coarse_bin.first >= Q || coarse_bin.second >= N)
        throw std::invalid_argument("gate: coarse bin outside the map");

    arma::cx_mat spectrum = detail::fft2(y_comp.data);
    arma::mat power = arma::square(arma::abs(spectrum));

    double block_peak = 0.0;
    for (std::size_t u = u0; u <= u1; ++u)
        for (std::size_t v = v0; v <= v1; ++v)
            block_peak = std::max(block_peak, power(u, v));

    arma::cx_mat masked(Q, N, arma::fill::zeros);
    const double keep = policy.mask_fraction * block_peak;
    for (std::size_t u = u0; u <= u1; ++u)
        for (std::size_t v = v0; v <= v1; ++v)
            if (power(u, v) >= keep && block_peak > 0.0)
                masked(u, v) = spectrum(u, v);

    IFDataMatrix out;
    out.cfg = y_comp.cfg;
    out.data = detail::ifft2(masked);
    return out;
}

} // namespace swradar
