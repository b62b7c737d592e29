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

#include "swradar/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace swradar
{

namespace
{
constexpr double two_pi = 6.283185307179586476925286766559;

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Pinned here
// (rather than std::uniform_real_distribution) so dumps are reproducible
// across standard libraries.
double uniform01(std::mt19937_64& rng)
{
    return double(rng() >> 11) * 0x1.0p-53;
}

// CN(0, sigma^2) via polar transform: magnitude sqrt(-sigma^2 ln u), phase
// uniform.
std::complex<double> complex_gaussian(std::mt19937_64& rng, double sigma)
{
    double u1 = 1.0 - uniform01(rng); // (0, 1]
    double u2 = uniform01(rng);
    double mag = sigma * std::sqrt(-std::log(u1));
    return std::polar(mag, two_pi * u2);
}

IFDataMatrix synthesize(const Signature& scene, const RadarConfig& cfg, double noise_sigma,
                        std::uint64_t seed, bool wideband)
{
    cfg.validate();
    scene.validate();
    if (noise_sigma < 0.0)
        throw std::invalid_argument("synthesize: noise_sigma must be non-negative");

    const std::size_t Q = cfg.num_elements;
    const std::size_t N = cfg.num_fast_time;
    const double sw_scale = wideband ? cfg.frac_bandwidth / double(N) : 0.0;

    IFDataMatrix out;
    out.cfg = cfg;
    out.data.zeros(Q, N);

    for (const auto& e : scene.entries)
    {
        // phase(q, n) = W_R n + W_T q + sw_scale W_T q n
        for (std::size_t q = 0; q < Q; ++q)
        {
            const double base = e.omega_angle * double(q);
            const double step = e.omega_range + sw_scale * e.omega_angle * double(q);
            for (std::size_t n = 0; n < N; ++n)
                out.data(q, n) += e.amplitude * std::polar(1.0, two_pi * (base + step * double(n)));
        }
    }

    if (noise_sigma > 0.0)
    {
        // One stream per matrix, filled row-major: q outer, n inner.
        std::mt19937_64 rng(seed);
        for (std::size_t q = 0; q < Q; ++q)
            for (std::size_t n = 0; n < N; ++n)
                out.data(q, n) += complex_gaussian(rng, noise_sigma);
    }
    return out;
}

} // namespace

void IFDataMatrix::validate() const
{
    if (data.n_rows != cfg.num_elements || data.n_cols != cfg.num_fast_time)
        throw std::invalid_argument("IFDataMatrix: shape disagrees with its RadarConfig");
}

IFDataMatrix synthesize_wideband(const Signature& scene, const RadarConfig& cfg,
                                 double noise_sigma, std::uint64_t seed)
{
    return synthesize(scene, cfg, noise_sigma, seed, true);
}

IFDataMatrix synthesize_narrowband(const Signature& scene, const RadarConfig& cfg,
                                   double noise_sigma, std::uint64_t seed)
{
    return synthesize(scene, cfg, noise_sigma, seed, false);
}

std::pair<double, double> quadratic_phase_bound(const RadarConfig& cfg, double max_range_m)
{
    cfg.validate();
    if (max_range_m < 0.0)
        throw std::invalid_argument("quadratic_phase_bound: negative range");
    const double slope = cfg.chirp_slope_hz_per_s();
    const double aperture = double(cfg.num_elements) * cfg.spacing_m();
    const double c2 = speed_of_light * speed_of_light;
    const double pi = two_pi / 2.0;
    double cross = two_pi * slope * 2.0 * max_range_m * aperture / c2;
    double q2 = pi * slope * aperture * aperture / c2;
    return {cross, q2};
}

} // namespace swradar
