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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstring>
#include <random>

#include "swradar/synth.hpp"

using namespace swradar;

namespace
{
RadarConfig small_config(double alpha = 0.1, std::size_t Q = 16, std::size_t N = 32)
{
    RadarConfig cfg;
    cfg.carrier_freq_hz = 77.0e9;
    cfg.frac_bandwidth = alpha;
    cfg.num_elements = Q;
    cfg.num_fast_time = N;
    return cfg;
}

Signature random_scene(std::size_t k, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto unif = [&]() { return double(rng() >> 11) * 0x1.0p-53; };
    Signature sig;
    for (std::size_t i = 0; i < k; ++i)
        sig.entries.push_back({0.05 + 0.9 * unif(), -0.45 + 0.9 * unif(),
                               std::polar(0.5 + unif(), 6.28 * unif())});
    return sig;
}
} // namespace

TEST_CASE("empty scene with zero noise is all zero")
{
    auto y = synthesize_wideband({}, small_config(), 0.0, 1);
    CHECK(arma::norm(y.data, "fro") == 0.0);
}

TEST_CASE("zero angle frequency kills the spatial terms")
{
    RadarConfig cfg = small_config();
    Signature sig;
    sig.entries.push_back({0.25, 0.0, {1.0, 0.0}});
    auto y = synthesize_wideband(sig, cfg, 0.0, 1);
    for (std::size_t q = 0; q < cfg.num_elements; ++q)
        for (std::size_t n = 0; n < cfg.num_fast_time; ++n)
        {
            auto expected = std::polar(1.0, 2.0 * M_PI * 0.25 * double(n));
            CHECK(std::abs(y.data(q, n) - expected) < 1e-12);
        }
}

TEST_CASE("first sample sums the amplitudes")
{
    Signature sig = random_scene(4, 11);
    auto y = synthesize_wideband(sig, small_config(), 0.0, 1);
    std::complex<double> total = 0.0;
    for (const auto& e : sig.entries)
        total += e.amplitude;
    CHECK(std::abs(y.data(0, 0) - total) < 1e-12);
}

TEST_CASE("narrowband equals wideband when alpha is zero")
{
    RadarConfig cfg = small_config(0.0);
    Signature sig = random_scene(3, 5);
    auto a = synthesize_wideband(sig, cfg, 0.3, 42);
    auto b = synthesize_narrowband(sig, cfg, 0.3, 42);
    CHECK(std::memcmp(a.data.memptr(), b.data.memptr(),
                      a.data.n_elem * sizeof(arma::cx_double)) == 0);
}

TEST_CASE("noiseless synthesis is linear in the scene")
{
    RadarConfig cfg = small_config();
    Signature sa = random_scene(2, 21);
    Signature sb = random_scene(3, 22);
    Signature both = sa;
    both.entries.insert(both.entries.end(), sb.entries.begin(), sb.entries.end());

    auto ya = synthesize_wideband(sa, cfg, 0.0, 1);
    auto yb = synthesize_wideband(sb, cfg, 0.0, 1);
    auto yab = synthesize_wideband(both, cfg, 0.0, 1);
    CHECK(arma::norm(yab.data - (ya.data + yb.data), "fro") <
          1e-12 * arma::norm(yab.data, "fro"));
}

TEST_CASE("seed determinism is bit exact")
{
    RadarConfig cfg = small_config();
    Signature sig = random_scene(2, 3);
    auto a = synthesize_wideband(sig, cfg, 1.7, 99);
    auto b = synthesize_wideband(sig, cfg, 1.7, 99);
    CHECK(std::memcmp(a.data.memptr(), b.data.memptr(),
                      a.data.n_elem * sizeof(arma::cx_double)) == 0);

    auto c = synthesize_wideband(sig, cfg, 1.7, 100);
    CHECK(std::memcmp(a.data.memptr(), c.data.memptr(),
                      a.data.n_elem * sizeof(arma::cx_double)) != 0);
}

TEST_CASE("noise statistics match the SNR convention")
{
    RadarConfig cfg = small_config(0.1, 128, 128);
    const double sigma = 0.5;
    auto y = synthesize_wideband({}, cfg, sigma, 12345);

    double mean_power = std::pow(arma::norm(y.data, "fro"), 2) / double(y.data.n_elem);
    CHECK(std::abs(mean_power - sigma * sigma) < 0.05 * sigma * sigma);
    CHECK(std::abs(arma::mean(arma::vectorise(y.data))) < 0.05 * sigma);
}

TEST_CASE("quadratic phase bound diagnostics")
{
    // Slope 100 MHz/us at the 77 GHz / alpha = 0.1 settings.
    RadarConfig cfg;
    cfg.carrier_freq_hz = 77.0e9;
    cfg.frac_bandwidth = 0.1;
    cfg.num_elements = 128;
    cfg.num_fast_time = 128;
    cfg.chirp_duration_s = cfg.bandwidth_hz() / 1.0e14;
    CHECK(std::abs(cfg.chirp_slope_hz_per_s() - 1.0e14) < 1.0);

    auto [cross, q2] = quadratic_phase_bound(cfg, 20.0);

    // Closed forms evaluated from first principles.
    double d = cfg.wavelength_m() / 2.0;
    double c2 = speed_of_light * speed_of_light;
    double expect_cross = 2.0 * M_PI * 1.0e14 * 2.0 * 20.0 * 128.0 * d / c2;
    double expect_q2 = M_PI * 1.0e14 * 128.0 * 128.0 * d * d / c2;
    CHECK(std::abs(cross - expect_cross) < 1e-12);
    CHECK(std::abs(q2 - expect_q2) < 1e-12);

    // Frozen values; both phases are small at these parameters.
    CHECK(std::abs(cross - 0.0696742) < 1e-6);
    CHECK(std::abs(q2 - 2.170355e-4) < 1e-9);

    auto [cross2, q2b] = quadratic_phase_bound(cfg, 40.0);
    CHECK(std::abs(cross2 - 2.0 * cross) < 1e-12);
    CHECK(q2b == q2);

    RadarConfig zero = cfg;
    zero.frac_bandwidth = 0.0;
    auto [c0, q0] = quadratic_phase_bound(zero, 20.0);
    CHECK(c0 == 0.0);
    CHECK(q0 == 0.0);
}

TEST_CASE("shape validation")
{
    auto y = synthesize_wideband({}, small_config(), 0.0, 1);
    CHECK_NOTHROW(y.validate());
    y.data.resize(3, 3);
    CHECK_THROWS(y.validate());
}
