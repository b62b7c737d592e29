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
#include <random>

#include "swradar/types.hpp"

using namespace swradar;

namespace
{
RadarConfig paper_config()
{
    RadarConfig cfg;
    cfg.carrier_freq_hz = 77.0e9;
    cfg.frac_bandwidth = 0.1;
    cfg.num_fast_time = 128;
    cfg.num_elements = 128;
    return cfg;
}
} // namespace

TEST_CASE("range_to_omega basics")
{
    RadarConfig cfg = paper_config();

    CHECK(range_to_omega(0.0, cfg) == 0.0);

    // Aliasing boundary maps to exactly 1.
    double r_max = cfg.max_unambiguous_range_m();
    CHECK(std::abs(range_to_omega(r_max, cfg) - 1.0) < 1e-12);

    // Example target of the two-target demo scene, evaluated from first
    // principles: 2 * 2.02 * 7.7e9 / (c * 128).
    double expected = 2.0 * 2.02 * 7.7e9 / (299792458.0 * 128.0);
    CHECK(std::abs(expected - 0.8106650) < 1e-6);
    CHECK(std::abs(range_to_omega(2.02, cfg) - expected) < 1e-15);
}

TEST_CASE("aoa_to_omega closed forms")
{
    RadarConfig cfg = paper_config();
    CHECK(aoa_to_omega(0.0, cfg) == 0.0);
    CHECK(std::abs(aoa_to_omega(30.0, cfg) - 0.25) < 1e-12);
    CHECK(std::abs(aoa_to_omega(-45.0, cfg) + 0.3535533906) < 1e-9);
}

TEST_CASE("conversion round trips and monotonicity")
{
    RadarConfig cfg = paper_config();
    std::mt19937_64 rng(7);
    auto unif = [&]() { return double(rng() >> 11) * 0x1.0p-53; };

    double r_max = cfg.max_unambiguous_range_m();
    double prev_r = -1.0, prev_wr = -1.0;
    double prev_a = -91.0, prev_wa = -1.0;
    for (int i = 0; i < 200; ++i)
    {
        double r = unif() * r_max * 0.999;
        double w = range_to_omega(r, cfg);
        if (r > 0.0)
            CHECK(std::abs(omega_to_range(w, cfg) - r) < 1e-10 * r);

        double a = -89.0 + unif() * 178.0;
        double wa = aoa_to_omega(a, cfg);
        CHECK(std::abs(omega_to_aoa(wa, cfg) - a) < 1e-10 * std::max(1.0, std::abs(a)));

        if (r > prev_r)
            CHECK(w > prev_wr);
        if (a > prev_a)
            CHECK(wa > prev_wa);
        prev_r = r;
        prev_wr = w;
        prev_a = a;
        prev_wa = wa;
    }
}

TEST_CASE("unambiguous range at the reference settings")
{
    RadarConfig cfg = paper_config();
    double r_max = cfg.max_unambiguous_range_m();
    CHECK(r_max > 2.49);
    CHECK(r_max < 2.50);
    // Both demo targets sit inside it.
    CHECK(range_to_omega(2.02, cfg) < 1.0);
    CHECK(range_to_omega(0.97, cfg) < 1.0);
}

TEST_CASE("conversion error paths")
{
    RadarConfig cfg = paper_config();
    cfg.frac_bandwidth = 0.0;
    CHECK_THROWS_WITH(range_to_omega(1.0, cfg), Catch::Matchers::ContainsSubstring("zero bandwidth"));

    RadarConfig wide = paper_config();
    CHECK_THROWS(aoa_to_omega(90.0, wide));
    CHECK_THROWS(aoa_to_omega(-95.0, wide));

    // Spacing beyond lambda/2 aliases at high angles.
    wide.element_spacing_m = wide.wavelength_m();
    CHECK_THROWS_WITH(aoa_to_omega(50.0, wide), Catch::Matchers::ContainsSubstring("spatial aliasing"));
    CHECK_NOTHROW(aoa_to_omega(5.0, wide));
}

TEST_CASE("config and signature validation")
{
    RadarConfig cfg = paper_config();
    CHECK_NOTHROW(cfg.validate());

    RadarConfig bad = cfg;
    bad.carrier_freq_hz = 0.0;
    CHECK_THROWS(bad.validate());
    bad = cfg;
    bad.frac_bandwidth = 1.5;
    CHECK_THROWS(bad.validate());
    bad = cfg;
    bad.num_elements = 0;
    CHECK_THROWS(bad.validate());

    Signature sig;
    sig.entries.push_back({0.25, 0.1, {1.0, 0.0}});
    sig.entries.push_back({0.25, 0.1, {0.5, 0.0}});
    CHECK_THROWS_WITH(sig.validate(), Catch::Matchers::ContainsSubstring("duplicate"));

    sig.entries[1].omega_range = 1.25;
    CHECK_THROWS(sig.validate());
    sig.entries[1] = {0.5, -0.2, {0.5, 0.0}};
    CHECK_NOTHROW(sig.validate());
}

TEST_CASE("target conversion rejects aliased ranges")
{
    RadarConfig cfg = paper_config();
    Target t;
    t.range_m = cfg.max_unambiguous_range_m() + 0.5;
    t.aoa_deg = 10.0;
    CHECK_THROWS_WITH(to_entry(t, cfg), Catch::Matchers::ContainsSubstring("aliases"));

    t.range_m = 1.0;
    auto e = to_entry(t, cfg);
    Target back = to_target(e, cfg);
    CHECK(std::abs(back.range_m - 1.0) < 1e-10);
    CHECK(std::abs(back.aoa_deg - 10.0) < 1e-10);
}

TEST_CASE("default element spacing is half a wavelength")
{
    RadarConfig cfg = paper_config();
    CHECK(std::abs(cfg.spacing_m() - 0.5 * cfg.wavelength_m()) < 1e-18);

    cfg.element_spacing_m = 1e-3;
    CHECK(cfg.spacing_m() == 1e-3);
}
