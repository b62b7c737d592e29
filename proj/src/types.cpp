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

#include "swradar/types.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swradar
{

namespace
{
constexpr double pi = 3.141592653589793238462643383279502884;

double deg_to_rad(double deg) { return deg * (pi / 180.0); }
double rad_to_deg(double rad) { return rad * (180.0 / pi); }
} // namespace

double RadarConfig::max_unambiguous_range_m() const
{
    return speed_of_light * double(num_fast_time) / (2.0 * bandwidth_hz());
}

void RadarConfig::validate() const
{
    if (!(carrier_freq_hz > 0.0))
        throw std::invalid_argument("RadarConfig: carrier_freq_hz must be positive");
    if (!(frac_bandwidth >= 0.0 && frac_bandwidth <= 1.0))
        throw std::invalid_argument("RadarConfig: frac_bandwidth must lie in [0, 1]");
    if (num_fast_time == 0)
        throw std::invalid_argument("RadarConfig: num_fast_time must be positive");
    if (num_elements == 0)
        throw std::invalid_argument("RadarConfig: num_elements must be positive");
    if (element_spacing_m < 0.0)
        throw std::invalid_argument("RadarConfig: element_spacing_m must be non-negative");
    if (!(chirp_duration_s > 0.0))
        throw std::invalid_argument("RadarConfig: chirp_duration_s must be positive");
}

void Signature::validate() const
{
    for (std::size_t k = 0; k < entries.size(); ++k)
    {
        const auto& e = entries[k];
        if (!(e.omega_range >= 0.0 && e.omega_range < 1.0))
            throw std::invalid_argument("Signature: omega_range outside [0, 1)");
        if (!(e.omega_angle >= -0.5 && e.omega_angle < 0.5))
            throw std::invalid_argument("Signature: omega_angle outside [-0.5, 0.5)");
        for (std::size_t j = 0; j < k; ++j)
            if (entries[j].omega_range == e.omega_range && entries[j].omega_angle == e.omega_angle)
                throw std::invalid_argument("Signature: duplicate (omega_range, omega_angle) entry");
    }
}

double range_to_omega(double range_m, const RadarConfig& cfg)
{
    if (cfg.frac_bandwidth <= 0.0)
        throw std::invalid_argument("zero bandwidth: range unobservable");
    if (range_m < 0.0)
        throw std::invalid_argument("range_to_omega: negative range");
    return 2.0 * range_m * cfg.bandwidth_hz() / (speed_of_light * double(cfg.num_fast_time));
}

double omega_to_range(double omega_range, const RadarConfig& cfg)
{
    if (cfg.frac_bandwidth <= 0.0)
        throw std::invalid_argument("zero bandwidth: range unobservable");
    return omega_range * speed_of_light * double(cfg.num_fast_time) / (2.0 * cfg.bandwidth_hz());
}

double aoa_to_omega(double aoa_deg, const RadarConfig& cfg)
{
    if (!(std::abs(aoa_deg) < 90.0))
        throw std::invalid_argument("aoa_to_omega: angle of arrival must satisfy |theta| < 90 deg");
    double omega = cfg.spacing_m() * std::sin(deg_to_rad(aoa_deg)) / cfg.wavelength_m();
    if (std::abs(omega) >= 0.5)
        throw std::invalid_argument("spatial aliasing");
    return omega;
}

double omega_to_aoa(double omega_angle, const RadarConfig& cfg)
{
    double s = omega_angle * cfg.wavelength_m() / cfg.spacing_m();
    if (!(s > -1.0 && s < 1.0))
        throw std::invalid_argument("omega_to_aoa: normalized frequency outside the visible region");
    return rad_to_deg(std::asin(s));
}

SignatureEntry to_entry(const Target& t, const RadarConfig& cfg)
{
    SignatureEntry e;
    e.omega_range = range_to_omega(t.range_m, cfg);
    e.omega_angle = aoa_to_omega(t.aoa_deg, cfg);
    e.amplitude = t.amplitude;
    if (e.omega_range >= 1.0)
    {
        std::ostringstream oss;
        oss << "target at " << t.range_m << " m aliases: beyond the unambiguous range "
            << cfg.max_unambiguous_range_m() << " m";
        throw std::invalid_argument(oss.str());
    }
    return e;
}

Target to_target(const SignatureEntry& e, const RadarConfig& cfg)
{
    Target t;
    t.range_m = omega_to_range(e.omega_range, cfg);
    t.aoa_deg = omega_to_aoa(e.omega_angle, cfg);
    t.amplitude = e.amplitude;
    return t;
}

Signature to_signature(const std::vector<Target>& targets, const RadarConfig& cfg)
{
    Signature sig;
    sig.entries.reserve(targets.size());
    for (const auto& t : targets)
        sig.entries.push_back(to_entry(t, cfg));
    sig.validate();
    return sig;
}

} // namespace swradar
