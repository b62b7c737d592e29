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

#ifndef SWRADAR_TYPES_HPP
#define SWRADAR_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace swradar
{

constexpr double speed_of_light = 299792458.0; // m/s, SI exact

/// FMCW front-end and virtual-array geometry. All unit conversions between
/// physical quantities (meters, degrees) and normalized frequencies derive
/// from this struct.
struct RadarConfig
{
    double carrier_freq_hz = 77.0e9;   // f_c
    double frac_bandwidth = 0.1;       // alpha, BW = alpha * f_c
    std::size_t num_fast_time = 128;   // N, samples per chirp
    std::size_t num_elements = 128;    // Q, virtual ULA elements
    double element_spacing_m = 0.0;    // d; 0 selects lambda/2
    double chirp_duration_s = 100e-6;  // T_ch, only enters slope reporting

    double bandwidth_hz() const { return frac_bandwidth * carrier_freq_hz; }
    double wavelength_m() const { return speed_of_light / carrier_freq_hz; }
    double sample_rate_hz() const { return double(num_fast_time) / chirp_duration_s; }
    double chirp_slope_hz_per_s() const { return bandwidth_hz() / chirp_duration_s; }

    /// Effective inter-element spacing (the lambda/2 default applied).
    double spacing_m() const { return element_spacing_m > 0.0 ? element_spacing_m : 0.5 * wavelength_m(); }

    /// c*N/(2*BW); the range mapped to normalized frequency 1.
    double max_unambiguous_range_m() const;

    /// Throws std::invalid_argument when a field is out of its domain.
    void validate() const;
};

/// Point target in physical units.
struct Target
{
    double range_m = 0.0;                     // R_k >= 0
    double aoa_deg = 0.0;                     // theta_k in (-90, 90)
    std::complex<double> amplitude = {1.0, 0.0}; // a_k
};

struct SignatureEntry
{
    double omega_range = 0.0;  // in [0, 1)
    double omega_angle = 0.0;  // in [-0.5, 0.5)
    std::complex<double> amplitude = {0.0, 0.0};
};

/// The radio-scene signature: target count plus per-target normalized
/// frequencies and complex amplitudes.
struct Signature
{
    std::vector<SignatureEntry> entries;

    std::size_t count() const { return entries.size(); }

    /// Checks frequency domains and rejects exact duplicate (omega_range,
    /// omega_angle) pairs. Throws std::invalid_argument.
    void validate() const;
};

// Unit conversions. Degrees at the API boundary, radians internally.

/// Omega_R = 2*R*BW/(c*N). Throws on zero bandwidth.
double range_to_omega(double range_m, const RadarConfig& cfg);
double omega_to_range(double omega_range, const RadarConfig& cfg);

/// Omega_theta = d*sin(theta)/lambda. Throws when |theta| >= 90 deg or the
/// result aliases (|Omega| >= 0.5, only reachable with d > lambda/2).
double aoa_to_omega(double aoa_deg, const RadarConfig& cfg);
double omega_to_aoa(double omega_angle, const RadarConfig& cfg);

SignatureEntry to_entry(const Target& t, const RadarConfig& cfg);
Target to_target(const SignatureEntry& e, const RadarConfig& cfg);
Signature to_signature(const std::vector<Target>& targets, const RadarConfig& cfg);

} // namespace swradar

#endif
