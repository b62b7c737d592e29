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

// File formats. Every format carries a magic header plus a version integer;
// readers reject unknown versions. Formats are documented in the README.

#ifndef SWRADAR_IO_HPP
#define SWRADAR_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "swradar/metrics.hpp"
#include "swradar/synth.hpp"
#include "swradar/types.hpp"

namespace swradar
{

/// Parsed scene file: radar configuration plus physical targets.
struct SceneFile
{
    RadarConfig cfg;
    std::vector<Target> targets;
};

/// Key-value text, first line "# swradar scene v1". Parse errors carry the
/// offending line number.
SceneFile read_scene_file(const std::string& path);
void write_scene_file(const std::string& path, const SceneFile& scene);

/// Little-endian binary IF dump: magic "SWRIFDMP", u32 version, u32 Q, u32 N,
/// f64 carrier/frac_bandwidth/element_spacing/chirp_duration, then Q*N
/// (re, im) f64 pairs row-major (q outer, n inner). Byte-identical for
/// identical data.
void write_if_dump(const std::string& path, const IFDataMatrix& y);
IFDataMatrix read_if_dump(const std::string& path);

/// One estimated target per line: k range_m aoa_deg amp_re amp_im
/// residual_energy. Entries with frequencies outside the visible angle
/// region are reported with the clamped angle.
struct ReportRow
{
    double range_m = 0.0;
    double aoa_deg = 0.0;
    std::complex<double> amplitude = {0.0, 0.0};
    double residual_energy = 0.0;
};

void write_report(std::ostream& os, const std::string& method,
                  const std::vector<ReportRow>& rows);

/// Power-map export, one "u,v,power" row per bin.
void write_power_map_csv(std::ostream& os, const arma::mat& power);

/// Bench scenario text file, first line "# swradar bench v1".
struct BenchFile
{
    BenchmarkSpec spec;
    std::vector<Method> methods;
    std::size_t trials = 100;
};

BenchFile read_bench_file(const std::string& path);

/// CSV rows matching the benchmark schema. When include_runtime is false the
/// mean_runtime_s column is written as 0 so sweeps compare bit-identically
/// across thread counts.
void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records,
                         bool include_runtime = true);

/// Single schema row with an explicit method label (used for timing rows).
void append_benchmark_csv_row(std::ostream& os, const std::string& method_label,
                              const BenchmarkRecord& r, bool include_runtime = true);

} // namespace swradar

#endif
