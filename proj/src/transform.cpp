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

#include "swradar/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace swradar
{

namespace
{

std::size_t cyclic_distance(std::size_t a, std::size_t b, std::size_t period)
{
    std::size_t d = a > b ? a - b : b - a;
    return std::min(d, period - d);
}

} // namespace

RangeAngleMap dft2(const IFDataMatrix& y)
{
    y.validate();
    RangeAngleMap map;
    map.spectrum = detail::fft2(y.data);
    map.power = arma::square(arma::abs(map.spectrum));
    return map;
}

IFDataMatrix idft2(const RangeAngleMap& map, const RadarConfig& cfg)
{
    IFDataMatrix y;
    y.cfg = cfg;
    y.data = detail::ifft2(map.spectrum);
    y.validate();
    return y;
}

std::pair<std::size_t, std::size_t> default_min_separation(const RadarConfig& cfg)
{
    auto w = std::size_t(std::ceil(cfg.frac_bandwidth * double(cfg.num_elements) * 0.5)) + 2;
    return {w, w};
}

PeakList find_peaks(const RangeAngleMap& map, std::pair<std::size_t, std::size_t> min_separation_bins,
                    double threshold_factor, double min_peak_fraction)
{
    if (!(threshold_factor > 1.0))
        throw std::invalid_argument("find_peaks: threshold_factor must exceed 1");

    const std::size_t Q = map.power.n_rows;
    const std::size_t N = map.power.n_cols;
    const double threshold = std::max(threshold_factor * arma::median(arma::vectorise(map.power)),
                                      min_peak_fraction * map.power.max());

    // Strict cyclic 8-neighbour maxima above the threshold.
    std::vector<Peak> candidates;
    for (std::size_t u = 0; u < Q; ++u)
    {
        for (std::size_t v = 0; v < N; ++v)
        {
            const double p = map.power(u, v);
            if (!(p > threshold))
                continue;
            bool is_max = true;
            for (int du = -1; du <= 1 && is_max; ++du)
                for (int dv = -1; dv <= 1; ++dv)
                {
                    if (du == 0 && dv == 0)
                        continue;
                    std::size_t uu = std::size_t(long(u) + du + long(Q)) % Q;
                    std::size_t vv = std::size_t(long(v) + dv + long(N)) % N;
                    if (!(p > map.power(uu, vv)))
                    {
                        is_max = false;
                        break;
                    }
                }
            if (is_max)
                candidates.push_back({u, v, p});
        }
    }

    // Descending power; lexicographic (u, v) on exact ties.
    std::stable_sort(candidates.begin(), candidates.end(), [](const Peak& a, const Peak& b) {
        if (a.power != b.power)
            return a.power > b.power;
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });

    PeakList out;
    for (const auto& c : candidates)
    {
        bool excluded = false;
        for (const auto& p : out.peaks)
            if (cyclic_distance(c.u, p.u, Q) <= min_separation_bins.first &&
                cyclic_distance(c.v, p.v, N) <= min_separation_bins.second)
            {
                excluded = true;
                break;
            }
        if (!excluded)
            out.peaks.push_back(c);
    }
    return out;
}

Signature coarse_signature(const PeakList& peaks, const RadarConfig& cfg)
{
    const double Q = double(cfg.num_elements);
    const double N = double(cfg.num_fast_time);
    Signature sig;
    sig.entries.reserve(peaks.count());
    for (const auto& p : peaks.peaks)
    {
        SignatureEntry e;
        e.omega_range = double(p.v) / N;
        e.omega_angle = double(p.u) < Q / 2.0 ? double(p.u) / Q : double(p.u) / Q - 1.0;
        sig.entries.push_back(e);
    }
    return sig;
}

} // namespace swradar
