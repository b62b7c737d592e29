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

#include "swradar/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swradar
{

namespace
{

constexpr char scene_magic[] = "# swradar scene v";
constexpr char bench_magic[] = "# swradar bench v";
constexpr char dump_magic[8] = {'S', 'W', 'R', 'I', 'F', 'D', 'M', 'P'};
constexpr std::uint32_t dump_version = 1;

[[noreturn]] void fail_at(const std::string& path, std::size_t line, const std::string& what)
{
    std::ostringstream oss;
    oss << path << ":" << line << ": " << what;
    throw std::runtime_error(oss.str());
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Shared reader for "# <magic> vN" headed key-value files. Returns the list
// of (line_number, key, values).
struct KeyValues
{
    std::vector<std::tuple<std::size_t, std::string, std::vector<std::string>>> items;
};

KeyValues read_key_value_file(const std::string& path, const char* magic_prefix, int version)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);

    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    KeyValues kv;

    while (std::getline(in, line))
    {
        ++lineno;
        std::string t = trim(line);
        if (t.empty())
            continue;
        if (!header_seen)
        {
            if (t.rfind(magic_prefix, 0) != 0)
                fail_at(path, lineno, std::string("expected header '") + magic_prefix +
                                          std::to_string(version) + "'");
            int v = -1;
            try
            {
                v = std::stoi(t.substr(std::strlen(magic_prefix)));
            }
            catch (...)
            {
                fail_at(path, lineno, "malformed version header");
            }
            if (v != version)
                fail_at(path, lineno, "unsupported version " + std::to_string(v));
            header_seen = true;
            continue;
        }
        if (t[0] == '#')
            continue;

        auto eq = t.find('=');
        if (eq == std::string::npos)
            fail_at(path, lineno, "expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string rest = trim(t.substr(eq + 1));
        if (key.empty())
            fail_at(path, lineno, "empty key");

        std::vector<std::string> values;
        std::istringstream vs(rest);
        std::string tok;
        while (vs >> tok)
            values.push_back(tok);
        kv.items.emplace_back(lineno, key, values);
    }
    if (!header_seen)
        throw std::runtime_error(path + ": empty file, missing header");
    return kv;
}

double parse_double(const std::string& path, std::size_t line, const std::string& tok)
{
    try
    {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (...)
    {
        fail_at(path, line, "malformed number '" + tok + "'");
    }
}

std::size_t parse_size(const std::string& path, std::size_t line, const std::string& tok)
{
    double v = parse_double(path, line, tok);
    if (v < 0 || v != std::floor(v))
        fail_at(path, line, "expected a non-negative integer, got '" + tok + "'");
    return std::size_t(v);
}

void put_u32(std::ostream& os, std::uint32_t v)
{
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is)
{
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return std::uint32_t(b[0]) | std::uint32_t(b[1]) << 8 | std::uint32_t(b[2]) << 16 |
           std::uint32_t(b[3]) << 24;
}

void put_f64(std::ostream& os, double v)
{
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>(bits >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is)
{
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= std::uint64_t(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

void format_double(std::ostream& os, double v)
{
    if (std::isnan(v))
    {
        os << "nan";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

} // namespace

SceneFile read_scene_file(const std::string& path)
{
    KeyValues kv = read_key_value_file(path, scene_magic, 1);
    SceneFile scene;
    for (const auto& [line, key, values] : kv.items)
    {
        auto one = [&]() -> const std::string& {
            if (values.size() != 1)
                fail_at(path, line, "key '" + key + "' takes exactly one value");
            return values[0];
        };
        if (key == "carrier_freq_hz")
            scene.cfg.carrier_freq_hz = parse_double(path, line, one());
        else if (key == "frac_bandwidth")
            scene.cfg.frac_bandwidth = parse_double(path, line, one());
        else if (key == "num_fast_time")
            scene.cfg.num_fast_time = parse_size(path, line, one());
        else if (key == "num_elements")
            scene.cfg.num_elements = parse_size(path, line, one());
        else if (key == "element_spacing_m")
            scene.cfg.element_spacing_m = parse_double(path, line, one());
        else if (key == "chirp_duration_s")
            scene.cfg.chirp_duration_s = parse_double(path, line, one());
        else if (key == "target")
        {
            if (values.size() != 4)
                fail_at(path, line, "target takes: range_m aoa_deg amp_re amp_im");
            Target t;
            t.range_m = parse_double(path, line, values[0]);
            t.aoa_deg = parse_double(path, line, values[1]);
            t.amplitude = {parse_double(path, line, values[2]),
                           parse_double(path, line, values[3])};
            scene.targets.push_back(t);
        }
        else
            fail_at(path, line, "unknown key '" + key + "'");
    }
    try
    {
        scene.cfg.validate();
    }
    catch (const std::exception& ex)
    {
        throw std::runtime_error(path + ": " + ex.what());
    }
    return scene;
}

void write_scene_file(const std::string& path, const SceneFile& scene)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    os << scene_magic << 1 << "\n";
    os << "carrier_freq_hz = ";
    format_double(os, scene.cfg.carrier_freq_hz);
    os << "\nfrac_bandwidth = ";
    format_double(os, scene.cfg.frac_bandwidth);
    os << "\nnum_fast_time = " << scene.cfg.num_fast_time;
    os << "\nnum_elements = " << scene.cfg.num_elements;
    os << "\nelement_spacing_m = ";
    format_double(os, scene.cfg.element_spacing_m);
    os << "\nchirp_duration_s = ";
    format_double(os, scene.cfg.chirp_duration_s);
    os << "\n";
    for (const auto& t : scene.targets)
    {
        os << "target = ";
        format_double(os, t.range_m);
        os << " ";
        format_double(os, t.aoa_deg);
        os << " ";
        format_double(os, t.amplitude.real());
        os << " ";
        format_double(os, t.amplitude.imag());
        os << "\n";
    }
}

void write_if_dump(const std::string& path, const IFDataMatrix& y)
{
    y.validate();
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot write " + path);
    os.write(dump_magic, sizeof(dump_magic));
    put_u32(os, dump_version);
    put_u32(os, std::uint32_t(y.num_elements()));
    put_u32(os, std::uint32_t(y.num_fast_time()));
    put_f64(os, y.cfg.carrier_freq_hz);
    put_f64(os, y.cfg.frac_bandwidth);
    put_f64(os, y.cfg.element_spacing_m);
    put_f64(os, y.cfg.chirp_duration_s);
    for (std::size_t q = 0; q < y.num_elements(); ++q)
        for (std::size_t n = 0; n < y.num_fast_time(); ++n)
        {
            put_f64(os, y.data(q, n).real());
            put_f64(os, y.data(q, n).imag());
        }
    if (!os)
        throw std::runtime_error("short write to " + path);
}

IFDataMatrix read_if_dump(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open " + path);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, dump_magic, 8) != 0)
        throw std::runtime_error(path + ": not a swradar IF dump");
    std::uint32_t version = get_u32(is);
    if (version != dump_version)
        throw std::runtime_error(path + ": unsupported dump version " + std::to_string(version));

    IFDataMatrix y;
    std::uint32_t Q = get_u32(is);
    std::uint32_t N = get_u32(is);
    y.cfg.num_elements = Q;
    y.cfg.num_fast_time = N;
    y.cfg.carrier_freq_hz = get_f64(is);
    y.cfg.frac_bandwidth = get_f64(is);
    y.cfg.element_spacing_m = get_f64(is);
    y.cfg.chirp_duration_s = get_f64(is);
    y.cfg.validate();

    y.data.set_size(Q, N);
    for (std::size_t q = 0; q < Q; ++q)
        for (std::size_t n = 0; n < N; ++n)
        {
            double re = get_f64(is);
            double im = get_f64(is);
            y.data(q, n) = {re, im};
        }
    if (!is)
        throw std::runtime_error(path + ": truncated dump");
    return y;
}

void write_report(std::ostream& os, const std::string& method, const std::vector<ReportRow>& rows)
{
    os << "# swradar report v1\n";
    os << "# method = " << method << "\n";
    os << "# k range_m aoa_deg amp_re amp_im residual_energy\n";
    for (std::size_t k = 0; k < rows.size(); ++k)
    {
        os << (k + 1) << " ";
        format_double(os, rows[k].range_m);
        os << " ";
        format_double(os, rows[k].aoa_deg);
        os << " ";
        format_double(os, rows[k].amplitude.real());
        os << " ";
        format_double(os, rows[k].amplitude.imag());
        os << " ";
        format_double(os, rows[k].residual_energy);
        os << "\n";
    }
}

void write_power_map_csv(std::ostream& os, const arma::mat& power)
{
    os << "u,v,power\n";
    for (std::size_t u = 0; u < power.n_rows; ++u)
        for (std::size_t v = 0; v < power.n_cols; ++v)
        {
            os << u << "," << v << ",";
            format_double(os, power(u, v));
            os << "\n";
        }
}

BenchFile read_bench_file(const std::string& path)
{
    KeyValues kv = read_key_value_file(path, bench_magic, 1);
    BenchFile bf;
    bf.spec.snr_db.clear();

    for (const auto& [line, key, values] : kv.items)
    {
        auto one = [&]() -> const std::string& {
            if (values.size() != 1)
                fail_at(path, line, "key '" + key + "' takes exactly one value");
            return values[0];
        };
        if (key == "carrier_freq_hz")
            bf.spec.cfg.carrier_freq_hz = parse_double(path, line, one());
        else if (key == "frac_bandwidth")
            bf.spec.cfg.frac_bandwidth = parse_double(path, line, one());
        else if (key == "num_fast_time")
            bf.spec.cfg.num_fast_time = parse_size(path, line, one());
        else if (key == "num_elements")
            bf.spec.cfg.num_elements = parse_size(path, line, one());
        else if (key == "element_spacing_m")
            bf.spec.cfg.element_spacing_m = parse_double(path, line, one());
        else if (key == "num_targets")
            bf.spec.num_targets = parse_size(path, line, one());
        else if (key == "trials")
            bf.trials = parse_size(path, line, one());
        else if (key == "snr_db")
        {
            for (const auto& v : values)
                bf.spec.snr_db.push_back(parse_double(path, line, v));
        }
        else if (key == "methods")
        {
            for (const auto& v : values)
            {
                try
                {
                    bf.methods.push_back(method_from_name(v));
                }
                catch (const std::exception& ex)
                {
                    fail_at(path, line, ex.what());
                }
            }
        }
        else if (key == "range_interval")
        {
            if (values.size() == 1 && values[0] == "auto")
                bf.spec.range_min_m = bf.spec.range_max_m = 0.0;
            else if (values.size() == 2)
            {
                bf.spec.range_min_m = parse_double(path, line, values[0]);
                bf.spec.range_max_m = parse_double(path, line, values[1]);
            }
            else
                fail_at(path, line, "range_interval takes 'auto' or two numbers");
        }
        else if (key == "aoa_interval")
        {
            if (values.size() != 2)
                fail_at(path, line, "aoa_interval takes two numbers");
            bf.spec.aoa_min_deg = parse_double(path, line, values[0]);
            bf.spec.aoa_max_deg = parse_double(path, line, values[1]);
        }
        else if (key == "enforce_separation")
            bf.spec.enforce_separation = parse_size(path, line, one()) != 0;
        else if (key == "threshold_factor")
            bf.spec.pipeline.threshold_factor = parse_double(path, line, one());
        else if (key == "oversample")
            bf.spec.pipeline.oversample = parse_size(path, line, one());
        else if (key == "music_oversample")
            bf.spec.music_oversample = parse_size(path, line, one());
        else if (key == "music_eig")
        {
            const std::string& v = one();
            if (v == "dense")
                bf.spec.music_eig = MusicParams::Eig::dense;
            else if (v == "subspace")
                bf.spec.music_eig = MusicParams::Eig::subspace;
            else
                fail_at(path, line, "music_eig takes 'dense' or 'subspace'");
        }
        else if (key.rfind("trial_cap_", 0) == 0)
        {
            try
            {
                Method m = method_from_name(key.substr(10));
                bf.spec.trial_cap[m] = parse_size(path, line, one());
            }
            catch (const std::invalid_argument& ex)
            {
                fail_at(path, line, ex.what());
            }
        }
        else
            fail_at(path, line, "unknown key '" + key + "'");
    }

    if (bf.spec.snr_db.empty())
        throw std::runtime_error(path + ": no snr_db points given");
    if (bf.methods.empty())
        throw std::runtime_error(path + ": no methods given");
    try
    {
        bf.spec.cfg.validate();
    }
    catch (const std::exception& ex)
    {
        throw std::runtime_error(path + ": " + ex.what());
    }
    return bf;
}

void append_benchmark_csv_row(std::ostream& os, const std::string& method_label,
                              const BenchmarkRecord& r, bool include_runtime)
{
    os << method_label << ",";
    format_double(os, r.snr_db);
    os << ",";
    format_double(os, r.alpha);
    os << "," << r.Q << "," << r.N << "," << r.K << "," << r.trials << ",";
    format_double(os, r.hit_rate);
    os << ",";
    format_double(os, r.false_rate);
    os << ",";
    format_double(os, r.rmse_range_m);
    os << ",";
    format_double(os, r.rmse_aoa_deg);
    os << ",";
    format_double(os, r.rmse_amp);
    os << ",";
    format_double(os, include_runtime ? r.mean_runtime_s : 0.0);
    os << "\n";
}

void write_benchmark_csv(std::ostream& os, const std::vector<BenchmarkRecord>& records,
                         bool include_runtime)
{
    os << "method,snr_db,alpha,Q,N,K,trials,hit_rate,false_rate,"
          "rmse_range_m,rmse_aoa_deg,rmse_amp,mean_runtime_s\n";
    for (const auto& r : records)
        append_benchmark_csv_row(os, method_name(r.method), r, include_runtime);
}

} // namespace swradar
