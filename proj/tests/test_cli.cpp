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

// Drives the installed binary end to end; paths arrive via the environment
// (SWRADAR_CLI, SWRADAR_SCENES) set by CTest.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

std::string cli()
{
    const char* p = std::getenv("SWRADAR_CLI");
    REQUIRE(p != nullptr);
    return p;
}

std::string scenes_dir()
{
    const char* p = std::getenv("SWRADAR_SCENES");
    REQUIRE(p != nullptr);
    return p;
}

struct TempDir
{
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("swradar_cli_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args)
{
    std::string cmd = "\"" + cli() + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string read_bytes(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct ReportedTarget
{
    double range_m, aoa_deg;
};

std::vector<ReportedTarget> parse_report(const std::string& path)
{
    std::ifstream is(path);
    REQUIRE(is.good());
    std::vector<ReportedTarget> out;
    std::string line;
    while (std::getline(is, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        int k;
        ReportedTarget t{};
        double amp_re, amp_im, resid;
        ss >> k >> t.range_m >> t.aoa_deg >> amp_re >> amp_im >> resid;
        out.push_back(t);
    }
    return out;
}

} // namespace

TEST_CASE("synth produces bit-identical dumps and estimate recovers the scene")
{
    TempDir tmp;
    std::string scene = scenes_dir() + "/fig2.scene";
    std::string d1 = tmp.file("a.dump"), d2 = tmp.file("b.dump");

    REQUIRE(run("synth \"" + scene + "\" --out \"" + d1 + "\" --sigma 0 --seed 7") == 0);
    REQUIRE(run("synth \"" + scene + "\" --out \"" + d2 + "\" --sigma 0 --seed 7") == 0);
    CHECK(read_bytes(d1) == read_bytes(d2));

    std::string report = tmp.file("fig2.report");
    REQUIRE(run("estimate \"" + d1 + "\" --method proposed --report \"" + report + "\"") == 0);
    auto targets = parse_report(report);
    REQUIRE(targets.size() == 2);

    bool hit1 = false, hit2 = false;
    for (const auto& t : targets)
    {
        hit1 |= std::abs(t.range_m - 2.02) < 0.02 && std::abs(t.aoa_deg - 30.0) < 1.0;
        hit2 |= std::abs(t.range_m - 0.97) < 0.02 && std::abs(t.aoa_deg + 45.0) < 1.0;
    }
    CHECK(hit1);
    CHECK(hit2);
}

TEST_CASE("zero-signal dump exits with code 2 and an empty report")
{
    TempDir tmp;
    std::string scene = tmp.file("empty.scene");
    {
        std::ofstream os(scene);
        os << "# swradar scene v1\n"
              "carrier_freq_hz = 77e9\n"
              "frac_bandwidth = 0.1\n"
              "num_fast_time = 64\n"
              "num_elements = 64\n";
    }
    std::string dump = tmp.file("empty.dump");
    REQUIRE(run("synth \"" + scene + "\" --out \"" + dump + "\" --sigma 0") == 0);

    std::string report = tmp.file("empty.report");
    CHECK(run("estimate \"" + dump + "\" --report \"" + report + "\"") == 2);
    CHECK(parse_report(report).empty());
}

TEST_CASE("malformed scene exits with code 1")
{
    TempDir tmp;
    std::string scene = tmp.file("broken.scene");
    {
        std::ofstream os(scene);
        os << "# swradar scene v1\nnum_fast_time = twelve\n";
    }
    CHECK(run("synth \"" + scene + "\" --out \"" + tmp.file("x.dump") + "\"") == 1);
    CHECK(run("synth \"" + tmp.file("missing.scene") + "\" --out \"" + tmp.file("y.dump") +
              "\"") == 1);
}

TEST_CASE("map exports a power CSV")
{
    TempDir tmp;
    std::string scene = scenes_dir() + "/fig2.scene";
    std::string dump = tmp.file("m.dump");
    REQUIRE(run("synth \"" + scene + "\" --out \"" + dump + "\"") == 0);

    std::string csv = tmp.file("map.csv");
    REQUIRE(run("map \"" + dump + "\" --out \"" + csv + "\"") == 0);
    std::string text = read_bytes(csv);
    CHECK(text.rfind("u,v,power\n", 0) == 0);
}

TEST_CASE("bench output is bit-identical across thread counts with --no-timing")
{
    TempDir tmp;
    std::string spec = tmp.file("tiny.spec");
    {
        std::ofstream os(spec);
        os << "# swradar bench v1\n"
              "carrier_freq_hz = 77e9\n"
              "frac_bandwidth = 0.1\n"
              "num_fast_time = 64\n"
              "num_elements = 64\n"
              "num_targets = 2\n"
              "snr_db = 10 20\n"
              "methods = proposed rotation\n"
              "threshold_factor = 20\n"
              "oversample = 4\n"
              "trials = 4\n";
    }
    std::string c1 = tmp.file("a.csv"), c2 = tmp.file("b.csv");
    REQUIRE(run("bench \"" + spec + "\" --out \"" + c1 +
                "\" --seed 11 --threads 1 --no-timing") == 0);
    REQUIRE(run("bench \"" + spec + "\" --out \"" + c2 +
                "\" --seed 11 --threads 2 --no-timing") == 0);
    CHECK(read_bytes(c1) == read_bytes(c2));

    // with timing enabled, timing rows appear
    std::string c3 = tmp.file("c.csv");
    REQUIRE(run("bench \"" + spec + "\" --out \"" + c3 + "\" --seed 11 --threads 2") == 0);
    CHECK(read_bytes(c3).find("timing_proposed") != std::string::npos);
}
