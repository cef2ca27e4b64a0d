// SPDX-License-Identifier: Apache-2.0
//
// ras-channel: EM channel modelling for reconfigurable antenna systems,
// built on spherical vector wave expansions
// Copyright (C) 2026 the ras-channel developers
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

#include <rasch/cli.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace rasch;
using namespace rasch::cli;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    const char *paper_config = R"({
        "wavelength": 0.1,
        "power_dbm": 10.0,
        "noise_dbm": -20.0,
        "tx": [{"position": [0, 0, 0], "alpha_deg": 0, "beta_deg": 0,
                "antenna": "half_wave_dipole"}],
        "rx": [{"position": [8, 10, 8], "antenna": "half_wave_dipole"}]
    })";

    std::string slurp(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    struct TempFile
    {
        std::string path;
        explicit TempFile(const std::string &name) : path("/tmp/rasch_test_" + name) {}
        ~TempFile() { std::remove(path.c_str()); }
    };

    std::size_t count_lines(const std::string &s)
    {
        std::size_t n = 0;
        for (char c : s)
            n += (c == '\n');
        return n;
    }
} // namespace

TEST_CASE("minimal config parses with defaults")
{
    ScenarioConfig cfg = parse_config(R"({
        "wavelength": 0.1,
        "tx": [{"antenna": "hertzian_dipole"}],
        "rx": [{"position": [0, 0, 20], "antenna": "hertzian_dipole"}]
    })");
    CHECK(cfg.units == "wavelength");
    CHECK(!cfg.sweep.has_value());
    CHECK_THAT(cfg.power_dbm, WithinRel(10.0, 1e-15));
    CHECK_THAT(cfg.noise_dbm, WithinRel(-20.0, 1e-15));
}

TEST_CASE("reference setup converts units as documented")
{
    ScenarioConfig cfg = parse_config(paper_config);
    channel::Scenario sc = build_scenario(cfg);
    CHECK_THAT(sc.p_t_watts, WithinRel(0.01, 1e-12));
    CHECK_THAT(sc.sigma_n2_watts, WithinRel(1e-5, 1e-12));
    CHECK_THAT(sc.medium.k, WithinRel(two_pi / 0.1, 1e-15));
    CHECK(norm(sc.rx[0].position - Vec3{0.8, 1.0, 0.8}) < 1e-12);

    // meters mode leaves positions untouched
    ScenarioConfig m = cfg;
    m.units = "meters";
    channel::Scenario sm = build_scenario(m);
    CHECK(norm(sm.rx[0].position - Vec3{8.0, 10.0, 8.0}) < 1e-12);
}

TEST_CASE("config validation diagnostics")
{
    CHECK_THROWS_AS(parse_config("not json"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"wavelength": -0.1, "tx": [{}], "rx": [{}]})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"wavelength": 0.1, "rx": [{}]})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"wavelength": 0.1, "tx": [], "rx": [{}]})"), config_error);
    CHECK_THROWS_AS(
        parse_config(R"({"wavelength": 0.1, "frequency": 3e9, "tx": [{}], "rx": [{}]})"),
        config_error);
    CHECK_THROWS_AS(
        parse_config(
            R"({"wavelength": 0.1, "tx": [{"position": [1, 2], "antenna": "hertzian_dipole"}], "rx": [{}]})"),
        config_error);
    CHECK_THROWS_AS(
        parse_config(
            R"({"wavelength": 0.1, "tx": [{"antenna": "yagi"}], "rx": [{"antenna": "hertzian_dipole"}]})"),
        config_error);

    // the diagnostic names the offending field
    try
    {
        parse_config(R"({"wavelength": 0.1, "tx": [{"antena": "hertzian_dipole"}], "rx": [{}]})");
        FAIL("expected a config_error");
    }
    catch (const config_error &e)
    {
        CHECK(std::string(e.what()).find("tx[0]") != std::string::npos);
        CHECK(std::string(e.what()).find("antena") != std::string::npos);
    }
}

TEST_CASE("config round-trips through serialization")
{
    std::string text = R"({
        "wavelength": 0.125,
        "units": "meters",
        "power_dbm": 23.0,
        "noise_dbm": -17.5,
        "tx": [{"position": [0.5, -2.0, 1.0], "alpha_deg": 20, "beta_deg": 75,
                "antenna": "hertzian_dipole"}],
        "rx": [{"position": [4, 4, 4], "antenna": "half_wave_dipole"}],
        "sweep": {"kind": "orientation", "alpha_deg": 20, "beta_start_deg": 0,
                  "beta_stop_deg": 180, "beta_step_deg": 1}
    })";
    ScenarioConfig cfg = parse_config(text);
    ScenarioConfig again = parse_config(to_json(cfg).dump());
    CHECK(cfg == again);

    ScenarioConfig pos = parse_config(R"({
        "wavelength": 0.1,
        "tx": [{"antenna": "half_wave_dipole"}],
        "rx": [{"position": [8, 10, 8]}],
        "sweep": {"kind": "position", "axis": "x", "start": -30, "stop": 30, "step": 0.25}
    })");
    CHECK(pos == parse_config(to_json(pos).dump()));
}

TEST_CASE("gain command emits one data row")
{
    ScenarioConfig cfg = parse_config(paper_config);
    TempFile out("gain.csv");
    REQUIRE(run_command(Command::gain, cfg, out.path) == 0);
    std::string text = slurp(out.path);
    CHECK(text.rfind("re_h,im_h,abs_h2,rate_bps_hz\n", 0) == 0);
    CHECK(count_lines(text) == 2);

    // json variant round-trips numerically
    TempFile outj("gain.json");
    RunOptions opt;
    opt.format = "json";
    REQUIRE(run_command(Command::gain, cfg, outj.path, opt) == 0);
    auto root = nlohmann::json::parse(slurp(outj.path));
    CHECK(root.contains("abs_h2"));
    CHECK(root["abs_h2"].get<double>() > 0.0);
}

TEST_CASE("orientation sweep command reproduces the elevation scan")
{
    std::string text(paper_config);
    text.insert(text.rfind('}'),
                R"(, "sweep": {"kind": "orientation", "alpha_deg": 20,
                   "beta_start_deg": 0, "beta_stop_deg": 180, "beta_step_deg": 1})");
    ScenarioConfig cfg = parse_config(text);
    TempFile out("sweep.csv");
    REQUIRE(run_command(Command::sweep_orientation, cfg, out.path) == 0);
    std::string body = slurp(out.path);
    // header + 181 rows + summary comment
    CHECK(count_lines(body) == 183);
    CHECK(body.find("# baseline_rate=") != std::string::npos);
}

TEST_CASE("position sweep command requires a position sweep block")
{
    ScenarioConfig cfg = parse_config(paper_config);
    TempFile out("pos.csv");
    CHECK(run_command(Command::sweep_position, cfg, out.path) != 0);

    std::string text(paper_config);
    text.insert(text.rfind('}'),
                R"(, "sweep": {"kind": "position", "axis": "x", "start": -2, "stop": 2,
                   "step": 0.5})");
    cfg = parse_config(text);
    REQUIRE(run_command(Command::sweep_position, cfg, out.path) == 0);
    CHECK(count_lines(slurp(out.path)) == 11); // header + 9 rows + summary
}

TEST_CASE("matrix and rate commands cover all pairs")
{
    std::string text = R"({
        "wavelength": 0.1,
        "tx": [{"position": [0, 0, 0], "antenna": "half_wave_dipole"},
               {"position": [0.5, 0, 0], "antenna": "half_wave_dipole", "beta_deg": 10}],
        "rx": [{"position": [8, 10, 8], "antenna": "half_wave_dipole"},
               {"position": [8.5, 10, 8], "antenna": "half_wave_dipole"}]
    })";
    ScenarioConfig cfg = parse_config(text);
    TempFile out("matrix.csv");
    REQUIRE(run_command(Command::matrix, cfg, out.path) == 0);
    CHECK(count_lines(slurp(out.path)) == 5); // header + 4 entries

    TempFile outr("rate.csv");
    REQUIRE(run_command(Command::rate, cfg, outr.path) == 0);
    CHECK(count_lines(slurp(outr.path)) == 5);
}

TEST_CASE("commands are deterministic across runs")
{
    ScenarioConfig cfg = parse_config(paper_config);
    TempFile a("det_a.csv"), b("det_b.csv");
    RunOptions opt;
    opt.trials = 3;
    opt.seed = 77;
    REQUIRE(run_command(Command::validate, cfg, a.path, opt) == 0);
    REQUIRE(run_command(Command::validate, cfg, b.path, opt) == 0);
    CHECK(slurp(a.path) == slurp(b.path));

    REQUIRE(run_command(Command::matrix, cfg, a.path) == 0);
    REQUIRE(run_command(Command::matrix, cfg, b.path) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
}

TEST_CASE("validate command compares the two gain paths")
{
    ScenarioConfig cfg = parse_config(paper_config);
    TempFile out("validate.csv");
    RunOptions opt;
    opt.trials = 5;
    opt.seed = 3;
    REQUIRE(run_command(Command::validate, cfg, out.path, opt) == 0);
    std::string body = slurp(out.path);
    CHECK(count_lines(body) == 7); // header + 5 trials + summary
    CHECK(body.find("# nmse_db=") != std::string::npos);

    // machine-checkable summary through the json format
    TempFile outj("validate.json");
    opt.format = "json";
    REQUIRE(run_command(Command::validate, cfg, outj.path, opt) == 0);
    auto root = nlohmann::json::parse(slurp(outj.path));
    CHECK(root["max_rel_err"].get<double>() < 1e-3);
    CHECK(root["nmse_db"].get<double>() < -60.0);
}

TEST_CASE("custom antenna file through the config")
{
    TempFile coeff("dipole.csv");
    {
        std::ofstream f(coeff.path);
        f << "# N=1\ns,m,n,re,im\n2,0,1,1,0\n";
    }
    std::string text = R"({
        "wavelength": 0.1,
        "tx": [{"antenna": {"file": ")" +
                       coeff.path + R"("}}],
        "rx": [{"position": [0, 0, 50], "antenna": "hertzian_dipole"}]
    })";
    ScenarioConfig cfg = parse_config(text);
    channel::Scenario sc = build_scenario(cfg);
    CHECK(sc.tx[0].antenna.N == 1);
    CHECK_THAT(std::abs(sc.tx[0].antenna.t.at(swe::ModeIndex{2, 0, 1})), WithinRel(1.0, 1e-14));
}
