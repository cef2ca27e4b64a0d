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

#include <rasch/rasch.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    int dispatch(rasch::cli::Command cmd, const std::string &config_path,
                 const std::string &out_path, const rasch::cli::RunOptions &opt)
    {
        std::ifstream in(config_path);
        if (!in)
        {
            std::cerr << "ras-channel: cannot open config '" << config_path << "'\n";
            return 1;
        }
        std::ostringstream text;
        text << in.rdbuf();

        try
        {
            rasch::cli::ScenarioConfig cfg = rasch::cli::parse_config(text.str());
            return rasch::cli::run_command(cmd, cfg, out_path, opt);
        }
        catch (const std::exception &e)
        {
            std::cerr << "ras-channel: " << e.what() << "\n";
            return 1;
        }
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"EM channel model for reconfigurable antenna systems"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv";
    int trials = 50;
    std::uint64_t seed = 1;

    app.add_option("--config", config_path, "scenario config file (JSON)")->required();
    app.add_option("--out", out_path, "output file path ('-' for stdout)");
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--trials", trials, "number of randomized validation trials")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed for validation trials");

    struct
    {
        const char *name;
        const char *help;
        rasch::cli::Command cmd;
    } subs[] = {
        {"gain", "channel gain and rate of the first Tx/Rx pair", rasch::cli::Command::gain},
        {"matrix", "full MIMO channel matrix", rasch::cli::Command::matrix},
        {"sweep-orientation", "rate sweep over the transmit elevation",
         rasch::cli::Command::sweep_orientation},
        {"sweep-position", "rate sweep over the transmit position",
         rasch::cli::Command::sweep_position},
        {"validate", "closed-form gain vs. brute-force field propagation",
         rasch::cli::Command::validate},
        {"rate", "per-pair achievable rates", rasch::cli::Command::rate},
    };
    for (const auto &s : subs)
        app.add_subcommand(s.name, s.help)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    rasch::cli::RunOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    opt.format = format;

    for (const auto &s : subs)
        if (app.got_subcommand(s.name))
            return dispatch(s.cmd, config_path, out_path, opt);
    return 1;
}
