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

#ifndef RASCH_CLI_HPP
#define RASCH_CLI_HPP

#include "channel.hpp"
#include "config.hpp"
#include "oracle.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rasch::cli
{
    enum class Command
    {
        gain,
        matrix,
        sweep_orientation,
        sweep_position,
        validate,
        rate
    };

    inline const char *command_name(Command c)
    {
        switch (c)
        {
        case Command::gain: return "gain";
        case Command::matrix: return "matrix";
        case Command::sweep_orientation: return "sweep-orientation";
        case Command::sweep_position: return "sweep-position";
        case Command::validate: return "validate";
        default: return "rate";
        }
    }

    struct RunOptions
    {
        int trials = 50;           // validate
        std::uint64_t seed = 1;    // validate
        std::string format = "csv"; // csv | json
    };

    namespace detail
    {
        inline std::string fmt(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        // portable uniform doubles so outputs are reproducible per seed
        struct Uniform
        {
            std::mt19937_64 rng;
            explicit Uniform(std::uint64_t seed) : rng(seed) {}
            double next() { return double(rng() >> 11) * 0x1.0p-53; }
            double range(double lo, double hi) { return lo + (hi - lo) * next(); }
        };

        struct ValidationTrial
        {
            double kd = 0.0;
            cdouble h_formula{}, h_oracle{};
            double rel_err = 0.0;
        };

        struct ValidationSummary
        {
            std::vector<ValidationTrial> trials;
            double nmse_db = -300.0;
            double max_rel_err = 0.0;
        };

        inline double pattern_peak_directivity(const swe::ModeCoefficients &t)
        {
            double best = 0.0;
            for (int it = 0; it <= 24; it++)
                for (int ip = 0; ip < 16; ip++)
                    best = std::max(best, antenna::directivity(t, it * pi / 24.0,
                                                               ip * two_pi / 16.0));
            return best;
        }

        // Randomized far-field geometries; kd is sampled log-uniform in
        // [2e4, 1e5], deep in the regime where the closed-form gain (a
        // kd -> infinity asymptotic with O(1/kd) corrections) is converged
        // well past the comparison tolerance.  Draws that land in a deep
        // pattern fade (gain below 10% of the peak-directivity Friis scale)
        // are redrawn: inside a fade the leading-order gain itself tends to
        // zero while the O(1/kd) remainder does not, so the relative
        // deviation there measures the null depth rather than convergence
        // (the monotone kd study covers that regime).
        inline ValidationSummary run_validation(const channel::Scenario &sc, int trials,
                                                std::uint64_t seed)
        {
            ValidationSummary out;
            Uniform rng(seed);
            const auto &tx_ant = sc.tx.at(0).antenna;
            const auto &rx_ant = sc.rx.at(0).antenna;
            double peak_scale = std::sqrt(pattern_peak_directivity(tx_ant.t) *
                                          pattern_peak_directivity(rx_ant.t));

            double num = 0.0, den = 0.0;
            int attempts = 0;
            while (int(out.trials.size()) < trials && attempts++ < 100 * trials)
            {
                channel::LinkGeometry g;
                g.d = std::exp(rng.range(std::log(2e4), std::log(1e5))) / sc.medium.k;
                g.theta = std::acos(rng.range(-1.0, 1.0));
                g.phi = rng.range(0.0, two_pi);
                g.alpha = rng.range(0.0, two_pi);
                g.beta = std::acos(rng.range(-1.0, 1.0));

                ValidationTrial trial;
                trial.kd = sc.medium.k * g.d;
                trial.h_formula = channel::channel_gain(tx_ant, rx_ant, g, sc.medium);

                double friis_peak = peak_scale * sc.medium.wavelength() / (4.0 * pi * g.d);
                if (std::abs(trial.h_formula) < 0.1 * friis_peak)
                    continue; // deep fade, redraw

                trial.h_oracle = oracle::oracle_received_signal(tx_ant, rx_ant, g, sc.medium, 1.0);
                trial.rel_err = std::abs(trial.h_formula - trial.h_oracle) /
                                std::abs(trial.h_oracle);
                num += std::norm(trial.h_formula - trial.h_oracle);
                den += std::norm(trial.h_oracle);
                out.max_rel_err = std::max(out.max_rel_err, trial.rel_err);
                out.trials.push_back(trial);
            }
            out.nmse_db = (num == 0.0) ? -300.0 : 10.0 * std::log10(num / den);
            return out;
        }

        inline int write_output(const std::string &out_path, const std::string &content)
        {
            if (out_path.empty() || out_path == "-")
            {
                std::cout << content;
                return 0;
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f)
            {
                std::cerr << "ras-channel: cannot open output file '" << out_path << "'\n";
                return 1;
            }
            f << content;
            return f.good() ? 0 : 1;
        }

        inline void append_sweep_rows(std::ostringstream &os, const channel::SweepResult &res,
                                      double param_scale, const std::string &format)
        {
            if (format == "json")
            {
                json rows = json::array();
                for (const auto &row : res.rows)
                {
                    json r;
                    r["param"] = row.param * param_scale;
                    r["re_h"] = row.h.real();
                    r["im_h"] = row.h.imag();
                    r["abs_h2"] = row.abs_h2;
                    r["rate_bps_hz"] = row.rate;
                    rows.push_back(r);
                }
                json root;
                root["rows"] = rows;
                root["baseline_rate"] = res.baseline_rate;
                root["peak_rate"] = res.peak_rate;
                root["improvement"] = res.improvement;
                os << root.dump(2) << "\n";
                return;
            }
            os << "param,re_h,im_h,abs_h2,rate_bps_hz\n";
            for (const auto &row : res.rows)
                os << fmt(row.param * param_scale) << ',' << fmt(row.h.real()) << ','
                   << fmt(row.h.imag()) << ',' << fmt(row.abs_h2) << ',' << fmt(row.rate) << "\n";
            os << "# baseline_rate=" << fmt(res.baseline_rate)
               << " peak_rate=" << fmt(res.peak_rate)
               << " improvement=" << fmt(res.improvement) << "\n";
        }
    } // namespace detail

    // Executes one command against a parsed config and writes the result to
    // out_path ("" or "-" for stdout).  Returns a process exit status.
    inline int run_command(Command cmd, const ScenarioConfig &cfg, const std::string &out_path,
                           const RunOptions &opt = {})
    {
        try
        {
            channel::Scenario sc = build_scenario(cfg);
            std::ostringstream os;

            switch (cmd)
            {
            case Command::gain:
            {
                channel::LinkGeometry g = channel::geometry_from_positions(
                    sc.tx[0].position, sc.tx[0].normal, sc.rx[0].position);
                cdouble h = channel::channel_gain(sc.tx[0].antenna, sc.rx[0].antenna, g, sc.medium);
                double rate = channel::achievable_rate(h, sc.p_t_watts, sc.sigma_n2_watts);
                if (opt.format == "json")
                {
                    json root;
                    root["re_h"] = h.real();
                    root["im_h"] = h.imag();
                    root["abs_h2"] = std::norm(h);
                    root["rate_bps_hz"] = rate;
                    os << root.dump(2) << "\n";
                }
                else
                {
                    os << "re_h,im_h,abs_h2,rate_bps_hz\n";
                    os << detail::fmt(h.real()) << ',' << detail::fmt(h.imag()) << ','
                       << detail::fmt(std::norm(h)) << ',' << detail::fmt(rate) << "\n";
                }
                break;
            }
            case Command::matrix:
            {
                channel::ChannelMatrix H = channel::mimo_matrix(sc);
                if (opt.format == "json")
                {
                    json rows = json::array();
                    for (int j = 0; j < H.rows; j++)
                        for (int i = 0; i < H.cols; i++)
                        {
                            json r;
                            r["rx_index"] = j + 1;
                            r["tx_index"] = i + 1;
                            r["re"] = H(j, i).real();
                            r["im"] = H(j, i).imag();
                            rows.push_back(r);
                        }
                    os << rows.dump(2) << "\n";
                }
                else
                {
                    os << "rx_index,tx_index,re,im\n";
                    for (int j = 0; j < H.rows; j++)
                        for (int i = 0; i < H.cols; i++)
                            os << (j + 1) << ',' << (i + 1) << ',' << detail::fmt(H(j, i).real())
                               << ',' << detail::fmt(H(j, i).imag()) << "\n";
                }
                break;
            }
            case Command::sweep_orientation:
            {
                OrientationSweepSpec spec;
                if (cfg.sweep)
                {
                    if (cfg.sweep->kind != "orientation")
                        throw config_error("config.sweep has kind '" + cfg.sweep->kind +
                                           "', expected 'orientation'");
                    spec = cfg.sweep->orientation;
                }
                double deg = pi / 180.0;
                std::vector<double> grid;
                for (double b = spec.beta_start_deg; b <= spec.beta_stop_deg + 1e-9;
                     b += spec.beta_step_deg)
                    grid.push_back(b * deg);
                channel::SweepResult res =
                    channel::sweep_orientation(sc, spec.alpha_deg * deg, grid);
                detail::append_sweep_rows(os, res, 1.0 / deg, opt.format); // param in degrees
                break;
            }
            case Command::sweep_position:
            {
                if (!cfg.sweep || cfg.sweep->kind != "position")
                    throw config_error("the sweep-position command needs a config.sweep of kind "
                                       "'position' (start/stop/step)");
                const PositionSweepSpec &spec = cfg.sweep->position;
                double scale = cfg.position_scale();
                channel::Axis ax = spec.axis == "x"   ? channel::Axis::x
                                   : spec.axis == "y" ? channel::Axis::y
                                                      : channel::Axis::z;
                channel::SweepResult res = channel::sweep_position(
                    sc, ax, spec.start * scale, spec.stop * scale, spec.step * scale);
                detail::append_sweep_rows(os, res, 1.0 / scale, opt.format); // config units
                break;
            }
            case Command::validate:
            {
                detail::ValidationSummary sum =
                    detail::run_validation(sc, opt.trials, opt.seed);
                if (opt.format == "json")
                {
                    json rows = json::array();
                    for (const auto &t : sum.trials)
                    {
                        json r;
                        r["kd"] = t.kd;
                        r["abs_h_formula"] = std::abs(t.h_formula);
                        r["abs_h_oracle"] = std::abs(t.h_oracle);
                        r["rel_err"] = t.rel_err;
                        rows.push_back(r);
                    }
                    json root;
                    root["trials"] = rows;
                    root["nmse_db"] = sum.nmse_db;
                    root["max_rel_err"] = sum.max_rel_err;
                    os << root.dump(2) << "\n";
                }
                else
                {
                    os << "kd,abs_h_formula,abs_h_oracle,rel_err\n";
                    for (const auto &t : sum.trials)
                        os << detail::fmt(t.kd) << ',' << detail::fmt(std::abs(t.h_formula))
                           << ',' << detail::fmt(std::abs(t.h_oracle)) << ','
                           << detail::fmt(t.rel_err) << "\n";
                    os << "# nmse_db=" << detail::fmt(sum.nmse_db)
                       << " max_rel_err=" << detail::fmt(sum.max_rel_err) << "\n";
                }
                break;
            }
            case Command::rate:
            {
                channel::ChannelMatrix H = channel::mimo_matrix(sc);
                if (opt.format == "json")
                {
                    json rows = json::array();
                    for (int j = 0; j < H.rows; j++)
                        for (int i = 0; i < H.cols; i++)
                        {
                            json r;
                            r["rx_index"] = j + 1;
                            r["tx_index"] = i + 1;
                            r["abs_h2"] = std::norm(H(j, i));
                            r["rate_bps_hz"] = channel::achievable_rate(H(j, i), sc.p_t_watts,
                                                                        sc.sigma_n2_watts);
                            rows.push_back(r);
                        }
                    os << rows.dump(2) << "\n";
                }
                else
                {
                    os << "rx_index,tx_index,abs_h2,rate_bps_hz\n";
                    for (int j = 0; j < H.rows; j++)
                        for (int i = 0; i < H.cols; i++)
                            os << (j + 1) << ',' << (i + 1) << ',' << detail::fmt(std::norm(H(j, i)))
                               << ','
                               << detail::fmt(channel::achievable_rate(H(j, i), sc.p_t_watts,
                                                                       sc.sigma_n2_watts))
                               << "\n";
                }
                break;
            }
            }

            return detail::write_output(out_path, os.str());
        }
        catch (const std::exception &e)
        {
            std::cerr << "ras-channel: " << command_name(cmd) << ": " << e.what() << "\n";
            return 1;
        }
    }

} // namespace rasch::cli

#endif
