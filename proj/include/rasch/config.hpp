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

#ifndef RASCH_CONFIG_HPP
#define RASCH_CONFIG_HPP

#include "antenna.hpp"
#include "channel.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace rasch::cli
{
    using nlohmann::json;

    struct config_error : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    struct AntennaSpec
    {
        std::string kind = "half_wave_dipole"; // hertzian_dipole | half_wave_dipole | custom
        std::string file;                      // coefficient table for kind == custom
        bool raw = false;

        bool operator==(const AntennaSpec &) const = default;
    };

    struct TxSpec
    {
        std::array<double, 3> position{0.0, 0.0, 0.0}; // in config units
        double alpha_deg = 0.0;
        double beta_deg = 0.0;
        AntennaSpec antenna;

        bool operator==(const TxSpec &) const = default;
    };

    struct RxSpec
    {
        std::array<double, 3> position{0.0, 0.0, 0.0};
        AntennaSpec antenna;

        bool operator==(const RxSpec &) const = default;
    };

    struct OrientationSweepSpec
    {
        double alpha_deg = 0.0;
        double beta_start_deg = 0.0;
        double beta_stop_deg = 180.0;
        double beta_step_deg = 1.0;

        bool operator==(const OrientationSweepSpec &) const = default;
    };

    struct PositionSweepSpec
    {
        std::string axis = "x"; // x | y | z
        double start = 0.0;     // in config units
        double stop = 0.0;
        double step = 1.0;

        bool operator==(const PositionSweepSpec &) const = default;
    };

    struct SweepSpec
    {
        std::string kind; // orientation | position
        OrientationSweepSpec orientation;
        PositionSweepSpec position;

        bool operator==(const SweepSpec &) const = default;
    };

    // Parsed scenario file.  Positions are given in wavelengths by default;
    // set "units": "meters" to switch.  Powers are in dBm.
    struct ScenarioConfig
    {
        double wavelength = 0.1; // meters
        std::string units = "wavelength";
        double power_dbm = 10.0;
        double noise_dbm = -20.0;
        std::vector<TxSpec> tx;
        std::vector<RxSpec> rx;
        std::optional<SweepSpec> sweep;

        bool operator==(const ScenarioConfig &) const = default;

        double position_scale() const { return units == "meters" ? 1.0 : wavelength; }
    };

    namespace detail
    {
        inline void reject_unknown_keys(const json &node, std::initializer_list<const char *> allowed,
                                        const std::string &where)
        {
            for (auto it = node.begin(); it != node.end(); ++it)
            {
                bool ok = false;
                for (const char *key : allowed)
                    if (it.key() == key)
                    {
                        ok = true;
                        break;
                    }
                if (!ok)
                    throw config_error(where + ": unknown key '" + it.key() + "'");
            }
        }

        inline double get_number(const json &node, const char *key, const std::string &where,
                                 std::optional<double> fallback = std::nullopt)
        {
            if (!node.contains(key))
            {
                if (fallback)
                    return *fallback;
                throw config_error(where + ": missing required field '" + key + "'");
            }
            const json &v = node.at(key);
            if (!v.is_number())
                throw config_error(where + "." + key + ": expected a number");
            double d = v.get<double>();
            if (!std::isfinite(d))
                throw config_error(where + "." + key + ": value must be finite");
            return d;
        }

        inline AntennaSpec parse_antenna(const json &node, const std::string &where)
        {
            AntennaSpec spec;
            if (node.is_string())
            {
                spec.kind = node.get<std::string>();
                if (spec.kind != "hertzian_dipole" && spec.kind != "half_wave_dipole")
                    throw config_error(where + ": unknown antenna kind '" + spec.kind + "'");
                return spec;
            }
            if (!node.is_object())
                throw config_error(where + ": expected an antenna name or {file: ...}");
            reject_unknown_keys(node, {"file", "raw"}, where);
            if (!node.contains("file") || !node.at("file").is_string())
                throw config_error(where + ": custom antennas need a 'file' path");
            spec.kind = "custom";
            spec.file = node.at("file").get<std::string>();
            if (node.contains("raw"))
            {
                if (!node.at("raw").is_boolean())
                    throw config_error(where + ".raw: expected a boolean");
                spec.raw = node.at("raw").get<bool>();
            }
            return spec;
        }

        inline std::array<double, 3> parse_position(const json &node, const std::string &where)
        {
            if (!node.is_array() || node.size() != 3)
                throw config_error(where + ": expected [x, y, z]");
            std::array<double, 3> p{};
            for (int i = 0; i < 3; i++)
            {
                if (!node.at(std::size_t(i)).is_number())
                    throw config_error(where + ": coordinates must be numbers");
                p[std::size_t(i)] = node.at(std::size_t(i)).get<double>();
                if (!std::isfinite(p[std::size_t(i)]))
                    throw config_error(where + ": coordinates must be finite");
            }
            return p;
        }
    } // namespace detail

    inline ScenarioConfig parse_config(const std::string &text)
    {
        json root;
        try
        {
            root = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw config_error(std::string("config is not valid JSON: ") + e.what());
        }
        if (!root.is_object())
            throw config_error("config root must be an object");

        detail::reject_unknown_keys(
            root, {"wavelength", "units", "power_dbm", "noise_dbm", "tx", "rx", "sweep"}, "config");

        ScenarioConfig cfg;
        cfg.wavelength = detail::get_number(root, "wavelength", "config");
        if (cfg.wavelength <= 0.0)
            throw config_error("config.wavelength: must be positive");

        if (root.contains("units"))
        {
            if (!root.at("units").is_string())
                throw config_error("config.units: expected 'wavelength' or 'meters'");
            cfg.units = root.at("units").get<std::string>();
            if (cfg.units != "wavelength" && cfg.units != "meters")
                throw config_error("config.units: expected 'wavelength' or 'meters'");
        }

        cfg.power_dbm = detail::get_number(root, "power_dbm", "config", 10.0);
        cfg.noise_dbm = detail::get_number(root, "noise_dbm", "config", -20.0);

        if (!root.contains("tx") || !root.at("tx").is_array() || root.at("tx").empty())
            throw config_error("config.tx: need at least one transmit element");
        if (!root.contains("rx") || !root.at("rx").is_array() || root.at("rx").empty())
            throw config_error("config.rx: need at least one receive element");

        int i = 0;
        for (const auto &node : root.at("tx"))
        {
            std::string where = "config.tx[" + std::to_string(i++) + "]";
            if (!node.is_object())
                throw config_error(where + ": expected an object");
            detail::reject_unknown_keys(node, {"position", "alpha_deg", "beta_deg", "antenna"},
                                        where);
            TxSpec t;
            if (node.contains("position"))
                t.position = detail::parse_position(node.at("position"), where + ".position");
            t.alpha_deg = detail::get_number(node, "alpha_deg", where, 0.0);
            t.beta_deg = detail::get_number(node, "beta_deg", where, 0.0);
            if (node.contains("antenna"))
                t.antenna = detail::parse_antenna(node.at("antenna"), where + ".antenna");
            cfg.tx.push_back(t);
        }
        i = 0;
        for (const auto &node : root.at("rx"))
        {
            std::string where = "config.rx[" + std::to_string(i++) + "]";
            if (!node.is_object())
                throw config_error(where + ": expected an object");
            detail::reject_unknown_keys(node, {"position", "antenna"}, where);
            RxSpec r;
            if (node.contains("position"))
                r.position = detail::parse_position(node.at("position"), where + ".position");
            if (node.contains("antenna"))
                r.antenna = detail::parse_antenna(node.at("antenna"), where + ".antenna");
            cfg.rx.push_back(r);
        }

        if (root.contains("sweep"))
        {
            const json &node = root.at("sweep");
            if (!node.is_object() || !node.contains("kind") || !node.at("kind").is_string())
                throw config_error("config.sweep: expected an object with a 'kind'");
            SweepSpec sweep;
            sweep.kind = node.at("kind").get<std::string>();
            if (sweep.kind == "orientation")
            {
                detail::reject_unknown_keys(
                    node, {"kind", "alpha_deg", "beta_start_deg", "beta_stop_deg", "beta_step_deg"},
                    "config.sweep");
                sweep.orientation.alpha_deg =
                    detail::get_number(node, "alpha_deg", "config.sweep", 0.0);
                sweep.orientation.beta_start_deg =
                    detail::get_number(node, "beta_start_deg", "config.sweep", 0.0);
                sweep.orientation.beta_stop_deg =
                    detail::get_number(node, "beta_stop_deg", "config.sweep", 180.0);
                sweep.orientation.beta_step_deg =
                    detail::get_number(node, "beta_step_deg", "config.sweep", 1.0);
                if (sweep.orientation.beta_step_deg <= 0.0)
                    throw config_error("config.sweep.beta_step_deg: must be positive");
            }
            else if (sweep.kind == "position")
            {
                detail::reject_unknown_keys(node, {"kind", "axis", "start", "stop", "step"},
                                            "config.sweep");
                if (node.contains("axis"))
                {
                    if (!node.at("axis").is_string())
                        throw config_error("config.sweep.axis: expected 'x', 'y' or 'z'");
                    sweep.position.axis = node.at("axis").get<std::string>();
                }
                if (sweep.position.axis != "x" && sweep.position.axis != "y" &&
                    sweep.position.axis != "z")
                    throw config_error("config.sweep.axis: expected 'x', 'y' or 'z'");
                sweep.position.start = detail::get_number(node, "start", "config.sweep");
                sweep.position.stop = detail::get_number(node, "stop", "config.sweep");
                sweep.position.step = detail::get_number(node, "step", "config.sweep", 1.0);
                if (sweep.position.step <= 0.0)
                    throw config_error("config.sweep.step: must be positive");
                if (sweep.position.stop < sweep.position.start)
                    throw config_error("config.sweep: stop must be >= start");
            }
            else
                throw config_error("config.sweep.kind: expected 'orientation' or 'position'");
            cfg.sweep = sweep;
        }

        return cfg;
    }

    inline json antenna_to_json(const AntennaSpec &spec)
    {
        if (spec.kind != "custom")
            return json(spec.kind);
        json node;
        node["file"] = spec.file;
        if (spec.raw)
            node["raw"] = true;
        return node;
    }

    inline json to_json(const ScenarioConfig &cfg)
    {
        json root;
        root["wavelength"] = cfg.wavelength;
        root["units"] = cfg.units;
        root["power_dbm"] = cfg.power_dbm;
        root["noise_dbm"] = cfg.noise_dbm;
        root["tx"] = json::array();
        for (const auto &t : cfg.tx)
        {
            json node;
            node["position"] = t.position;
            node["alpha_deg"] = t.alpha_deg;
            node["beta_deg"] = t.beta_deg;
            node["antenna"] = antenna_to_json(t.antenna);
            root["tx"].push_back(node);
        }
        root["rx"] = json::array();
        for (const auto &r : cfg.rx)
        {
            json node;
            node["position"] = r.position;
            node["antenna"] = antenna_to_json(r.antenna);
            root["rx"].push_back(node);
        }
        if (cfg.sweep)
        {
            json node;
            node["kind"] = cfg.sweep->kind;
            if (cfg.sweep->kind == "orientation")
            {
                node["alpha_deg"] = cfg.sweep->orientation.alpha_deg;
                node["beta_start_deg"] = cfg.sweep->orientation.beta_start_deg;
                node["beta_stop_deg"] = cfg.sweep->orientation.beta_stop_deg;
                node["beta_step_deg"] = cfg.sweep->orientation.beta_step_deg;
            }
            else
            {
                node["axis"] = cfg.sweep->position.axis;
                node["start"] = cfg.sweep->position.start;
                node["stop"] = cfg.sweep->position.stop;
                node["step"] = cfg.sweep->position.step;
            }
            root["sweep"] = node;
        }
        return root;
    }

    inline antenna::AntennaModel build_antenna(const AntennaSpec &spec, double k)
    {
        if (spec.kind == "hertzian_dipole")
            return antenna::hertzian_dipole_coefficients(k);
        if (spec.kind == "half_wave_dipole")
            return antenna::half_wave_dipole_coefficients(k);
        std::ifstream in(spec.file);
        if (!in)
            throw config_error("cannot open coefficient table '" + spec.file + "'");
        return antenna::load_custom_coefficients(in, k, spec.raw);
    }

    // Scenario in SI units from a parsed config
    inline channel::Scenario build_scenario(const ScenarioConfig &cfg)
    {
        channel::Scenario sc;
        sc.medium = channel::Medium::free_space(cfg.wavelength);
        sc.p_t_watts = dbm_to_watts(cfg.power_dbm);
        sc.sigma_n2_watts = dbm_to_watts(cfg.noise_dbm);

        double scale = cfg.position_scale();
        double deg = pi / 180.0;
        for (const auto &t : cfg.tx)
        {
            channel::TxElement el;
            el.position = Vec3{t.position[0], t.position[1], t.position[2]} * scale;
            el.normal = channel::angles_to_unit(t.alpha_deg * deg, t.beta_deg * deg);
            el.antenna = build_antenna(t.antenna, sc.medium.k);
            sc.tx.push_back(el);
        }
        for (const auto &r : cfg.rx)
        {
            channel::RxElement el;
            el.position = Vec3{r.position[0], r.position[1], r.position[2]} * scale;
            el.antenna = build_antenna(r.antenna, sc.medium.k);
            sc.rx.push_back(el);
        }
        return sc;
    }

} // namespace rasch::cli

#endif
