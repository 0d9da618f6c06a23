// SPDX-License-Identifier: Apache-2.0
//
// xluaa: near-field channel modelling for uniform arc arrays
// Copyright (C) 2026 The xluaa Authors
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

#ifndef XLUAA_CONFIG_HPP
#define XLUAA_CONFIG_HPP

#include "error.hpp"
#include "sweep.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

// JSON scenario files. Lengths are meters unless the key ends in _in_d
// (multiples of d = lambda/2), _deg, _ghz or _db. Unknown keys are errors.
//
//   {
//     "name": "fig3a",
//     "kind": "aperture_sweep",
//     "carrier_frequency_ghz": 30,
//     "gamma0_bar_db": 50,
//     "user": {"r": 16, "theta_deg": 30},
//     "arc": {"support_in_d": 800},
//     "grid": {"start": 8, "stop": 200, "points": 40},
//     "outputs": "fig3a",
//     "include_ula": true
//   }

namespace xluaa
{
    namespace detail
    {
        using json = nlohmann::json;

        [[noreturn]] inline void config_fail(const std::string &what) { throw Error(Errc::config_error, what); }

        inline void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where)
        {
            if (!obj.is_object())
                config_fail(where + " must be an object");
            for (const auto &[key, _] : obj.items())
                if (!allowed.count(key))
                    config_fail("unknown key '" + key + "' in " + where);
        }

        inline double number_at(const json &obj, const std::string &key, const std::string &where)
        {
            const auto &v = obj.at(key);
            if (!v.is_number())
                config_fail(where + "." + key + " must be a number");
            return v.get<double>();
        }
    } // namespace detail

    inline SweepScenario parse_scenario(const nlohmann::json &doc)
    {
        using detail::config_fail;
        using detail::number_at;
        detail::reject_unknown_keys(doc,
                                    {"name", "kind", "carrier_frequency", "carrier_frequency_ghz", "gamma0_bar_db",
                                     "user", "arc", "grid", "outputs", "include_ula", "upsilon_th",
                                     "convergence_mode"},
                                    "scenario");
        SweepScenario s;
        s.user_r = 0.0;
        s.user_theta_deg = 0.0;
        try
        {
            if (!doc.contains("kind") || !doc["kind"].is_string())
                config_fail("scenario.kind must be a string");
            const auto kind = parse_sweep_kind(doc["kind"].get<std::string>());
            if (!kind)
                config_fail("unknown scenario kind '" + doc["kind"].get<std::string>() + "'");
            s.kind = *kind;
            s.name = doc.value("name", std::string{});

            const bool hz = doc.contains("carrier_frequency");
            const bool ghz = doc.contains("carrier_frequency_ghz");
            if (hz == ghz)
                config_fail("give exactly one of carrier_frequency or carrier_frequency_ghz");
            s.carrier_frequency_hz = hz ? number_at(doc, "carrier_frequency", "scenario")
                                        : number_at(doc, "carrier_frequency_ghz", "scenario") * 1e9;
            if (!doc.contains("gamma0_bar_db"))
                config_fail("scenario.gamma0_bar_db is required");
            s.gamma0_bar_db = number_at(doc, "gamma0_bar_db", "scenario");

            if (doc.contains("user"))
            {
                const auto &u = doc["user"];
                detail::reject_unknown_keys(u, {"r", "theta_deg"}, "user");
                s.user_r = number_at(u, "r", "user");
                s.user_theta_deg = u.contains("theta_deg") ? number_at(u, "theta_deg", "user") : 0.0;
            }
            else if (s.kind == SweepKind::region_profile)
                s.user_r = 1.0; // unused: region profiles sweep the angle at every range
            else
                config_fail("scenario.user is required");

            if (doc.contains("arc"))
            {
                const auto &a = doc["arc"];
                detail::reject_unknown_keys(a, {"aperture", "support", "support_in_d"}, "arc");
                if (a.contains("aperture") && !a["aperture"].is_null())
                    s.aperture = number_at(a, "aperture", "arc");
                if (a.contains("support") && !a["support"].is_null())
                    s.support = number_at(a, "support", "arc");
                if (a.contains("support_in_d") && !a["support_in_d"].is_null())
                    s.support_in_d = number_at(a, "support_in_d", "arc");
            }

            if (!doc.contains("grid"))
                config_fail("scenario.grid is required");
            const auto &g = doc["grid"];
            detail::reject_unknown_keys(g, {"start", "stop", "step", "points", "spacing"}, "grid");
            s.grid.start = number_at(g, "start", "grid");
            s.grid.stop = number_at(g, "stop", "grid");
            if (g.contains("step"))
                s.grid.step = number_at(g, "step", "grid");
            if (g.contains("points"))
            {
                if (!g["points"].is_number_integer())
                    config_fail("grid.points must be an integer");
                s.grid.points = g["points"].get<int>();
            }
            if (g.contains("spacing"))
            {
                const auto sp = g["spacing"].get<std::string>();
                if (sp != "linear" && sp != "log")
                    config_fail("grid.spacing must be 'linear' or 'log'");
                s.grid.log_spacing = sp == "log";
            }

            s.output_stem = doc.value("outputs", s.name);
            s.include_ula = doc.value("include_ula", true);
            if (doc.contains("upsilon_th"))
                s.upsilon_th = number_at(doc, "upsilon_th", "scenario");
            if (doc.contains("convergence_mode"))
            {
                const auto m = doc["convergence_mode"].get<std::string>();
                if (m == "support")
                    s.convergence_mode = ConvergenceMode::support;
                else if (m == "aperture")
                    s.convergence_mode = ConvergenceMode::aperture;
                else
                    config_fail("convergence_mode must be 'support' or 'aperture'");
            }
        }
        catch (const nlohmann::json::exception &e)
        {
            config_fail(std::string("malformed scenario: ") + e.what());
        }
        s.validate();
        return s;
    }

    inline SweepScenario parse_scenario_text(const std::string &text)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw Error(Errc::config_error, std::string("invalid JSON: ") + e.what());
        }
        return parse_scenario(doc);
    }

    inline SweepScenario load_scenario(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw Error(Errc::config_error, "cannot read scenario file " + path);
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_scenario_text(ss.str());
    }

    inline nlohmann::json scenario_to_json(const SweepScenario &s)
    {
        nlohmann::json doc;
        doc["name"] = s.name;
        doc["kind"] = std::string(to_string(s.kind));
        doc["carrier_frequency_ghz"] = s.carrier_frequency_hz / 1e9;
        doc["gamma0_bar_db"] = s.gamma0_bar_db;
        if (s.kind != SweepKind::region_profile)
        {
            doc["user"] = {{"r", s.user_r}};
            if (!s.sweeps_angle())
                doc["user"]["theta_deg"] = s.user_theta_deg;
        }
        nlohmann::json arc = nlohmann::json::object();
        if (s.aperture)
            arc["aperture"] = *s.aperture;
        if (s.support)
            arc["support"] = *s.support;
        if (s.support_in_d)
            arc["support_in_d"] = *s.support_in_d;
        doc["arc"] = arc;
        nlohmann::json grid = {{"start", s.grid.start}, {"stop", s.grid.stop}};
        if (s.grid.step)
            grid["step"] = *s.grid.step;
        if (s.grid.points)
            grid["points"] = *s.grid.points;
        if (s.grid.log_spacing)
            grid["spacing"] = "log";
        doc["grid"] = grid;
        doc["outputs"] = s.output_stem;
        doc["include_ula"] = s.include_ula;
        if (s.kind == SweepKind::region_profile)
            doc["upsilon_th"] = s.upsilon_th;
        if (s.kind == SweepKind::convergence)
            doc["convergence_mode"] = std::string(to_string(s.convergence_mode));
        return doc;
    }
} // namespace xluaa

#endif
