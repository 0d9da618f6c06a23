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

// Command-line front end: one-shot SNR and region queries, scenario sweeps,
// figure fixtures and the self-validation report.
//
// Exit codes: 0 success, 1 usage, 2 configuration / output, 3 validation.

#include <xluaa/config.hpp>
#include <xluaa/xluaa.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace xluaa;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_config = 2,
        exit_validation = 3
    };

    std::string num(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return buf;
    }

    struct ArcOptions
    {
        std::optional<double> aperture;
        std::optional<double> radius;
        std::optional<double> support;
        std::optional<double> support_in_d;
        double freq_ghz = 30.0;

        void attach(CLI::App *cmd)
        {
            auto *ap = cmd->add_option("--aperture", aperture, "array aperture D (m)");
            auto *rad = cmd->add_option("--radius", radius, "arc radius r0 (m), instead of --aperture");
            ap->excludes(rad);
            auto *sup = cmd->add_option("--support", support, "arc support L (m)");
            auto *sud = cmd->add_option("--support-in-d", support_in_d, "arc support in multiples of lambda/2");
            sup->excludes(sud);
            cmd->add_option("--freq-ghz", freq_ghz, "carrier frequency (GHz)")->capture_default_str();
        }

        double wavelength() const { return wavelength_from_frequency(freq_ghz * 1e9); }

        ArcArrayGeometry resolve() const
        {
            const double lambda = wavelength();
            if (!support && !support_in_d)
                throw CLI::ValidationError("--support", "one of --support or --support-in-d is required");
            const double L = support ? *support : *support_in_d * lambda / 2.0;
            double D = 0.0;
            if (aperture)
                D = *aperture;
            else if (radius)
            {
                if (!(L > 0.0 && L <= *radius))
                    throw Error(Errc::support_exceeds_semicircle, "arc support must lie in (0, r0]");
                D = 2.0 * std::sqrt(L * (2.0 * *radius - L));
            }
            else
                throw CLI::ValidationError("--aperture", "one of --aperture or --radius is required");
            return arc_from_aperture_support(D, L, lambda);
        }
    };

    void print_geometry(const ArcArrayGeometry &g)
    {
        std::cout << "geometry: M=" << g.count() << " r0=" << num(g.radius()) << " alpha=" << num(g.central_angle())
                  << " L=" << num(g.support()) << " D=" << num(g.aperture())
                  << " actual_spacing=" << num(g.actual_spacing()) << '\n';
    }

    int run_snr(const ArcOptions &arc, double r, double theta_deg, double gamma0_db, const std::string &span)
    {
        const auto geom = arc.resolve();
        const auto u = UserLocation::polar_deg(r, theta_deg);
        const auto lb = LinkBudget::from_reference_snr_db(gamma0_db, arc.wavelength());
        print_geometry(geom);
        const auto mode = span == "endpoints" ? ClosedFormSpan::arc_endpoints : ClosedFormSpan::array_cells;

        auto line = [](const char *name, auto &&fn) {
            std::printf("%-14s", name);
            try
            {
                const double v = fn();
                std::printf(" %18.10g  %12.6f dB\n", v, to_db(v));
            }
            catch (const Error &e)
            {
                std::printf(" unavailable (%s: %s)\n", std::string(errc_name(e.code())).c_str(), e.what());
            }
        };
        line("snr_direct", [&] { return mrc_snr_direct(geom, u, lb); });
        line("snr_closed", [&] { return mrc_snr_closed_form(geom, u, lb, mode); });
        line("snr_asymptote", [&] { return asymptotic_snr(u, geom.support(), geom.spacing(), lb); });
        return exit_ok;
    }

    int run_regions(const ArcOptions &arc, const std::vector<double> &thetas_deg, double upsilon, unsigned workers)
    {
        const auto geom = arc.resolve();
        print_geometry(geom);
        std::vector<double> thetas;
        for (double t : thetas_deg)
            thetas.push_back(deg_to_rad(t));
        std::sort(thetas.begin(), thetas.end());
        thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
        const auto profile = region_profile(geom, geom.aperture(), thetas, upsilon, workers);

        auto opt = [](const std::optional<double> &v) { return v ? num(*v) : std::string("n/a"); };
        std::printf("%10s %16s %16s %16s %16s %16s\n", "theta_deg", "ddrayl_exact", "ddrayl_approx", "upd",
                    "ula_ddrayl", "ula_upd");
        for (const auto &row : profile)
        {
            std::printf("%10s %16s %16s %16s %16s %16s\n", num(rad_to_deg(row.theta)).c_str(),
                        opt(row.rayleigh_exact).c_str(), num(row.rayleigh_approx).c_str(), opt(row.upd).c_str(),
                        num(row.ula_rayleigh).c_str(), opt(row.ula_upd).c_str());
            for (const auto &note : row.notes)
                std::fprintf(stderr, "note: theta=%s: %s\n", num(rad_to_deg(row.theta)).c_str(), note.c_str());
        }
        return exit_ok;
    }

    void write_outputs(const SweepResult &res, const fs::path &dir)
    {
        fs::create_directories(dir);
        const std::string stem = res.scenario.output_stem.empty() ? res.scenario.name : res.scenario.output_stem;
        if (stem.empty())
            throw Error(Errc::config_error, "scenario needs a name or an outputs stem");
        const std::string csv = stem + ".csv";
        write_csv(res, (dir / csv).string());
        write_geometry_csv(res, (dir / (stem + ".geometry.csv")).string());
        emit_plot_script(res, csv, (dir / (stem + ".gp")).string());
        for (const auto &w : res.warnings)
            std::fprintf(stderr, "warning: %s: %s\n", res.scenario.name.c_str(), w.c_str());
        std::size_t infeasible = 0;
        for (const auto &row : res.rows)
            infeasible += row.reason.empty() ? 0 : 1;
        std::printf("%s: %zu rows (%zu infeasible) -> %s\n", stem.c_str(), res.rows.size(), infeasible,
                    (dir / csv).string().c_str());
    }

    int run_validate(bool as_json)
    {
        const auto report = validate_all();
        if (as_json)
        {
            nlohmann::json doc = nlohmann::json::array();
            for (const auto &c : report)
                doc.push_back({{"name", c.name},
                               {"passed", c.passed},
                               {"measured", std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json()},
                               {"tolerance", c.tolerance},
                               {"detail", c.detail}});
            std::cout << doc.dump(2) << '\n';
        }
        else
        {
            for (const auto &c : report)
                std::printf("%-4s %-38s measured=%-14s tolerance=%-8s %s\n", c.passed ? "PASS" : "FAIL",
                            c.name.c_str(), num(c.measured).c_str(), num(c.tolerance).c_str(), c.detail.c_str());
            std::printf("%zu checks, %s\n", report.size(), all_passed(report) ? "all passed" : "FAILURES");
        }
        return all_passed(report) ? exit_ok : exit_validation;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"near-field SNR and region analysis for uniform arc arrays", "xluaa"};
    app.require_subcommand(1);

    // snr
    auto *snr = app.add_subcommand("snr", "one-shot MRC SNR: direct sum, closed form and asymptote");
    ArcOptions snr_arc;
    snr_arc.attach(snr);
    double r = 0.0;
    double theta_deg = 0.0;
    double gamma0_db = 50.0;
    std::string span = "cells";
    snr->add_option("--r", r, "user distance from the chord midpoint (m)")->required();
    snr->add_option("--theta-deg", theta_deg, "user angle (degrees)")->required();
    snr->add_option("--gamma0-db", gamma0_db, "reference SNR (dB)")->capture_default_str();
    snr->add_option("--span", span, "closed-form integration span")
        ->check(CLI::IsMember({"cells", "endpoints"}))
        ->capture_default_str();

    // regions
    auto *regions = app.add_subcommand("regions", "DDRayl and uniform power distances over a theta list");
    ArcOptions reg_arc;
    reg_arc.attach(regions);
    std::vector<double> thetas;
    double upsilon = 0.9;
    unsigned reg_workers = 1;
    regions->add_option("--theta-deg", thetas, "angles (degrees)")->required()->delimiter(',');
    regions->add_option("--upsilon", upsilon, "power-ratio threshold")->capture_default_str();
    regions->add_option("--workers", reg_workers, "worker threads")->capture_default_str();

    // sweep
    auto *sweep = app.add_subcommand("sweep", "run a scenario file and write CSV and plot script");
    std::string config_path;
    std::string sweep_out = ".";
    unsigned sweep_workers = 1;
    sweep->add_option("--config", config_path, "scenario JSON file")->required();
    sweep->add_option("--out", sweep_out, "output directory")->capture_default_str();
    sweep->add_option("--workers", sweep_workers, "worker threads")->capture_default_str();

    // validate
    auto *validate = app.add_subcommand("validate", "run every self-check");
    bool as_json = false;
    validate->add_flag("--json", as_json, "machine-readable report");

    // figures
    auto *figures = app.add_subcommand("figures", "write the four figure fixtures");
    std::string fig_out;
    unsigned fig_workers = 1;
    figures->add_option("--out", fig_out, "output directory")->required();
    figures->add_option("--workers", fig_workers, "worker threads")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::fprintf(stderr, "xluaa: %s\n", e.what());
        return exit_usage;
    }

    try
    {
        if (*snr)
            return run_snr(snr_arc, r, theta_deg, gamma0_db, span);
        if (*regions)
            return run_regions(reg_arc, thetas, upsilon, reg_workers);
        if (*sweep)
        {
            const auto scenario = load_scenario(config_path);
            write_outputs(run_scenario(scenario, sweep_workers), sweep_out);
            return exit_ok;
        }
        if (*validate)
            return run_validate(as_json);
        if (*figures)
        {
            for (const auto &s : figure_scenarios())
                write_outputs(run_scenario(s, fig_workers), fig_out);
            return exit_ok;
        }
    }
    catch (const CLI::Error &e)
    {
        std::fprintf(stderr, "xluaa: %s\n", e.what());
        return exit_usage;
    }
    catch (const Error &e)
    {
        std::fprintf(stderr, "xluaa: %s: %s\n", std::string(errc_name(e.code())).c_str(), e.what());
        return e.code() == Errc::config_error || e.code() == Errc::io_error ? exit_config : exit_usage;
    }
    catch (const fs::filesystem_error &e)
    {
        std::fprintf(stderr, "xluaa: io_error: %s\n", e.what());
        return exit_config;
    }
    return exit_usage;
}
