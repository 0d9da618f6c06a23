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

#ifndef XLUAA_SWEEP_HPP
#define XLUAA_SWEEP_HPP

#include "channel.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "regions.hpp"
#include "snr.hpp"
#include "units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Declarative parameter sweeps and their CSV / gnuplot output.
//
// CSV contract: UTF-8, LF line endings, optional '#' metadata lines, then
// the header `swept,metric,array,linear,db` and one line per
// (grid point, metric, array) in that nesting order. Numbers use 17
// significant digits; linear values below 1e-300 print as 0 with db -inf.

namespace xluaa
{
    enum class SweepKind
    {
        region_profile,
        aperture_sweep,
        support_sweep,
        angle_sweep,
        convergence
    };

    enum class ConvergenceMode
    {
        support,  // L shrinks towards the ULA limit at fixed D
        aperture  // D grows towards the large-array asymptote at fixed L
    };

    enum class ArrayKind
    {
        uaa,
        ula
    };

    constexpr std::string_view to_string(SweepKind k)
    {
        switch (k)
        {
        case SweepKind::region_profile: return "region_profile";
        case SweepKind::aperture_sweep: return "aperture_sweep";
        case SweepKind::support_sweep: return "support_sweep";
        case SweepKind::angle_sweep: return "angle_sweep";
        case SweepKind::convergence: return "convergence";
        }
        return "";
    }

    constexpr std::string_view to_string(ConvergenceMode m)
    {
        return m == ConvergenceMode::support ? "support" : "aperture";
    }

    constexpr std::string_view to_string(ArrayKind a) { return a == ArrayKind::uaa ? "UAA" : "ULA"; }

    inline std::optional<SweepKind> parse_sweep_kind(std::string_view s)
    {
        for (auto k : {SweepKind::region_profile, SweepKind::aperture_sweep, SweepKind::support_sweep,
                       SweepKind::angle_sweep, SweepKind::convergence})
            if (to_string(k) == s)
                return k;
        return std::nullopt;
    }

    struct GridSpec
    {
        double start = 0.0;
        double stop = 0.0;
        std::optional<double> step;
        std::optional<int> points;
        bool log_spacing = false;

        std::vector<double> values() const
        {
            auto fail = [](const char *what) { throw Error(Errc::config_error, what); };
            if (!std::isfinite(start) || !std::isfinite(stop))
                fail("grid bounds must be finite");
            if (step.has_value() == points.has_value())
                fail("grid needs exactly one of step or points");
            if (stop < start)
                fail("grid is empty (stop < start)");
            std::vector<double> out;
            if (step)
            {
                if (log_spacing)
                    fail("log spacing requires points, not step");
                if (!(*step > 0.0))
                    fail("grid step must be positive");
                const auto n = static_cast<long long>(std::floor((stop - start) / *step + 1e-9)) + 1;
                if (n > 10'000'000)
                    fail("grid too large");
                for (long long i = 0; i < n; ++i)
                    out.push_back(start + static_cast<double>(i) * *step);
            }
            else
            {
                const int n = *points;
                if (n < 1)
                    fail("grid is empty (points < 1)");
                if (n > 1 && !(stop > start))
                    fail("grid with several points needs stop > start");
                if (log_spacing && !(start > 0.0))
                    fail("log spacing needs a positive start");
                for (int i = 0; i < n; ++i)
                {
                    if (i == n - 1 && n > 1)
                    {
                        out.push_back(stop);
                        break;
                    }
                    const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
                    out.push_back(log_spacing ? start * std::pow(stop / start, f) : start + (stop - start) * f);
                }
            }
            return out;
        }
    };

    struct SweepScenario
    {
        std::string name;
        SweepKind kind = SweepKind::aperture_sweep;
        double carrier_frequency_hz = 30e9;
        double gamma0_bar_db = 50.0;
        double user_r = 16.0;          // m
        double user_theta_deg = 30.0;  // degrees
        std::optional<double> aperture;     // m
        std::optional<double> support;      // m
        std::optional<double> support_in_d; // multiples of d = lambda/2
        GridSpec grid;
        std::string output_stem;
        bool include_ula = true;
        double upsilon_th = 0.9;
        ConvergenceMode convergence_mode = ConvergenceMode::support;

        double wavelength() const { return wavelength_from_frequency(carrier_frequency_hz); }
        double spacing() const { return wavelength() / 2.0; }

        /// Arc support in meters, resolving support_in_d against d = lambda/2.
        std::optional<double> resolved_support() const
        {
            if (support)
                return support;
            if (support_in_d)
                return *support_in_d * spacing();
            return std::nullopt;
        }

        /// What the grid sweeps, with its unit.
        std::string swept_label() const
        {
            switch (kind)
            {
            case SweepKind::region_profile:
            case SweepKind::angle_sweep: return "theta (deg)";
            case SweepKind::aperture_sweep: return "aperture D (m)";
            case SweepKind::support_sweep: return "arc support L (m)";
            case SweepKind::convergence:
                return convergence_mode == ConvergenceMode::support ? "arc support L (m)" : "aperture D (m)";
            }
            return "";
        }

        bool sweeps_aperture() const
        {
            return kind == SweepKind::aperture_sweep ||
                   (kind == SweepKind::convergence && convergence_mode == ConvergenceMode::aperture);
        }
        bool sweeps_support() const
        {
            return kind == SweepKind::support_sweep ||
                   (kind == SweepKind::convergence && convergence_mode == ConvergenceMode::support);
        }
        bool sweeps_angle() const { return kind == SweepKind::region_profile || kind == SweepKind::angle_sweep; }

        /// Throws ConfigError on anything that would make the sweep meaningless.
        void validate() const
        {
            auto fail = [](const std::string &what) { throw Error(Errc::config_error, what); };
            auto positive = [&](double v, const char *what) {
                if (!(v > 0.0) || !std::isfinite(v))
                    fail(std::string(what) + " must be positive");
            };
            positive(carrier_frequency_hz, "carrier frequency");
            if (!std::isfinite(gamma0_bar_db))
                fail("gamma0_bar_db must be finite");
            positive(user_r, "user distance");
            if (!(std::abs(user_theta_deg) <= 90.0))
                fail("user angle must lie in [-90, 90] degrees");
            if (support && support_in_d)
                fail("give either support or support_in_d, not both");
            if (!(upsilon_th > 0.0 && upsilon_th < 1.0))
                fail("upsilon_th must lie in (0, 1)");
            const auto grid_values = grid.values();

            if (!sweeps_aperture())
            {
                if (!aperture)
                    fail("scenario needs an aperture");
                positive(*aperture, "aperture");
            }
            else if (aperture)
                fail("aperture is the swept variable; do not fix it");
            if (!sweeps_support())
            {
                const auto L = resolved_support();
                if (!L)
                    fail("scenario needs an arc support");
                positive(*L, "arc support");
            }
            else if (support || support_in_d)
                fail("arc support is the swept variable; do not fix it");

            if (sweeps_angle())
            {
                if (grid_values.front() < -90.0 || grid_values.back() > 90.0)
                    fail("angle grid must stay within [-90, 90] degrees");
            }
            else if (!(grid_values.front() > 0.0))
                fail("length grid must start above zero");

            if (sweeps_aperture() && grid_values.front() < 2.0 * *resolved_support())
                fail("aperture grid must start at or above 2L (semicircle limit)");
            if (sweeps_support() && grid_values.back() > *aperture / 2.0)
                fail("support grid must stay at or below D/2 (semicircle limit)");
            if (kind == SweepKind::convergence && include_ula)
                fail("convergence sweeps compare against analytic limits; set include_ula to false");
        }
    };

    struct SweepRow
    {
        double swept = 0.0;
        std::string metric;
        ArrayKind array = ArrayKind::uaa;
        double linear = std::numeric_limits<double>::quiet_NaN();
        std::string reason; // non-empty when the value could not be evaluated
    };

    struct GeometryRecord
    {
        double swept = 0.0;
        ArrayKind array = ArrayKind::uaa;
        int count = 0;
        double radius = 0.0;
        double central_angle = 0.0;
        double support = 0.0;
        double aperture = 0.0;
        double actual_spacing = 0.0;
        std::string status = "ok";
    };

    struct SweepResult
    {
        SweepScenario scenario;
        std::vector<double> grid;
        std::vector<SweepRow> rows;
        std::vector<GeometryRecord> geometry;
        std::vector<std::string> warnings;
    };

    struct MetricSpec
    {
        std::string_view name;
        std::string_view family;
    };

    /// Metrics emitted per grid point and array, in CSV order.
    inline std::vector<MetricSpec> metric_registry(SweepKind kind)
    {
        switch (kind)
        {
        case SweepKind::region_profile: return {{"ddrayl", "ddrayl"}, {"upd", "upd"}};
        case SweepKind::convergence: return {{"snr_closed", "snr"}, {"snr_limit", "snr"}, {"gap", "gap"}};
        default: return {{"snr_direct", "snr"}, {"snr_closed", "snr"}, {"snr_asymptote", "snr"}};
        }
    }

    namespace detail
    {
        struct PointOutput
        {
            std::vector<SweepRow> rows;
            std::vector<GeometryRecord> geometry;
            std::vector<std::string> warnings;
        };

        template <class Fn>
        SweepRow evaluate_metric(double swept, std::string_view metric, ArrayKind array, Fn &&fn)
        {
            SweepRow row{swept, std::string(metric), array, std::numeric_limits<double>::quiet_NaN(), {}};
            try
            {
                row.linear = fn();
            }
            catch (const Error &e)
            {
                row.reason = std::string(errc_name(e.code()));
            }
            return row;
        }

        inline std::string format_number(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        inline PointOutput evaluate_point(const SweepScenario &s, double x)
        {
            PointOutput out;
            const double lambda = s.wavelength();
            const double d = s.spacing();
            const auto lb = LinkBudget::from_reference_snr_db(s.gamma0_bar_db, lambda);
            const double D = s.sweeps_aperture() ? x : *s.aperture;
            const double L = s.sweeps_support() ? x : *s.resolved_support();
            const double theta_deg = s.sweeps_angle() ? x : s.user_theta_deg;
            const auto metrics = metric_registry(s.kind);

            // arc geometry; failure marks every UAA metric of this point
            std::optional<ArcArrayGeometry> arc;
            std::string arc_reason;
            GeometryRecord rec{x, ArrayKind::uaa};
            try
            {
                arc = arc_from_aperture_support(D, L, lambda);
                rec.count = arc->count();
                rec.radius = arc->radius();
                rec.central_angle = arc->central_angle();
                rec.support = arc->support();
                rec.aperture = arc->aperture();
                rec.actual_spacing = arc->actual_spacing();
            }
            catch (const Error &e)
            {
                arc_reason = std::string(errc_name(e.code()));
                rec.support = L;
                rec.aperture = D;
                rec.status = std::string(errc_name(Errc::infeasible_grid_point)) + ":" + arc_reason;
            }

            std::optional<UserLocation> user;
            if (s.kind != SweepKind::region_profile)
            {
                user = UserLocation::polar_deg(s.user_r, theta_deg);
                if (arc && !user_outside_arc(*arc, *user))
                {
                    arc_reason = std::string(errc_name(Errc::user_inside_arc));
                    rec.status = std::string(errc_name(Errc::infeasible_grid_point)) + ":" + arc_reason;
                }
            }
            out.geometry.push_back(rec);

            std::optional<UlaArrayGeometry> ula;
            if (s.include_ula)
            {
                ula = ula_from_aperture(D, lambda);
                GeometryRecord urec{x, ArrayKind::ula};
                urec.count = ula->count;
                urec.radius = std::numeric_limits<double>::infinity();
                urec.aperture = ula->aperture;
                urec.actual_spacing = ula->spacing;
                out.geometry.push_back(urec);
            }

            auto uaa_value = [&](std::string_view metric) -> double {
                if (!arc_reason.empty())
                    throw Error(Errc::infeasible_grid_point, arc_reason);
                const double theta = deg_to_rad(theta_deg);
                switch (s.kind)
                {
                case SweepKind::region_profile:
                    if (metric == "ddrayl")
                        return rayleigh_distance_approx(*arc, theta);
                    return uniform_power_distance(*arc, theta, s.upsilon_th);
                case SweepKind::convergence:
                {
                    double closed = mrc_snr_closed_form(*arc, *user, lb);
                    const double limit = s.convergence_mode == ConvergenceMode::support
                                             ? ula_snr_closed_form(arc->count(), d, *user, lb)
                                             : asymptotic_snr(*user, L, d, lb);
                    if (metric == "snr_closed")
                        return closed;
                    if (metric == "snr_limit")
                        return limit;
                    return limit / closed;
                }
                default:
                    if (metric == "snr_direct")
                        return mrc_snr_direct(*arc, *user, lb);
                    if (metric == "snr_closed")
                    {
                        if (closed_form_ill_conditioned(*arc, *user))
                        {
                            out.warnings.push_back("closed form ill-conditioned at swept=" + format_number(x) +
                                                   "; using direct summation");
                            return mrc_snr_direct(*arc, *user, lb);
                        }
                        return mrc_snr_closed_form(*arc, *user, lb);
                    }
                    return asymptotic_snr(*user, L, d, lb);
                }
            };

            auto ula_value = [&](std::string_view metric) -> double {
                const double theta = deg_to_rad(theta_deg);
                if (s.kind == SweepKind::region_profile)
                {
                    if (metric == "ddrayl")
                        return rayleigh_distance_ula(D, lambda, theta);
                    return uniform_power_distance_ula(D, lambda, theta, s.upsilon_th);
                }
                if (metric == "snr_direct")
                    return mrc_snr_direct_ula(*ula, *user, lb);
                if (metric == "snr_closed")
                    return ula_snr_closed_form(ula->count, ula->spacing, *user, lb);
                return asymptotic_snr(*user, 0.0, d, lb);
            };

            for (const auto &m : metrics)
            {
                out.rows.push_back(evaluate_metric(x, m.name, ArrayKind::uaa, [&] { return uaa_value(m.name); }));
                if (s.include_ula)
                    out.rows.push_back(evaluate_metric(x, m.name, ArrayKind::ula, [&] { return ula_value(m.name); }));
            }
            return out;
        }
    } // namespace detail

    /// Evaluates every grid point of the scenario; rows come out in grid order
    /// regardless of the worker count.
    inline SweepResult run_scenario(const SweepScenario &s, unsigned workers = 1)
    {
        s.validate();
        SweepResult result;
        result.scenario = s;
        result.grid = s.grid.values();
        auto points = ordered_parallel_map(result.grid.size(), workers,
                                           [&](std::size_t i) { return detail::evaluate_point(s, result.grid[i]); });
        for (auto &p : points)
        {
            for (auto &r : p.rows)
                result.rows.push_back(std::move(r));
            for (auto &g : p.geometry)
                result.geometry.push_back(std::move(g));
            for (auto &w : p.warnings)
                result.warnings.push_back(std::move(w));
        }
        return result;
    }

    // ---- fixtures -------------------------------------------------------

    /// The four figure scenarios: region profile, and SNR versus aperture,
    /// arc support and user angle.
    inline std::vector<SweepScenario> figure_scenarios()
    {
        std::vector<SweepScenario> out;

        SweepScenario fig2;
        fig2.name = "fig2";
        fig2.kind = SweepKind::region_profile;
        fig2.user_r = 1.0; // unused by region profiles
        fig2.user_theta_deg = 0.0;
        fig2.aperture = 0.635;
        fig2.support_in_d = 60.0;
        fig2.grid = {-90.0, 90.0, 1.0, std::nullopt, false};
        fig2.output_stem = "fig2";
        out.push_back(fig2);

        SweepScenario fig3a;
        fig3a.name = "fig3a";
        fig3a.kind = SweepKind::aperture_sweep;
        fig3a.support_in_d = 800.0;
        fig3a.grid = {8.0, 200.0, std::nullopt, 40, false};
        fig3a.output_stem = "fig3a";
        out.push_back(fig3a);

        SweepScenario fig3b;
        fig3b.name = "fig3b";
        fig3b.kind = SweepKind::support_sweep;
        fig3b.aperture = 5.0;
        fig3b.grid = {5e-6, 2.5, std::nullopt, 25, true};
        fig3b.output_stem = "fig3b";
        out.push_back(fig3b);

        SweepScenario fig3c;
        fig3c.name = "fig3c";
        fig3c.kind = SweepKind::angle_sweep;
        fig3c.aperture = 50.0;
        fig3c.support_in_d = 800.0;
        fig3c.grid = {0.0, 80.0, 1.0, std::nullopt, false};
        fig3c.output_stem = "fig3c";
        out.push_back(fig3c);

        return out;
    }

    // ---- output ---------------------------------------------------------

    inline constexpr std::string_view csv_header = "swept,metric,array,linear,db";

    inline void write_csv(const SweepResult &result, std::ostream &os)
    {
        using detail::format_number;
        const auto &s = result.scenario;
        os << "# scenario: " << s.name << '\n';
        os << "# kind: " << to_string(s.kind) << '\n';
        if (s.kind == SweepKind::convergence)
            os << "# convergence_mode: " << to_string(s.convergence_mode) << '\n';
        os << "# swept: " << s.swept_label() << '\n';
        os << "# carrier_frequency_hz: " << format_number(s.carrier_frequency_hz) << '\n';
        os << "# wavelength_m: " << format_number(s.wavelength()) << '\n';
        os << "# spacing_m: " << format_number(s.spacing()) << '\n';
        os << "# gamma0_bar_db: " << format_number(s.gamma0_bar_db) << '\n';
        if (s.kind != SweepKind::region_profile)
        {
            os << "# user_r_m: " << format_number(s.user_r) << '\n';
            if (!s.sweeps_angle())
                os << "# user_theta_deg: " << format_number(s.user_theta_deg) << '\n';
        }
        if (s.aperture)
            os << "# aperture_m: " << format_number(*s.aperture) << '\n';
        if (s.support_in_d)
            os << "# support_in_d: " << format_number(*s.support_in_d) << '\n';
        if (const auto L = s.resolved_support())
            os << "# support_m: " << format_number(*L) << '\n';
        if (s.kind == SweepKind::region_profile)
            os << "# upsilon_th: " << format_number(s.upsilon_th) << '\n';
        os << "# grid: start=" << format_number(s.grid.start) << " stop=" << format_number(s.grid.stop);
        if (s.grid.step)
            os << " step=" << format_number(*s.grid.step);
        else
            os << " points=" << *s.grid.points << " spacing=" << (s.grid.log_spacing ? "log" : "linear");
        os << '\n';
        for (const auto &r : result.rows)
            if (!r.reason.empty())
                os << "# infeasible: swept=" << format_number(r.swept) << " metric=" << r.metric
                   << " array=" << to_string(r.array) << " reason=" << r.reason << '\n';

        os << csv_header << '\n';
        for (const auto &r : result.rows)
        {
            os << format_number(r.swept) << ',' << r.metric << ',' << to_string(r.array) << ',';
            if (std::isnan(r.linear))
                os << "nan,nan";
            else if (r.linear < 1e-300)
                os << "0,-inf";
            else
                os << format_number(r.linear) << ',' << format_number(to_db(r.linear));
            os << '\n';
        }
    }

    inline void write_csv(const SweepResult &result, const std::string &path)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw Error(Errc::io_error, "cannot open " + path + " for writing");
        write_csv(result, f);
        if (!f)
            throw Error(Errc::io_error, "failed writing " + path);
    }

    /// Per-row resolved geometry and feasibility status.
    inline void write_geometry_csv(const SweepResult &result, std::ostream &os)
    {
        using detail::format_number;
        os << "swept,array,M,r0,alpha,L,D,actual_spacing,status\n";
        for (const auto &g : result.geometry)
            os << format_number(g.swept) << ',' << to_string(g.array) << ',' << g.count << ','
               << format_number(g.radius) << ',' << format_number(g.central_angle) << ',' << format_number(g.support)
               << ',' << format_number(g.aperture) << ',' << format_number(g.actual_spacing) << ',' << g.status
               << '\n';
    }

    inline void write_geometry_csv(const SweepResult &result, const std::string &path)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw Error(Errc::io_error, "cannot open " + path + " for writing");
        write_geometry_csv(result, f);
    }

    struct CsvRecord
    {
        double swept = 0.0;
        std::string metric;
        std::string array;
        double linear = 0.0;
        double db = 0.0;
    };

    /// Reads the data lines of a sweep CSV back.
    inline std::vector<CsvRecord> read_csv(std::istream &is)
    {
        std::vector<CsvRecord> out;
        std::string line;
        bool header_seen = false;
        while (std::getline(is, line))
        {
            if (line.empty() || line[0] == '#')
                continue;
            if (!header_seen)
            {
                if (line != csv_header)
                    throw Error(Errc::io_error, "unexpected CSV header: " + line);
                header_seen = true;
                continue;
            }
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                cells.push_back(cell);
            if (cells.size() != 5)
                throw Error(Errc::io_error, "malformed CSV line: " + line);
            out.push_back({std::strtod(cells[0].c_str(), nullptr), cells[1], cells[2],
                           std::strtod(cells[3].c_str(), nullptr), std::strtod(cells[4].c_str(), nullptr)});
        }
        if (!header_seen)
            throw Error(Errc::io_error, "CSV header missing");
        return out;
    }

    /// gnuplot script plotting one image per metric family from `csv_name`.
    inline void emit_plot_script(const SweepResult &result, const std::string &csv_name, std::ostream &os)
    {
        const auto &s = result.scenario;
        const std::string stem = s.output_stem.empty() ? s.name : s.output_stem;
        const auto metrics = metric_registry(s.kind);
        std::vector<std::string_view> families;
        for (const auto &m : metrics)
            if (std::find(families.begin(), families.end(), m.family) == families.end())
                families.push_back(m.family);

        std::vector<ArrayKind> arrays{ArrayKind::uaa};
        if (s.include_ula)
            arrays.push_back(ArrayKind::ula);

        os << "# gnuplot script for " << csv_name << " (columns: 1 swept, 2 metric, 3 array, 4 linear, 5 db)\n";
        os << "set datafile separator ','\n";
        os << "set terminal pngcairo size 900,600\n";
        os << "set grid\n";
        os << "set key outside right\n";
        os << "set xlabel '" << s.swept_label() << "'\n";
        if (s.sweeps_support() && s.grid.log_spacing)
            os << "set logscale x\n";
        for (const auto family : families)
        {
            // distances plot in meters (column 4), SNRs and gaps in dB (column 5)
            const bool distance = family == "ddrayl" || family == "upd";
            const int column = distance ? 4 : 5;
            os << "\nset output '" << stem << '_' << family << ".png'\n";
            os << "set ylabel '" << (distance ? "distance (m)" : (family == "gap" ? "gap (dB)" : "SNR (dB)"))
               << "'\n";
            os << "plot";
            bool first = true;
            for (const auto &m : metrics)
            {
                if (m.family != family)
                    continue;
                for (auto a : arrays)
                {
                    os << (first ? " " : ", \\\n     ") << '\'' << csv_name << "' using 1:((strcol(2) eq '" << m.name
                       << "' && strcol(3) eq '" << to_string(a) << "') ? $" << column
                       << " : NaN) with linespoints title '" << m.name << ' ' << to_string(a) << '\'';
                    first = false;
                }
            }
            os << '\n';
        }
    }

    inline void emit_plot_script(const SweepResult &result, const std::string &csv_name, const std::string &path)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw Error(Errc::io_error, "cannot open " + path + " for writing");
        emit_plot_script(result, csv_name, f);
    }
} // namespace xluaa

#endif
