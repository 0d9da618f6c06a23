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

#ifndef XLUAA_VALIDATE_HPP
#define XLUAA_VALIDATE_HPP

#include "channel.hpp"
#include "geometry.hpp"
#include "numerics.hpp"
#include "regions.hpp"
#include "snr.hpp"
#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

// Self-checks run by `xluaa validate`. Every check reports the worst error
// it measured against its tolerance; sampling uses fixed seeds.

namespace xluaa
{
    struct CheckResult
    {
        std::string name;
        std::string description;
        double measured = 0.0;
        double tolerance = 0.0;
        bool passed = false;
        std::string detail; // exception text or extra context
    };

    using AntiderivativeFn = std::function<double(const TrigRationalIntegrand &, double)>;

    struct ValidationOptions
    {
        /// Substitutable for fault-injection tests.
        AntiderivativeFn antiderivative = [](const TrigRationalIntegrand &f, double x) {
            return trig_rational_antiderivative(f, x);
        };
        std::uint64_t seed = 20260101;
    };

    struct CheckSpec
    {
        std::string_view name;
        std::string_view description;
    };

    /// Names and descriptions of every check, in report order.
    inline const std::vector<CheckSpec> &check_registry()
    {
        static const std::vector<CheckSpec> registry = {
            {"antiderivative.closed_form_identity",
             "(g0/eps)[F(M eps/2) - F(-M eps/2)] equals the closed-form SNR (200 random instances, relative)"},
            {"antiderivative.quadrature", "F(hi) - F(lo) equals adaptive quadrature of the integrand (absolute)"},
            {"antiderivative.finite_difference", "central difference of F reproduces the integrand (relative)"},
            {"closed_form.direct_agreement", "closed form vs direct sum over the aperture sweep D in [8, 200] m"},
            {"closed_form.ula_limit", "arc closed form approaches the ULA closed form as L shrinks at D = 5 m"},
            {"closed_form.asymptote", "large-aperture asymptote at L = 4 m is 68.05 dB and the gap shrinks with D"},
            {"distance.dual_form", "arc-frame and Cartesian antenna-user distances agree (1e4 samples)"},
            {"power_ratio.expanded_identity", "expanded power-ratio term equals r_m^2 (relative)"},
            {"mrc.optimality", "no random unit beamformer beats MRC; MRC SNR equals the direct sum"},
            {"evenness.snr", "direct and closed-form SNR are even in theta"},
            {"evenness.ddrayl", "approximate and exact DDRayl distances are even in theta"},
            {"evenness.upd", "uniform power distance is even in theta"},
            {"regions.ddrayl_anchors", "DDRayl anchors at theta = 0 and pi/2 on the reference region geometry"},
            {"regions.upd_anchor", "UPD at theta = 0 matches the quadratic root; UAA and ULA agree at pi/2"},
        };
        return registry;
    }

    namespace detail
    {
        inline double rel_err(double got, double want) { return std::abs(got / want - 1.0); }

        struct RandomInstance
        {
            ArcArrayGeometry geom;
            UserLocation user;
        };

        /// Random arc geometry with a user outside the arc circle.
        inline RandomInstance random_instance(std::mt19937_64 &rng, double lambda = 0.01)
        {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (;;)
            {
                const double D = 0.5 + 49.5 * unit(rng);
                const double L = D / 2.0 * std::pow(10.0, -3.0 * unit(rng));
                const double r = 1.0 + 99.0 * unit(rng);
                const double theta = (unit(rng) - 0.5) * 0.98 * pi;
                try
                {
                    auto geom = arc_from_aperture_support(D, L, lambda);
                    const auto u = UserLocation::polar(r, theta);
                    const auto c = user_arc_coords(geom, u);
                    if (c.excess > 1e-3 * c.g * c.g)
                        return {geom, u};
                }
                catch (const Error &)
                {
                    // spacing policy can reject rare (D, L); draw again
                }
            }
        }

        template <class Body>
        CheckResult run_check(const CheckSpec &spec, double tolerance, Body &&body)
        {
            CheckResult res{std::string(spec.name), std::string(spec.description), 0.0, tolerance, false, {}};
            try
            {
                res.measured = body(res.detail);
                res.passed = std::isfinite(res.measured) && res.measured <= tolerance;
            }
            catch (const std::exception &e)
            {
                res.measured = std::numeric_limits<double>::infinity();
                res.detail = e.what();
            }
            return res;
        }

        inline LinkBudget reference_budget() { return LinkBudget::from_reference_snr_db(50.0, 0.01); }
    } // namespace detail

    /// Runs every registered check; the report has one row per registry entry.
    inline std::vector<CheckResult> validate_all(const ValidationOptions &opt = {})
    {
        using detail::rel_err;
        const auto &reg = check_registry();
        const auto lb = detail::reference_budget();
        const double lambda = lb.wavelength();
        std::vector<CheckResult> out;
        auto spec = [&](std::string_view name) -> const CheckSpec & {
            return *std::find_if(reg.begin(), reg.end(), [&](const CheckSpec &s) { return s.name == name; });
        };

        out.push_back(detail::run_check(spec("antiderivative.closed_form_identity"), 1e-12, [&](std::string &) {
            std::mt19937_64 rng(opt.seed);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                const auto inst = detail::random_instance(rng, lambda);
                const auto in = ClosedFormInputs::resolve(inst.geom, inst.user, lb);
                const auto f = closed_form_integrand(in);
                const double h = in.half_span(ClosedFormSpan::array_cells);
                const double via_f =
                    in.gamma0_bar / in.epsilon * (opt.antiderivative(f, h) - opt.antiderivative(f, -h));
                worst = std::max(worst, rel_err(via_f, mrc_snr_closed_form(in)));
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("antiderivative.quadrature"), 1e-10, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 1);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double worst = 0.0;
            auto one = [&](const TrigRationalIntegrand &f, double lo, double hi) {
                const double exact = opt.antiderivative(f, hi) - opt.antiderivative(f, lo);
                const double quad = adaptive_quadrature(f, lo, hi, 1e-13);
                worst = std::max(worst, std::abs(exact - quad));
            };
            for (int i = 0; i < 50; ++i)
            {
                // the arc-array coefficient map over the full cell span
                const auto inst = detail::random_instance(rng, lambda);
                const auto in = ClosedFormInputs::resolve(inst.geom, inst.user, lb);
                const double h = in.half_span(ClosedFormSpan::array_cells);
                one(closed_form_integrand(in), -h, h);
            }
            for (int i = 0; i < 50; ++i)
            {
                // generic well-conditioned coefficients on sub-intervals of (-pi, pi)
                const double a = 1.0 + 9.0 * unit(rng);
                const double rho = 0.9 * a * unit(rng);
                const double psi = 2.0 * pi * unit(rng);
                const auto f = TrigRationalIntegrand::from_coefficients(a, rho * std::cos(psi), rho * std::sin(psi));
                double lo = (unit(rng) * 2.0 - 1.0) * 3.0;
                double hi = (unit(rng) * 2.0 - 1.0) * 3.0;
                if (lo > hi)
                    std::swap(lo, hi);
                one(f, lo, hi);
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("antiderivative.finite_difference"), 1e-6, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 2);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double worst = 0.0;
            const double step = 1e-6;
            for (int i = 0; i < 200; ++i)
            {
                const double a = 1.0 + 9.0 * unit(rng);
                const double rho = 0.9 * a * unit(rng);
                const double psi = 2.0 * pi * unit(rng);
                const auto f = TrigRationalIntegrand::from_coefficients(a, rho * std::cos(psi), rho * std::sin(psi));
                const double x = (unit(rng) * 2.0 - 1.0) * 2.99;
                const double fd =
                    (opt.antiderivative(f, x + step) - opt.antiderivative(f, x - step)) / (2.0 * step);
                worst = std::max(worst, rel_err(fd, f(x)));
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("closed_form.direct_agreement"), 5e-3, [&](std::string &detail) {
            GridSpec grid{8.0, 200.0, std::nullopt, 40, false};
            const auto u = UserLocation::polar_deg(16.0, 30.0);
            double worst = 0.0;
            double worst_large = 0.0;
            for (double D : grid.values())
            {
                const auto geom = arc_from_aperture_support(D, 4.0, lambda);
                const double e = rel_err(mrc_snr_closed_form(geom, u, lb), mrc_snr_direct(geom, u, lb));
                worst = std::max(worst, e);
                if (D >= 50.0)
                    worst_large = std::max(worst_large, e);
            }
            detail = "worst for D >= 50 m: " + detail::format_number(worst_large) + " (limit 1e-3)";
            return worst_large < 1e-3 ? worst : std::numeric_limits<double>::infinity();
        }));

        out.push_back(detail::run_check(spec("closed_form.ula_limit"), 1e-3, [&](std::string &detail) {
            const double D = 5.0;
            const auto u = UserLocation::polar_deg(16.0, 30.0);
            const std::vector<double> supports{2.5, 1.0, 0.1, 1e-3, 1e-6 * D};
            const auto rows = ula_limit_convergence(D, u, lb, supports);
            for (std::size_t i = 1; i < rows.size(); ++i)
                if (!(rows[i].relative_gap < rows[i - 1].relative_gap))
                {
                    detail = "gap not decreasing at L = " + detail::format_number(rows[i].support);
                    return std::numeric_limits<double>::infinity();
                }
            return rows.back().relative_gap;
        }));

        out.push_back(detail::run_check(spec("closed_form.asymptote"), 0.01, [&](std::string &detail) {
            const auto u = UserLocation::polar_deg(16.0, 30.0);
            const std::vector<double> apertures{8.0, 16.0, 50.0, 100.0, 200.0, 500.0};
            const auto rows = asymptote_convergence(4.0, u, lb, apertures);
            for (std::size_t i = 1; i < rows.size(); ++i)
                if (!(rows[i].gap_db < rows[i - 1].gap_db))
                {
                    detail = "dB gap not decreasing at D = " + detail::format_number(rows[i].aperture);
                    return std::numeric_limits<double>::infinity();
                }
            const double gap200 = rows[4].gap_db;
            const double gap500 = rows[5].gap_db;
            detail = "gap 200 m: " + detail::format_number(gap200) + " dB, 500 m: " + detail::format_number(gap500) +
                     " dB";
            if (!(std::abs(gap200) < 0.5 && std::abs(gap500) < 0.15))
                return std::numeric_limits<double>::infinity();
            return std::abs(to_db(rows.front().snr_asymptote) - 68.05);
        }));

        out.push_back(detail::run_check(spec("distance.dual_form"), 1e-10, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 3);
            double worst = 0.0;
            for (int i = 0; i < 100; ++i)
            {
                const auto inst = detail::random_instance(rng, lambda);
                std::uniform_int_distribution<int> pick(-inst.geom.half_count(), inst.geom.half_count());
                for (int k = 0; k < 100; ++k)
                {
                    const int m = pick(rng);
                    worst = std::max(worst, rel_err(antenna_user_distance(inst.geom, inst.user, m),
                                                    antenna_user_distance_cartesian(inst.geom, inst.user, m)));
                }
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("power_ratio.expanded_identity"), 1e-10, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 4);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                // moderate curvature keeps the expanded form free of cancellation
                const double D = 0.5 + 49.5 * unit(rng);
                const double L = D / 2.0 * (0.05 + 0.95 * unit(rng));
                std::optional<ArcArrayGeometry> drawn;
                try
                {
                    drawn = arc_from_aperture_support(D, L, lambda);
                }
                catch (const Error &)
                {
                    continue;
                }
                const auto &geom = *drawn;
                const auto u = UserLocation::polar(geom.radius() * (1.5 + 3.0 * unit(rng)),
                                                   (unit(rng) - 0.5) * 0.98 * pi);
                if (!user_outside_arc(geom, u))
                    continue;
                const auto c = user_arc_coords(geom, u);
                for (int m : {-geom.half_count(), 0, geom.half_count(), geom.half_count() / 3})
                    worst = std::max(worst, rel_err(power_ratio_term(geom, u, m), antenna_user_distance_sq(geom, c, m)));
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("mrc.optimality"), 1e-12, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 5);
            std::normal_distribution<double> normal;
            double worst = 0.0;
            for (int i = 0; i < 20; ++i)
            {
                const auto budget = LinkBudget::from_powers(1.0, 1e-9, 1e-4, 0.01);
                const auto inst = detail::random_instance(rng, budget.wavelength());
                const auto h = channel_vector(inst.geom, inst.user, budget);
                const double mrc = snr_with_beamformer(mrc_beamformer(h), h, budget);
                worst = std::max(worst, rel_err(mrc, mrc_snr_direct(inst.geom, inst.user, budget)));
                for (int k = 0; k < 50; ++k)
                {
                    std::vector<complex> v(h.size());
                    for (auto &e : v)
                        e = {normal(rng), normal(rng)};
                    const double other = snr_with_beamformer(BeamformingVector::normalized(v), h, budget);
                    worst = std::max(worst, other / mrc - 1.0);
                }
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("evenness.snr"), 1e-12, [&](std::string &) {
            std::mt19937_64 rng(opt.seed + 6);
            double worst = 0.0;
            for (int i = 0; i < 100; ++i)
            {
                const auto inst = detail::random_instance(rng, lambda);
                const auto mirror = UserLocation{inst.user.r, -inst.user.theta};
                worst = std::max(worst, rel_err(mrc_snr_direct(inst.geom, inst.user, lb),
                                                mrc_snr_direct(inst.geom, mirror, lb)));
                worst = std::max(worst, rel_err(mrc_snr_closed_form(inst.geom, inst.user, lb),
                                                mrc_snr_closed_form(inst.geom, mirror, lb)));
            }
            return worst;
        }));

        const auto region_geom = arc_from_aperture_support(0.635, 0.3, lambda);

        out.push_back(detail::run_check(spec("evenness.ddrayl"), 1e-9, [&](std::string &) {
            double worst = 0.0;
            for (double deg : {5.0, 20.0, 45.0, 70.0, 89.0})
            {
                const double t = deg_to_rad(deg);
                worst = std::max(worst, rel_err(rayleigh_distance_approx(region_geom, t),
                                                rayleigh_distance_approx(region_geom, -t)));
                worst = std::max(worst, rel_err(rayleigh_distance_exact(region_geom, t),
                                                rayleigh_distance_exact(region_geom, -t)));
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("evenness.upd"), 1e-9, [&](std::string &) {
            double worst = 0.0;
            for (double deg : {5.0, 20.0, 45.0, 70.0, 89.0})
            {
                const double t = deg_to_rad(deg);
                worst = std::max(worst, rel_err(uniform_power_distance(region_geom, t, 0.9),
                                                uniform_power_distance(region_geom, -t, 0.9)));
                worst = std::max(worst, rel_err(uniform_power_distance_ula(0.635, lambda, t, 0.9),
                                                uniform_power_distance_ula(0.635, lambda, -t, 0.9)));
            }
            return worst;
        }));

        out.push_back(detail::run_check(spec("regions.ddrayl_anchors"), 0.05, [&](std::string &detail) {
            const double a0 = rayleigh_distance_approx(region_geom, 0.0);
            const double a90 = rayleigh_distance_approx(region_geom, pi / 2.0);
            const double e0 = rayleigh_distance_exact(region_geom, 0.0);
            const double e90 = rayleigh_distance_exact(region_geom, pi / 2.0);
            const double ula90 = rayleigh_distance_ula(0.635, lambda, pi / 2.0);
            const bool anchors = std::abs(a0 - 80.645) <= 1e-9 * 80.645 && std::abs(a90 - 72.0) <= 1e-9 * 72.0 &&
                                 ula90 == 0.0;
            detail = "approx(0)=" + detail::format_number(a0) + " approx(pi/2)=" + detail::format_number(a90) +
                     " ula(pi/2)=" + detail::format_number(ula90);
            if (!anchors)
                return std::numeric_limits<double>::infinity();
            return std::max(rel_err(e0, a0), rel_err(e90, a90));
        }));

        out.push_back(detail::run_check(spec("regions.upd_anchor"), 1e-4, [&](std::string &detail) {
            // at theta = 0 the ratio is (r - L)^2 / (r^2 + (D/2)^2); solve the quadratic for ratio = 0.9
            const double L = region_geom.support();
            const double half = region_geom.aperture() / 2.0;
            const double th = 0.9;
            const double qa = 1.0 - th;
            const double qb = -2.0 * L;
            const double qc = L * L - th * half * half;
            const double root = (-qb + std::sqrt(qb * qb - 4.0 * qa * qc)) / (2.0 * qa);
            const double upd0 = uniform_power_distance(region_geom, 0.0, th);
            const double uaa90 = uniform_power_distance(region_geom, pi / 2.0, th);
            const double ula90 = uniform_power_distance_ula(0.635, lambda, pi / 2.0, th);
            detail = "UAA/ULA relative gap at pi/2: " + detail::format_number(rel_err(uaa90, ula90)) + " (limit 1e-6)";
            if (!(rel_err(uaa90, ula90) <= 1e-6))
                return std::numeric_limits<double>::infinity();
            return std::abs(upd0 - root);
        }));

        return out;
    }

    inline bool all_passed(const std::vector<CheckResult> &report)
    {
        return std::all_of(report.begin(), report.end(), [](const CheckResult &c) { return c.passed; });
    }
} // namespace xluaa

#endif
