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

#ifndef XLUAA_REGIONS_HPP
#define XLUAA_REGIONS_HPP

#include "error.hpp"
#include "geometry.hpp"
#include "numerics.hpp"
#include "parallel.hpp"
#include "units.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Near-field region boundaries.
//
// Rayleigh distance (direction dependent): smallest r at which the worst
// phase error of the first-order distance r - <w_m, u_hat> drops to pi/8.
// Uniform power distance: smallest r at which the weakest-to-strongest
// received power ratio reaches a threshold.
//
// For antenna w_m and unit direction u_hat = (cos t, sin t) write
//   p_m = <w_m, u_hat>        (projection onto the user direction)
//   s_m = <w_m, u_hat_perp>   = (r0 - L) sin t - r0 sin(t - alpha_m)
// Then r_m - (r - p_m) = s_m^2 / (r_m + r - p_m) exactly, and the
// second-order expansion s_m^2 / (2 r) gives the 8 s^2 / lambda estimate.

namespace xluaa
{
    inline constexpr double rayleigh_phase_threshold = pi / 8.0;
    inline constexpr double default_search_upper = 1.0e6; // m
    inline constexpr int monotonicity_samples = 64;

    struct SearchBracket
    {
        double lo = 0.0;
        double hi = default_search_upper;
    };

    struct PhaseErrorResult
    {
        double value = 0.0; // radians
        int argmax = 0;
    };

    inline PhaseErrorResult max_phase_error_detail(const ArcArrayGeometry &geom, const UserLocation &u)
    {
        require_outside_arc(user_arc_coords(geom, u));
        const double ct = std::cos(u.theta);
        const double st = std::sin(u.theta);
        const CartesianPoint q = u.cartesian();
        PhaseErrorResult best{-1.0, 0};
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const CartesianPoint w = antenna_position(geom, m);
            const double p = w.x * ct + w.y * st;
            const double s = -w.x * st + w.y * ct;
            const double rm = distance(w, q);
            const double excess = s * s / (rm + u.r - p);
            if (excess > best.value)
                best = {excess, m};
        }
        best.value *= 2.0 * pi / geom.wavelength();
        return best;
    }

    /// Worst-case phase error of the far-field (first-order) distance over the array, in radians.
    inline double max_phase_error(const ArcArrayGeometry &geom, const UserLocation &u)
    {
        return max_phase_error_detail(geom, u).value;
    }

    struct ApproxRayleighResult
    {
        double value = 0.0; // m
        int argmax = 0;
    };

    inline ApproxRayleighResult rayleigh_distance_approx_detail(const ArcArrayGeometry &geom, double theta)
    {
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        ApproxRayleighResult best{-1.0, 0};
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const CartesianPoint w = antenna_position(geom, m);
            const double s = -w.x * st + w.y * ct;
            const double v = 8.0 * s * s / geom.wavelength();
            if (v > best.value)
                best = {v, m};
        }
        return best;
    }

    /// max_m 8 [(r0 - L) sin(theta) - r0 sin(theta - alpha_m)]^2 / lambda, exact over the index set.
    inline double rayleigh_distance_approx(const ArcArrayGeometry &geom, double theta)
    {
        return rayleigh_distance_approx_detail(geom, theta).value;
    }

    /// ULA of aperture D: 2 D^2 cos^2(theta) / lambda.
    inline double rayleigh_distance_ula(double D, double lambda, double theta)
    {
        detail::require_positive(D, "aperture");
        detail::require_positive(lambda, "wavelength");
        const double s = std::sin(theta);
        // cos^2 as (1 - s)(1 + s): exactly zero at theta = pi/2
        return 2.0 * D * D * ((1.0 - s) * (1.0 + s)) / lambda;
    }

    // ---- power ratio ----------------------------------------------------

    enum class PowerRatioMode
    {
        /// min_m r_m^2 over the squared distance to the edge antenna on the
        /// far side of the user: r^2 + r0^2 sin^2(alpha/2) + 2 r r0 |sin t| sin(alpha/2).
        edge_reference,
        /// min_m r_m^2 / max_m r_m^2.
        exact_extremes
    };

    /// Squared antenna-user distance in the expanded form used by the power ratio.
    inline double power_ratio_term(const ArcArrayGeometry &geom, const UserLocation &u, int m)
    {
        check_index(geom, m);
        const double r = u.r;
        const double r0 = geom.radius();
        const double h = r0 - geom.support();
        const double am = m * geom.epsilon();
        return r * r + r0 * r0 + h * h - 2.0 * r * r0 * std::cos(u.theta - am) -
               2.0 * h * (r0 * std::cos(am) - r * std::cos(u.theta));
    }

    inline double power_ratio(const ArcArrayGeometry &geom, const UserLocation &u,
                              PowerRatioMode mode = PowerRatioMode::edge_reference)
    {
        const auto c = user_arc_coords(geom, u);
        require_outside_arc(c);
        double lo = INFINITY;
        double hi = 0.0;
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const double d2 = antenna_user_distance_sq(geom, c, m);
            lo = std::min(lo, d2);
            hi = std::max(hi, d2);
        }
        if (mode == PowerRatioMode::exact_extremes)
            return lo / hi;
        const double half = 0.5 * geom.aperture(); // r0 sin(alpha/2)
        return lo / (u.r * u.r + half * half + 2.0 * u.r * half * std::abs(std::sin(u.theta)));
    }

    /// Power ratio of a straight array occupying the chord segment x = 0, |y| <= D/2.
    inline double power_ratio_ula(double D, const UserLocation &u)
    {
        detail::require(D >= 0.0, Errc::invalid_argument, "aperture must be non-negative");
        const double half = 0.5 * D;
        const double x = u.r * std::cos(u.theta);
        const double y = u.r * std::sin(u.theta);
        const double dy = y - std::clamp(y, -half, half);
        const double nearest = x * x + dy * dy;
        return nearest / (u.r * u.r + half * half + 2.0 * u.r * half * std::abs(std::sin(u.theta)));
    }

    // ---- threshold searches ---------------------------------------------

    namespace detail
    {
        /// Smallest r in the search domain where `metric` crosses `threshold`.
        ///
        /// The metric must be strictly decreasing (phase error) or strictly
        /// increasing (power ratio); this is checked on 64 log-spaced samples
        /// before bisecting. Returns the end of the final bracket on which the
        /// criterion holds.
        template <class Metric>
        double threshold_crossing(const Metric &metric, bool decreasing, double threshold, double feasible_min,
                                  SearchBracket bracket)
        {
            auto satisfied = [&](double r) {
                const double v = metric(r);
                return decreasing ? v <= threshold : v >= threshold;
            };

            double lo = std::max(bracket.lo, feasible_min * (1.0 + 1e-9));
            double hi = std::max(bracket.hi, lo * 2.0);
            require(lo > 0.0 && std::isfinite(hi), Errc::bracket_failure, "invalid search bracket");

            while (!satisfied(hi))
            {
                if (hi >= default_search_upper)
                    throw Error(Errc::bracket_failure, "threshold not reached below 1e6 m");
                hi = std::min(hi * 2.0, default_search_upper);
            }
            for (int k = 0; satisfied(lo); ++k)
            {
                if (k >= 60 || lo <= feasible_min)
                    throw Error(Errc::bracket_failure, "threshold already met at the lower search bound");
                lo = feasible_min + 0.5 * (lo - feasible_min);
            }

            double prev = metric(lo);
            for (int i = 1; i < monotonicity_samples; ++i)
            {
                const double r = lo * std::pow(hi / lo, static_cast<double>(i) / (monotonicity_samples - 1));
                const double v = metric(r);
                const bool ok = decreasing ? v < prev : v > prev;
                if (!ok)
                    throw Error(Errc::bracket_failure, "metric is not strictly monotone over the bracket");
                prev = v;
            }

            const auto res = bisect([&](double r) { return metric(r) - threshold; }, lo, hi, 1e-12 * lo);
            return res.hi;
        }
    } // namespace detail

    /// Exact direction-dependent Rayleigh distance: smallest r with max phase error <= pi/8.
    inline double rayleigh_distance_exact(const ArcArrayGeometry &geom, double theta,
                                          std::optional<SearchBracket> bracket = std::nullopt)
    {
        const SearchBracket b = bracket.value_or(SearchBracket{geom.wavelength(), default_search_upper});
        const double feasible = min_outside_range(geom, theta);
        return detail::threshold_crossing(
            [&](double r) { return max_phase_error(geom, UserLocation{r, theta}); }, true, rayleigh_phase_threshold,
            feasible, b);
    }

    /// Uniform power distance: smallest r with power ratio >= upsilon_th.
    inline double uniform_power_distance(const ArcArrayGeometry &geom, double theta, double upsilon_th,
                                         PowerRatioMode mode = PowerRatioMode::edge_reference,
                                         std::optional<SearchBracket> bracket = std::nullopt)
    {
        detail::require(upsilon_th > 0.0 && upsilon_th < 1.0, Errc::invalid_argument,
                        "power-ratio threshold must lie in (0, 1)");
        const SearchBracket b = bracket.value_or(SearchBracket{geom.wavelength(), default_search_upper});
        const double feasible = min_outside_range(geom, theta);
        return detail::threshold_crossing(
            [&](double r) { return power_ratio(geom, UserLocation{r, theta}, mode); }, false, upsilon_th, feasible, b);
    }

    inline double uniform_power_distance_ula(double D, double lambda, double theta, double upsilon_th,
                                             std::optional<SearchBracket> bracket = std::nullopt)
    {
        detail::require(D >= 0.0, Errc::invalid_argument, "aperture must be non-negative");
        detail::require_positive(lambda, "wavelength");
        detail::require(upsilon_th > 0.0 && upsilon_th < 1.0, Errc::invalid_argument,
                        "power-ratio threshold must lie in (0, 1)");
        if (D == 0.0)
            return 0.0; // a point source has ratio 1 at every range
        const SearchBracket b = bracket.value_or(SearchBracket{lambda, default_search_upper});
        // at grazing incidence the user must clear the array end
        const double feasible = std::abs(std::cos(theta)) < 1e-12 ? 0.5 * D : 0.0;
        return detail::threshold_crossing([&](double r) { return power_ratio_ula(D, UserLocation{r, theta}); },
                                          false, upsilon_th, feasible, b);
    }

    // ---- profile --------------------------------------------------------

    struct RegionProfileRow
    {
        double theta = 0.0; // radians
        std::optional<double> rayleigh_exact;
        double rayleigh_approx = 0.0;
        std::optional<double> upd;
        double ula_rayleigh = 0.0;
        std::optional<double> ula_upd;
        std::vector<std::string> notes; // reasons for missing values
    };

    using RegionProfile = std::vector<RegionProfileRow>;

    /// Region metrics of an arc array and the straight array of aperture `ula_aperture` over a theta grid.
    ///
    /// Search failures are recorded per row; the sweep never aborts on them.
    inline RegionProfile region_profile(const ArcArrayGeometry &geom, double ula_aperture,
                                        std::span<const double> thetas, double upsilon_th, unsigned workers = 1)
    {
        for (std::size_t i = 1; i < thetas.size(); ++i)
            detail::require(thetas[i] > thetas[i - 1], Errc::invalid_argument, "theta grid must be increasing");
        for (double t : thetas)
            detail::require(std::abs(t) <= pi / 2.0, Errc::invalid_argument, "theta must lie in [-pi/2, pi/2]");

        return ordered_parallel_map(thetas.size(), workers, [&](std::size_t i) {
            RegionProfileRow row;
            row.theta = thetas[i];
            auto attempt = [&](std::optional<double> &slot, const char *label, auto &&fn) {
                try
                {
                    slot = fn();
                }
                catch (const Error &e)
                {
                    row.notes.push_back(std::string(label) + ": " + std::string(errc_name(e.code())));
                }
            };
            attempt(row.rayleigh_exact, "rayleigh_exact", [&] { return rayleigh_distance_exact(geom, row.theta); });
            row.rayleigh_approx = rayleigh_distance_approx(geom, row.theta);
            attempt(row.upd, "upd", [&] { return uniform_power_distance(geom, row.theta, upsilon_th); });
            row.ula_rayleigh = rayleigh_distance_ula(ula_aperture, geom.wavelength(), row.theta);
            attempt(row.ula_upd, "ula_upd",
                    [&] { return uniform_power_distance_ula(ula_aperture, geom.wavelength(), row.theta, upsilon_th); });
            return row;
        });
    }
} // namespace xluaa

#endif
