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

#ifndef XLUAA_SNR_HPP
#define XLUAA_SNR_HPP

#include "channel.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "numerics.hpp"

#include <cmath>
#include <span>
#include <vector>

// Closed-form MRC SNR of a uniform arc array and its limits.
//
// The MRC SNR is gamma0_bar * sum_m 1/r_m^2 with
//   r_m^2 = a + b cos(m eps) + c sin(m eps),
//   a = g^2 + r0^2, b = -2 g r0 cos(phi), c = -2 g r0 sin(phi).
// Replacing the sum by (1/eps) times the integral over the cells
// [-M eps/2, M eps/2] and integrating 1/(a + b cos x + c sin x) in closed
// form gives
//   gamma = 2 gamma0_bar / (eps (g^2 - r0^2)) * U,
//   U = atan((P t - Q) / (g^2 - r0^2)) + atan((P t + Q) / (g^2 - r0^2)),
//   P = g^2 + r0^2 + 2 g r0 cos(phi), Q = 2 g r0 sin(phi), t = tan(h/2),
// where h is the half-width of the integration span.

namespace xluaa
{
    /// Which half-width the sum-to-integral replacement integrates over.
    enum class ClosedFormSpan
    {
        /// h = M eps / 2: the union of the M cells centred on the antennas.
        /// Second-order accurate in eps; reduces to the ULA form with M d
        /// as L -> 0.
        array_cells,
        /// h = alpha / 2 = (M - 1) eps / 2: the arc endpoints, for which
        /// t = tan(alpha/4) = sqrt(L / (2 r0 - L)).
        arc_endpoints
    };

    /// Symbols of the closed form, resolved from geometry, user and budget.
    struct ClosedFormInputs
    {
        double g = 0.0;
        double r0 = 0.0;
        double phi = 0.0;
        double excess = 0.0; // g^2 - r0^2
        double support = 0.0;
        double alpha = 0.0;
        int count = 0;
        double epsilon = 0.0;
        double gamma0_bar = 0.0;

        static ClosedFormInputs resolve(const ArcArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb)
        {
            detail::require(geom.count() >= 3, Errc::single_antenna, "closed form needs at least three antennas");
            const auto c = user_arc_coords(geom, u);
            require_outside_arc(c);
            return {c.g, geom.radius(), c.phi, c.excess, geom.support(), geom.central_angle(),
                    geom.count(), geom.epsilon(), lb.gamma0_bar()};
        }

        double half_span(ClosedFormSpan span) const
        {
            return span == ClosedFormSpan::array_cells ? 0.5 * count * epsilon : 0.5 * alpha;
        }
    };

    /// U with the half-span tangent t and x^2 - y^2 supplied by the caller.
    inline double closed_form_angle_term(double x, double y, double phi, double half_span_tan, double x2_minus_y2)
    {
        const double p = (x * x + y * y + 2.0 * x * y * std::cos(phi)) * half_span_tan;
        const double q = 2.0 * x * y * std::sin(phi);
        return std::atan((p - q) / x2_minus_y2) + std::atan((p + q) / x2_minus_y2);
    }

    /// U(x, y) with t = sqrt(L / (2y - L)); lies in (0, pi) and is even in phi.
    inline double closed_form_angle_term(double x, double y, double phi, double support)
    {
        detail::require(y > 0.0 && x > y, Errc::degenerate_radii, "requires x > y > 0");
        detail::require(support > 0.0 && support < 2.0 * y, Errc::support_out_of_range, "requires 0 < L < 2y");
        const double t = std::sqrt(support / (2.0 * y - support));
        return closed_form_angle_term(x, y, phi, t, (x - y) * (x + y));
    }

    /// Coefficients of 1/r_m^2 as a function of the arc angle m*eps.
    inline TrigRationalIntegrand closed_form_integrand(const ClosedFormInputs &in)
    {
        const double a = in.g * in.g + in.r0 * in.r0;
        const double b = -2.0 * in.g * in.r0 * std::cos(in.phi);
        const double c = -2.0 * in.g * in.r0 * std::sin(in.phi);
        // a^2 - b^2 - c^2 = (g^2 - r0^2)^2, positive whenever g != r0
        return TrigRationalIntegrand::with_root(a, b, c, in.excess);
    }

    inline double mrc_snr_closed_form(const ClosedFormInputs &in, ClosedFormSpan span = ClosedFormSpan::array_cells)
    {
        detail::require(in.excess > 0.0, Errc::validity_violation, "closed form requires g > r0");
        const double t = std::tan(0.5 * in.half_span(span));
        const double u = closed_form_angle_term(in.g, in.r0, in.phi, t, in.excess);
        return in.gamma0_bar / in.epsilon * 2.0 / in.excess * u;
    }

    inline double mrc_snr_closed_form(const ArcArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb,
                                      ClosedFormSpan span = ClosedFormSpan::array_cells)
    {
        return mrc_snr_closed_form(ClosedFormInputs::resolve(geom, u, lb), span);
    }

    /// True when g^2 - r0^2 < 1e-6 g^2: the user hugs the arc circle and the
    /// closed form loses accuracy against direct summation.
    inline bool closed_form_ill_conditioned(const ArcArrayGeometry &geom, const UserLocation &u)
    {
        const auto c = user_arc_coords(geom, u);
        return c.excess < 1e-6 * c.g * c.g;
    }

    /// Closed-form MRC SNR of an M-element ULA with spacing d.
    inline double ula_snr_closed_form(int M, double d, const UserLocation &u, const LinkBudget &lb)
    {
        detail::require(M >= 1, Errc::invalid_argument, "antenna count must be >= 1");
        detail::require_positive(d, "spacing");
        detail::require(std::abs(u.theta) < pi / 2.0, Errc::grazing_angle, "ULA closed form needs |theta| < pi/2");
        const double proj = u.r * std::cos(u.theta);
        const double x = M * d / (2.0 * proj);
        const double t = std::tan(u.theta);
        return lb.gamma0_bar() / (d * proj) * (std::atan(x - t) + std::atan(x + t));
    }

    /// Large-array limit gamma0_bar pi / (d (r cos(theta) - L)). L = 0 gives the ULA limit.
    inline double asymptotic_snr(const UserLocation &u, double support, double d, const LinkBudget &lb)
    {
        detail::require(support >= 0.0, Errc::invalid_argument, "arc support must be non-negative");
        detail::require_positive(d, "spacing");
        const double gap = u.r * std::cos(u.theta) - support;
        detail::require(gap > 0.0, Errc::user_behind_arc_middle, "requires r cos(theta) > L");
        return lb.gamma0_bar() * pi / (d * gap);
    }

    // ---- convergence tables ---------------------------------------------

    struct UlaLimitRow
    {
        double support = 0.0;
        int count = 0;
        double snr_arc = 0.0;
        double snr_ula = 0.0;
        double relative_gap = 0.0; // |snr_arc / snr_ula - 1|
    };

    /// Arc closed form against the ULA closed form (same M and d) as the
    /// support shrinks at fixed aperture.
    inline std::vector<UlaLimitRow> ula_limit_convergence(double D, const UserLocation &u, const LinkBudget &lb,
                                                          std::span<const double> supports)
    {
        detail::require(!supports.empty(), Errc::invalid_argument, "support sequence is empty");
        for (std::size_t i = 0; i < supports.size(); ++i)
        {
            detail::require(supports[i] > 0.0 && supports[i] <= D / 2.0, Errc::invalid_argument,
                            "supports must lie in (0, D/2]");
            if (i > 0)
                detail::require(supports[i] < supports[i - 1], Errc::invalid_argument,
                                "support sequence must be decreasing");
        }
        std::vector<UlaLimitRow> rows;
        rows.reserve(supports.size());
        for (double L : supports)
        {
            const auto geom = arc_from_aperture_support(D, L, lb.wavelength());
            UlaLimitRow row;
            row.support = L;
            row.count = geom.count();
            row.snr_arc = mrc_snr_closed_form(geom, u, lb);
            row.snr_ula = ula_snr_closed_form(geom.count(), geom.spacing(), u, lb);
            row.relative_gap = std::abs(row.snr_arc / row.snr_ula - 1.0);
            rows.push_back(row);
        }
        return rows;
    }

    struct AsymptoteRow
    {
        double aperture = 0.0;
        int count = 0;
        double snr_closed = 0.0;
        double snr_asymptote = 0.0;
        double gap_db = 0.0; // asymptote minus closed form, in dB
    };

    /// Arc closed form against its large-array asymptote as the aperture grows at fixed support.
    inline std::vector<AsymptoteRow> asymptote_convergence(double L, const UserLocation &u, const LinkBudget &lb,
                                                           std::span<const double> apertures)
    {
        detail::require(!apertures.empty(), Errc::invalid_argument, "aperture sequence is empty");
        for (std::size_t i = 0; i < apertures.size(); ++i)
        {
            detail::require(apertures[i] >= 2.0 * L, Errc::invalid_argument, "apertures must be >= 2L");
            if (i > 0)
                detail::require(apertures[i] > apertures[i - 1], Errc::invalid_argument,
                                "aperture sequence must be increasing");
        }
        const double limit = asymptotic_snr(u, L, lb.wavelength() / 2.0, lb);
        std::vector<AsymptoteRow> rows;
        rows.reserve(apertures.size());
        for (double D : apertures)
        {
            const auto geom = arc_from_aperture_support(D, L, lb.wavelength());
            AsymptoteRow row;
            row.aperture = D;
            row.count = geom.count();
            row.snr_closed = mrc_snr_closed_form(geom, u, lb);
            row.snr_asymptote = limit;
            row.gap_db = to_db(limit) - to_db(row.snr_closed);
            rows.push_back(row);
        }
        return rows;
    }
} // namespace xluaa

#endif
