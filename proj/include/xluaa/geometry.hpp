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

#ifndef XLUAA_GEOMETRY_HPP
#define XLUAA_GEOMETRY_HPP

#include "error.hpp"
#include "units.hpp"

#include <cmath>
#include <string>

// Planar geometry of a uniform arc array (UAA) and its aperture-matched
// uniform linear array (ULA).
//
// Frame: the origin O is the midpoint of the chord joining the two edge
// antennas, the chord lies on the y-axis and the arc bulges towards +x.
// The arc center A sits at (-(r0 - L), 0) and the central antenna C at
// (L, 0). Antenna m (m = -(M-1)/2 .. (M-1)/2) sits at angle m*epsilon
// seen from A.

namespace xluaa
{
    struct CartesianPoint
    {
        double x = 0.0;
        double y = 0.0;
    };

    inline double distance(const CartesianPoint &a, const CartesianPoint &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    /// User position in polar coordinates about the origin O.
    ///
    /// theta is measured from the x-axis and may reach +/-pi/2 (users on the
    /// chord line); operations that cannot handle grazing users say so.
    struct UserLocation
    {
        double r = 0.0;
        double theta = 0.0;

        static UserLocation polar(double r, double theta)
        {
            detail::require_positive(r, "user distance r");
            detail::require(std::isfinite(theta) && std::abs(theta) <= pi / 2.0, Errc::invalid_argument,
                            "user angle theta must lie in [-pi/2, pi/2]");
            return UserLocation{r, theta};
        }

        static UserLocation polar_deg(double r, double theta_deg) { return polar(r, deg_to_rad(theta_deg)); }

        CartesianPoint cartesian() const { return {r * std::cos(theta), r * std::sin(theta)}; }
    };

    /// User position seen from the arc center A.
    struct ArcFrameCoords
    {
        double g = 0.0;   // |q - A|
        double phi = 0.0; // signed angle between AP and AC
        // g^2 - r0^2 evaluated without cancellation; > 0 iff the user is outside the arc circle.
        double excess = 0.0;
    };

    class ArcArrayGeometry
    {
    public:
        /// Validating constructor from the full parameter set. Prefer the
        /// arc_from_* factories, which derive consistent parameters.
        static ArcArrayGeometry create(int count, double lambda, double radius, double central_angle,
                                       double support, double aperture)
        {
            detail::require(count >= 1, Errc::invalid_argument, "antenna count must be >= 1");
            detail::require(count % 2 == 1, Errc::non_odd_count, "antenna count must be odd");
            detail::require_positive(lambda, "wavelength");
            detail::require_positive(radius, "arc radius");
            detail::require_positive(central_angle, "central angle");
            detail::require(central_angle <= pi, Errc::alpha_exceeds_pi, "central angle exceeds pi");
            detail::require_positive(support, "arc support");
            detail::require(support <= radius, Errc::support_exceeds_semicircle, "arc support exceeds radius");

            // 2 r0 sin^2(alpha/4) == r0 (1 - cos(alpha/2)), without cancellation for small alpha
            const double sagitta = 2.0 * radius * std::pow(std::sin(central_angle / 4.0), 2);
            const double chord = 2.0 * radius * std::sin(central_angle / 2.0);
            detail::require(std::abs(sagitta - support) <= 1e-12 * support, Errc::invalid_argument,
                            "support inconsistent with radius and central angle");
            detail::require(std::abs(chord - aperture) <= 1e-12 * aperture, Errc::invalid_argument,
                            "aperture inconsistent with radius and central angle");

            ArcArrayGeometry g;
            g.M_ = count;
            g.lambda_ = lambda;
            g.d_ = lambda / 2.0;
            g.r0_ = radius;
            g.alpha_ = central_angle;
            g.L_ = support;
            g.D_ = aperture;
            g.epsilon_ = count > 1 ? central_angle / (count - 1) : 0.0;
            g.actual_spacing_ = count > 1 ? 2.0 * radius * std::sin(g.epsilon_ / 2.0) : 0.0;
            return g;
        }

        int count() const { return M_; }
        int half_count() const { return (M_ - 1) / 2; }
        double spacing() const { return d_; } // nominal lambda/2
        double wavelength() const { return lambda_; }
        double radius() const { return r0_; }
        double central_angle() const { return alpha_; }
        double epsilon() const { return epsilon_; }
        double support() const { return L_; }
        double aperture() const { return D_; }
        double actual_spacing() const { return actual_spacing_; }

        CartesianPoint arc_center() const { return {-(r0_ - L_), 0.0}; }

    private:
        ArcArrayGeometry() = default;

        int M_ = 1;
        double lambda_ = 0.0;
        double d_ = 0.0;
        double r0_ = 0.0;
        double alpha_ = 0.0;
        double epsilon_ = 0.0;
        double L_ = 0.0;
        double D_ = 0.0;
        double actual_spacing_ = 0.0;
    };

    /// Maximum relative deviation of the realised chord spacing from lambda/2
    /// accepted by arc_from_aperture_support.
    inline constexpr double spacing_policy_tolerance = 0.005;

    /// Arc with given radius and central angle, M antennas spread uniformly
    /// over it. No spacing policy is applied; M = 1 yields a single antenna at C.
    inline ArcArrayGeometry arc_from_radius_angle(double r0, double alpha, int M, double lambda)
    {
        detail::require_positive(r0, "arc radius");
        detail::require_positive(alpha, "central angle");
        detail::require(alpha <= pi, Errc::alpha_exceeds_pi, "central angle exceeds pi");
        const double L = 2.0 * r0 * std::pow(std::sin(alpha / 4.0), 2);
        const double D = 2.0 * r0 * std::sin(alpha / 2.0);
        return ArcArrayGeometry::create(M, lambda, r0, alpha, L, D);
    }

    /// Arc of radius r0 holding M antennas at exact half-wavelength chord spacing.
    inline ArcArrayGeometry arc_from_radius_count(double r0, int M, double lambda)
    {
        detail::require_positive(r0, "arc radius");
        detail::require_positive(lambda, "wavelength");
        detail::require(M % 2 == 1, Errc::non_odd_count, "antenna count must be odd");
        detail::require(M >= 3, Errc::invalid_argument, "antenna count must be >= 3");
        const double half_ratio = (lambda / 2.0) / (2.0 * r0);
        detail::require(half_ratio <= 1.0, Errc::radius_too_small, "arc radius below a quarter wavelength");
        const double eps = 2.0 * std::asin(half_ratio);
        const double alpha = (M - 1) * eps;
        detail::require(alpha <= pi, Errc::alpha_exceeds_pi, "arc would wrap past a semicircle");
        return arc_from_radius_angle(r0, alpha, M, lambda);
    }

    /// Arc through the chord endpoints (0, +/-D/2) and the apex (L, 0).
    ///
    /// D and L are kept exactly; the radius and central angle follow from the
    /// circle through those three points and M is the largest odd count whose
    /// half-wavelength chord steps fit in the arc.
    inline ArcArrayGeometry arc_from_aperture_support(double D, double L, double lambda)
    {
        detail::require_positive(D, "aperture");
        detail::require_positive(lambda, "wavelength");
        detail::require(L > 0.0, Errc::degenerate_support, "arc support must be positive (use ula_from_aperture)");
        detail::require(L <= D / 2.0, Errc::support_exceeds_semicircle, "arc support exceeds half the aperture");

        const double r0 = (4.0 * L * L + D * D) / (8.0 * L);
        const double alpha = 4.0 * std::atan(2.0 * L / D); // tan(alpha/4) = L / (D/2)
        const double d = lambda / 2.0;
        const double half_ratio = d / (2.0 * r0);
        detail::require(half_ratio <= 1.0, Errc::radius_too_small, "arc radius below a quarter wavelength");
        const double eps_d = 2.0 * std::asin(half_ratio);
        const auto steps = static_cast<long long>(std::floor(alpha / (2.0 * eps_d) + 1e-9));
        detail::require(steps >= 1, Errc::spacing_policy, "aperture shorter than two element spacings");
        const int M = static_cast<int>(2 * steps + 1);

        const double eps = alpha / (M - 1);
        const double realised = 2.0 * r0 * std::sin(eps / 2.0);
        detail::require(std::abs(realised / d - 1.0) <= spacing_policy_tolerance, Errc::spacing_policy,
                        "realised chord spacing deviates more than 0.5% from lambda/2");

        return ArcArrayGeometry::create(M, lambda, r0, alpha, L, D);
    }

    inline void check_index(const ArcArrayGeometry &geom, int m)
    {
        if (m < -geom.half_count() || m > geom.half_count())
            throw Error(Errc::index_out_of_range, "antenna index " + std::to_string(m) + " outside array");
    }

    inline CartesianPoint antenna_position(const ArcArrayGeometry &geom, int m)
    {
        check_index(geom, m);
        const double am = m * geom.epsilon();
        const double s = std::sin(am / 2.0);
        // r0 cos(am) - (r0 - L) rewritten to avoid cancellation when r0 >> L
        return {geom.support() - 2.0 * geom.radius() * s * s, geom.radius() * std::sin(am)};
    }

    inline ArcFrameCoords user_arc_coords(const ArcArrayGeometry &geom, const UserLocation &u)
    {
        const double r0 = geom.radius();
        const double L = geom.support();
        const double c = std::cos(u.theta);
        const double s = std::sin(u.theta);
        const double along = u.r * c + (r0 - L);
        ArcFrameCoords out;
        out.g = std::hypot(along, u.r * s);
        out.phi = std::atan2(u.r * s, along);
        // g^2 - r0^2 = r^2 + L^2 - 2 r L cos(theta) + 2 r0 (r cos(theta) - L)
        out.excess = (u.r * u.r + L * L - 2.0 * u.r * L * c) + 2.0 * r0 * (u.r * c - L);
        return out;
    }

    /// True iff the user is strictly outside the circle carrying the arc (g > r0).
    inline bool user_outside_arc(const ArcArrayGeometry &geom, const UserLocation &u)
    {
        return user_arc_coords(geom, u).excess > 0.0;
    }

    inline void require_outside_arc(const ArcFrameCoords &c)
    {
        detail::require(c.excess > 0.0, Errc::user_inside_arc, "user is not outside the arc circle (g <= r0)");
    }

    /// Squared antenna-user distance from arc-frame coordinates.
    ///
    /// g^2 + r0^2 - 2 r0 g cos(m eps - phi) is evaluated as
    /// (g - r0)^2 + 4 g r0 sin^2((m eps - phi)/2), which stays accurate when
    /// r0 is huge (nearly linear arcs).
    inline double antenna_user_distance_sq(const ArcArrayGeometry &geom, const ArcFrameCoords &c, int m)
    {
        const double r0 = geom.radius();
        const double g_minus_r0 = c.excess / (c.g + r0);
        const double s = std::sin((m * geom.epsilon() - c.phi) / 2.0);
        return g_minus_r0 * g_minus_r0 + 4.0 * c.g * r0 * s * s;
    }

    inline double antenna_user_distance(const ArcArrayGeometry &geom, const UserLocation &u, int m)
    {
        check_index(geom, m);
        return std::sqrt(antenna_user_distance_sq(geom, user_arc_coords(geom, u), m));
    }

    /// Same distance via the Cartesian norm |w_m - q|.
    inline double antenna_user_distance_cartesian(const ArcArrayGeometry &geom, const UserLocation &u, int m)
    {
        return distance(antenna_position(geom, m), u.cartesian());
    }

    /// Smallest r at angle theta for which the user is outside the arc circle.
    inline double min_outside_range(const ArcArrayGeometry &geom, double theta)
    {
        const double h = geom.radius() - geom.support();
        const double s = std::sin(theta);
        // root of r^2 + 2 r h cos(theta) + h^2 - r0^2 = 0
        return -h * std::cos(theta) + std::sqrt(geom.radius() * geom.radius() - h * h * s * s);
    }

    // ---- uniform linear array -------------------------------------------

    struct UlaArrayGeometry
    {
        int count = 1;
        double spacing = 0.0;
        double aperture = 0.0; // (count - 1) * spacing
        double wavelength = 0.0;

        int half_count() const { return (count - 1) / 2; }
    };

    /// Half-wavelength ULA with the largest odd count fitting in aperture D.
    inline UlaArrayGeometry ula_from_aperture(double D, double lambda)
    {
        detail::require_positive(D, "aperture");
        detail::require_positive(lambda, "wavelength");
        const double d = lambda / 2.0;
        auto k = static_cast<long long>(std::floor(D / d + 1e-9)) + 1;
        if (k % 2 == 0)
            --k;
        UlaArrayGeometry g;
        g.count = static_cast<int>(k);
        g.spacing = d;
        g.aperture = static_cast<double>(k - 1) * d;
        g.wavelength = lambda;
        return g;
    }

    inline void check_index(const UlaArrayGeometry &geom, int m)
    {
        if (m < -geom.half_count() || m > geom.half_count())
            throw Error(Errc::index_out_of_range, "antenna index " + std::to_string(m) + " outside array");
    }

    inline CartesianPoint ula_antenna_position(const UlaArrayGeometry &geom, int m)
    {
        check_index(geom, m);
        return {0.0, m * geom.spacing};
    }

    inline double ula_antenna_user_distance_sq(const UlaArrayGeometry &geom, const UserLocation &u, int m)
    {
        const double along = u.r * std::cos(u.theta);
        const double across = u.r * std::sin(u.theta) - m * geom.spacing;
        return along * along + across * across;
    }

    inline double ula_antenna_user_distance(const UlaArrayGeometry &geom, const UserLocation &u, int m)
    {
        check_index(geom, m);
        return std::sqrt(ula_antenna_user_distance_sq(geom, u, m));
    }
} // namespace xluaa

#endif
