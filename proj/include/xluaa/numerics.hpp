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

#ifndef XLUAA_NUMERICS_HPP
#define XLUAA_NUMERICS_HPP

#include "error.hpp"
#include "units.hpp"

#include <array>
#include <cmath>
#include <concepts>
#include <optional>
#include <vector>

namespace xluaa
{
    /// f(x) = 1 / (a + b cos x + c sin x) with a^2 > b^2 + c^2, so f has no
    /// poles and keeps the sign of a.
    class TrigRationalIntegrand
    {
    public:
        static TrigRationalIntegrand from_coefficients(double a, double b, double c)
        {
            const double disc = a * a - b * b - c * c;
            detail::require(std::isfinite(disc) && disc > 0.0, Errc::validity_violation,
                            "a^2 must exceed b^2 + c^2");
            return TrigRationalIntegrand(a, b, c, std::sqrt(disc));
        }

        /// Supplies sqrt(a^2 - b^2 - c^2) computed elsewhere without
        /// cancellation. It must match the coefficients to 1e-8 relative.
        static TrigRationalIntegrand with_root(double a, double b, double c, double root)
        {
            detail::require(root > 0.0, Errc::validity_violation, "discriminant root must be positive");
            const double disc = a * a - b * b - c * c;
            const double scale = a * a;
            detail::require(std::abs(disc - root * root) <= 1e-8 * scale, Errc::validity_violation,
                            "discriminant root inconsistent with coefficients");
            return TrigRationalIntegrand(a, b, c, root);
        }

        double a() const { return a_; }
        double b() const { return b_; }
        double c() const { return c_; }
        double root() const { return root_; }

        double operator()(double x) const { return 1.0 / (a_ + b_ * std::cos(x) + c_ * std::sin(x)); }

    private:
        TrigRationalIntegrand(double a, double b, double c, double root) : a_(a), b_(b), c_(c), root_(root) {}

        double a_, b_, c_, root_;
    };

    /// F(x) = 2/R atan(((a - b) tan(x/2) + c) / R), R = sqrt(a^2 - b^2 - c^2).
    ///
    /// Valid on the principal branch |x| < pi only; no branch unwinding.
    inline double trig_rational_antiderivative(const TrigRationalIntegrand &f, double x)
    {
        detail::require(std::abs(x) < pi, Errc::branch_overflow, "antiderivative evaluated outside (-pi, pi)");
        const double R = f.root();
        return 2.0 / R * std::atan(((f.a() - f.b()) * std::tan(x / 2.0) + f.c()) / R);
    }

    inline double trig_rational_integral(const TrigRationalIntegrand &f, double x_lo, double x_hi)
    {
        detail::require(x_lo <= x_hi, Errc::invalid_argument, "integration limits out of order");
        return trig_rational_antiderivative(f, x_hi) - trig_rational_antiderivative(f, x_lo);
    }

    // ---- adaptive quadrature --------------------------------------------

    namespace detail
    {
        // Gauss-Kronrod 7/15 abscissae and weights (positive half).
        inline constexpr std::array<double, 8> gk15_nodes = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        inline constexpr std::array<double, 8> k15_weights = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        // Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
        inline constexpr std::array<double, 4> g7_weights = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct RuleEstimate
        {
            double value;
            double error;
        };

        template <class F>
        RuleEstimate gauss_kronrod_15(const F &f, double lo, double hi)
        {
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            const double fc = f(mid);
            double kronrod = k15_weights[7] * fc;
            double gauss = g7_weights[3] * fc;
            for (std::size_t i = 0; i < 7; ++i)
            {
                const double dx = half * gk15_nodes[i];
                const double pair = f(mid - dx) + f(mid + dx);
                kronrod += k15_weights[i] * pair;
                if (i % 2 == 1)
                    gauss += g7_weights[i / 2] * pair;
            }
            return {kronrod * half, std::abs((kronrod - gauss) * half)};
        }

        /// Neumaier-compensated running sum.
        class CompensatedSum
        {
        public:
            void add(double x)
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }
            double value() const { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };
    } // namespace detail

    inline constexpr std::size_t quadrature_interval_cap = 1'000'000;

    /// Adaptive Gauss-Kronrod (7/15) quadrature of f over [x_lo, x_hi].
    ///
    /// The absolute tolerance is split across subintervals in proportion to
    /// their width; an interval is accepted once |K15 - G7| fits its share.
    template <class F>
        requires std::invocable<const F &, double>
    double adaptive_quadrature(const F &f, double x_lo, double x_hi, double tol)
    {
        detail::require_positive(tol, "quadrature tolerance");
        detail::require(std::isfinite(x_lo) && std::isfinite(x_hi), Errc::invalid_argument,
                        "integration limits must be finite");
        if (x_lo == x_hi)
            return 0.0;
        const double sign = x_hi > x_lo ? 1.0 : -1.0;
        const double lo0 = std::min(x_lo, x_hi);
        const double hi0 = std::max(x_lo, x_hi);
        const double width = hi0 - lo0;

        struct Interval
        {
            double lo, hi;
        };
        std::vector<Interval> stack{{lo0, hi0}};
        detail::CompensatedSum total;
        std::size_t intervals = 1;
        while (!stack.empty())
        {
            const Interval iv = stack.back();
            stack.pop_back();
            const auto est = detail::gauss_kronrod_15(f, iv.lo, iv.hi);
            detail::require(std::isfinite(est.value), Errc::invalid_argument, "integrand is not finite");
            const double budget = tol * (iv.hi - iv.lo) / width;
            if (est.error <= budget)
            {
                total.add(est.value);
                continue;
            }
            const double mid = 0.5 * (iv.lo + iv.hi);
            if (!(mid > iv.lo && mid < iv.hi) || ++intervals > quadrature_interval_cap)
                throw Error(Errc::tolerance_not_met, "adaptive quadrature exhausted its subdivision cap");
            stack.push_back({mid, iv.hi});
            stack.push_back({iv.lo, mid});
        }
        return sign * total.value();
    }

    /// sum_{m=-(M-1)/2}^{(M-1)/2} f(m eps) eps, the cell-centred Riemann sum
    /// of f over [-M eps/2, M eps/2].
    template <class F>
        requires std::invocable<const F &, double>
    double riemann_midpoint_sum(const F &f, double eps, int M)
    {
        detail::require(M >= 1 && M % 2 == 1, Errc::non_odd_count, "cell count must be odd");
        detail::require_positive(eps, "cell width");
        const int h = (M - 1) / 2;
        detail::CompensatedSum s;
        for (int m = -h; m <= h; ++m)
            s.add(f(m * eps));
        return s.value() * eps;
    }

    // ---- root bracketing ------------------------------------------------

    struct BisectionResult
    {
        double lo = 0.0; // g(lo) has the sign of g at the original lower end
        double hi = 0.0;
        int iterations = 0;

        double root() const { return 0.5 * (lo + hi); }
        double width() const { return hi - lo; }
    };

    inline constexpr int bisection_iteration_cap = 200;

    /// Bisection on [lo, hi] until the bracket is no wider than tol.
    template <class G>
        requires std::invocable<const G &, double>
    BisectionResult bisect(const G &g, double lo, double hi, double tol)
    {
        detail::require(lo < hi, Errc::invalid_argument, "bracket must satisfy lo < hi");
        detail::require_positive(tol, "bisection tolerance");
        const double g_lo = g(lo);
        const double g_hi = g(hi);
        if (g_lo == 0.0)
            return {lo, lo, 0};
        if (g_hi == 0.0)
            return {hi, hi, 0};
        detail::require(std::signbit(g_lo) != std::signbit(g_hi), Errc::no_sign_change,
                        "function does not change sign over the bracket");
        const bool lo_negative = std::signbit(g_lo);

        BisectionResult res{lo, hi, 0};
        while (res.width() > tol)
        {
            if (res.iterations >= bisection_iteration_cap)
                throw Error(Errc::iteration_cap, "bisection exceeded its iteration cap");
            const double mid = res.root();
            if (mid <= res.lo || mid >= res.hi)
                break; // bracket is down to adjacent doubles
            ++res.iterations;
            const double gm = g(mid);
            if (gm == 0.0)
                return {mid, mid, res.iterations};
            if (std::signbit(gm) == lo_negative)
                res.lo = mid;
            else
                res.hi = mid;
        }
        return res;
    }
} // namespace xluaa

#endif
