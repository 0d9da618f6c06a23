// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The xluaa Authors

#include <xluaa/numerics.hpp>
#include <xluaa/regions.hpp>
#include <xluaa/snr.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace xluaa;

namespace
{
    // tests/oracles/frozen_values.py
    constexpr double quarter_integral = 0.60459978807807261686; // int_0^{pi/2} dx / (2 + cos x)
    constexpr double half_integral = 1.8137993642342178506;     // int_0^{pi} dx / (2 + cos x)

    template <class Fn>
    Errc error_code(Fn &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e.code();
        }
        ADD_FAILURE() << "expected an xluaa::Error";
        return Errc::invalid_argument;
    }

    TrigRationalIntegrand random_integrand(std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double a = (unit(rng) < 0.5 ? -1.0 : 1.0) * (0.5 + 10.0 * unit(rng));
        const double rho = 0.95 * std::abs(a) * unit(rng);
        const double psi = 2.0 * pi * unit(rng);
        return TrigRationalIntegrand::from_coefficients(a, rho * std::cos(psi), rho * std::sin(psi));
    }
} // namespace

TEST(Antiderivative, ConstantIntegrand)
{
    const auto f = TrigRationalIntegrand::from_coefficients(1.0, 0.0, 0.0);
    EXPECT_NEAR(trig_rational_antiderivative(f, pi / 2.0), pi / 2.0, 1e-15);
    EXPECT_NEAR(trig_rational_antiderivative(f, -1.0), -1.0, 1e-15);
}

TEST(Antiderivative, QuarterPeriodOracle)
{
    const auto f = TrigRationalIntegrand::from_coefficients(2.0, 1.0, 0.0);
    EXPECT_NEAR(trig_rational_antiderivative(f, pi / 2.0), 2.0 / std::sqrt(3.0) * pi / 6.0, 1e-15);
    EXPECT_NEAR(trig_rational_integral(f, 0.0, pi / 2.0), quarter_integral, 1e-15);
    EXPECT_NEAR(adaptive_quadrature(f, 0.0, pi / 2.0, 1e-13), quarter_integral, 1e-13);
}

TEST(Antiderivative, ValueAtZeroAndMirror)
{
    const auto f = TrigRationalIntegrand::from_coefficients(3.0, 1.0, 1.5);
    const auto g = TrigRationalIntegrand::from_coefficients(3.0, 1.0, -1.5);
    const double R = f.root();
    EXPECT_NEAR(trig_rational_antiderivative(f, 0.0), 2.0 / R * std::atan(1.5 / R), 1e-15);
    for (double x : {-2.5, -0.3, 0.0, 1.1, 3.0})
        EXPECT_NEAR(trig_rational_antiderivative(g, x), -trig_rational_antiderivative(f, -x), 1e-14);
}

TEST(Antiderivative, StrictlyIncreasing)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i)
    {
        auto f = random_integrand(rng);
        if (f.a() < 0.0)
            continue;
        double prev = -INFINITY;
        for (double x = -3.1; x < 3.1; x += 0.05)
        {
            const double v = trig_rational_antiderivative(f, x);
            EXPECT_GT(v, prev);
            prev = v;
        }
    }
}

TEST(Antiderivative, Errors)
{
    EXPECT_EQ(error_code([] { TrigRationalIntegrand::from_coefficients(1.0, 1.0, 0.0); }),
              Errc::validity_violation);
    EXPECT_EQ(error_code([] { TrigRationalIntegrand::from_coefficients(1.0, 0.8, 0.8); }),
              Errc::validity_violation);
    const auto f = TrigRationalIntegrand::from_coefficients(2.0, 1.0, 0.0);
    EXPECT_EQ(error_code([&] { trig_rational_antiderivative(f, pi); }), Errc::branch_overflow);
    EXPECT_EQ(error_code([&] { trig_rational_antiderivative(f, -4.0); }), Errc::branch_overflow);
    EXPECT_EQ(error_code([] { TrigRationalIntegrand::with_root(5.0, 3.0, 0.0, 3.0); }), Errc::validity_violation);
}

TEST(Antiderivative, FiniteDifferenceProperty)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double h = 1e-6;
    for (int i = 0; i < 1000; ++i)
    {
        const auto f = random_integrand(rng);
        const double x = (unit(rng) * 2.0 - 1.0) * 2.99;
        const double fd = (trig_rational_antiderivative(f, x + h) - trig_rational_antiderivative(f, x - h)) / (2.0 * h);
        EXPECT_LE(std::abs(fd / f(x) - 1.0), 1e-6) << "a=" << f.a() << " b=" << f.b() << " c=" << f.c() << " x=" << x;
    }
}

TEST(DefiniteIntegral, SymmetricLimitsWithoutSineTerm)
{
    const auto f = TrigRationalIntegrand::from_coefficients(4.0, -1.0, 0.0);
    EXPECT_NEAR(trig_rational_integral(f, -1.2, 1.2), 2.0 * trig_rational_antiderivative(f, 1.2), 1e-15);
    EXPECT_GT(trig_rational_integral(f, -1.2, 1.2), 0.0);
}

TEST(DefiniteIntegral, MatchesQuadrature)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i)
    {
        const auto f = random_integrand(rng);
        double lo = (unit(rng) * 2.0 - 1.0) * 3.1;
        double hi = (unit(rng) * 2.0 - 1.0) * 3.1;
        if (lo > hi)
            std::swap(lo, hi);
        EXPECT_NEAR(trig_rational_integral(f, lo, hi), adaptive_quadrature(f, lo, hi, 1e-12), 1e-10);
    }
}

TEST(DefiniteIntegral, ClosedFormCoefficientMap)
{
    const auto lb = LinkBudget::from_reference_snr(1e5, 0.01);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int done = 0;
    while (done < 200)
    {
        const double D = 1.0 + 50.0 * unit(rng);
        std::optional<ArcArrayGeometry> g;
        try
        {
            g = arc_from_aperture_support(D, D / 2.0 * std::pow(10.0, -3.0 * unit(rng)), 0.01);
        }
        catch (const Error &)
        {
            continue;
        }
        const auto u = UserLocation::polar(1.0 + 80.0 * unit(rng), (unit(rng) - 0.5) * 0.98 * pi);
        if (!user_outside_arc(*g, u))
            continue;
        const auto in = ClosedFormInputs::resolve(*g, u, lb);
        const auto f = closed_form_integrand(in);
        // a^2 - b^2 - c^2 = (g^2 - r0^2)^2
        const double disc = f.a() * f.a() - f.b() * f.b() - f.c() * f.c();
        EXPECT_LE(std::abs(disc - in.excess * in.excess), 1e-10 * f.a() * f.a());
        const double h = 0.5 * g->count() * g->epsilon();
        const double via_integral = lb.gamma0_bar() / g->epsilon() * trig_rational_integral(f, -h, h);
        EXPECT_LE(std::abs(via_integral / mrc_snr_closed_form(in) - 1.0), 1e-12);
        ++done;
    }
}

TEST(Quadrature, Basics)
{
    EXPECT_NEAR(adaptive_quadrature([](double x) { return x * x; }, 0.0, 1.0, 1e-12), 1.0 / 3.0, 1e-12);
    const auto f = TrigRationalIntegrand::from_coefficients(2.0, 1.0, 0.0);
    EXPECT_NEAR(adaptive_quadrature(f, 0.0, pi, 1e-12), pi / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(adaptive_quadrature(f, 0.0, pi, 1e-12), half_integral, 1e-12);
    EXPECT_EQ(adaptive_quadrature(f, 0.7, 0.7, 1e-12), 0.0);
    EXPECT_NEAR(adaptive_quadrature(f, pi / 2.0, 0.0, 1e-12), -quarter_integral, 1e-12);
}

TEST(Quadrature, ToleranceNotMet)
{
    // 1e11 periods on [0, 1] cannot be resolved within the subdivision cap
    EXPECT_EQ(error_code([] { adaptive_quadrature([](double x) { return std::sin(1e12 * x); }, 0.0, 1.0, 1e-6); }),
              Errc::tolerance_not_met);
    EXPECT_EQ(error_code([] { adaptive_quadrature([](double x) { return x; }, 0.0, 1.0, 0.0); }),
              Errc::invalid_argument);
}

TEST(RiemannSum, Basics)
{
    EXPECT_NEAR(riemann_midpoint_sum([](double) { return 1.0; }, 0.01, 101), 1.01, 1e-14);
    EXPECT_DOUBLE_EQ(riemann_midpoint_sum([](double x) { return std::cos(x) + 2.0; }, 0.3, 1), 0.9);
    EXPECT_EQ(error_code([] { riemann_midpoint_sum([](double) { return 1.0; }, 0.1, 4); }), Errc::non_odd_count);
}

TEST(RiemannSum, CellSumTracksIntegralOnLargeArrays)
{
    const auto lb = LinkBudget::from_reference_snr(1.0, 0.01);
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    for (double D : {50.0, 100.0, 200.0})
    {
        const auto g = arc_from_aperture_support(D, 4.0, 0.01);
        ASSERT_GE(g.count(), 10000);
        const auto in = ClosedFormInputs::resolve(g, u, lb);
        const auto f = closed_form_integrand(in);
        const double h = 0.5 * g.count() * g.epsilon();
        const double sum = riemann_midpoint_sum(f, g.epsilon(), g.count());
        const double integral = trig_rational_integral(f, -h, h);
        EXPECT_LT(std::abs(sum / integral - 1.0), 1e-4);
        // the sum is the direct MRC SNR over gamma0_bar / eps
        EXPECT_LE(std::abs(sum / g.epsilon() / mrc_snr_direct(g, u, lb) - 1.0), 1e-11);
    }
}

TEST(Bisect, Basics)
{
    const auto res = bisect([](double r) { return r - 1.0; }, 0.0, 2.0, 1e-12);
    EXPECT_NEAR(res.root(), 1.0, 1e-12);
    EXPECT_LE(res.width(), 1e-12);
    EXPECT_EQ(error_code([] { bisect([](double r) { return r * r + 1.0; }, -1.0, 2.0, 1e-9); }),
              Errc::no_sign_change);
    EXPECT_EQ(error_code([] { bisect([](double r) { return r; }, 1.0, 1.0, 1e-9); }), Errc::invalid_argument);
}

TEST(Bisect, IterationCap)
{
    // a 1e300-wide bracket needs more than 200 halvings to reach 1e-300
    EXPECT_EQ(error_code([] { bisect([](double r) { return r - 0.5; }, -1e300, 1e300, 1e-300); }),
              Errc::iteration_cap);
}

TEST(Bisect, ReproducesRayleighSearch)
{
    const auto g = arc_from_aperture_support(0.635, 0.3, 0.01);
    const auto res = bisect([&](double r) { return max_phase_error(g, UserLocation::polar(r, 0.0)) - pi / 8.0; },
                            10.0, 1000.0, 1e-10);
    EXPECT_NEAR(res.root(), rayleigh_distance_exact(g, 0.0), 1e-8);
}
