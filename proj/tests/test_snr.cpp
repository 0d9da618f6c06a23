// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The xluaa Authors

#include <xluaa/snr.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace xluaa;

namespace
{
    // tests/oracles/frozen_values.py
    constexpr double u_example = 2.3775180304596673299;
    constexpr double ula101_closed = 39449.850250654754884;
    constexpr double d200_direct = 5935862.9975544517135;
    constexpr int d200_count = 40043;
    constexpr double asymptote_linear = 6374722.1995432274282;
    constexpr double asymptote_db = 68.044612636418018905;

    double rel(double got, double want) { return std::abs(got / want - 1.0); }

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

    const LinkBudget lb50 = LinkBudget::from_reference_snr(1e5, 0.01);
} // namespace

TEST(AngleTerm, OracleValue)
{
    const double x = 90.336;
    const double phi = std::asin(8.0 / x);
    EXPECT_LE(rel(closed_form_angle_term(x, 80.125, phi, 4.0), u_example), 1e-13);
}

TEST(AngleTerm, PhiZeroAndSymmetry)
{
    const double x = 50.0, y = 30.0, L = 3.0;
    const double t = std::sqrt(L / (2.0 * y - L));
    const double both = 2.0 * std::atan((x * x + y * y + 2.0 * x * y) * t / (x * x - y * y));
    EXPECT_NEAR(closed_form_angle_term(x, y, 0.0, L), both, 1e-15);
    for (double phi : {0.1, 0.5, 1.2})
    {
        const double v = closed_form_angle_term(x, y, phi, L);
        EXPECT_DOUBLE_EQ(v, closed_form_angle_term(x, y, -phi, L));
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, pi);
    }
    // shrinking support drives U to zero
    EXPECT_LT(closed_form_angle_term(x, y, 0.0, 1e-14), 1e-6);
}

TEST(AngleTerm, Errors)
{
    EXPECT_EQ(error_code([] { closed_form_angle_term(10.0, 10.0, 0.0, 1.0); }), Errc::degenerate_radii);
    EXPECT_EQ(error_code([] { closed_form_angle_term(10.0, 5.0, 0.0, 10.0); }), Errc::support_out_of_range);
    EXPECT_EQ(error_code([] { closed_form_angle_term(10.0, 5.0, 0.0, 0.0); }), Errc::support_out_of_range);
}

TEST(ClosedForm, Errors)
{
    const auto g = arc_from_aperture_support(50.0, 4.0, 0.01);
    EXPECT_EQ(error_code([&] { mrc_snr_closed_form(g, UserLocation::polar(3.0, 0.0), lb50); }),
              Errc::user_inside_arc);
    const auto single = arc_from_radius_angle(10.0, 1.0, 1, 0.01);
    EXPECT_EQ(error_code([&] { mrc_snr_closed_form(single, UserLocation::polar(30.0, 0.0), lb50); }),
              Errc::single_antenna);
}

TEST(ClosedForm, LargeApertureOracle)
{
    const auto g = arc_from_aperture_support(200.0, 4.0, 0.01);
    ASSERT_EQ(g.count(), d200_count);
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    EXPECT_LE(rel(mrc_snr_direct(g, u, lb50), d200_direct), 1e-12);
    EXPECT_LE(rel(mrc_snr_closed_form(g, u, lb50), d200_direct), 1e-6);
    EXPECT_NEAR(to_db(mrc_snr_closed_form(g, u, lb50)), 67.73, 0.01);
}

TEST(ClosedForm, ArcEndpointSpanIsCoarser)
{
    // the endpoint span drops half a cell at each end: relative error ~ 1/M
    const auto g = arc_from_aperture_support(50.0, 4.0, 0.01);
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    const double direct = mrc_snr_direct(g, u, lb50);
    const double cells = rel(mrc_snr_closed_form(g, u, lb50, ClosedFormSpan::array_cells), direct);
    const double ends = rel(mrc_snr_closed_form(g, u, lb50, ClosedFormSpan::arc_endpoints), direct);
    EXPECT_LT(cells, 1e-6);
    EXPECT_LT(ends, 5.0 / g.count());
    EXPECT_GT(ends, cells);
    // the endpoint form equals U(g, r0) with t = sqrt(L / (2 r0 - L))
    const auto in = ClosedFormInputs::resolve(g, u, lb50);
    const double printed = 2.0 * lb50.gamma0_bar() * (g.count() - 1) / (g.central_angle() * in.excess) *
                           closed_form_angle_term(in.g, in.r0, in.phi, g.support());
    EXPECT_LE(rel(mrc_snr_closed_form(in, ClosedFormSpan::arc_endpoints), printed), 1e-12);
}

TEST(ClosedForm, AgreesWithSummationOnRandomInstances)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    while (checked < 200)
    {
        const double D = 1.0 + 40.0 * unit(rng);
        const double L = D / 2.0 * std::pow(10.0, -3.0 * unit(rng));
        std::optional<ArcArrayGeometry> g;
        try
        {
            g = arc_from_aperture_support(D, L, 0.01);
        }
        catch (const Error &)
        {
            continue;
        }
        if (g->count() < 201)
            continue;
        const auto u = UserLocation::polar(0.5 + 100.0 * unit(rng), (unit(rng) - 0.5) * 0.98 * pi);
        const auto c = user_arc_coords(*g, u);
        if (!(c.g > 1.05 * g->radius()))
            continue;
        const double e = rel(mrc_snr_closed_form(*g, u, lb50), mrc_snr_direct(*g, u, lb50));
        EXPECT_LT(e, 1e-2);
        if (g->count() >= 2001)
        {
            EXPECT_LT(e, 1e-3);
        }
        ++checked;
    }
}

TEST(ClosedForm, MirrorSymmetry)
{
    const auto g = arc_from_aperture_support(50.0, 4.0, 0.01);
    for (double deg : {1.0, 10.0, 45.0, 70.0})
        EXPECT_LE(rel(mrc_snr_closed_form(g, UserLocation::polar_deg(16.0, deg), lb50),
                      mrc_snr_closed_form(g, UserLocation::polar_deg(16.0, -deg), lb50)),
                  1e-12);
}

TEST(ClosedForm, IllConditioningFlag)
{
    const auto g = arc_from_aperture_support(50.0, 4.0, 0.01);
    EXPECT_FALSE(closed_form_ill_conditioned(g, UserLocation::polar_deg(16.0, 30.0)));
    // just outside the apex: g - r0 = 1e-9 m
    EXPECT_TRUE(closed_form_ill_conditioned(g, UserLocation::polar(4.0 + 1e-9, 0.0)));
}

TEST(UlaClosedForm, Examples)
{
    const auto u0 = UserLocation::polar(16.0, 0.0);
    EXPECT_LE(rel(ula_snr_closed_form(101, 0.005, u0, lb50), ula101_closed), 1e-13);
    EXPECT_LE(rel(ula_snr_closed_form(101, 0.005, u0, lb50), 2e5 / (0.005 * 16.0) * std::atan(101 * 0.005 / 32.0)),
              1e-14);
    // huge arrays tend to the L = 0 asymptote
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    EXPECT_LE(rel(ula_snr_closed_form(200'000'001, 0.005, u, lb50), asymptotic_snr(u, 0.0, 0.005, lb50)), 1e-4);
    EXPECT_DOUBLE_EQ(ula_snr_closed_form(1001, 0.005, u, lb50),
                     ula_snr_closed_form(1001, 0.005, UserLocation::polar_deg(16.0, -30.0), lb50));
    EXPECT_EQ(error_code([] { ula_snr_closed_form(101, 0.005, UserLocation::polar(16.0, pi / 2.0), lb50); }),
              Errc::grazing_angle);
}

TEST(UlaClosedForm, MatchesUlaSummation)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i)
    {
        const double D = 1.0 + 9.0 * unit(rng);
        const auto ula = ula_from_aperture(D, 0.01);
        ASSERT_GE(ula.count, 201);
        const auto u = UserLocation::polar(3.0 * ula.aperture * (1.0 + 5.0 * unit(rng)), (unit(rng) - 0.5) * 0.98 * pi);
        EXPECT_LT(rel(ula_snr_closed_form(ula.count, ula.spacing, u, lb50), mrc_snr_direct_ula(ula, u, lb50)), 5e-3);
    }
    // M = 1001 at r = 16 m, 30 degrees
    const auto ula = ula_from_aperture(5.0, 0.01);
    ASSERT_EQ(ula.count, 1001);
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    EXPECT_LT(rel(ula_snr_closed_form(1001, 0.005, u, lb50), mrc_snr_direct_ula(ula, u, lb50)), 1e-3);
}

TEST(Asymptote, Examples)
{
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    const double v = asymptotic_snr(u, 4.0, 0.005, lb50);
    EXPECT_LE(rel(v, asymptote_linear), 1e-14);
    EXPECT_NEAR(to_db(v), asymptote_db, 1e-12);
    EXPECT_LE(rel(asymptotic_snr(u, 0.0, 0.005, lb50), 1e5 * pi / (0.005 * 16.0 * std::cos(pi / 6.0))), 1e-15);
    // strictly increasing in L
    double prev = 0.0;
    for (double L : {0.0, 1.0, 4.0, 10.0, 13.8})
    {
        const double s = asymptotic_snr(u, L, 0.005, lb50);
        EXPECT_GT(s, prev);
        prev = s;
    }
    const auto pole = UserLocation::polar(8.0, 0.0);
    EXPECT_EQ(error_code([&] { asymptotic_snr(pole, 8.0, 0.005, lb50); }), Errc::user_behind_arc_middle);
}

TEST(Convergence, UlaLimitTable)
{
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    const std::vector<double> supports{2.5, 1.0, 0.1, 1e-3, 5e-6};
    const auto rows = ula_limit_convergence(5.0, u, lb50, supports);
    ASSERT_EQ(rows.size(), supports.size());
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        EXPECT_LT(rows[i].relative_gap, rows[i - 1].relative_gap);
        EXPECT_LT(rows[i].relative_gap, rows[0].relative_gap);
    }
    EXPECT_LT(rows.back().relative_gap, 1e-3);
    EXPECT_EQ(ula_limit_convergence(5.0, u, lb50, std::vector<double>{1.0}).size(), 1u);
    EXPECT_EQ(error_code([&] { ula_limit_convergence(5.0, u, lb50, std::vector<double>{1.0, 2.0}); }),
              Errc::invalid_argument);
    EXPECT_EQ(error_code([&] { ula_limit_convergence(5.0, u, lb50, std::vector<double>{3.0}); }),
              Errc::invalid_argument);
}

TEST(Convergence, AsymptoteTable)
{
    const auto u = UserLocation::polar_deg(16.0, 30.0);
    const std::vector<double> apertures{8.0, 20.0, 50.0, 100.0, 200.0, 500.0};
    const auto rows = asymptote_convergence(4.0, u, lb50, apertures);
    ASSERT_EQ(rows.size(), apertures.size());
    EXPECT_DOUBLE_EQ(rows.front().aperture, 8.0);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_LT(rows[i].gap_db, rows[i - 1].gap_db);
    EXPECT_LT(rows.back().gap_db, 0.15);
    EXPECT_GT(rows.back().gap_db, 0.0);
    // direct summation at the largest aperture backs the closed form
    const auto g = arc_from_aperture_support(500.0, 4.0, 0.01);
    EXPECT_LE(rel(rows.back().snr_closed, mrc_snr_direct(g, u, lb50)), 1e-6);
    EXPECT_EQ(error_code([&] { asymptote_convergence(4.0, u, lb50, std::vector<double>{7.0}); }),
              Errc::invalid_argument);
}
