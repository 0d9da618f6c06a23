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

#ifndef XLUAA_CHANNEL_HPP
#define XLUAA_CHANNEL_HPP

#include "error.hpp"
#include "geometry.hpp"
#include "units.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <vector>

// Line-of-sight near-field channel under the non-uniform spherical wavefront
// model: every antenna sees its own exact distance in both amplitude and
// phase. Only the LoS path is modelled.

namespace xluaa
{
    using complex = std::complex<double>;

    /// Transmit power, noise power and reference gain, or just the reference
    /// SNR gamma0_bar = P beta0 / sigma2.
    ///
    /// Channel entries carry sqrt(beta0). When only gamma0_bar is given the
    /// channel is normalised (beta0 = 1, P / sigma2 = gamma0_bar).
    class LinkBudget
    {
    public:
        static LinkBudget from_powers(double power, double noise_power, double beta0, double lambda)
        {
            detail::require_positive(power, "transmit power");
            detail::require_positive(noise_power, "noise power");
            detail::require_positive(beta0, "reference gain");
            detail::require_positive(lambda, "wavelength");
            LinkBudget lb;
            lb.P_ = power;
            lb.sigma2_ = noise_power;
            lb.beta0_ = beta0;
            lb.gamma0_bar_ = power * beta0 / noise_power;
            lb.lambda_ = lambda;
            return lb;
        }

        static LinkBudget from_reference_snr(double gamma0_bar, double lambda)
        {
            detail::require_positive(gamma0_bar, "reference SNR");
            detail::require_positive(lambda, "wavelength");
            LinkBudget lb;
            lb.gamma0_bar_ = gamma0_bar;
            lb.lambda_ = lambda;
            return lb;
        }

        static LinkBudget from_reference_snr_db(double gamma0_bar_db, double lambda)
        {
            return from_reference_snr(from_db(gamma0_bar_db), lambda);
        }

        double gamma0_bar() const { return gamma0_bar_; }
        double wavelength() const { return lambda_; }
        std::optional<double> power() const { return P_; }
        std::optional<double> noise_power() const { return sigma2_; }
        std::optional<double> beta0() const { return beta0_; }

        /// beta0 as stored in the channel entries.
        double channel_gain() const { return beta0_.value_or(1.0); }

    private:
        LinkBudget() = default;

        std::optional<double> P_;
        std::optional<double> sigma2_;
        std::optional<double> beta0_;
        double gamma0_bar_ = 0.0;
        double lambda_ = 0.0;
    };

    /// Per-antenna complex values indexed m = -(M-1)/2 .. (M-1)/2.
    class AntennaVector
    {
    public:
        AntennaVector() = default;
        explicit AntennaVector(std::vector<complex> entries) : entries_(std::move(entries))
        {
            detail::require(entries_.size() % 2 == 1, Errc::non_odd_count, "antenna vectors have odd length");
        }

        std::size_t size() const { return entries_.size(); }
        int half_count() const { return static_cast<int>(entries_.size() / 2); }
        const complex &at(int m) const { return entries_.at(static_cast<std::size_t>(m + half_count())); }
        std::span<const complex> entries() const { return entries_; }

        double norm() const
        {
            double s = 0.0;
            for (const auto &e : entries_)
                s += std::norm(e);
            return std::sqrt(s);
        }

    protected:
        std::vector<complex> entries_;
    };

    class ChannelVector : public AntennaVector
    {
    public:
        using AntennaVector::AntennaVector;
    };

    class BeamformingVector : public AntennaVector
    {
    public:
        BeamformingVector() = default;
        explicit BeamformingVector(std::vector<complex> entries) : AntennaVector(std::move(entries))
        {
            detail::require(std::abs(norm() - 1.0) <= 1e-12, Errc::invalid_argument,
                            "beamforming vector must have unit norm");
        }

        /// Scales arbitrary nonzero entries to unit norm.
        static BeamformingVector normalized(std::vector<complex> entries)
        {
            double n = 0.0;
            for (const auto &e : entries)
                n += std::norm(e);
            n = std::sqrt(n);
            detail::require(n > 0.0, Errc::zero_channel, "cannot normalise a zero vector");
            for (auto &e : entries)
                e /= n;
            return BeamformingVector(std::move(entries));
        }
    };

    /// exp(-j 2 pi r / lambda) with the argument reduced modulo lambda first.
    inline complex propagation_phasor(double r, double lambda)
    {
        const double frac = std::fmod(r, lambda) / lambda;
        const double ph = -2.0 * pi * frac;
        return {std::cos(ph), std::sin(ph)};
    }

    inline ChannelVector channel_vector(const ArcArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb)
    {
        const auto c = user_arc_coords(geom, u);
        require_outside_arc(c);
        const double amp = std::sqrt(lb.channel_gain());
        std::vector<complex> b;
        b.reserve(static_cast<std::size_t>(geom.count()));
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const double rm = std::sqrt(antenna_user_distance_sq(geom, c, m));
            b.push_back(amp / rm * propagation_phasor(rm, geom.wavelength()));
        }
        return ChannelVector(std::move(b));
    }

    inline ChannelVector ula_channel_vector(const UlaArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb)
    {
        const double amp = std::sqrt(lb.channel_gain());
        std::vector<complex> b;
        b.reserve(static_cast<std::size_t>(geom.count));
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const double rm = std::sqrt(ula_antenna_user_distance_sq(geom, u, m));
            detail::require(rm > 0.0, Errc::invalid_argument, "user coincides with an antenna");
            b.push_back(amp / rm * propagation_phasor(rm, geom.wavelength));
        }
        return ChannelVector(std::move(b));
    }

    /// Maximum ratio combiner v = b / |b|.
    inline BeamformingVector mrc_beamformer(const ChannelVector &b)
    {
        const auto e = b.entries();
        return BeamformingVector::normalized(std::vector<complex>(e.begin(), e.end()));
    }

    /// gamma = (P / sigma2) |v^H h|^2 = (gamma0_bar / beta0) |v^H b|^2.
    inline double snr_with_beamformer(const BeamformingVector &v, const ChannelVector &b, const LinkBudget &lb)
    {
        detail::require(v.size() == b.size(), Errc::dimension_mismatch, "beamformer and channel lengths differ");
        complex acc{0.0, 0.0};
        const auto ve = v.entries();
        const auto be = b.entries();
        for (std::size_t i = 0; i < ve.size(); ++i)
            acc += std::conj(ve[i]) * be[i];
        return lb.gamma0_bar() / lb.channel_gain() * std::norm(acc);
    }

    /// MRC SNR by direct summation: gamma0_bar * sum_m 1 / r_m^2.
    inline double mrc_snr_direct(const ArcArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb)
    {
        const auto c = user_arc_coords(geom, u);
        require_outside_arc(c);
        double sum = 0.0;
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
            sum += 1.0 / antenna_user_distance_sq(geom, c, m);
        return lb.gamma0_bar() * sum;
    }

    inline double mrc_snr_direct_ula(const UlaArrayGeometry &geom, const UserLocation &u, const LinkBudget &lb)
    {
        double sum = 0.0;
        for (int m = -geom.half_count(); m <= geom.half_count(); ++m)
        {
            const double r2 = ula_antenna_user_distance_sq(geom, u, m);
            detail::require(r2 > 0.0, Errc::invalid_argument, "user coincides with an antenna");
            sum += 1.0 / r2;
        }
        return lb.gamma0_bar() * sum;
    }
} // namespace xluaa

#endif
