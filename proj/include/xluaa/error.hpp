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

#ifndef XLUAA_ERROR_HPP
#define XLUAA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace xluaa
{
    enum class Errc
    {
        invalid_argument,
        // geometry
        non_odd_count,
        alpha_exceeds_pi,
        radius_too_small,
        support_exceeds_semicircle,
        degenerate_support,
        spacing_policy,
        index_out_of_range,
        // channel / snr
        user_inside_arc,
        zero_channel,
        dimension_mismatch,
        single_antenna,
        degenerate_radii,
        support_out_of_range,
        grazing_angle,
        user_behind_arc_middle,
        // numerics
        validity_violation,
        branch_overflow,
        tolerance_not_met,
        no_sign_change,
        iteration_cap,
        bracket_failure,
        // sweeps and I/O
        infeasible_grid_point,
        config_error,
        io_error
    };

    constexpr std::string_view errc_name(Errc code) noexcept
    {
        switch (code)
        {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::non_odd_count: return "NonOddCount";
        case Errc::alpha_exceeds_pi: return "AlphaExceedsPi";
        case Errc::radius_too_small: return "RadiusTooSmall";
        case Errc::support_exceeds_semicircle: return "SupportExceedsSemicircle";
        case Errc::degenerate_support: return "DegenerateSupport";
        case Errc::spacing_policy: return "SpacingPolicy";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::user_inside_arc: return "UserInsideArc";
        case Errc::zero_channel: return "ZeroChannel";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::single_antenna: return "SingleAntenna";
        case Errc::degenerate_radii: return "DegenerateRadii";
        case Errc::support_out_of_range: return "SupportOutOfRange";
        case Errc::grazing_angle: return "GrazingAngle";
        case Errc::user_behind_arc_middle: return "UserBehindArcMiddle";
        case Errc::validity_violation: return "ValidityViolation";
        case Errc::branch_overflow: return "BranchOverflow";
        case Errc::tolerance_not_met: return "ToleranceNotMet";
        case Errc::no_sign_change: return "NoSignChange";
        case Errc::iteration_cap: return "IterationCap";
        case Errc::bracket_failure: return "BracketFailure";
        case Errc::infeasible_grid_point: return "InfeasibleGridPoint";
        case Errc::config_error: return "ConfigError";
        case Errc::io_error: return "IoError";
        }
        return "Unknown";
    }

    /// Exception carrying a machine-readable error code alongside the message.
    class Error : public std::runtime_error
    {
    public:
        Error(Errc code, const std::string &what)
            : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

        Errc code() const noexcept { return code_; }

    private:
        Errc code_;
    };

    namespace detail
    {
        inline void require(bool condition, Errc code, const char *what)
        {
            if (!condition)
                throw Error(code, what);
        }

        inline void require_positive(double value, const char *what)
        {
            // also rejects NaN
            if (!(value > 0.0))
                throw Error(Errc::invalid_argument, std::string(what) + " must be positive");
        }
    } // namespace detail
} // namespace xluaa

#endif
