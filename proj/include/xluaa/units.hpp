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

#ifndef XLUAA_UNITS_HPP
#define XLUAA_UNITS_HPP

#include <cmath>
#include <numbers>

namespace xluaa
{
    inline constexpr double pi = std::numbers::pi;
    // Nominal propagation speed used to turn a carrier frequency into a
    // wavelength. 3e8 m/s keeps 30 GHz at exactly lambda = 1 cm.
    inline constexpr double nominal_speed_of_light = 3.0e8; // m/s

    inline double to_db(double linear) { return 10.0 * std::log10(linear); }
    inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

    constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

    inline double wavelength_from_frequency(double hz) { return nominal_speed_of_light / hz; }
} // namespace xluaa

#endif
