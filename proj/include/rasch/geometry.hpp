// SPDX-License-Identifier: Apache-2.0
//
// ras-channel: EM channel modelling for reconfigurable antenna systems,
// built on spherical vector wave expansions
// Copyright (C) 2026 the ras-channel developers
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

#ifndef RASCH_GEOMETRY_HPP
#define RASCH_GEOMETRY_HPP

#include "math.hpp"

#include <stdexcept>

namespace rasch::channel
{
    struct Medium
    {
        double k = two_pi / 0.1; // wavenumber, rad/m
        double eta = eta0;       // wave impedance, Ohm

        static Medium free_space(double wavelength)
        {
            if (wavelength <= 0.0)
                throw std::domain_error("wavelength must be positive");
            return Medium{two_pi / wavelength, eta0};
        }

        double wavelength() const { return two_pi / k; }
    };

    // One transmit-receive link, reduced to the five scalars the channel
    // model needs: the transmit-normal angles (alpha, beta), the displacement
    // angles (phi, theta) and the distance d.  All angles are global-frame
    // spherical angles (azimuth in [0, 2pi), polar from +z in [0, pi]).
    struct LinkGeometry
    {
        double alpha = 0.0;
        double beta = 0.0;
        double phi = 0.0;
        double theta = 0.0;
        double d = 1.0;
    };

    inline LinkGeometry geometry_from_positions(const Vec3 &tx_pos, const Vec3 &tx_normal,
                                                const Vec3 &rx_pos)
    {
        Vec3 disp = rx_pos - tx_pos;
        double d = norm(disp);
        if (d == 0.0)
            throw std::domain_error("transmit and receive positions coincide");
        double nn = norm(tx_normal);
        if (std::abs(nn - 1.0) > 1e-6)
            throw std::domain_error("transmit normal must be a unit vector");

        LinkGeometry g;
        g.d = d;
        cartesian_to_angles(disp, g.theta, g.phi);
        cartesian_to_angles(tx_normal * (1.0 / nn), g.beta, g.alpha);
        return g;
    }

    // Reverse map of the angle extraction (unit vector at azimuth/polar)
    inline Vec3 angles_to_unit(double azimuth, double polar)
    {
        return unit_r(polar, azimuth);
    }

} // namespace rasch::channel

#endif
