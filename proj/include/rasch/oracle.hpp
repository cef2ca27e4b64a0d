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

#ifndef RASCH_ORACLE_HPP
#define RASCH_ORACLE_HPP

#include "antenna.hpp"
#include "channel.hpp"
#include "frame.hpp"
#include "projection.hpp"
#include "svwf.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace rasch::oracle
{
    using antenna::AntennaModel;
    using channel::LinkGeometry;
    using channel::Medium;

    // Brute-force received signal: evaluates the physical transmit field
    // around the receiver, with no use of rotation or translation
    // coefficients anywhere in the path.
    //
    //   1. sample the outward transmit field on a sphere of radius r_sample
    //      centered at the receiver (node positions and field vectors pass
    //      through the explicit rigid frame transform);
    //   2. project the samples onto regular waves, coefficients P;
    //   3. the inward-traveling half carries the port response, Q = P / 2,
    //      expressed in the same power-normalized convention as the
    //      radiation coefficients (the synthesis prefactor k sqrt(eta) is
    //      divided back out);
    //   4. accumulate w = sum_j Q_j r_j.
    //
    // Conditioning failures from the projection radius are retried at
    // +-20% before giving up.
    inline cdouble oracle_received_signal(const AntennaModel &tx, const AntennaModel &rx,
                                          const LinkGeometry &geom, const Medium &medium,
                                          cdouble v, double r_sample = 0.0,
                                          int quadrature_order = 0)
    {
        double lambda = medium.wavelength();
        if (r_sample <= 0.0)
            r_sample = std::max(0.5 * lambda, 1.1 * rx.a);
        if (r_sample >= geom.d)
            throw std::domain_error("sampling sphere must not reach the transmitter");

        FrameTransform tx_to_rx = tx_to_rx_frame(geom);
        FrameTransform rx_to_tx = tx_to_rx.inverse();

        auto sampler = [&](const swe::SphericalPoint &p_rx) -> swe::VectorFieldSample {
            Vec3 cart_rx = unit_r(p_rx.theta, p_rx.phi) * p_rx.r;
            Vec3 cart_tx = rx_to_tx.apply_point(cart_rx);

            swe::SphericalPoint p_tx;
            double th, ph;
            p_tx.r = norm(cart_tx);
            cartesian_to_angles(cart_tx, th, ph);
            p_tx.theta = th;
            p_tx.phi = ph;

            swe::VectorFieldSample f_tx = swe::synthesize_field(
                tx.t, specfun::RadialKind::outward, p_tx, medium.k, medium.eta, v, "tx");

            CVec3 E_tx = swe::to_cartesian(f_tx);
            CVec3 E_rx = tx_to_rx.apply_vector(E_tx);
            return swe::from_cartesian(E_rx, p_rx, "rx");
        };

        const double scales[] = {1.0, 1.2, 0.8};
        for (double sc : scales)
        {
            double rs = r_sample * sc;
            if (rs >= geom.d)
                continue;
            try
            {
                swe::ModeCoefficients P = swe::project_field_onto_modes(
                    sampler, rx.N, rs, medium.k, quadrature_order);

                cdouble w{};
                cdouble conv = 0.5 / (medium.k * std::sqrt(medium.eta));
                for (int j = 1; j <= P.size(); j++)
                    w += conv * P.at(j) * rx.r.at(j);
                return w;
            }
            catch (const swe::conditioning_error &)
            {
                continue;
            }
        }
        throw swe::conditioning_error("no usable sampling radius found near r_sample");
    }

    // Normalized mean square error in dB between two equally-shaped complex
    // sets, floored at -300 dB.
    inline double nmse(std::span<const cdouble> reference, std::span<const cdouble> test)
    {
        if (reference.size() != test.size())
            throw std::invalid_argument("nmse requires equally sized inputs");
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < reference.size(); i++)
        {
            num += std::norm(test[i] - reference[i]);
            den += std::norm(reference[i]);
        }
        if (den == 0.0)
            throw std::domain_error("nmse reference is identically zero");
        if (num == 0.0)
            return -300.0;
        return std::max(10.0 * std::log10(num / den), -300.0);
    }

    inline double nmse(const channel::ComplexMatrix &reference, const channel::ComplexMatrix &test)
    {
        if (reference.rows != test.rows || reference.cols != test.cols)
            throw std::invalid_argument("nmse requires equally shaped matrices");
        return nmse(std::span<const cdouble>(reference.data),
                    std::span<const cdouble>(test.data));
    }

} // namespace rasch::oracle

#endif
