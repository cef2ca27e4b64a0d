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

#ifndef RASCH_PROJECTION_HPP
#define RASCH_PROJECTION_HPP

#include "math.hpp"
#include "svwf.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace rasch::swe
{
    // Raised when a sampling radius sits too close to a zero of the regular
    // radial functions; callers should retry with a different radius.
    struct conditioning_error : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // Product rule on the sphere: Gauss-Legendre in cos(theta), uniform in
    // phi.  Exact for the trigonometric-polynomial integrands of degree
    // <= 2N met by the mode projections below.
    struct SphereQuadrature
    {
        std::vector<double> theta, w_theta; // GL nodes mapped to angles
        int n_phi = 0;

        SphereQuadrature(int theta_order, int phi_points) : n_phi(phi_points)
        {
            std::vector<double> x, w;
            gauss_legendre(theta_order, x, w);
            theta.resize(x.size());
            w_theta = w;
            for (std::size_t i = 0; i < x.size(); i++)
                theta[i] = std::acos(std::clamp(x[i], -1.0, 1.0));
        }

        double phi(int kphi) const { return two_pi * kphi / n_phi; }
        double w_phi() const { return two_pi / n_phi; }
    };

    using FieldSampler = std::function<VectorFieldSample(const SphericalPoint &)>;

    // Regular-wave (c=1) expansion coefficients of a source-free field,
    // recovered from its tangential components on the sphere r = r_sample.
    // Orthonormality of the K_smn makes the angular solve diagonal; the
    // remaining radial weights j_n / (x j_n)'/x are divided out per mode and
    // guarded against their zeros.
    inline ModeCoefficients project_field_onto_modes(const FieldSampler &sampler, int N,
                                                     double r_sample, double k,
                                                     int quadrature_order = 0)
    {
        if (r_sample <= 0.0)
            throw std::domain_error("sampling radius must be positive");
        double x = k * r_sample;

        int q = quadrature_order > 0 ? quadrature_order
                                     : std::max(2 * N + 2, int(x) + 16);
        int n_phi = std::max(4 * N + 4, 2 * q);
        SphereQuadrature quad(q, n_phi);

        int J = mode_count(N);
        std::vector<cdouble> acc(J, cdouble{});

        for (std::size_t it = 0; it < quad.theta.size(); it++)
        {
            double th = quad.theta[it];
            specfun::AngularTable ang(N, th);
            for (int kphi = 0; kphi < quad.n_phi; kphi++)
            {
                double ph = quad.phi(kphi);
                SphericalPoint p{r_sample, th, ph};
                VectorFieldSample f = sampler(p);

                double wgt = quad.w_theta[it] * quad.w_phi();

                int j = 0;
                for (int n = 1; n <= N; n++)
                {
                    for (int m = -n; m <= n; m++)
                    {
                        cdouble pref = detail::mode_prefactor(m, n, ph);
                        int ma = std::abs(m);
                        double dp = ang.dpbar_dtheta(n, ma);
                        double ps = (m == 0) ? 0.0 : m * ang.pbar_over_sin(n, ma);
                        cdouble jps = imag_unit * ps;
                        // conj(K) against the sample, accumulated per mode
                        cdouble K1t = pref * jps, K1p = -pref * dp;
                        cdouble K2t = pref * dp, K2p = pref * jps;
                        acc[std::size_t(j)] += wgt * (f.E_theta * std::conj(K1t) +
                                                      f.E_phi * std::conj(K1p));
                        j++;
                        acc[std::size_t(j)] += wgt * (f.E_theta * std::conj(K2t) +
                                                      f.E_phi * std::conj(K2p));
                        j++;
                    }
                }
            }
        }

        specfun::RadialTable rad(specfun::RadialKind::regular, N, x);
        ModeCoefficients out(N);
        int j = 0;
        for (int n = 1; n <= N; n++)
        {
            cdouble z1 = rad.z(n);
            cdouble z2 = rad.dxz(n) / x;
            for (int m = -n; m <= n; m++)
            {
                if (std::abs(z1) < 1e-4 || std::abs(z2) < 1e-4)
                    throw conditioning_error(
                        "sampling radius too close to a radial-function zero; retry with a "
                        "different r_sample");
                out.values[std::size_t(j)] = acc[std::size_t(j)] / z1;
                j++;
                out.values[std::size_t(j)] = acc[std::size_t(j)] / z2;
                j++;
            }
        }
        return out;
    }

} // namespace rasch::swe

#endif
