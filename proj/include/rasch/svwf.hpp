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

#ifndef RASCH_SVWF_HPP
#define RASCH_SVWF_HPP

#include "math.hpp"
#include "modes.hpp"
#include "specfun.hpp"

#include <string>
#include <vector>

namespace rasch::swe
{
    struct SphericalPoint
    {
        double r = 1.0;     // meters, > 0
        double theta = 0.0; // [0, pi]
        double phi = 0.0;   // [0, 2*pi)
    };

    // One complex field sample in spherical components.  The frame tag names
    // the coordinate system the components refer to; values from different
    // frames must never be combined without an explicit Cartesian round-trip.
    struct VectorFieldSample
    {
        SphericalPoint at;
        cdouble E_r{}, E_theta{}, E_phi{};
        std::string frame = "local";
    };

    inline CVec3 to_cartesian(const VectorFieldSample &f)
    {
        Vec3 er = unit_r(f.at.theta, f.at.phi);
        Vec3 et = unit_theta(f.at.theta, f.at.phi);
        Vec3 ep = unit_phi(f.at.theta, f.at.phi);
        return {f.E_r * er.x + f.E_theta * et.x + f.E_phi * ep.x,
                f.E_r * er.y + f.E_theta * et.y + f.E_phi * ep.y,
                f.E_r * er.z + f.E_theta * et.z + f.E_phi * ep.z};
    }

    inline VectorFieldSample from_cartesian(const CVec3 &E, const SphericalPoint &p,
                                            const std::string &frame)
    {
        Vec3 er = unit_r(p.theta, p.phi);
        Vec3 et = unit_theta(p.theta, p.phi);
        Vec3 ep = unit_phi(p.theta, p.phi);
        VectorFieldSample out;
        out.at = p;
        out.frame = frame;
        out.E_r = E.x * er.x + E.y * er.y + E.z * er.z;
        out.E_theta = E.x * et.x + E.y * et.y + E.z * et.z;
        out.E_phi = E.x * ep.x + E.y * ep.y + E.z * ep.z;
        return out;
    }

    namespace detail
    {
        // (-m/|m|)^m, taken as 1 for m = 0
        inline double cs_phase(int m) { return (m > 0 && m % 2) ? -1.0 : 1.0; }

        inline cdouble mode_prefactor(int m, int n, double phi)
        {
            double c = cs_phase(m) / std::sqrt(two_pi * n * (n + 1.0));
            return c * std::exp(cdouble(0.0, m * phi));
        }
    } // namespace detail

    // Tangential angular parts K_smn(theta, phi):
    //   K_1mn = pref * ( j m Pbar/sin ) theta_hat - pref * ( dPbar/dtheta ) phi_hat
    //   K_2mn = pref * ( dPbar/dtheta ) theta_hat + pref * ( j m Pbar/sin ) phi_hat
    // with pref = (-m/|m|)^m e^{j m phi} / sqrt(2 pi n(n+1)).  These are
    // orthonormal over the sphere and give the traveling-wave far fields as
    //   F^(3)_smn -> (e^{jkr}/kr) (-j)^{n+2-s} K_smn.
    inline void svwf_angular(const ModeIndex &mode, double theta, double phi,
                             cdouble &K_theta, cdouble &K_phi)
    {
        if (!valid_mode(mode))
            throw std::domain_error("invalid mode");
        cdouble pref = detail::mode_prefactor(mode.m, mode.n, phi);
        int ma = std::abs(mode.m);
        double dp = specfun::legendre_norm_dtheta(mode.n, ma, theta);
        double ps = (mode.m == 0) ? 0.0
                                  : mode.m * specfun::legendre_norm_over_sin(mode.n, ma, theta);
        cdouble jps = imag_unit * ps;
        if (mode.s == 1)
        {
            K_theta = pref * jps;
            K_phi = -pref * dp;
        }
        else
        {
            K_theta = pref * dp;
            K_phi = pref * jps;
        }
    }

    // Spherical vector wave function F^(c)_smn at a point, wavenumber k.
    // TE (s=1) modes carry no radial component; TM (s=2) modes do.
    inline VectorFieldSample svwf(specfun::RadialKind c, const ModeIndex &mode,
                                  const SphericalPoint &p, double k,
                                  const std::string &frame = "local")
    {
        if (!valid_mode(mode))
            throw std::domain_error("invalid mode");
        if (p.r <= 0.0)
            throw std::domain_error("radius must be positive");

        double kr = k * p.r;
        specfun::RadialTable rad(c, mode.n, kr);
        specfun::AngularTable ang(mode.n, p.theta);

        VectorFieldSample out;
        out.at = p;
        out.frame = frame;

        cdouble pref = detail::mode_prefactor(mode.m, mode.n, p.phi);
        int ma = std::abs(mode.m);
        double dp = ang.dpbar_dtheta(mode.n, ma);
        double ps = (mode.m == 0) ? 0.0 : mode.m * ang.pbar_over_sin(mode.n, ma);
        cdouble jps = imag_unit * ps;

        if (mode.s == 1)
        {
            cdouble z = rad.z(mode.n);
            out.E_r = 0.0;
            out.E_theta = pref * z * jps;
            out.E_phi = -pref * z * dp;
        }
        else
        {
            cdouble z = rad.z(mode.n);
            cdouble dz = rad.dxz(mode.n) / kr;
            out.E_r = pref * (mode.n * (mode.n + 1.0) / kr) * z * ang.pbar(mode.n, ma);
            out.E_theta = pref * dz * dp;
            out.E_phi = pref * dz * jps;
        }
        return out;
    }

    // All J = 2N(N+2) wave functions at one point, sharing the Legendre and
    // Bessel tables; returned in compressed-index order as (E_r, E_theta,
    // E_phi) triplets.
    inline void svwf_basis(specfun::RadialKind c, int N, const SphericalPoint &p, double k,
                           std::vector<cdouble> &E_r, std::vector<cdouble> &E_theta,
                           std::vector<cdouble> &E_phi)
    {
        if (p.r <= 0.0)
            throw std::domain_error("radius must be positive");
        double kr = k * p.r;
        specfun::RadialTable rad(c, N, kr);
        specfun::AngularTable ang(N, p.theta);

        int J = mode_count(N);
        E_r.assign(J, cdouble{});
        E_theta.assign(J, cdouble{});
        E_phi.assign(J, cdouble{});

        int j = 0;
        for (int n = 1; n <= N; n++)
        {
            cdouble z = rad.z(n);
            cdouble dz = rad.dxz(n) / kr;
            double rfac = n * (n + 1.0) / kr;
            for (int m = -n; m <= n; m++)
            {
                cdouble pref = detail::mode_prefactor(m, n, p.phi);
                int ma = std::abs(m);
                double dp = ang.dpbar_dtheta(n, ma);
                double ps = (m == 0) ? 0.0 : m * ang.pbar_over_sin(n, ma);
                cdouble jps = imag_unit * ps;

                // s = 1
                E_theta[j] = pref * z * jps;
                E_phi[j] = -pref * z * dp;
                j++;
                // s = 2
                E_r[j] = pref * rfac * z * ang.pbar(n, ma);
                E_theta[j] = pref * dz * dp;
                E_phi[j] = pref * dz * jps;
                j++;
            }
        }
    }

    // Radiated/scattered field synthesized from a coefficient vector:
    //     E(p) = k sqrt(eta) v * sum_j coeffs_j F^(c)_j(p).
    // The k*sqrt(eta) prefactor makes the coefficients power-normalized: a
    // lossless antenna with sum |t_j|^2 = 1 driven by the unit power wave
    // v = 1 radiates unit power.
    inline VectorFieldSample synthesize_field(const ModeCoefficients &coeffs,
                                              specfun::RadialKind c, const SphericalPoint &p,
                                              double k, double eta, cdouble v,
                                              const std::string &frame = "local")
    {
        std::vector<cdouble> Er, Et, Ep;
        svwf_basis(c, coeffs.N, p, k, Er, Et, Ep);
        cdouble pre = k * std::sqrt(eta) * v;
        VectorFieldSample out;
        out.at = p;
        out.frame = frame;
        for (int j = 0; j < coeffs.size(); j++)
        {
            const cdouble &w = coeffs.values[std::size_t(j)];
            if (w == cdouble{})
                continue;
            out.E_r += w * Er[std::size_t(j)];
            out.E_theta += w * Et[std::size_t(j)];
            out.E_phi += w * Ep[std::size_t(j)];
        }
        out.E_r *= pre;
        out.E_theta *= pre;
        out.E_phi *= pre;
        return out;
    }

} // namespace rasch::swe

#endif
