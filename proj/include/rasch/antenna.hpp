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

#ifndef RASCH_ANTENNA_HPP
#define RASCH_ANTENNA_HPP

#include "math.hpp"
#include "modes.hpp"
#include "svwf.hpp"

#include <cmath>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rasch::antenna
{
    using swe::ModeCoefficients;
    using swe::ModeIndex;

    enum class AntennaKind
    {
        hertzian_dipole,
        half_wave_dipole,
        custom
    };

    // Reception coefficients from radiation coefficients by reciprocity:
    //     r_{smn} = (-1)^m t_{s,-m,n}.
    inline ModeCoefficients reception_from_radiation(const ModeCoefficients &t)
    {
        ModeCoefficients r(t.N);
        for (const auto &mode : swe::all_modes(t.N))
        {
            double sign = (mode.m % 2) ? -1.0 : 1.0;
            r.at(mode) = sign * t.at(ModeIndex{mode.s, -mode.m, mode.n});
        }
        return r;
    }

    // An antenna as seen by the channel model: its enclosing-sphere radius a,
    // truncation degree N >= ceil(ka), and its radiation/reception coefficient
    // vectors in the antenna-local frame (local z = antenna normal).
    //
    // Radiation coefficients are power-normalized to sum |t_j|^2 = 1: driven
    // by a unit incident power wave, a lossless matched antenna radiates unit
    // power.  Under this convention the channel gain h is the dimensionless
    // port-to-port power-wave ratio and reproduces the Friis transmission
    // equation in the far field.
    struct AntennaModel
    {
        AntennaKind kind = AntennaKind::custom;
        double a = 0.0; // enclosing radius, meters
        int N = 1;
        ModeCoefficients t;
        ModeCoefficients r;

        static AntennaModel from_radiation(AntennaKind kind, double a, const ModeCoefficients &t)
        {
            AntennaModel m;
            m.kind = kind;
            m.a = a;
            m.N = t.N;
            m.t = t;
            m.r = reception_from_radiation(t);
            return m;
        }
    };

    // z-oriented elementary electric dipole: a pure TM, m=0, n=1 spherical
    // mode.
    inline AntennaModel hertzian_dipole_coefficients(double k)
    {
        if (k <= 0.0)
            throw std::domain_error("wavenumber must be positive");
        ModeCoefficients t(1);
        t.at(ModeIndex{2, 0, 1}) = 1.0;
        return AntennaModel::from_radiation(AntennaKind::hertzian_dipole, 0.05 / k, t);
    }

    // Far-field pattern of a coefficient vector, tangential components only:
    //     (F_theta, F_phi) = sum_j t_j (-j)^{n_j + 2 - s_j} K_j(theta, phi),
    // i.e. the field is t -> (e^{jkr}/kr) * k sqrt(eta) v * F(theta, phi).
    inline void far_field_pattern(const ModeCoefficients &t, double theta, double phi,
                                  cdouble &F_theta, cdouble &F_phi)
    {
        F_theta = F_phi = cdouble{};
        for (const auto &mode : swe::all_modes(t.N))
        {
            const cdouble &w = t.at(mode);
            if (w == cdouble{})
                continue;
            cdouble Kt, Kp;
            swe::svwf_angular(mode, theta, phi, Kt, Kp);
            cdouble ph = pow_minus_j(mode.n + 2 - mode.s);
            F_theta += w * ph * Kt;
            F_phi += w * ph * Kp;
        }
    }

    // Directivity of the pattern toward (theta, phi); with orthonormal K the
    // total radiated power is sum |t|^2.
    inline double directivity(const ModeCoefficients &t, double theta, double phi)
    {
        cdouble Ft, Fp;
        far_field_pattern(t, theta, phi, Ft, Fp);
        return 4.0 * pi * (std::norm(Ft) + std::norm(Fp)) / t.power();
    }

    // Center-fed half-wavelength dipole along the local z axis.  The
    // radiation coefficients are obtained by projecting the analytic pattern
    //     E_theta(theta) ~ cos((pi/2) cos theta) / sin theta
    // onto the far-field limits of the TM, m=0 modes; odd symmetry leaves
    // even degrees, m != 0 and all TE modes at zero.  Default N = 5: the
    // ceil(ka) = 2 rule under-resolves the n=3 lobe content, and the n=5 term
    // (|t5/t1| ~ 1e-3) still moves the synthesized pattern by ~0.1%.
    inline AntennaModel half_wave_dipole_coefficients(double k, int N = 5)
    {
        if (k <= 0.0)
            throw std::domain_error("wavenumber must be positive");
        double lambda = two_pi / k;
        double a = lambda / 4.0;
        N = std::max(N, std::max(3, int(std::ceil(k * a))));

        // p_n = <pattern, K_{2,0,n}> over the sphere
        std::vector<double> x, w;
        gauss_legendre(96, x, w);
        ModeCoefficients t(N);
        for (int n = 1; n <= N; n++)
        {
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); i++)
            {
                double theta = std::acos(std::clamp(x[i], -1.0, 1.0));
                double st = std::sin(theta);
                double f = std::cos(0.5 * pi * x[i]) / st; // pattern, null on axis
                acc += w[i] * f * specfun::legendre_norm_dtheta(n, 0, theta);
            }
            double pn = std::sqrt(two_pi / (n * (n + 1.0))) * acc;
            // traveling-wave phase: the pattern-level coefficients p_n are
            // real, so t_n = j^n p_n up to one global phase
            t.at(ModeIndex{2, 0, n}) = pow_j(n - 1) * pn;
        }
        // fix the global phase so the dominant coefficient is real positive
        if (t.at(ModeIndex{2, 0, 1}).real() < 0.0)
            for (auto &v : t.values)
                v = -v;

        double p = std::sqrt(t.power());
        for (auto &v : t.values)
            v /= p;

        return AntennaModel::from_radiation(AntennaKind::half_wave_dipole, a, t);
    }

    // Coefficient table reader: CSV with header "s,m,n,re,im", one mode per
    // row, truncation declared in a "# N=<int>" comment line.
    inline AntennaModel load_custom_coefficients(std::istream &in, double k,
                                                 bool raw = false)
    {
        int N = 0;
        std::vector<std::array<double, 5>> rows;
        std::string line;
        int lineno = 0;
        bool header_seen = false;
        while (std::getline(in, line))
        {
            lineno++;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                continue;
            if (line[first] == '#')
            {
                auto pos = line.find("N=");
                if (pos != std::string::npos)
                    N = std::atoi(line.c_str() + pos + 2);
                continue;
            }
            if (!header_seen)
            {
                header_seen = true; // "s,m,n,re,im"
                continue;
            }
            std::array<double, 5> vals{};
            std::stringstream ss(line);
            std::string cell;
            for (int c = 0; c < 5; c++)
            {
                if (!std::getline(ss, cell, ','))
                    throw std::runtime_error("line " + std::to_string(lineno) +
                                             ": expected 5 comma-separated fields");
                vals[std::size_t(c)] = std::atof(cell.c_str());
            }
            rows.push_back(vals);
        }
        if (N < 1)
            throw std::runtime_error("missing or invalid '# N=<int>' declaration");

        ModeCoefficients t(N);
        std::set<int> seen;
        for (const auto &row : rows)
        {
            ModeIndex mode{int(row[0]), int(row[1]), int(row[2])};
            if (!swe::valid_mode(mode) || mode.n > N)
                throw std::out_of_range("mode (s=" + std::to_string(mode.s) +
                                        ", m=" + std::to_string(mode.m) +
                                        ", n=" + std::to_string(mode.n) +
                                        ") out of range for declared N");
            int j = swe::mode_to_index(mode);
            if (!seen.insert(j).second)
                throw std::runtime_error("duplicate mode row (j=" + std::to_string(j) + ")");
            t.at(j) = cdouble(row[3], row[4]);
        }

        double p = t.power();
        if (p <= 0.0)
            throw std::runtime_error("coefficient table has zero power");
        if (!raw)
        {
            double s = std::sqrt(p);
            for (auto &v : t.values)
                v /= s;
        }
        return AntennaModel::from_radiation(AntennaKind::custom, N / k, t);
    }

} // namespace rasch::antenna

#endif
