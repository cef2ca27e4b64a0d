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

#ifndef RASCH_SPECFUN_HPP
#define RASCH_SPECFUN_HPP

#include "math.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace rasch::specfun
{
    // Radial dependence of a spherical wave: regular (j_n), irregular (n_n),
    // outward traveling (j_n + j*n_n) and inward traveling (j_n - j*n_n).
    enum class RadialKind : int
    {
        regular = 1,
        irregular = 2,
        outward = 3,
        inward = 4
    };

    inline constexpr int default_max_degree = 64;

    namespace detail
    {
        inline void check_degree_order(int n, int m)
        {
            if (n < 0 || n > default_max_degree)
                throw std::domain_error("Legendre degree out of range");
            if (m < 0 || m > n)
                throw std::domain_error("Legendre order must satisfy 0 <= m <= n");
        }

        // Limit of Pbar_n^1(cos t)/sin(t) for t -> 0; the same quantity at
        // t -> pi carries an extra factor (-1)^(n+1).
        inline double pole_limit_m1(int n)
        {
            return 0.5 * std::sqrt((2.0 * n + 1.0) * n * (n + 1.0) / 2.0);
        }

        // Recurrence core with the sine supplied by the caller; near the
        // poles sqrt(1 - x^2) loses all precision while sin(theta) does not.
        inline double legendre_norm_xs(int n, int m, double x, double s)
        {
            double pmm = std::sqrt(0.5);
            for (int i = 1; i <= m; i++)
                pmm *= s * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
            if (n == m)
                return pmm;

            double pm1 = std::sqrt(2.0 * m + 3.0) * x * pmm;
            if (n == m + 1)
                return pm1;

            double p2 = pmm, p1 = pm1, p = 0.0;
            for (int l = m + 2; l <= n; l++)
            {
                double alpha = std::sqrt((2.0 * l - 1.0) * (2.0 * l + 1.0) /
                                         (double(l - m) * double(l + m)));
                double beta = std::sqrt((2.0 * l + 1.0) * (l - m - 1.0) * (l + m - 1.0) /
                                        ((2.0 * l - 3.0) * double(l - m) * double(l + m)));
                p = alpha * x * p1 - beta * p2;
                p2 = p1;
                p1 = p;
            }
            return p;
        }
    } // namespace detail

    // Normalized associated Legendre function Pbar_n^m(x), without the
    // Condon-Shortley phase, scaled so that
    //     int_0^pi [Pbar_n^m(cos t)]^2 sin(t) dt = 1.
    // This scaling makes the tangential spherical wave harmonics orthonormal
    // over the full sphere (see swe.hpp).
    inline double legendre_norm(int n, int m, double x)
    {
        detail::check_degree_order(n, m);
        if (!(x >= -1.0 && x <= 1.0))
            throw std::domain_error("Legendre argument must lie in [-1, 1]");
        return detail::legendre_norm_xs(n, m, x, std::sqrt(std::max(0.0, 1.0 - x * x)));
    }

    // d/dtheta of Pbar_n^m(cos theta), via the degree-lowering recurrence
    //   dPbar/dtheta = [n cos(t) Pbar_n^m - e_nm Pbar_{n-1}^m] / sin(t),
    //   e_nm = sqrt((n^2 - m^2)(2n+1)/(2n-1)),
    // with analytic limits on the polar axis.
    inline double legendre_norm_dtheta(int n, int m, double theta)
    {
        detail::check_degree_order(n, m);
        if (!(theta >= 0.0 && theta <= pi))
            throw std::domain_error("theta must lie in [0, pi]");

        double s = std::sin(theta);
        if (s < 1e-12)
        {
            if (m == 1)
            {
                // Pbar_n^1(cos t) ~ L_n sin(t) at t=0 and (-1)^{n+1} L_n sin(t) at t=pi,
                // so the theta-derivative at the south pole is (-1)^n L_n
                double lim = detail::pole_limit_m1(n);
                return (theta < 0.5 * pi) ? lim : (n % 2 ? -lim : lim);
            }
            return 0.0;
        }

        double x = std::cos(theta);
        double pn = detail::legendre_norm_xs(n, m, x, s);
        if (n == 0)
            return 0.0;
        double pnm1 = (m <= n - 1) ? detail::legendre_norm_xs(n - 1, m, x, s) : 0.0;
        double e = std::sqrt((double(n) * n - double(m) * m) * (2.0 * n + 1.0) / (2.0 * n - 1.0));
        return (n * x * pn - e * pnm1) / s;
    }

    // Pbar_n^m(cos theta)/sin(theta) for m >= 1, evaluated pole-safe.
    // The m = 0 variant is rejected: it only ever appears multiplied by m and
    // callers must short-circuit that term to zero.
    inline double legendre_norm_over_sin(int n, int m, double theta)
    {
        detail::check_degree_order(n, m);
        if (m < 1)
            throw std::domain_error("legendre_norm_over_sin requires m >= 1");
        if (!(theta >= 0.0 && theta <= pi))
            throw std::domain_error("theta must lie in [0, pi]");

        double s = std::sin(theta);
        if (s < 1e-12)
        {
            if (m == 1)
            {
                double lim = detail::pole_limit_m1(n);
                return (theta < 0.5 * pi) ? lim : std::pow(-1.0, n + 1) * lim;
            }
            return 0.0;
        }
        return detail::legendre_norm_xs(n, m, std::cos(theta), s) / s;
    }

    namespace detail
    {
        // Spherical Bessel j_n for n = 0..N. Upward recursion in the
        // oscillatory regime; normalized downward (Miller) recursion once the
        // turning point n > x is involved.
        inline void sph_jn_all(int N, double x, std::vector<double> &j)
        {
            j.assign(N + 1, 0.0);
            if (x <= 0.0)
                throw std::domain_error("spherical Bessel argument must be positive");

            double j0 = std::sin(x) / x;
            if (N == 0)
            {
                j[0] = j0;
                return;
            }
            double j1 = std::sin(x) / (x * x) - std::cos(x) / x;

            if (double(N) + 2.0 < x)
            {
                j[0] = j0;
                j[1] = j1;
                for (int n = 1; n < N; n++)
                    j[n + 1] = (2.0 * n + 1.0) / x * j[n] - j[n - 1];
                return;
            }

            int M = N + 30 + int(x + 7.5 * std::cbrt(x));
            double jp = 0.0, jc = 1e-280, jn = 0.0;
            std::vector<double> tmp(N + 1, 0.0);
            for (int n = M; n >= 1; n--)
            {
                jn = (2.0 * n + 1.0) / x * jc - jp;
                jp = jc;
                jc = jn;
                if (n - 1 <= N)
                    tmp[n - 1] = jc;
                if (std::abs(jc) > 1e250)
                { // rescale to avoid overflow
                    double f = 1e-250;
                    jc *= f;
                    jp *= f;
                    for (auto &t : tmp)
                        t *= f;
                }
            }
            // normalize against whichever closed form is better conditioned
            double scale;
            if (std::abs(j0) >= std::abs(j1))
                scale = j0 / tmp[0];
            else
                scale = j1 / tmp[1];
            for (int n = 0; n <= N; n++)
                j[n] = tmp[n] * scale;
        }

        // Spherical Neumann n_n for n = 0..N (upward recursion is stable).
        inline void sph_yn_all(int N, double x, std::vector<double> &y)
        {
            y.assign(N + 1, 0.0);
            if (x <= 0.0)
                throw std::domain_error("spherical Neumann argument must be positive");
            y[0] = -std::cos(x) / x;
            if (N == 0)
                return;
            y[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
            for (int n = 1; n < N; n++)
                y[n + 1] = (2.0 * n + 1.0) / x * y[n] - y[n - 1];
        }
    } // namespace detail

    // Radial functions and the derivative d/dx{x z_n(x)}, tabulated for
    // n = 0..N at fixed argument. Shared by the wave-function evaluators.
    struct RadialTable
    {
        RadialKind kind{RadialKind::regular};
        double x = 0.0;

        RadialTable() = default;

        RadialTable(RadialKind c, int N, double arg) : kind(c), x(arg)
        {
            if (arg <= 0.0)
                throw std::domain_error("radial argument must be positive");
            if (N < 0 || N > default_max_degree)
                throw std::domain_error("radial degree out of range");

            std::vector<double> j, y;
            bool need_j = (c != RadialKind::irregular);
            bool need_y = (c != RadialKind::regular);
            if (need_j)
                detail::sph_jn_all(N, arg, j);
            if (need_y)
                detail::sph_yn_all(N, arg, y);

            zs.assign(N + 1, cdouble{});
            for (int n = 0; n <= N; n++)
            {
                switch (c)
                {
                case RadialKind::regular: zs[n] = j[n]; break;
                case RadialKind::irregular: zs[n] = y[n]; break;
                case RadialKind::outward: zs[n] = cdouble(j[n], y[n]); break;
                case RadialKind::inward: zs[n] = cdouble(j[n], -y[n]); break;
                }
            }

            // z_{-1}: j_{-1} = cos(x)/x, n_{-1} = sin(x)/x
            double jm1 = std::cos(arg) / arg, ym1 = std::sin(arg) / arg;
            switch (c)
            {
            case RadialKind::regular: zm1 = jm1; break;
            case RadialKind::irregular: zm1 = ym1; break;
            case RadialKind::outward: zm1 = cdouble(jm1, ym1); break;
            case RadialKind::inward: zm1 = cdouble(jm1, -ym1); break;
            }
        }

        cdouble z(int n) const { return zs.at(n); }

        // d/dx {x z_n(x)} = x z_{n-1}(x) - n z_n(x)
        cdouble dxz(int n) const
        {
            cdouble prev = (n == 0) ? zm1 : zs.at(n - 1);
            return x * prev - double(n) * zs.at(n);
        }

    private:
        std::vector<cdouble> zs;
        cdouble zm1{};
    };

    // z_n^{(c)}(x)
    inline cdouble radial(RadialKind c, int n, double x)
    {
        return RadialTable(c, n, x).z(n);
    }

    // d/dx {x z_n^{(c)}(x)}
    inline cdouble radial_kr_derivative(RadialKind c, int n, double x)
    {
        return RadialTable(c, n, x).dxz(n);
    }

    // Rotation coefficient d^n_{mu m}(theta) in the convention used by the
    // spherical-wave rotation law
    //     F_smn(frame A) = sum_mu e^{j m phi0} d^n_{mu m}(theta0) F_{s mu n}(frame B),
    // where frame B is reached from frame A by an intrinsic rotation phi0
    // about z followed by theta0 about the new y axis.  This is the transpose
    // of the quantum-mechanics (Edmonds) small-d.  Evaluated through the
    // Jacobi-polynomial three-term recursion, stable for n <= 64.
    inline double wigner_d(int n, int mu, int m, double theta)
    {
        if (n < 0 || n > default_max_degree || std::abs(mu) > n || std::abs(m) > n)
            throw std::domain_error("wigner_d index out of range");

        // transpose: evaluate the Edmonds d^n_{m', m} with m' = m, m = mu
        int mp = m, mm = mu;

        int a = std::abs(mp - mm);
        int b = std::abs(mp + mm);
        int s = n - (a + b) / 2;
        double xi = (mm >= mp) ? 1.0 : ((mp - mm) % 2 ? -1.0 : 1.0);

        double pref = std::exp(0.5 * (std::lgamma(s + 1.0) + std::lgamma(s + a + b + 1.0) -
                                      std::lgamma(s + a + 1.0) - std::lgamma(s + b + 1.0)));

        double ch = std::cos(0.5 * theta);
        double sh = std::sin(0.5 * theta);
        double z = std::cos(theta);

        // Jacobi polynomial P_s^{(a,b)}(z)
        double p;
        if (s == 0)
            p = 1.0;
        else
        {
            double p0 = 1.0;
            double p1 = 0.5 * (a - b) + (1.0 + 0.5 * (a + b)) * z;
            p = p1;
            for (int i = 2; i <= s; i++)
            {
                double c1 = 2.0 * i * (i + a + b) * (2.0 * i + a + b - 2.0);
                double c2 = (2.0 * i + a + b - 1.0) *
                            ((2.0 * i + a + b) * (2.0 * i + a + b - 2.0) * z + double(a) * a - double(b) * b);
                double c3 = 2.0 * (i + a - 1.0) * (i + b - 1.0) * (2.0 * i + a + b);
                p = (c2 * p1 - c3 * p0) / c1;
                p0 = p1;
                p1 = p;
            }
        }

        return xi * pref * std::pow(sh, a) * std::pow(ch, b) * p;
    }

    // All Pbar, dPbar/dtheta and m*Pbar/sin(theta) values for n <= N, m <= n
    // at one angle; the per-point workhorse behind the wave-function basis.
    struct AngularTable
    {
        int N = 0;

        AngularTable() = default;

        AngularTable(int Ndeg, double theta) : N(Ndeg)
        {
            if (Ndeg < 0 || Ndeg > default_max_degree)
                throw std::domain_error("degree out of range");
            if (!(theta >= 0.0 && theta <= pi))
                throw std::domain_error("theta must lie in [0, pi]");
            p_.assign(idx(N, N) + 1, 0.0);
            dp_.assign(p_.size(), 0.0);
            ps_.assign(p_.size(), 0.0);
            for (int m = 0; m <= N; m++)
                for (int n = std::max(1, m); n <= N; n++)
                {
                    p_[idx(n, m)] = legendre_norm(n, m, std::cos(theta));
                    dp_[idx(n, m)] = legendre_norm_dtheta(n, m, theta);
                    ps_[idx(n, m)] = (m == 0) ? 0.0 : legendre_norm_over_sin(n, m, theta);
                }
        }

        double pbar(int n, int m) const { return p_[idx(n, m)]; }
        double dpbar_dtheta(int n, int m) const { return dp_[idx(n, m)]; }
        double pbar_over_sin(int n, int m) const { return ps_[idx(n, m)]; }

    private:
        static std::size_t idx(int n, int m) { return std::size_t(n) * (n + 1) / 2 + m; }
        std::vector<double> p_, dp_, ps_;
    };

} // namespace rasch::specfun

#endif
