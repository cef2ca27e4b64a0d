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

#ifndef RASCH_MATH_HPP
#define RASCH_MATH_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace rasch
{
    using cdouble = std::complex<double>;

    inline constexpr double pi = 3.141592653589793238462643383279502884;
    inline constexpr double two_pi = 2.0 * pi;

    // Free-space wave impedance in Ohm
    inline constexpr double eta0 = 376.730313668;

    inline constexpr cdouble imag_unit{0.0, 1.0};

    // (-j)^k, exact for integer k
    inline cdouble pow_minus_j(long k)
    {
        switch (((k % 4) + 4) % 4)
        {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
        }
    }

    // j^k, exact for integer k
    inline cdouble pow_j(long k) { return pow_minus_j(-k); }

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        Vec3 operator-() const { return {-x, -y, -z}; }
    };

    inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    inline Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
    inline Vec3 normalized(const Vec3 &a)
    {
        double n = norm(a);
        if (n == 0.0)
            throw std::domain_error("cannot normalize a zero vector");
        return a * (1.0 / n);
    }

    // Complex-valued 3-vector (Cartesian field components)
    struct CVec3
    {
        cdouble x{}, y{}, z{};

        CVec3 operator+(const CVec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        CVec3 operator-(const CVec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        CVec3 operator*(const cdouble &s) const { return {x * s, y * s, z * s}; }
    };

    inline double norm(const CVec3 &a)
    {
        return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
    }

    struct Mat3
    {
        // row-major
        std::array<std::array<double, 3>, 3> m{};

        static Mat3 identity()
        {
            Mat3 r;
            r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
            return r;
        }

        Vec3 operator*(const Vec3 &v) const
        {
            return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                    m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                    m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
        }

        CVec3 operator*(const CVec3 &v) const
        {
            return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                    m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                    m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
        }

        Mat3 operator*(const Mat3 &o) const
        {
            Mat3 r;
            for (int i = 0; i < 3; i++)
                for (int j = 0; j < 3; j++)
                {
                    double s = 0.0;
                    for (int k = 0; k < 3; k++)
                        s += m[i][k] * o.m[k][j];
                    r.m[i][j] = s;
                }
            return r;
        }

        Mat3 transposed() const
        {
            Mat3 r;
            for (int i = 0; i < 3; i++)
                for (int j = 0; j < 3; j++)
                    r.m[i][j] = m[j][i];
            return r;
        }
    };

    // Rotation matrices acting on column vectors (right-handed, active)
    inline Mat3 rot_y(double a)
    {
        double c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.m = {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
        return r;
    }

    inline Mat3 rot_z(double a)
    {
        double c = std::cos(a), s = std::sin(a);
        Mat3 r;
        r.m = {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
        return r;
    }

    // Spherical basis vectors at (theta, phi)
    inline Vec3 unit_r(double theta, double phi)
    {
        return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    }
    inline Vec3 unit_theta(double theta, double phi)
    {
        return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta)};
    }
    inline Vec3 unit_phi(double /*theta*/, double phi) { return {-std::sin(phi), std::cos(phi), 0.0}; }

    // Azimuth wrapped to [0, 2*pi); returns 0 by convention on the polar axis
    inline void cartesian_to_angles(const Vec3 &v, double &theta, double &phi)
    {
        double r = norm(v);
        if (r == 0.0)
            throw std::domain_error("direction of the zero vector is undefined");
        double c = v.z / r;
        c = std::clamp(c, -1.0, 1.0);
        theta = std::acos(c);
        if (std::hypot(v.x, v.y) < 1e-14 * r)
        {
            phi = 0.0;
            return;
        }
        phi = std::atan2(v.y, v.x);
        if (phi < 0.0)
            phi += two_pi;
        if (phi >= two_pi)
            phi = 0.0;
    }

    // Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_q
    inline void gauss_legendre(int q, std::vector<double> &x, std::vector<double> &w)
    {
        if (q < 1)
            throw std::invalid_argument("quadrature order must be positive");
        x.assign(q, 0.0);
        w.assign(q, 0.0);
        for (int i = 0; i < (q + 1) / 2; i++)
        {
            double xi = std::cos(pi * (i + 0.75) / (q + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; it++)
            {
                double p0 = 1.0, p1 = xi;
                for (int n = 2; n <= q; n++)
                {
                    double p2 = ((2.0 * n - 1.0) * xi * p1 - (n - 1.0) * p0) / n;
                    p0 = p1;
                    p1 = p2;
                }
                dp = q * (xi * p1 - p0) / (xi * xi - 1.0);
                double delta = p1 / dp;
                xi -= delta;
                if (std::abs(delta) < 1e-15)
                    break;
            }
            x[i] = -xi;
            x[q - 1 - i] = xi;
            double wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
            w[i] = wi;
            w[q - 1 - i] = wi;
        }
        if (q % 2 == 1)
            x[q / 2] = 0.0;
    }

} // namespace rasch

#endif
