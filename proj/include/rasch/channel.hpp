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

#ifndef RASCH_CHANNEL_HPP
#define RASCH_CHANNEL_HPP

#include "antenna.hpp"
#include "geometry.hpp"
#include "math.hpp"
#include "modes.hpp"
#include "specfun.hpp"

#include <cmath>
#include <iostream>
#include <vector>

namespace rasch::channel
{
    using antenna::AntennaModel;
    using swe::ModeCoefficients;

    // Dense complex matrix, row-major
    struct ComplexMatrix
    {
        int rows = 0, cols = 0;
        std::vector<cdouble> data;

        ComplexMatrix() = default;
        ComplexMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, cdouble{}) {}

        cdouble &operator()(int r, int c) { return data[std::size_t(r) * cols + c]; }
        const cdouble &operator()(int r, int c) const { return data[std::size_t(r) * cols + c]; }
    };

    // Links below this electrical distance get a stderr diagnostic: the
    // channel gain is a far-field asymptotic and degrades like 1/(kd).
    inline constexpr double far_field_kd_warning = 20.0;

    namespace detail
    {
        inline void warn_if_near_field(double kd)
        {
            if (kd < far_field_kd_warning)
                std::cerr << "ras-channel: warning: kd = " << kd
                          << " is below the far-field regime (kd >= " << far_field_kd_warning
                          << "); gains are unreliable at this range\n";
        }

        // a(n, nu) = j^{nu - n - 1} sqrt((2n+1)(2nu+1)) / 2
        inline cdouble coupling_scale(int n, int nu)
        {
            return pow_j(nu - n - 1) * std::sqrt((2.0 * n + 1.0) * (2.0 * nu + 1.0)) / 2.0;
        }
    } // namespace detail

    // Mode-coupling matrix G of the far-field link: entry (p, q) couples
    // transmit mode q = (s, m, n) into receive mode p = (sigma, rho, nu),
    //
    //   G_pq = (1/2) a(n,nu) e^{-j rho phi}
    //          sum_mu e^{j mu (phi - alpha)} b^{s,mu,n}_{sigma,rho,nu}(theta)
    //                 d^n_{mu m}(-beta),
    //   b = (-1)^{s+sigma} d^n_{-1,mu}(theta) d^nu_{-1,rho}(theta)
    //       + d^n_{1,mu}(theta) d^nu_{1,rho}(theta).
    //
    // The transmit-normal angles (alpha, beta) enter only through the inner
    // rotation; the displacement angles (phi, theta) only through b and the
    // azimuthal phases.  G is independent of the distance d; under the
    // power-normalized coefficient convention the prefactor is the
    // dimensionless 1/2 and h = (e^{jkd}/kd) r^T G t reproduces the Friis
    // equation for lossless matched antennas.
    inline ComplexMatrix g_matrix(const LinkGeometry &geom, int N_t, int N_r)
    {
        int J_t = swe::mode_count(N_t);
        int J_r = swe::mode_count(N_r);
        ComplexMatrix G(J_r, J_t);

        int n_max = std::max(N_t, N_r);

        // d^n_{+-1, mu}(theta) and d^n_{mu m}(-beta) tables, n-major
        std::vector<std::vector<double>> d_p1(n_max + 1), d_m1(n_max + 1);
        std::vector<std::vector<double>> d_beta(n_max + 1);
        for (int n = 1; n <= n_max; n++)
        {
            d_p1[n].assign(2 * n + 1, 0.0);
            d_m1[n].assign(2 * n + 1, 0.0);
            d_beta[n].assign((2 * n + 1) * (2 * n + 1), 0.0);
            for (int mu = -n; mu <= n; mu++)
            {
                d_p1[n][mu + n] = specfun::wigner_d(n, 1, mu, geom.theta);
                d_m1[n][mu + n] = specfun::wigner_d(n, -1, mu, geom.theta);
                for (int m = -n; m <= n; m++)
                    d_beta[n][(mu + n) * (2 * n + 1) + (m + n)] =
                        specfun::wigner_d(n, mu, m, -geom.beta);
            }
        }

        std::vector<cdouble> e_mu(2 * n_max + 1);
        for (int mu = -n_max; mu <= n_max; mu++)
            e_mu[mu + n_max] = std::exp(cdouble(0.0, mu * (geom.phi - geom.alpha)));

        int p = 0;
        for (int nu = 1; nu <= N_r; nu++)
            for (int rho = -nu; rho <= nu; rho++)
                for (int sigma = 1; sigma <= 2; sigma++, p++)
                {
                    cdouble outer = 0.5 * std::exp(cdouble(0.0, -rho * geom.phi));
                    double dr_m1 = specfun::wigner_d(nu, -1, rho, geom.theta);
                    double dr_p1 = specfun::wigner_d(nu, 1, rho, geom.theta);

                    int q = 0;
                    for (int n = 1; n <= N_t; n++)
                    {
                        cdouble anv = detail::coupling_scale(n, nu);
                        for (int m = -n; m <= n; m++)
                            for (int s = 1; s <= 2; s++, q++)
                            {
                                double par = ((s + sigma) % 2) ? -1.0 : 1.0;
                                cdouble sum{};
                                for (int mu = -n; mu <= n; mu++)
                                {
                                    double b = par * d_m1[n][mu + n] * dr_m1 +
                                               d_p1[n][mu + n] * dr_p1;
                                    if (b == 0.0)
                                        continue;
                                    sum += e_mu[mu + n_max] * b *
                                           d_beta[n][(mu + n) * (2 * n + 1) + (m + n)];
                                }
                                G(p, q) = outer * anv * sum;
                            }
                    }
                }
        return G;
    }

    // Far-field channel gain between one transmit and one receive antenna:
    //     h = (e^{jkd} / (kd)) r^T G t,
    // a dimensionless port-to-port power-wave ratio.  The receive antenna is
    // oriented with the global z axis; the transmit orientation lives in the
    // geometry.
    inline cdouble channel_gain(const AntennaModel &tx, const AntennaModel &rx,
                                const LinkGeometry &geom, const Medium &medium)
    {
        double kd = medium.k * geom.d;
        detail::warn_if_near_field(kd);

        ComplexMatrix G = g_matrix(geom, tx.N, rx.N);
        cdouble acc{};
        for (int p = 0; p < G.rows; p++)
        {
            const cdouble &rp = rx.r.values[std::size_t(p)];
            if (rp == cdouble{})
                continue;
            cdouble row{};
            for (int q = 0; q < G.cols; q++)
                row += G(p, q) * tx.t.values[std::size_t(q)];
            acc += rp * row;
        }
        return std::exp(cdouble(0.0, kd)) / kd * acc;
    }

    // Achievable rate log2(1 + P_t |h|^2 / sigma_n^2) in bit/s/Hz
    inline double achievable_rate(cdouble h, double p_t_watts, double sigma_n2_watts)
    {
        if (sigma_n2_watts <= 0.0)
            throw std::domain_error("noise power must be positive");
        return std::log2(1.0 + p_t_watts * std::norm(h) / sigma_n2_watts);
    }

    struct TxElement
    {
        Vec3 position;
        Vec3 normal{0.0, 0.0, 1.0};
        AntennaModel antenna;
    };

    struct RxElement
    {
        Vec3 position;
        AntennaModel antenna; // oriented with the global z axis
    };

    struct Scenario
    {
        Medium medium;
        std::vector<TxElement> tx;
        std::vector<RxElement> rx;
        double p_t_watts = 0.01;
        double sigma_n2_watts = 1e-5;
    };

    using ChannelMatrix = ComplexMatrix;

    // Channel matrix of the full MIMO link; entry (j, i) is the gain from
    // transmit element i to receive element j.  Element channels are
    // independent (no mutual coupling).
    inline ChannelMatrix mimo_matrix(const Scenario &sc)
    {
        if (sc.tx.empty() || sc.rx.empty())
            throw std::invalid_argument("scenario needs at least one Tx and one Rx element");
        ChannelMatrix H(int(sc.rx.size()), int(sc.tx.size()));
        for (std::size_t j = 0; j < sc.rx.size(); j++)
            for (std::size_t i = 0; i < sc.tx.size(); i++)
            {
                LinkGeometry g = geometry_from_positions(sc.tx[i].position, sc.tx[i].normal,
                                                         sc.rx[j].position);
                H(int(j), int(i)) = channel_gain(sc.tx[i].antenna, sc.rx[j].antenna, g, sc.medium);
            }
        return H;
    }

    struct SweepRow
    {
        double param = 0.0; // swept value (radians for angles, meters for positions)
        cdouble h{};
        double abs_h2 = 0.0;
        double rate = 0.0;
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows;
        double baseline_rate = 0.0;
        double peak_rate = 0.0;
        double improvement = 0.0; // peak_rate/baseline_rate - 1
    };

    namespace detail
    {
        inline SweepRow eval_link(const Scenario &sc, const Vec3 &tx_pos, double alpha,
                                  double beta, double param)
        {
            LinkGeometry g = geometry_from_positions(tx_pos, angles_to_unit(alpha, beta),
                                                     sc.rx[0].position);
            g.alpha = alpha;
            g.beta = beta;
            SweepRow row;
            row.param = param;
            row.h = channel_gain(sc.tx[0].antenna, sc.rx[0].antenna, g, sc.medium);
            row.abs_h2 = std::norm(row.h);
            row.rate = achievable_rate(row.h, sc.p_t_watts, sc.sigma_n2_watts);
            return row;
        }
    } // namespace detail

    // Rate sweep over the transmit elevation at fixed azimuth; the baseline
    // for the reported improvement is the upright antenna (beta = 0),
    // representative of a fixed deployment.
    inline SweepResult sweep_orientation(const Scenario &sc, double alpha_fixed,
                                         const std::vector<double> &beta_grid)
    {
        if (sc.tx.empty() || sc.rx.empty())
            throw std::invalid_argument("scenario needs at least one Tx and one Rx element");
        if (beta_grid.empty())
            throw std::invalid_argument("sweep grid is empty");

        SweepResult out;
        out.rows.reserve(beta_grid.size());
        for (double beta : beta_grid)
            out.rows.push_back(detail::eval_link(sc, sc.tx[0].position, alpha_fixed, beta, beta));

        out.baseline_rate =
            detail::eval_link(sc, sc.tx[0].position, alpha_fixed, 0.0, 0.0).rate;
        out.peak_rate = out.baseline_rate;
        for (const auto &row : out.rows)
            out.peak_rate = std::max(out.peak_rate, row.rate);
        out.improvement = out.peak_rate / out.baseline_rate - 1.0;
        return out;
    }

    enum class Axis
    {
        x,
        y,
        z
    };

    // Rate sweep over the transmit position along one axis, orientation held
    // upright (alpha = beta = 0); improvement is relative to the configured
    // position.
    inline SweepResult sweep_position(const Scenario &sc, Axis axis, double start, double stop,
                                      double step)
    {
        if (sc.tx.empty() || sc.rx.empty())
            throw std::invalid_argument("scenario needs at least one Tx and one Rx element");
        if (step <= 0.0)
            throw std::invalid_argument("step must be positive");
        if (stop < start)
            throw std::invalid_argument("invalid sweep range");

        SweepResult out;
        Vec3 base = sc.tx[0].position;
        for (double u = start; u <= stop + 0.5 * step; u += step)
        {
            Vec3 pos = base;
            switch (axis)
            {
            case Axis::x: pos.x = u; break;
            case Axis::y: pos.y = u; break;
            case Axis::z: pos.z = u; break;
            }
            out.rows.push_back(detail::eval_link(sc, pos, 0.0, 0.0, u));
        }

        out.baseline_rate = detail::eval_link(sc, base, 0.0, 0.0, 0.0).rate;
        out.peak_rate = out.baseline_rate;
        for (const auto &row : out.rows)
            out.peak_rate = std::max(out.peak_rate, row.rate);
        out.improvement = out.peak_rate / out.baseline_rate - 1.0;
        return out;
    }

} // namespace rasch::channel

#endif
