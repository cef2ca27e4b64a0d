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

#ifndef RASCH_MODES_HPP
#define RASCH_MODES_HPP

#include "math.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace rasch::swe
{
    // Spherical mode label: polarization s (1 = TE, 2 = TM), azimuthal order
    // m with |m| <= n, degree n >= 1.
    struct ModeIndex
    {
        int s = 1;
        int m = 0;
        int n = 1;

        bool operator==(const ModeIndex &o) const { return s == o.s && m == o.m && n == o.n; }
    };

    inline bool valid_mode(const ModeIndex &mode)
    {
        return (mode.s == 1 || mode.s == 2) && mode.n >= 1 && std::abs(mode.m) <= mode.n;
    }

    // Number of modes with degree up to N
    inline int mode_count(int N)
    {
        if (N < 1)
            throw std::domain_error("truncation degree must be at least 1");
        return 2 * N * (N + 2);
    }

    // Compressed single index j = 2[n(n+1) + m - 1] + s, a bijection onto
    // {1, ..., 2N(N+2)}.  Modes are laid out n-major, then m, then s.
    inline int mode_to_index(const ModeIndex &mode)
    {
        if (!valid_mode(mode))
            throw std::domain_error("invalid (s, m, n) mode");
        return 2 * (mode.n * (mode.n + 1) + mode.m - 1) + mode.s;
    }

    inline ModeIndex index_to_mode(int j, int N)
    {
        if (j < 1 || j > mode_count(N))
            throw std::out_of_range("mode index out of range");
        ModeIndex mode;
        mode.s = (j % 2 == 0) ? 2 : 1;
        int q = (j - mode.s) / 2 + 1; // n(n+1) + m
        mode.n = int(std::sqrt(double(q)));
        while ((mode.n + 1) * (mode.n + 1) <= q)
            mode.n++;
        while (mode.n * mode.n > q)
            mode.n--;
        mode.m = q - mode.n * (mode.n + 1);
        return mode;
    }

    // All modes with degree up to N in compressed-index order
    inline std::vector<ModeIndex> all_modes(int N)
    {
        std::vector<ModeIndex> out;
        out.reserve(mode_count(N));
        for (int n = 1; n <= N; n++)
            for (int m = -n; m <= n; m++)
                for (int s = 1; s <= 2; s++)
                    out.push_back({s, m, n});
        return out;
    }

    // Length-J complex vector indexed by ModeIndex; used for radiation,
    // reception, incident and regular-wave coefficient sets alike.
    struct ModeCoefficients
    {
        int N = 1;
        std::vector<cdouble> values;

        ModeCoefficients() : values(std::size_t(mode_count(1)), cdouble{}) {}

        explicit ModeCoefficients(int Ndeg) : N(Ndeg), values(std::size_t(mode_count(Ndeg)), cdouble{}) {}

        int size() const { return int(values.size()); }

        cdouble &at(int j) { return values.at(std::size_t(j - 1)); }
        const cdouble &at(int j) const { return values.at(std::size_t(j - 1)); }

        cdouble &at(const ModeIndex &mode) { return at(mode_to_index(mode)); }
        const cdouble &at(const ModeIndex &mode) const { return at(mode_to_index(mode)); }

        double power() const
        {
            double p = 0.0;
            for (const auto &v : values)
                p += std::norm(v);
            return p;
        }

        ModeCoefficients scaled(const cdouble &f) const
        {
            ModeCoefficients out(N);
            for (std::size_t i = 0; i < values.size(); i++)
                out.values[i] = values[i] * f;
            return out;
        }
    };

} // namespace rasch::swe

#endif
