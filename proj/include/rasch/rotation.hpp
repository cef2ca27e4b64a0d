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

#ifndef RASCH_ROTATION_HPP
#define RASCH_ROTATION_HPP

#include "modes.hpp"
#include "specfun.hpp"

namespace rasch::swe
{
    // Re-expresses a coefficient vector in the frame reached by the intrinsic
    // rotation sequence: phi about z, theta about the new y, chi about the
    // newest z.  The physical field is unchanged:
    //     T'_{s mu n} = sum_m e^{j m phi} d^n_{mu m}(theta) e^{j mu chi} T_{s m n}.
    // Rotation never mixes polarizations or degrees, and the per-degree
    // blocks are unitary, so sum |T|^2 is preserved.
    inline ModeCoefficients rotate_coefficients_zyz(const ModeCoefficients &coeffs,
                                                    double phi, double theta, double chi)
    {
        ModeCoefficients out(coeffs.N);
        for (int n = 1; n <= coeffs.N; n++)
        {
            for (int s = 1; s <= 2; s++)
            {
                for (int mu = -n; mu <= n; mu++)
                {
                    cdouble acc{};
                    for (int m = -n; m <= n; m++)
                    {
                        const cdouble &t = coeffs.at(ModeIndex{s, m, n});
                        if (t == cdouble{})
                            continue;
                        acc += std::exp(cdouble(0.0, m * phi)) *
                               specfun::wigner_d(n, mu, m, theta) * t;
                    }
                    out.at(ModeIndex{s, mu, n}) = acc * std::exp(cdouble(0.0, mu * chi));
                }
            }
        }
        return out;
    }

    inline ModeCoefficients rotate_coefficients(const ModeCoefficients &coeffs,
                                                double phi, double theta)
    {
        return rotate_coefficients_zyz(coeffs, phi, theta, 0.0);
    }

    // Undoes rotate_coefficients(phi, theta)
    inline ModeCoefficients rotate_coefficients_inverse(const ModeCoefficients &coeffs,
                                                        double phi, double theta)
    {
        return rotate_coefficients_zyz(coeffs, 0.0, -theta, -phi);
    }

} // namespace rasch::swe

#endif
