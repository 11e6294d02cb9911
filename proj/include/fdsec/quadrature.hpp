// SPDX-License-Identifier: Apache-2.0
//
// fdsecrecy - secrecy outage analysis for jammed multi-antenna downlinks
// Copyright (C) 2026 The fdsecrecy authors
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

#ifndef FDSEC_QUADRATURE_H
#define FDSEC_QUADRATURE_H

#include "fdsec/errors.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fdsec
{
    struct QuadConfig
    {
        double rel_tol = 1e-6;
        double abs_tol = 1e-10;
        int max_subdivisions = 2000;

        void validate() const;
    };

    struct QuadResult
    {
        double value = 0.0;
        double error = 0.0;    // Estimated absolute error
        long evaluations = 0;  // Integrand calls, including nested ones for polar
        int subdivisions = 0;  // Segments used by the outermost integral
    };

    struct QuadVecResult
    {
        std::vector<double> value;
        std::vector<double> error;
        long evaluations = 0;
        int subdivisions = 0;
    };

    using Integrand1D = std::function<double(double)>;
    using IntegrandPolar = std::function<double(double r, double theta)>;

    // Vector-valued integrands fill `out` (size = dim); all components share one adaptive mesh,
    // so smooth parameter dependence across components is preserved in the quadrature error
    using VecIntegrand1D = std::function<void(double x, std::span<double> out)>;
    using VecIntegrandPolar = std::function<void(double r, double theta, std::span<double> out)>;

    struct PolarOptions
    {
        bool theta_symmetric = false;           // f(r,theta) = f(r,2pi-theta): integrate [0,pi] and double
        std::vector<double> radial_breakpoints; // Interior radii where the integrand has sharp features
    };

    // Adaptive Gauss-Kronrod (7/15) on [lo, hi]; throws ConvergenceError when max_subdivisions is reached
    QuadResult integrate_1d(const Integrand1D &f, double lo, double hi, const QuadConfig &cfg = {},
                            std::span<const double> breakpoints = {});

    // int_lo^inf f(x) dx via x = lo - scale*ln(u), u in (0,1]
    // `scale` should be of the order of the integrand's decay length
    QuadResult integrate_semi_infinite(const Integrand1D &f, double lo, const QuadConfig &cfg = {},
                                       double scale = 1.0);

    // int_{r_lo}^{r_hi} int_0^{2pi} f(r,theta) r dtheta dr; the Jacobian r is applied here
    QuadResult integrate_polar(const IntegrandPolar &f, double r_lo, double r_hi, const QuadConfig &cfg = {},
                               const PolarOptions &opts = {});

    QuadVecResult integrate_1d_vec(const VecIntegrand1D &f, std::size_t dim, double lo, double hi,
                                   const QuadConfig &cfg = {}, std::span<const double> breakpoints = {});

    QuadVecResult integrate_semi_infinite_vec(const VecIntegrand1D &f, std::size_t dim, double lo,
                                              const QuadConfig &cfg = {}, double scale = 1.0);

    QuadVecResult integrate_polar_vec(const VecIntegrandPolar &f, std::size_t dim, double r_lo, double r_hi,
                                      const QuadConfig &cfg = {}, const PolarOptions &opts = {});
}

#endif
