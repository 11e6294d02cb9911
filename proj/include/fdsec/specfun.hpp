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

#ifndef FDSEC_SPECFUN_H
#define FDSEC_SPECFUN_H

#include "fdsec/errors.hpp"

namespace fdsec
{
    struct SpecFunConfig
    {
        double series_tol = 1e-12; // Relative stopping tolerance of series, continued fractions and node doubling
        int max_terms = 500;       // Upper bound on series terms / fraction depth

        void validate() const;
    };

    // Lower incomplete gamma function gamma(a,x) = int_0^x t^(a-1) e^(-t) dt
    double lower_incomplete_gamma(double a, double x, const SpecFunConfig &cfg = {});

    // Upper incomplete gamma function Gamma(a,x) = int_x^inf t^(a-1) e^(-t) dt
    double upper_incomplete_gamma(double a, double x, const SpecFunConfig &cfg = {});

    // Regularized forms P(a,x) = gamma(a,x)/Gamma(a) and Q(a,x) = Gamma(a,x)/Gamma(a)
    // Each is computed directly (not as 1 - other) in the region where it is small
    double gamma_p(double a, double x, const SpecFunConfig &cfg = {});
    double gamma_q(double a, double x, const SpecFunConfig &cfg = {});

    // Exponential integral E1(x) = int_x^inf e^(-t)/t dt
    double exp_integral_e1(double x, const SpecFunConfig &cfg = {});

    // Scaled exponential integral e^x E1(x) = int_0^inf e^(-x t)/(1+t) dt
    // Finite for all x > 0, decays like 1/x
    double exp_integral_e1_scaled(double x, const SpecFunConfig &cfg = {});

    // Confluent hypergeometric function of the second kind (Tricomi U)
    // U(a,b,z) = 1/Gamma(a) int_0^inf e^(-z t) t^(a-1) (1+t)^(b-a-1) dt
    double hypergeom_u(double a, double b, double z, const SpecFunConfig &cfg = {});

    // z^a U(a,b,z), tends to 1 as z grows; avoids over/underflow of the two factors
    double hypergeom_u_scaled(double a, double b, double z, const SpecFunConfig &cfg = {});

    // Gauss hypergeometric function 2F1(a,b;c;z) for z <= 0
    double hypergeom_2f1(double a, double b, double c, double z, const SpecFunConfig &cfg = {});

    // Beta function B(x,y) = Gamma(x) Gamma(y) / Gamma(x+y)
    double beta_fn(double x, double y);
}

#endif
