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

#ifndef FDSEC_COLLUDING_H
#define FDSEC_COLLUDING_H

#include "fdsec/model.hpp"
#include "fdsec/noncolluding.hpp"

#include <vector>

namespace fdsec
{
    // P[X > 1] ~ sum_n C(N,n) (-1)^n E[exp(-a n X)], a = N / (N!)^(1/N)
    struct GammaApproxConfig
    {
        int N = 20;
        double a() const;
        void validate() const;
    };

    // Per-eavesdropper deficit 1 - E[exp(-s SNR_e)] for a jammed eavesdropper at (r, theta)
    struct XiParams
    {
        double s = 0.0;
        double m = 0.0; // P_J / P_T
        double alpha = 2.0;
        double d = 1.0;
        double P_T = 1.0;
        double P_J = 0.0;
    };

    XiParams make_xi_params(double s, const SystemParams &p);

    // (s/f_e) e^K E1(K), K = (s + d_AE^a / P_T) / f_e, f_e = m (d_AE/d_BE)^a.
    // Requires P_J > 0 and s >= 0.
    double xi_integrand(double r, double theta, const XiParams &xp);

    struct SeriesResult
    {
        double value = 0.0;      // Clamped to [0,1]
        double raw = 0.0;        // Alternating sum before clamping
        double max_partial = 0.0; // Largest |partial sum| seen
        bool cancellation = false; // Partial sums exceeded 1e6 x |raw|; the sum was redone in extended precision
        std::vector<double> laplace; // L(s_n), n = 0..N
    };

    // Laplace transforms of the aggregate eavesdropper SNR
    double laplace_Ie_tas(double s, const SystemParams &p, const AnalyticOptions &opts = {});
    double laplace_Ie_hd(double s, const SystemParams &p);
    double laplace_Ie_tab_an(double s, const SystemParams &p, const AnalyticOptions &opts = {});

    // Same transforms at several arguments, evaluated on one shared quadrature mesh
    std::vector<double> laplace_Ie_tas(const std::vector<double> &s, const SystemParams &p,
                                       const AnalyticOptions &opts = {});
    std::vector<double> laplace_Ie_tab_an(const std::vector<double> &s, const SystemParams &p,
                                          const AnalyticOptions &opts = {});

    // sum_n C(N,n) (-1)^n L_n with compensated summation
    SeriesResult gamma_series(const std::vector<double> &laplace);

    // Conditional SOP approximations against colluding eavesdroppers.
    // y0 = Y/beta + 1/beta - 1 for antenna selection; z the beamforming SNR scale.
    // A nonpositive threshold means secrecy is impossible and the bound is 1.
    SeriesResult sop_tas_colluding_detail(double y0, const SystemParams &p, const GammaApproxConfig &cfg = {},
                                          const AnalyticOptions &opts = {});
    double sop_tas_colluding(double y0, const SystemParams &p, const GammaApproxConfig &cfg = {},
                             const AnalyticOptions &opts = {});
    double sop_tas_colluding_hd(double y0, const SystemParams &p, const GammaApproxConfig &cfg = {});

    SeriesResult sop_tab_colluding_eps0_detail(double z, const SystemParams &p, const GammaApproxConfig &cfg = {},
                                               const AnalyticOptions &opts = {});
    double sop_tab_colluding_eps0(double z, const SystemParams &p, const GammaApproxConfig &cfg = {},
                                  const AnalyticOptions &opts = {});
    double sop_tab_colluding_hd(double z, const SystemParams &p, const GammaApproxConfig &cfg = {});

    // Artificial noise on, noise at the eavesdroppers neglected
    SeriesResult sop_tab_colluding_an_detail(double z, const SystemParams &p, const GammaApproxConfig &cfg = {},
                                             const AnalyticOptions &opts = {});
    double sop_tab_colluding_an(double z, const SystemParams &p, const GammaApproxConfig &cfg = {},
                                const AnalyticOptions &opts = {});
}

#endif
