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

#ifndef FDSEC_NONCOLLUDING_H
#define FDSEC_NONCOLLUDING_H

#include "fdsec/model.hpp"
#include "fdsec/quadrature.hpp"
#include "fdsec/specfun.hpp"

namespace fdsec
{
    // How the per-eavesdropper success probability of the beamforming scheme treats
    // the eavesdropper's thermal noise.
    //   exact                e^{-d_AE^a t / P_T}, t the exact SNR threshold (default)
    //   asymptotic           e^{+d_BE^a / P_J} with t = 1/g, valid only for P_J >> d_BE^a
    //   interference_limited the factor is dropped (noise at the eavesdropper neglected)
    enum class NoiseTerm
    {
        exact,
        asymptotic,
        interference_limited
    };

    struct AnalyticOptions
    {
        QuadConfig quad{1e-8, 1e-13, 4000};
        SpecFunConfig specfun{};
        NoiseTerm noise_term = NoiseTerm::exact;
        int max_average_nodes = 1024;  // Interpolation nodes of the unconditional average
        double average_rel_tol = 1e-6; // Node doubling stops once the average changes less than this
    };

    // Connection probability with the unclamped value kept for diagnostics
    struct ConnectionProbability
    {
        double value = 1.0;    // Clamped to [0,1]
        double raw = 1.0;      // exp(-rho_E * integral) before clamping
        double integral = 0.0; // Spatial integral of the per-eavesdropper success probability
        double error = 0.0;    // Quadrature error estimate of `integral`
    };

    // Per-eavesdropper success probability of antenna selection at polar location (r, theta)
    struct TasIntegrand
    {
        double Y0 = 0.0;
        double m = 0.0;
        double alpha = 2.0;
        double d = 1.0;
        double P_T = 1.0;
    };

    struct TabIntegrand
    {
        double t = 0.0; // SNR threshold seen by the eavesdropper, Z/beta + (1/beta - 1)/(1 - eps)
        double g = 0.0; // beta / Z
        double eps = 0.0;
        int M = 1;
        double m = 0.0;
        double alpha = 2.0;
        double d = 1.0;
        double P_T = 1.0;
        double P_J = 0.0;
        NoiseTerm noise_term = NoiseTerm::exact;
    };

    TasIntegrand make_tas_integrand(double Y, const SystemParams &p);
    TabIntegrand make_tab_integrand(double z, const SystemParams &p, NoiseTerm form = NoiseTerm::exact);

    // exp(-r^a Y0 / P_T) / (1 + m (r/d_BE)^a Y0)
    double psi_integrand(double r, double theta, const TasIntegrand &ip);

    // Beamforming counterpart; the noise factor follows ip.noise_term.
    // Throws DomainError for the asymptotic form at P_J = 0.
    double omega_integrand(double r, double theta, const TabIntegrand &ip);

    // ---- Antenna selection ----

    ConnectionProbability pcon_tas_conditional_detail(double Y, const SystemParams &p,
                                                      const AnalyticOptions &opts = {});
    double pcon_tas_conditional(double Y, const SystemParams &p, const AnalyticOptions &opts = {});

    // Radial-integral form for alpha = 2, R_s = 0, R_g = 0
    double pcon_tas_alpha2_closedform(double Y, const SystemParams &p, const AnalyticOptions &opts = {});

    // Average over the distribution of Y
    double pcon_tas_unconditional(const SystemParams &p, const AnalyticOptions &opts = {});

    // No jamming, large P_T: incomplete-gamma closed form (annulus [R_g, R])
    double pcon_tas_hd(double h_star_sq, const SystemParams &p);

    // lim_{R -> inf} ln(P_con)/rho_E of the form above
    double tas_hd_limit_R_inf(double h_star_sq, const SystemParams &p);

    // P_J -> infinity, alpha = 2, R_s = 0
    double pcon_tas_pj_infinity(double h_star_sq, double g_B_sq, const SystemParams &p,
                                const AnalyticOptions &opts = {});

    // ---- Beamforming with artificial noise ----

    ConnectionProbability pcon_tab_conditional_detail(double z, const SystemParams &p,
                                                      const AnalyticOptions &opts = {});
    double pcon_tab_conditional(double z, const SystemParams &p, const AnalyticOptions &opts = {});

    // Average over the distribution of Z
    double pcon_tab_unconditional(const SystemParams &p, const AnalyticOptions &opts = {});

    // Radial-integral form for alpha = 2, beta = 1, R_g = 0 (noise at the eavesdropper neglected)
    double pcon_tab_alpha2_beta1(double z, const SystemParams &p, const AnalyticOptions &opts = {});

    // P_J -> infinity limit of the form above
    double pcon_tab_pj_infinity(double h_norm_sq, double g_B_sq, const SystemParams &p,
                                const AnalyticOptions &opts = {});

    // No jamming, large P_T: incomplete-gamma closed form (annulus [R_g, R])
    double pcon_tab_hd(double h_norm_sq, const SystemParams &p);
}

#endif
