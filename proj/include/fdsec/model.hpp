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

#ifndef FDSEC_MODEL_H
#define FDSEC_MODEL_H

#include "fdsec/errors.hpp"
#include "fdsec/rng.hpp"

#include <complex>
#include <vector>

namespace fdsec
{
    using cplx = std::complex<double>;

    struct DerivedParams
    {
        double beta = 1.0; // 2^R_s
        double m = 0.0;    // P_J / P_T
    };

    // Physical-layer scenario. Powers are linear and relative to unit noise variance,
    // distances are normalized so that Alice sits at the origin and Bob at (d, 0).
    struct SystemParams
    {
        int M = 5;           // Transmit antennas at Alice
        double P_T = 1e4;    // Transmit power
        double P_J = 1e4;    // Jamming power of the full-duplex receiver
        double rho = 0.01;   // Residual self-interference gain
        double eps = 0.01;   // Fraction of P_T spent on artificial noise
        double alpha = 2.0;  // Path-loss exponent
        double R = 5.0;      // Outer radius of the eavesdropper field
        double R_g = 0.0;    // Guard radius around Alice
        double d = 1.0;      // Alice-Bob distance
        double rho_E = 1.0;  // Eavesdropper intensity
        double rho_U = 0.5;  // User intensity (user-selection scenarios)
        double R_s = 0.0;    // Target secrecy rate [b/s/Hz]
        double R_D = 4.0;    // Target data rate [b/s/Hz]

        double beta() const;
        double m() const;
        DerivedParams derived() const;

        // Throws DomainError naming the first offending field
        void validate() const;

        // Non-colluding scenario with full-duplex jamming
        static SystemParams defaults();

        // Colluding scenario: eavesdropper-free disk of radius 0.1 around Alice
        static SystemParams colluding_defaults();

        // User selection: half-duplex users, P_T = 50 dB, beta = 2, eps = 1e-5
        static SystemParams userselect_defaults();
    };

    struct EdPoint
    {
        double r = 0.0;
        double theta = 0.0;
    };

    struct EdField
    {
        std::vector<EdPoint> points;
    };

    // One draw of every small-scale fading variable
    struct ChannelRealization
    {
        std::vector<cplx> h;    // Alice -> Bob, length M
        cplx g_B{0.0, 0.0};     // Self-interference
        std::vector<cplx> h_AE; // Alice -> ED e, stored as M consecutive entries per ED
        std::vector<cplx> h_BE; // Bob -> ED e

        std::size_t ed_count() const { return h_BE.size(); }
        double h_norm_sq() const;
        double h_max_sq() const;
        int best_antenna() const;
        double g_B_sq() const { return std::norm(g_B); }
    };

    struct ConditioningState
    {
        double Y = 0.0;  // TAS SNR at Bob
        double Y0 = 0.0; // Y/beta + 1/beta - 1
        double Z = 0.0;  // TAB SNR at Bob divided by (1 - eps)
        double g = 0.0;  // beta / Z
        double c = 0.0;  // 1 / (g P_T)
    };

    // Y = |h_i*|^2 P_T / (1 + rho P_J |g_B|^2)
    double tas_snr(const SystemParams &p, double h_star_sq, double g_B_sq);

    // Z = ||h||^2 P_T / (1 + rho P_J |g_B|^2)
    double tab_snr_scale(const SystemParams &p, double h_norm_sq, double g_B_sq);

    ConditioningState conditioning(const SystemParams &p, double h_star_sq, double h_norm_sq, double g_B_sq);

    // Standard circularly-symmetric complex Gaussian CN(0,1)
    cplx sample_cn(RngStream &rng);

    // Main channel and self-interference only (no eavesdropper fading)
    ChannelRealization sample_main_channel(int M, RngStream &rng);

    // Poisson field on the annulus [R_g, R]
    EdField sample_ed_field(const SystemParams &p, RngStream &rng);

    // Appends h_AE, h_BE for `count` eavesdroppers to an existing realization
    void sample_ed_fading(ChannelRealization &ch, int M, std::size_t count, RngStream &rng);

    double distance_bob_to_point(double r, double theta, double d);

    // Distribution of the TAS conditioning variable Y
    double cdf_Y(double y, const SystemParams &p);
    double pdf_Y(double y, const SystemParams &p);

    // Distribution of the TAB conditioning variable Z (exact, m > 0)
    double cdf_Z(double z, const SystemParams &p);
    double pdf_Z(double z, const SystemParams &p);

    // Large-z asymptote M w (zw)^(M-1) e^(1/(rho P_J)) / (1+zw)^(M+1), w = rho m.
    // It ignores the constraint |g_B|^2 >= 0 and does not integrate to one.
    double pdf_Z_asymptotic(double z, const SystemParams &p);

    // Z without jamming: P_T ||h||^2 is Gamma(M, P_T)
    double pdf_Z_no_jamming(double z, const SystemParams &p);
    double cdf_Z_no_jamming(double z, const SystemParams &p);

    // Theta = |h_AE^T h*|^2 / (||h_AE||^2 ||h||^2) ~ Beta(1, M-1)
    double sample_theta(int M, RngStream &rng);           // inverse CDF
    double sample_theta_geometric(int M, RngStream &rng); // from Gaussian vectors
    double cdf_theta(double x, int M);

    // Distance to the n-th nearest point of a planar Poisson field with intensity rho_U
    double pdf_dABn(double x, int n, double rho_U);
    double cdf_dABn(double x, int n, double rho_U);

    // Largest AN fraction that keeps the data rate R_D feasible
    double eps_max(const SystemParams &p, double h_norm_sq, double g_B_sq);
}

#endif
