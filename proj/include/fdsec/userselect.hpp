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

#ifndef FDSEC_USERSELECT_H
#define FDSEC_USERSELECT_H

#include "fdsec/model.hpp"
#include "fdsec/noncolluding.hpp"

namespace fdsec
{
    // Beamforming toward the n-th nearest of a Poisson field of half-duplex users.
    // The eavesdropper field is unbounded in these closed forms.
    struct UsParams
    {
        SystemParams sys = SystemParams::userselect_defaults();
        int n = 1; // Order of the served user, 1 = nearest

        // Copies p with the jamming power forced to zero
        static UsParams from(const SystemParams &p, int n);

        // Throws DomainError naming the field (n, rho_U, P_J or a SystemParams field)
        void validate() const;
    };

    // -ln P_con given the user distance, eps > 0.
    // (2 pi rho_E / a) B(M - 2/a, 2/a) (beta d^a)^(2/a) c^(M-2/a) U(M - 2/a, 2 - 2/a, c),
    // c = (M-1) beta d^a / (eps P_T)
    double tabus_exponent(double d_ABn, const UsParams &up, const AnalyticOptions &opts = {});

    // Requires d_ABn > 0 and eps > 0 (DomainError otherwise; use the eps = 0 forms)
    double pcon_tabus_conditional(double d_ABn, const UsParams &up, const AnalyticOptions &opts = {});

    // eps = 0: exp(-(2/a) pi rho_E beta^(2/a) d^2 B(M - 2/a, 2/a))
    double pcon_tabus_eps0_conditional(double d_ABn, const UsParams &up);

    // Average over the n-th nearest distance; eps = 0 uses the closed form
    double sop_tabus(const UsParams &up, const AnalyticOptions &opts = {});

    // (1 + (rho_E/rho_U)(2/a) beta^(2/a) B(M - 2/a, 2/a))^-n
    double pcon_tabus_eps0(const UsParams &up);
    double sop_tabus_eps0_nearest(const UsParams &up);

    // eps = 0 without treating the served user's gain as independent per eavesdropper:
    // E_X[(1 + (rho_E/rho_U) Gamma(1 + 2/a) (beta/X)^(2/a))^-n], X ~ Gamma(M, 1).
    // The closed form above is a Jensen lower bound of this value for n = 1.
    double pcon_tabus_eps0_common_gain(const UsParams &up, const AnalyticOptions &opts = {});
}

#endif
