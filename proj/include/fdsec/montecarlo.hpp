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

#ifndef FDSEC_MONTECARLO_H
#define FDSEC_MONTECARLO_H

#include "fdsec/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdsec
{
    enum class Scheme
    {
        TAS,
        TAB,
        TAB_US,
        TAS_US
    };

    enum class Conditioning
    {
        fixed, // one main channel (h, g_B) for every trial
        redraw // fresh main channel per trial
    };

    const char *to_string(Scheme s);
    Scheme scheme_from_string(const std::string &name); // throws DomainError

    struct MainChannel
    {
        std::vector<cplx> h;
        cplx g_B{1.0, 0.0};
    };

    struct SimSpec
    {
        Scheme scheme = Scheme::TAB;
        bool colluding = false;
        Conditioning conditioning = Conditioning::fixed;
        std::int64_t trials = 100000;
        std::uint64_t seed = 1;
        bool eve_noise = true; // false drops the unit noise at the eavesdroppers
        int user_order = 1;    // n for the user-selection schemes
        int threads = 1;       // 0 = one per hardware thread
        std::optional<MainChannel> channel; // fixed mode; derived from the seed when empty

        void validate() const;
    };

    struct SopEstimate
    {
        double p_hat = 0.0;
        double std_err = 0.0;
        std::int64_t trials = 0;
        std::int64_t outage_count = 0;
        std::int64_t discarded = 0; // user fields with fewer than n users, redrawn
    };

    SopEstimate make_estimate(std::int64_t outages, std::int64_t trials, std::int64_t discarded = 0);

    // Everything random in one trial. For the single-user schemes d_AB = params.d;
    // for user selection it is the distance to the served user.
    struct TrialRealization
    {
        ChannelRealization ch;
        EdField field;
        double d_AB = 1.0;
    };

    // Main channel used in fixed-conditioning mode
    MainChannel fixed_main_channel(const SimSpec &spec, int M);

    // Draws trial `trial` exactly as the estimators do
    TrialRealization draw_trial(const SimSpec &spec, const SystemParams &p, std::int64_t trial,
                                std::int64_t *discarded = nullptr);

    double snr_bob(const SimSpec &spec, const SystemParams &p, const TrialRealization &t);

    // Per-eavesdropper SNRs, in field order
    std::vector<double> snr_eves(const SimSpec &spec, const SystemParams &p, const TrialRealization &t);

    // [log2(1 + SNR_B) - log2(1 + F)]^+, F the max or sum of the eavesdropper SNRs
    double trial_secrecy_rate(const SimSpec &spec, const SystemParams &p, const TrialRealization &t);

    SopEstimate estimate_sop(const SimSpec &spec, const SystemParams &p);

    // Several schemes / parameter points evaluated on the same realizations.
    // Every spec must share trials, seed, conditioning, channel and user order, and every
    // parameter set must share the sampling parameters M, rho_E, rho_U, R and R_g.
    // The results are identical to separate estimate_sop calls.
    std::vector<SopEstimate> estimate_sop_batch(const std::vector<SimSpec> &specs,
                                                const std::vector<SystemParams> &params);

    // Requires a user-selection scheme; the user field shares the eavesdropper disk
    SopEstimate estimate_sop_userselect(const SimSpec &spec, const SystemParams &p, int n);
}

#endif
