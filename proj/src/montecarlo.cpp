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

#include "fdsec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace fdsec
{
    namespace
    {
        // Variable tags of the counter-based streams
        constexpr std::uint32_t kTagMain = 1;
        constexpr std::uint32_t kTagField = 2;
        constexpr std::uint32_t kTagFading = 3;
        constexpr std::uint32_t kTagUsers = 16; // + attempt
        constexpr std::uint64_t kFixedStream = std::numeric_limits<std::uint64_t>::max();
        constexpr int kMaxUserAttempts = 10000;

        bool is_userselect(Scheme s)
        {
            return s == Scheme::TAB_US || s == Scheme::TAS_US;
        }

        bool is_tab(Scheme s)
        {
            return s == Scheme::TAB || s == Scheme::TAB_US;
        }

        // Fading statistics of one eavesdropper that do not depend on powers or path loss
        struct EveStats
        {
            double r2;   // d_AE^2
            double dbe2; // d_BE^2
            double x1;   // ||h_AE||^2
            double proj; // |h_AE^T h*|^2 / ||h||^2
            double xs;   // |h_AE,i*|^2
            double x2;   // |h_BE|^2
        };

        void eve_stats(const TrialRealization &t, double d_bob, std::vector<EveStats> &out)
        {
            const auto &ch = t.ch;
            const int M = static_cast<int>(ch.h.size());
            const int best = ch.best_antenna();
            const double hn = ch.h_norm_sq();
            out.resize(t.field.points.size());
            for (std::size_t e = 0; e < out.size(); ++e)
            {
                const auto &pt = t.field.points[e];
                const cplx *a = &ch.h_AE[e * M];
                cplx inner{0.0, 0.0};
                double x1 = 0.0;
                for (int i = 0; i < M; ++i)
                {
                    inner += a[i] * std::conj(ch.h[i]);
                    x1 += std::norm(a[i]);
                }
                const double dbe = distance_bob_to_point(pt.r, pt.theta, d_bob);
                out[e] = {pt.r * pt.r, dbe * dbe, x1, std::norm(inner) / hn, std::norm(a[best]), std::norm(ch.h_BE[e])};
            }
        }

        inline double path_gain(double dist2, double alpha)
        {
            return alpha == 2.0 ? 1.0 / dist2 : std::pow(dist2, -0.5 * alpha);
        }

        double bob_snr(Scheme s, const SystemParams &p, const ChannelRealization &ch, double d_AB)
        {
            const double jam = is_userselect(s) ? 0.0 : p.rho * ch.g_B_sq() * p.P_J;
            const double gain = is_tab(s) ? (1.0 - p.eps) * ch.h_norm_sq() : ch.h_max_sq();
            double snr = gain * p.P_T / (1.0 + jam);
            if (is_userselect(s))
                snr *= path_gain(d_AB * d_AB, p.alpha);
            return snr;
        }

        inline double eve_snr(Scheme s, const SystemParams &p, bool eve_noise, const EveStats &e)
        {
            const double a = path_gain(e.r2, p.alpha);
            const double noise = eve_noise ? 1.0 : 0.0;
            double jam = 0.0;
            if (!is_userselect(s) && p.P_J > 0.0)
                jam = e.dbe2 > 0.0 ? p.P_J * e.x2 * path_gain(e.dbe2, p.alpha) : INFINITY;
            double num, den;
            if (is_tab(s))
            {
                num = a * (1.0 - p.eps) * e.proj * p.P_T;
                den = noise + jam + a * p.eps * p.P_T / (p.M - 1 > 0 ? p.M - 1 : 1) * std::max(e.x1 - e.proj, 0.0);
            }
            else
            {
                num = a * e.xs * p.P_T;
                den = noise + jam;
            }
            if (std::isinf(den))
                return 0.0;
            if (den > 0.0)
                return num / den;
            return num > 0.0 ? INFINITY : 0.0;
        }

        double secrecy_rate(double snr_b, double f)
        {
            return std::max(0.0, std::log2(1.0 + snr_b) - std::log2(1.0 + f));
        }

        bool point_outage(const SimSpec &spec, const SystemParams &p, const ChannelRealization &ch, double d_AB,
                          const std::vector<EveStats> &eves)
        {
            double f = 0.0;
            for (const auto &e : eves)
            {
                const double v = eve_snr(spec.scheme, p, spec.eve_noise, e);
                f = spec.colluding ? f + v : std::max(f, v);
            }
            return secrecy_rate(bob_snr(spec.scheme, p, ch, d_AB), f) <= p.R_s;
        }

        double nth_user_distance(const SimSpec &spec, const SystemParams &p, std::int64_t trial, int n,
                                 std::int64_t *discarded)
        {
            const double mean = p.rho_U * std::numbers::pi * p.R * p.R;
            std::vector<double> r2;
            for (int attempt = 0; attempt < kMaxUserAttempts; ++attempt)
            {
                RngStream rng(spec.seed, static_cast<std::uint64_t>(trial), kTagUsers + attempt);
                std::poisson_distribution<long> count(mean);
                const long k = mean > 0.0 ? count(rng) : 0;
                if (k >= n)
                {
                    r2.resize(static_cast<std::size_t>(k));
                    for (auto &v : r2)
                        v = rng.uniform() * p.R * p.R;
                    std::nth_element(r2.begin(), r2.begin() + (n - 1), r2.end());
                    return std::sqrt(r2[n - 1]);
                }
                if (discarded)
                    ++*discarded;
            }
            throw ConvergenceError("user field never held enough users; increase rho_U or R", 0.0);
        }

        SystemParams effective_params(const SimSpec &spec, const SystemParams &p)
        {
            SystemParams q = p;
            if (is_userselect(spec.scheme))
                q.P_J = 0.0;
            return q;
        }

        bool same_channel(const std::optional<MainChannel> &a, const std::optional<MainChannel> &b)
        {
            if (a.has_value() != b.has_value())
                return false;
            return !a || (a->h == b->h && a->g_B == b->g_B);
        }
    }

    const char *to_string(Scheme s)
    {
        switch (s)
        {
        case Scheme::TAS:
            return "TAS";
        case Scheme::TAB:
            return "TAB";
        case Scheme::TAB_US:
            return "TAB-US";
        case Scheme::TAS_US:
            return "TAS-US";
        }
        return "?";
    }

    Scheme scheme_from_string(const std::string &name)
    {
        for (Scheme s : {Scheme::TAS, Scheme::TAB, Scheme::TAB_US, Scheme::TAS_US})
            if (name == to_string(s))
                return s;
        throw DomainError("unknown scheme '" + name + "' (expected TAS, TAB, TAB-US or TAS-US)");
    }

    void SimSpec::validate() const
    {
        if (trials < 1)
            throw DomainError("trials must be at least 1");
        if (user_order < 1)
            throw DomainError("user_order must be at least 1");
        if (threads < 0)
            throw DomainError("threads must be nonnegative");
    }

    SopEstimate make_estimate(std::int64_t outages, std::int64_t trials, std::int64_t discarded)
    {
        SopEstimate e;
        e.trials = trials;
        e.outage_count = outages;
        e.discarded = discarded;
        e.p_hat = static_cast<double>(outages) / static_cast<double>(trials);
        e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
        return e;
    }

    MainChannel fixed_main_channel(const SimSpec &spec, int M)
    {
        if (spec.channel)
        {
            if (static_cast<int>(spec.channel->h.size()) != M)
                throw DomainError("channel: h must have M entries");
            return *spec.channel;
        }
        RngStream rng(spec.seed, kFixedStream, kTagMain);
        const auto ch = sample_main_channel(M, rng);
        return {ch.h, ch.g_B};
    }

    TrialRealization draw_trial(const SimSpec &spec, const SystemParams &p, std::int64_t trial, std::int64_t *discarded)
    {
        TrialRealization t;
        if (spec.conditioning == Conditioning::fixed)
        {
            const auto mc = fixed_main_channel(spec, p.M);
            t.ch.h = mc.h;
            t.ch.g_B = mc.g_B;
        }
        else
        {
            RngStream rm(spec.seed, static_cast<std::uint64_t>(trial), kTagMain);
            t.ch = sample_main_channel(p.M, rm);
        }
        RngStream rf(spec.seed, static_cast<std::uint64_t>(trial), kTagField);
        t.field = sample_ed_field(p, rf);
        RngStream rfad(spec.seed, static_cast<std::uint64_t>(trial), kTagFading);
        sample_ed_fading(t.ch, p.M, t.field.points.size(), rfad);
        t.d_AB = is_userselect(spec.scheme) ? nth_user_distance(spec, p, trial, spec.user_order, discarded) : p.d;
        return t;
    }

    double snr_bob(const SimSpec &spec, const SystemParams &p, const TrialRealization &t)
    {
        return bob_snr(spec.scheme, effective_params(spec, p), t.ch, t.d_AB);
    }

    std::vector<double> snr_eves(const SimSpec &spec, const SystemParams &p, const TrialRealization &t)
    {
        const auto q = effective_params(spec, p);
        std::vector<EveStats> stats;
        eve_stats(t, q.d, stats);
        std::vector<double> out;
        out.reserve(stats.size());
        for (const auto &e : stats)
            out.push_back(eve_snr(spec.scheme, q, spec.eve_noise, e));
        return out;
    }

    double trial_secrecy_rate(const SimSpec &spec, const SystemParams &p, const TrialRealization &t)
    {
        double f = 0.0;
        for (double v : snr_eves(spec, p, t))
            f = spec.colluding ? f + v : std::max(f, v);
        return secrecy_rate(snr_bob(spec, p, t), f);
    }

    std::vector<SopEstimate> estimate_sop_batch(const std::vector<SimSpec> &specs, const std::vector<SystemParams> &params)
    {
        if (specs.empty() || specs.size() != params.size())
            throw PreconditionError("estimate_sop_batch: needs one parameter set per spec");
        const SimSpec &base = specs.front();
        std::vector<SystemParams> eff;
        bool any_us = false;
        for (std::size_t k = 0; k < specs.size(); ++k)
        {
            const auto &s = specs[k];
            s.validate();
            params[k].validate();
            if (s.trials != base.trials || s.seed != base.seed || s.conditioning != base.conditioning ||
                s.user_order != base.user_order || !same_channel(s.channel, base.channel))
                throw PreconditionError("estimate_sop_batch: specs differ in trials, seed, conditioning, channel or user order");
            const auto &p = params[k];
            const auto &p0 = params.front();
            if (p.M != p0.M || p.rho_E != p0.rho_E || p.rho_U != p0.rho_U || p.R != p0.R || p.R_g != p0.R_g)
                throw PreconditionError("estimate_sop_batch: parameter sets differ in M, rho_E, rho_U, R or R_g");
            if (s.scheme == Scheme::TAB || s.scheme == Scheme::TAB_US)
                if (p.M < 2 && p.eps > 0.0)
                    throw DomainError("eps must be 0 when M = 1");
            if (is_userselect(s.scheme) && !(p.rho_U > 0.0))
                throw DomainError("rho_U must be positive for user selection");
            eff.push_back(effective_params(s, p));
            any_us = any_us || is_userselect(s.scheme);
        }
        const SystemParams &p0 = eff.front();
        const std::int64_t trials = base.trials;
        const std::size_t npts = specs.size();

        // Bob positions differ between points only through d, so group points by d
        std::vector<double> bob_d;
        std::vector<std::size_t> group(npts);
        for (std::size_t k = 0; k < npts; ++k)
        {
            const double d = is_userselect(specs[k].scheme) ? 0.0 : eff[k].d;
            auto it = std::find(bob_d.begin(), bob_d.end(), d);
            group[k] = static_cast<std::size_t>(it - bob_d.begin());
            if (it == bob_d.end())
                bob_d.push_back(d);
        }

        std::optional<MainChannel> fixed;
        if (base.conditioning == Conditioning::fixed)
            fixed = fixed_main_channel(base, p0.M);

        int nthreads = base.threads == 0 ? static_cast<int>(std::max(1u, std::thread::hardware_concurrency())) : base.threads;
        nthreads = static_cast<int>(std::min<std::int64_t>(nthreads, trials));
        constexpr std::int64_t kBlock = 256;
        std::atomic<std::int64_t> next{0};
        std::vector<std::vector<std::int64_t>> counts(nthreads, std::vector<std::int64_t>(npts, 0));
        std::vector<std::int64_t> discards(nthreads, 0);
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&](int tid)
        {
            try
            {
                TrialRealization t;
                std::vector<std::vector<EveStats>> stats(bob_d.size());
                for (;;)
                {
                    const std::int64_t begin = next.fetch_add(kBlock);
                    if (begin >= trials)
                        break;
                    const std::int64_t end = std::min(trials, begin + kBlock);
                    for (std::int64_t trial = begin; trial < end; ++trial)
                    {
                        if (fixed)
                        {
                            t.ch.h = fixed->h;
                            t.ch.g_B = fixed->g_B;
                        }
                        else
                        {
                            RngStream rm(base.seed, static_cast<std::uint64_t>(trial), kTagMain);
                            t.ch = sample_main_channel(p0.M, rm);
                        }
                        RngStream rf(base.seed, static_cast<std::uint64_t>(trial), kTagField);
                        t.field = sample_ed_field(p0, rf);
                        RngStream rfad(base.seed, static_cast<std::uint64_t>(trial), kTagFading);
                        sample_ed_fading(t.ch, p0.M, t.field.points.size(), rfad);
                        double d_user = 0.0;
                        if (any_us)
                            d_user = nth_user_distance(base, p0, trial, base.user_order, &discards[tid]);
                        for (std::size_t g = 0; g < bob_d.size(); ++g)
                            eve_stats(t, bob_d[g], stats[g]);
                        for (std::size_t k = 0; k < npts; ++k)
                        {
                            const double d_AB = is_userselect(specs[k].scheme) ? d_user : eff[k].d;
                            counts[tid][k] += point_outage(specs[k], eff[k], t.ch, d_AB, stats[group[k]]);
                        }
                    }
                }
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(trials);
            }
        };

        if (nthreads == 1)
            worker(0);
        else
        {
            std::vector<std::thread> pool;
            for (int tid = 0; tid < nthreads; ++tid)
                pool.emplace_back(worker, tid);
            for (auto &th : pool)
                th.join();
        }
        if (failure)
            std::rethrow_exception(failure);

        std::int64_t discarded = 0;
        for (auto v : discards)
            discarded += v;
        std::vector<SopEstimate> out;
        for (std::size_t k = 0; k < npts; ++k)
        {
            std::int64_t c = 0;
            for (int tid = 0; tid < nthreads; ++tid)
                c += counts[tid][k];
            out.push_back(make_estimate(c, trials, is_userselect(specs[k].scheme) ? discarded : 0));
        }
        return out;
    }

    SopEstimate estimate_sop(const SimSpec &spec, const SystemParams &p)
    {
        return estimate_sop_batch({spec}, {p}).front();
    }

    SopEstimate estimate_sop_userselect(const SimSpec &spec, const SystemParams &p, int n)
    {
        if (!is_userselect(spec.scheme))
            throw PreconditionError("estimate_sop_userselect: requires the TAB-US or TAS-US scheme");
        SimSpec s = spec;
        s.user_order = n;
        return estimate_sop(s, p);
    }
}
