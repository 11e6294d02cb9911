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

#include "fdsec/colluding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

namespace fdsec
{
    double GammaApproxConfig::a() const
    {
        validate();
        return N / std::exp(std::lgamma(N + 1.0) / N);
    }

    void GammaApproxConfig::validate() const
    {
        if (N < 1)
            throw DomainError("N must be at least 1");
        if (N > 60)
            throw DomainError("N above 60 loses all precision in the alternating series");
    }

    XiParams make_xi_params(double s, const SystemParams &p)
    {
        XiParams xp;
        xp.s = s;
        xp.m = p.m();
        xp.alpha = p.alpha;
        xp.d = p.d;
        xp.P_T = p.P_T;
        xp.P_J = p.P_J;
        return xp;
    }

    double xi_integrand(double r, double theta, const XiParams &xp)
    {
        if (!(xp.P_J > 0.0))
            throw DomainError("xi_integrand: requires P_J > 0");
        if (!(xp.s >= 0.0))
            throw DomainError("xi_integrand: s must be nonnegative");
        if (xp.s == 0.0)
            return 0.0;
        const double dbe = distance_bob_to_point(r, theta, xp.d);
        if (dbe == 0.0)
            return 0.0;
        const double dae_a = xp.alpha == 2.0 ? r * r : std::pow(r, xp.alpha);
        const double dbe_a = xp.alpha == 2.0 ? dbe * dbe : std::pow(dbe, xp.alpha);
        if (dae_a == 0.0)
            return 1.0;
        // s/f_e and K = d_BE^a / P_J + s / f_e
        const double s_over_f = xp.s * dbe_a / (xp.m * dae_a);
        const double K = dbe_a / xp.P_J + s_over_f;
        return std::min(1.0, s_over_f * exp_integral_e1_scaled(K));
    }

    namespace
    {
        void require_guard(const SystemParams &p, const char *who)
        {
            if (!(p.R_g > 0.0))
                throw DomainError(std::string(who) + ": requires a guard radius R_g > 0");
        }

        PolarOptions polar_options(const SystemParams &p)
        {
            PolarOptions o;
            o.theta_symmetric = true;
            if (p.d > p.R_g && p.d < p.R)
                o.radial_breakpoints.push_back(p.d);
            return o;
        }

        QuadConfig series_quad(const AnalyticOptions &opts)
        {
            // The alternating sum amplifies errors by up to C(N, N/2); keep them small and smooth in n
            QuadConfig q = opts.quad;
            q.rel_tol = std::min(q.rel_tol, 1e-10);
            q.abs_tol = std::min(q.abs_tol, 1e-14);
            q.max_subdivisions = std::max(q.max_subdivisions, 8000);
            return q;
        }

        // int_{annulus} 1 / (1 + k (r/d_BE)^a) dA
        double jam_area(double k, const SystemParams &p, const QuadConfig &q)
        {
            if (k == 0.0)
                return std::numbers::pi * (p.R * p.R - p.R_g * p.R_g);
            std::vector<double> bp;
            if (p.d > p.R_g && p.d < p.R)
                bp.push_back(p.d);
            if (p.alpha == 2.0)
            {
                const double d2 = p.d * p.d;
                auto f = [&](double r)
                {
                    const double r2 = r * r;
                    const double a = (1.0 + k) * r2 + d2;
                    return 2.0 * std::numbers::pi * r * (1.0 - k * r2 / std::sqrt(a * a - 4.0 * r2 * d2));
                };
                return integrate_1d(f, p.R_g, p.R, q, bp).value;
            }
            auto f = [&](double r, double th)
            {
                const double dbe = distance_bob_to_point(r, th, p.d);
                if (dbe == 0.0)
                    return 0.0;
                return 1.0 / (1.0 + k * std::pow(r / dbe, p.alpha));
            };
            return integrate_polar(f, p.R_g, p.R, q, polar_options(p)).value;
        }

        std::vector<double> series_arguments(double threshold, const GammaApproxConfig &cfg)
        {
            const double a = cfg.a();
            std::vector<double> s(cfg.N + 1);
            for (int n = 0; n <= cfg.N; ++n)
                s[n] = a * n / threshold;
            return s;
        }

        SeriesResult certain_outage()
        {
            SeriesResult r;
            r.value = 1.0;
            r.raw = 1.0;
            r.max_partial = 1.0;
            return r;
        }

        // The binomial identity makes the sum exactly 0
        SeriesResult no_eavesdroppers(const GammaApproxConfig &cfg)
        {
            SeriesResult r;
            r.laplace.assign(cfg.N + 1, 1.0);
            return r;
        }
    }

    std::vector<double> laplace_Ie_tas(const std::vector<double> &s, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        if (!(p.P_J > 0.0))
            throw DomainError("laplace_Ie_tas: requires P_J > 0; use laplace_Ie_hd");
        require_guard(p, "laplace_Ie_tas");
        for (double v : s)
            if (!(v >= 0.0))
                throw DomainError("laplace_Ie_tas: s must be nonnegative");
        std::vector<double> out(s.size(), 1.0);
        if (p.rho_E == 0.0 || s.empty())
            return out;
        std::vector<XiParams> xps;
        for (double v : s)
            xps.push_back(make_xi_params(v, p));
        const auto res = integrate_polar_vec([&](double r, double th, std::span<double> o)
                                             {
                                                 for (std::size_t k = 0; k < xps.size(); ++k)
                                                     o[k] = xi_integrand(r, th, xps[k]); },
                                             s.size(), p.R_g, p.R, series_quad(opts), polar_options(p));
        for (std::size_t k = 0; k < s.size(); ++k)
            out[k] = s[k] == 0.0 ? 1.0 : std::exp(-p.rho_E * res.value[k]);
        return out;
    }

    double laplace_Ie_tas(double s, const SystemParams &p, const AnalyticOptions &opts)
    {
        return laplace_Ie_tas(std::vector<double>{s}, p, opts)[0];
    }

    double laplace_Ie_hd(double s, const SystemParams &p)
    {
        p.validate();
        if (!(s >= 0.0))
            throw DomainError("laplace_Ie_hd: s must be nonnegative");
        if (s == 0.0 || p.rho_E == 0.0)
            return 1.0;
        const double k = 2.0 / p.alpha;
        const double sP = s * p.P_T;
        auto disk = [&](double radius)
        {
            if (radius == 0.0)
                return 0.0;
            return radius * radius * hypergeom_2f1(1.0, k, 1.0 + k, -std::pow(radius, p.alpha) / sP);
        };
        return std::exp(-p.rho_E * std::numbers::pi * (disk(p.R) - disk(p.R_g)));
    }

    std::vector<double> laplace_Ie_tab_an(const std::vector<double> &s, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        if (!(p.eps > 0.0))
            throw DomainError("laplace_Ie_tab_an: requires eps > 0");
        if (!(p.P_J > 0.0))
            throw DomainError("laplace_Ie_tab_an: requires P_J > 0");
        if (p.M < 2)
            throw DomainError("laplace_Ie_tab_an: requires M >= 2");
        require_guard(p, "laplace_Ie_tab_an");
        double s_min = INFINITY;
        for (double v : s)
        {
            if (!(v >= 0.0))
                throw DomainError("laplace_Ie_tab_an: s must be nonnegative");
            if (v > 0.0)
                s_min = std::min(s_min, v);
        }
        std::vector<double> out(s.size(), 1.0);
        if (p.rho_E == 0.0 || !std::isfinite(s_min))
            return out;

        // s int_0^inf e^{-s x} (1 + eps x/(M-1))^{1-M} A(x) dx with A(x) the spatial
        // integral of 1/(1 + f_e x), shared by every s
        const QuadConfig q = series_quad(opts);
        QuadConfig inner = q;
        inner.rel_tol = q.rel_tol * 0.1;
        const double m = p.m();
        const double c = p.eps / (p.M - 1);
        const auto res = integrate_semi_infinite_vec([&](double x, std::span<double> o)
                                                     {
                                                         const double base = jam_area(m * x, p, inner) * std::pow(1.0 + c * x, 1 - p.M);
                                                         for (std::size_t k = 0; k < s.size(); ++k)
                                                             o[k] = s[k] == 0.0 ? 0.0 : s[k] * std::exp(-s[k] * x) * base; },
                                                     s.size(), 0.0, q, 1.0 / s_min);
        for (std::size_t k = 0; k < s.size(); ++k)
            out[k] = s[k] == 0.0 ? 1.0 : std::exp(-p.rho_E * res.value[k]);
        return out;
    }

    double laplace_Ie_tab_an(double s, const SystemParams &p, const AnalyticOptions &opts)
    {
        return laplace_Ie_tab_an(std::vector<double>{s}, p, opts)[0];
    }

    SeriesResult gamma_series(const std::vector<double> &laplace)
    {
        if (laplace.empty())
            throw DomainError("gamma_series: needs at least one term");
        const int N = static_cast<int>(laplace.size()) - 1;
        SeriesResult r;
        r.laplace = laplace;

        double sum = 0.0, comp = 0.0, binom = 1.0;
        for (int n = 0; n <= N; ++n)
        {
            const double term = (n % 2 ? -binom : binom) * laplace[n];
            const double y = term - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            r.max_partial = std::max(r.max_partial, std::abs(sum));
            binom = binom * (N - n) / (n + 1);
        }
        r.raw = sum;
        if (r.max_partial > 1e6 * std::abs(sum))
        {
            r.cancellation = true;
            long double lsum = 0.0L, lcomp = 0.0L, lb = 1.0L;
            for (int n = 0; n <= N; ++n)
            {
                const long double term = (n % 2 ? -lb : lb) * static_cast<long double>(laplace[n]);
                const long double y = term - lcomp;
                const long double t = lsum + y;
                lcomp = (t - lsum) - y;
                lsum = t;
                lb = lb * (N - n) / (n + 1);
            }
            r.raw = static_cast<double>(lsum);
        }
        r.value = std::clamp(r.raw, 0.0, 1.0);
        return r;
    }

    SeriesResult sop_tas_colluding_detail(double y0, const SystemParams &p, const GammaApproxConfig &cfg,
                                          const AnalyticOptions &opts)
    {
        p.validate();
        cfg.validate();
        if (!(y0 > 0.0))
            return certain_outage();
        if (p.rho_E == 0.0)
            return no_eavesdroppers(cfg);
        return gamma_series(laplace_Ie_tas(series_arguments(y0, cfg), p, opts));
    }

    double sop_tas_colluding(double y0, const SystemParams &p, const GammaApproxConfig &cfg, const AnalyticOptions &opts)
    {
        return sop_tas_colluding_detail(y0, p, cfg, opts).value;
    }

    double sop_tas_colluding_hd(double y0, const SystemParams &p, const GammaApproxConfig &cfg)
    {
        p.validate();
        cfg.validate();
        if (!(y0 > 0.0))
            return 1.0;
        const auto s = series_arguments(y0, cfg);
        std::vector<double> L(s.size());
        for (std::size_t k = 0; k < s.size(); ++k)
            L[k] = laplace_Ie_hd(s[k], p);
        return gamma_series(L).value;
    }

    SeriesResult sop_tab_colluding_eps0_detail(double z, const SystemParams &p, const GammaApproxConfig &cfg,
                                               const AnalyticOptions &opts)
    {
        const double beta = p.beta();
        return sop_tas_colluding_detail(z / beta - 1.0 + 1.0 / beta, p, cfg, opts);
    }

    double sop_tab_colluding_eps0(double z, const SystemParams &p, const GammaApproxConfig &cfg, const AnalyticOptions &opts)
    {
        return sop_tab_colluding_eps0_detail(z, p, cfg, opts).value;
    }

    double sop_tab_colluding_hd(double z, const SystemParams &p, const GammaApproxConfig &cfg)
    {
        const double beta = p.beta();
        return sop_tas_colluding_hd(z / beta - 1.0 + 1.0 / beta, p, cfg);
    }

    SeriesResult sop_tab_colluding_an_detail(double z, const SystemParams &p, const GammaApproxConfig &cfg,
                                             const AnalyticOptions &opts)
    {
        p.validate();
        cfg.validate();
        const double beta = p.beta();
        const double t = z / beta + (1.0 / beta - 1.0) / (1.0 - p.eps);
        if (!(t > 0.0))
            return certain_outage();
        if (p.rho_E == 0.0)
            return no_eavesdroppers(cfg);
        return gamma_series(laplace_Ie_tab_an(series_arguments(t, cfg), p, opts));
    }

    double sop_tab_colluding_an(double z, const SystemParams &p, const GammaApproxConfig &cfg, const AnalyticOptions &opts)
    {
        return sop_tab_colluding_an_detail(z, p, cfg, opts).value;
    }
}
