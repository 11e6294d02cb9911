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

#include "fdsec/model.hpp"
#include "fdsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace fdsec
{
    double SystemParams::beta() const { return std::exp2(R_s); }

    double SystemParams::m() const { return P_J / P_T; }

    DerivedParams SystemParams::derived() const { return DerivedParams{beta(), m()}; }

    void SystemParams::validate() const
    {
        auto fail = [](const std::string &what)
        { throw DomainError("SystemParams: " + what); };

        if (M < 1)
            fail("M must be at least 1");
        if (!(P_T > 0.0) || !std::isfinite(P_T))
            fail("P_T must be positive and finite");
        if (!(P_J >= 0.0) || !std::isfinite(P_J))
            fail("P_J must be nonnegative and finite");
        if (!(rho >= 0.0))
            fail("rho must be nonnegative");
        if (!(eps >= 0.0 && eps < 1.0))
            fail("eps must lie in [0, 1)");
        if (eps > 0.0 && M < 2)
            fail("eps > 0 requires M >= 2 (no null space)");
        if (!(alpha > 0.0))
            fail("alpha must be positive");
        if (!(R > 0.0))
            fail("R must be positive");
        if (!(R_g >= 0.0 && R_g <= R))
            fail("R_g must lie in [0, R]");
        if (!(d > 0.0))
            fail("d must be positive");
        if (!(rho_E >= 0.0))
            fail("rho_E must be nonnegative");
        if (!(rho_U >= 0.0))
            fail("rho_U must be nonnegative");
        if (!(R_s >= 0.0))
            fail("R_s must be nonnegative");
        if (!(R_D >= 0.0))
            fail("R_D must be nonnegative");
    }

    SystemParams SystemParams::defaults()
    {
        return SystemParams{};
    }

    SystemParams SystemParams::colluding_defaults()
    {
        SystemParams p;
        p.R_g = 0.1;
        return p;
    }

    SystemParams SystemParams::userselect_defaults()
    {
        SystemParams p;
        p.P_T = 1e5;
        p.P_J = 0.0;
        p.R_s = 1.0;
        p.eps = 1e-5;
        p.rho_U = 0.5;
        p.rho_E = 0.1;
        return p;
    }

    double ChannelRealization::h_norm_sq() const
    {
        double s = 0.0;
        for (const auto &v : h)
            s += std::norm(v);
        return s;
    }

    double ChannelRealization::h_max_sq() const
    {
        return std::norm(h[best_antenna()]);
    }

    int ChannelRealization::best_antenna() const
    {
        int best = 0;
        for (int i = 1; i < static_cast<int>(h.size()); ++i)
            if (std::norm(h[i]) > std::norm(h[best]))
                best = i;
        return best;
    }

    double tas_snr(const SystemParams &p, double h_star_sq, double g_B_sq)
    {
        return h_star_sq * p.P_T / (1.0 + p.rho * p.P_J * g_B_sq);
    }

    double tab_snr_scale(const SystemParams &p, double h_norm_sq, double g_B_sq)
    {
        return h_norm_sq * p.P_T / (1.0 + p.rho * p.P_J * g_B_sq);
    }

    ConditioningState conditioning(const SystemParams &p, double h_star_sq, double h_norm_sq, double g_B_sq)
    {
        const double beta = p.beta();
        ConditioningState s;
        s.Y = tas_snr(p, h_star_sq, g_B_sq);
        s.Y0 = s.Y / beta + 1.0 / beta - 1.0;
        s.Z = tab_snr_scale(p, h_norm_sq, g_B_sq);
        s.g = beta / s.Z;
        s.c = 1.0 / (s.g * p.P_T);
        return s;
    }

    cplx sample_cn(RngStream &rng)
    {
        std::normal_distribution<double> n(0.0, std::numbers::sqrt2 / 2.0);
        const double re = n(rng);
        const double im = n(rng);
        return {re, im};
    }

    ChannelRealization sample_main_channel(int M, RngStream &rng)
    {
        ChannelRealization ch;
        ch.h.resize(M);
        for (auto &v : ch.h)
            v = sample_cn(rng);
        ch.g_B = sample_cn(rng);
        return ch;
    }

    EdField sample_ed_field(const SystemParams &p, RngStream &rng)
    {
        EdField field;
        const double area = std::numbers::pi * (p.R * p.R - p.R_g * p.R_g);
        const double mean = p.rho_E * area;
        if (!(mean > 0.0))
            return field;
        std::poisson_distribution<long> count_dist(mean);
        const long count = count_dist(rng);
        field.points.resize(static_cast<std::size_t>(count));
        const double rg2 = p.R_g * p.R_g;
        const double span = p.R * p.R - rg2;
        for (auto &pt : field.points)
        {
            pt.r = std::sqrt(rg2 + rng.uniform() * span);
            pt.theta = 2.0 * std::numbers::pi * rng.uniform();
        }
        return field;
    }

    void sample_ed_fading(ChannelRealization &ch, int M, std::size_t count, RngStream &rng)
    {
        ch.h_AE.resize(count * static_cast<std::size_t>(M));
        ch.h_BE.resize(count);
        for (std::size_t e = 0; e < count; ++e)
        {
            for (int i = 0; i < M; ++i)
                ch.h_AE[e * M + i] = sample_cn(rng);
            ch.h_BE[e] = sample_cn(rng);
        }
    }

    double distance_bob_to_point(double r, double theta, double d)
    {
        const double s = r * r + d * d - 2.0 * r * d * std::cos(theta);
        return std::sqrt(std::max(0.0, s));
    }

    namespace
    {
        double binom(int n, int k)
        {
            return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
        }
    }

    double cdf_Y(double y, const SystemParams &p)
    {
        if (y <= 0.0)
            return 0.0;
        const double w = p.rho * p.m();
        double s = 0.0;
        for (int i = 0; i <= p.M; ++i)
        {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            s += sign * binom(p.M, i) * std::exp(-i * y / p.P_T) / (1.0 + i * y * w);
        }
        return std::clamp(s, 0.0, 1.0);
    }

    double pdf_Y(double y, const SystemParams &p)
    {
        if (y < 0.0)
            return 0.0;
        const double w = p.rho * p.m();
        double s = 0.0;
        for (int i = 1; i <= p.M; ++i)
        {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            const double den = 1.0 + i * y * w;
            s += sign * binom(p.M, i) * i * std::exp(-i * y / p.P_T) * (i * y * w / p.P_T + 1.0 / p.P_T + w) /
                 (den * den);
        }
        return std::max(0.0, s);
    }

    namespace
    {
        void require_jamming(const SystemParams &p, const char *name)
        {
            if (!(p.P_J > 0.0) || !(p.rho > 0.0))
                throw DomainError(std::string(name) + ": requires rho * P_J > 0 (use the no-jamming gamma density)");
        }
    }

    double cdf_Z(double z, const SystemParams &p)
    {
        require_jamming(p, "cdf_Z");
        if (z <= 0.0)
            return 0.0;
        const double kappa = 1.0 / (p.rho * p.P_J);
        const double zw = z * p.rho * p.m();
        const double v = z / p.P_T;
        // Second term: e^kappa (zw/(1+zw))^M Q(M, v + kappa), combined in log space
        const double q = gamma_q(p.M, v + kappa);
        double tail = 0.0;
        if (q > 0.0)
            tail = std::exp(kappa + p.M * std::log(zw / (1.0 + zw)) + std::log(q));
        return std::clamp(gamma_p(p.M, v) + tail, 0.0, 1.0);
    }

    double pdf_Z(double z, const SystemParams &p)
    {
        require_jamming(p, "pdf_Z");
        if (z <= 0.0)
            return 0.0;
        const int M = p.M;
        const double kappa = 1.0 / (p.rho * p.P_J);
        const double w = p.rho * p.m();
        const double zw = z * w;
        const double v = z / p.P_T;
        const double q = gamma_q(M, v + kappa);
        double a = 0.0;
        if (q > 0.0)
            a = std::exp(kappa + std::log(M * w) + (M - 1) * std::log(zw) - (M + 1) * std::log1p(zw) + std::log(q));
        const double b =
            std::exp((M - 1) * std::log(v) - v - std::lgamma(M)) / (p.P_T * (1.0 + zw));
        return a + b;
    }

    double pdf_Z_asymptotic(double z, const SystemParams &p)
    {
        require_jamming(p, "pdf_Z_asymptotic");
        if (z <= 0.0)
            return 0.0;
        const int M = p.M;
        const double w = p.rho * p.m();
        const double zw = z * w;
        return std::exp(1.0 / (p.rho * p.P_J) + std::log(M * w) + (M - 1) * std::log(zw) - (M + 1) * std::log1p(zw));
    }

    double pdf_Z_no_jamming(double z, const SystemParams &p)
    {
        if (z <= 0.0)
            return 0.0;
        const double v = z / p.P_T;
        return std::exp((p.M - 1) * std::log(v) - v - std::lgamma(p.M)) / p.P_T;
    }

    double cdf_Z_no_jamming(double z, const SystemParams &p)
    {
        if (z <= 0.0)
            return 0.0;
        return gamma_p(p.M, z / p.P_T);
    }

    double sample_theta(int M, RngStream &rng)
    {
        if (M < 1)
            throw DomainError("sample_theta: M must be at least 1");
        if (M == 1)
            return 1.0;
        return 1.0 - std::pow(rng.uniform(), 1.0 / (M - 1));
    }

    double sample_theta_geometric(int M, RngStream &rng)
    {
        if (M < 1)
            throw DomainError("sample_theta_geometric: M must be at least 1");
        if (M == 1)
            return 1.0;
        std::vector<cplx> h(M), a(M);
        for (auto &v : h)
            v = sample_cn(rng);
        for (auto &v : a)
            v = sample_cn(rng);
        cplx inner{0.0, 0.0};
        double nh = 0.0, na = 0.0;
        for (int i = 0; i < M; ++i)
        {
            inner += a[i] * std::conj(h[i]);
            nh += std::norm(h[i]);
            na += std::norm(a[i]);
        }
        return std::norm(inner) / (nh * na);
    }

    double cdf_theta(double x, int M)
    {
        if (M == 1)
            return x >= 1.0 ? 1.0 : 0.0;
        if (x <= 0.0)
            return 0.0;
        if (x >= 1.0)
            return 1.0;
        return 1.0 - std::pow(1.0 - x, M - 1);
    }

    double pdf_dABn(double x, int n, double rho_U)
    {
        if (n < 1)
            throw DomainError("pdf_dABn: n must be at least 1");
        if (!(rho_U > 0.0))
            throw DomainError("pdf_dABn: rho_U must be positive");
        if (x <= 0.0)
            return 0.0;
        const double lam = rho_U * std::numbers::pi;
        return std::exp(-lam * x * x + std::log(2.0) + n * std::log(lam) + (2.0 * n - 1.0) * std::log(x) -
                        std::lgamma(n));
    }

    double cdf_dABn(double x, int n, double rho_U)
    {
        if (n < 1)
            throw DomainError("cdf_dABn: n must be at least 1");
        if (!(rho_U > 0.0))
            throw DomainError("cdf_dABn: rho_U must be positive");
        if (x <= 0.0)
            return 0.0;
        return gamma_p(n, rho_U * std::numbers::pi * x * x);
    }

    double eps_max(const SystemParams &p, double h_norm_sq, double g_B_sq)
    {
        if (!(h_norm_sq > 0.0))
            throw DomainError("eps_max: h_norm_sq must be positive");
        const double need = (1.0 + p.rho * g_B_sq * p.P_J) * (std::exp2(p.R_D) - 1.0) / (h_norm_sq * p.P_T);
        return std::max(0.0, 1.0 - need);
    }
}
