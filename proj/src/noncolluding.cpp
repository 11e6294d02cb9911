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

#include "fdsec/noncolluding.hpp"
#include "averaging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace fdsec
{
    namespace
    {
        inline double pow_alpha(double x, double alpha)
        {
            return alpha == 2.0 ? x * x : std::pow(x, alpha);
        }

        PolarOptions polar_options(const SystemParams &p)
        {
            PolarOptions o;
            o.theta_symmetric = true;
            if (p.d > p.R_g && p.d < p.R)
                o.radial_breakpoints.push_back(p.d);
            return o;
        }

        ConnectionProbability finish(double integral, double error, double rho_E)
        {
            ConnectionProbability cp;
            cp.integral = integral;
            cp.error = error;
            cp.raw = std::exp(-rho_E * integral);
            cp.value = std::clamp(cp.raw, 0.0, 1.0);
            return cp;
        }

        ConnectionProbability outage_certain()
        {
            ConnectionProbability cp;
            cp.value = 0.0;
            cp.raw = 0.0;
            cp.integral = INFINITY;
            return cp;
        }

        void require(bool cond, const char *msg)
        {
            if (!cond)
                throw PreconditionError(msg);
        }

        // 2 pi int_{R_g}^{R} (1 - k r^2 / sqrt(((1+k) r^2 + d^2)^2 - 4 r^2 d^2)) r dr:
        // the theta integral of 1/(1 + k (r/d_BE)^2) done in closed form
        double alpha2_interference_integral(double k, const SystemParams &p, const AnalyticOptions &opts)
        {
            const double d2 = p.d * p.d;
            auto f = [&](double r)
            {
                if (r == 0.0)
                    return 0.0;
                const double r2 = r * r;
                const double a = (1.0 + k) * r2 + d2;
                const double disc = a * a - 4.0 * r2 * d2;
                return r * (1.0 - k * r2 / std::sqrt(disc));
            };
            std::vector<double> bp;
            if (p.d > p.R_g && p.d < p.R)
                bp.push_back(p.d);
            return 2.0 * std::numbers::pi * integrate_1d(f, p.R_g, p.R, opts.quad, bp).value;
        }
    }

    TasIntegrand make_tas_integrand(double Y, const SystemParams &p)
    {
        const double beta = p.beta();
        TasIntegrand ip;
        ip.Y0 = Y / beta + 1.0 / beta - 1.0;
        ip.m = p.m();
        ip.alpha = p.alpha;
        ip.d = p.d;
        ip.P_T = p.P_T;
        return ip;
    }

    TabIntegrand make_tab_integrand(double z, const SystemParams &p, NoiseTerm form)
    {
        const double beta = p.beta();
        TabIntegrand ip;
        ip.t = z / beta + (1.0 / beta - 1.0) / (1.0 - p.eps);
        ip.g = beta / z;
        ip.eps = p.eps;
        ip.M = p.M;
        ip.m = p.m();
        ip.alpha = p.alpha;
        ip.d = p.d;
        ip.P_T = p.P_T;
        ip.P_J = p.P_J;
        ip.noise_term = form;
        return ip;
    }

    double psi_integrand(double r, double theta, const TasIntegrand &ip)
    {
        if (ip.Y0 <= 0.0)
            return 1.0;
        const double num = std::exp(-pow_alpha(r, ip.alpha) * ip.Y0 / ip.P_T);
        if (ip.m == 0.0 || r == 0.0)
            return num;
        const double dbe = distance_bob_to_point(r, theta, ip.d);
        if (dbe == 0.0)
            return 0.0;
        return num / (1.0 + ip.m * pow_alpha(r / dbe, ip.alpha) * ip.Y0);
    }

    double omega_integrand(double r, double theta, const TabIntegrand &ip)
    {
        const double dbe = distance_bob_to_point(r, theta, ip.d);
        double t = ip.t;
        double noise = 1.0;
        switch (ip.noise_term)
        {
        case NoiseTerm::exact:
            if (t <= 0.0)
                return 1.0;
            noise = std::exp(-pow_alpha(r, ip.alpha) * t / ip.P_T);
            break;
        case NoiseTerm::asymptotic:
            if (!(ip.P_J > 0.0))
                throw DomainError("omega_integrand: the asymptotic noise term needs P_J > 0");
            t = 1.0 / ip.g;
            noise = std::exp(pow_alpha(dbe, ip.alpha) / ip.P_J);
            break;
        case NoiseTerm::interference_limited:
            if (t <= 0.0)
                return 1.0;
            break;
        }
        double fe_t = 0.0;
        if (ip.m > 0.0 && r > 0.0)
        {
            if (dbe == 0.0)
                return 0.0;
            fe_t = ip.m * pow_alpha(r / dbe, ip.alpha) * t;
        }
        double an = 1.0;
        if (ip.eps > 0.0 && ip.M > 1)
            an = std::pow(1.0 + ip.eps * t / (ip.M - 1), ip.M - 1);
        return noise / ((1.0 + fe_t) * an);
    }

    // ---- Antenna selection ----

    ConnectionProbability pcon_tas_conditional_detail(double Y, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        if (!(Y >= 0.0))
            throw DomainError("pcon_tas_conditional: Y must be nonnegative");
        const TasIntegrand ip = make_tas_integrand(Y, p);
        if (ip.Y0 < 0.0)
            return outage_certain();
        if (p.rho_E == 0.0 || p.R_g >= p.R)
            return finish(0.0, 0.0, p.rho_E);
        if (ip.Y0 == 0.0)
            return finish(std::numbers::pi * (p.R * p.R - p.R_g * p.R_g), 0.0, p.rho_E);
        const auto res = integrate_polar([&](double r, double th)
                                         { return psi_integrand(r, th, ip); },
                                         p.R_g, p.R, opts.quad, polar_options(p));
        return finish(res.value, res.error, p.rho_E);
    }

    double pcon_tas_conditional(double Y, const SystemParams &p, const AnalyticOptions &opts)
    {
        return pcon_tas_conditional_detail(Y, p, opts).value;
    }

    double pcon_tas_alpha2_closedform(double Y, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        require(p.alpha == 2.0, "pcon_tas_alpha2_closedform: requires alpha = 2");
        require(p.R_s == 0.0, "pcon_tas_alpha2_closedform: requires R_s = 0");
        require(p.R_g == 0.0, "pcon_tas_alpha2_closedform: requires R_g = 0");
        if (!(Y >= 0.0))
            throw DomainError("pcon_tas_alpha2_closedform: Y must be nonnegative");
        const double R2 = p.R * p.R;
        const double d2 = p.d * p.d;
        if (Y == 0.0)
            return std::exp(-p.rho_E * std::numbers::pi * R2);

        const double first = -std::numbers::pi * p.P_T / Y * std::expm1(-Y * R2 / p.P_T);
        double second = 0.0;
        const double mY = p.m() * Y;
        if (mY > 0.0)
        {
            auto f = [&](double s)
            {
                const double a = (1.0 + mY) * s + d2;
                return std::exp(-Y * s / p.P_T) * s / std::sqrt(a * a - 4.0 * s * d2);
            };
            std::vector<double> bp;
            if (d2 < R2)
                bp.push_back(d2);
            second = std::numbers::pi * mY * integrate_1d(f, 0.0, R2, opts.quad, bp).value;
        }
        return std::clamp(std::exp(-p.rho_E * (first - second)), 0.0, 1.0);
    }

    double pcon_tas_unconditional(const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        const double beta = p.beta();
        const double y_lo = std::max(0.0, beta - 1.0);
        auto pcon = [&](double y)
        { return pcon_tas_conditional(y, p, opts); };
        auto cdf = [&](double y)
        { return cdf_Y(y, p); };
        auto pdf = [&](double y)
        { return pdf_Y(y, p); };
        if (p.rho_E == 0.0)
            return 1.0 - cdf(y_lo);
        return detail::average_conditional(pcon, cdf, pdf, y_lo, p.P_T, opts);
    }

    double pcon_tas_hd(double h_star_sq, const SystemParams &p)
    {
        p.validate();
        require(p.P_J == 0.0, "pcon_tas_hd: requires P_J = 0");
        if (!(h_star_sq > 0.0))
            throw DomainError("pcon_tas_hd: h_star_sq must be positive");
        if (p.rho_E == 0.0)
            return 1.0;
        const double beta = p.beta();
        const double k = 2.0 / p.alpha;
        const double s = h_star_sq / beta;
        double gam = lower_incomplete_gamma(k, s * std::pow(p.R, p.alpha));
        if (p.R_g > 0.0)
            gam -= lower_incomplete_gamma(k, s * std::pow(p.R_g, p.alpha));
        const double log_p = -p.rho_E * 2.0 * std::numbers::pi * std::pow(beta, k) / (p.alpha * std::pow(h_star_sq, k)) * gam;
        return std::exp(log_p);
    }

    double tas_hd_limit_R_inf(double h_star_sq, const SystemParams &p)
    {
        if (!(h_star_sq > 0.0))
            throw DomainError("tas_hd_limit_R_inf: h_star_sq must be positive");
        const double k = 2.0 / p.alpha;
        return -std::numbers::pi * std::pow(p.beta() / h_star_sq, k) * k * std::tgamma(k);
    }

    double pcon_tas_pj_infinity(double h_star_sq, double g_B_sq, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        require(p.R_s == 0.0, "pcon_tas_pj_infinity: requires R_s = 0");
        require(p.alpha == 2.0, "pcon_tas_pj_infinity: requires alpha = 2");
        if (!(h_star_sq > 0.0))
            throw DomainError("pcon_tas_pj_infinity: h_star_sq must be positive");
        if (p.rho_E == 0.0 || p.rho * g_B_sq == 0.0)
            return 1.0;
        // m Y -> |h*|^2 / (rho |g_B|^2)
        const double k = h_star_sq / (p.rho * g_B_sq);
        return std::clamp(std::exp(-p.rho_E * alpha2_interference_integral(k, p, opts)), 0.0, 1.0);
    }

    // ---- Beamforming with artificial noise ----

    ConnectionProbability pcon_tab_conditional_detail(double z, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        if (!(z >= 0.0))
            throw DomainError("pcon_tab_conditional: z must be nonnegative");
        if (opts.noise_term == NoiseTerm::asymptotic && !(p.P_J > 0.0))
            throw DomainError("pcon_tab_conditional: the asymptotic noise term needs P_J > 0");
        const TabIntegrand ip = make_tab_integrand(z, p, opts.noise_term);
        if (ip.t < 0.0)
            return outage_certain();
        if (p.rho_E == 0.0 || p.R_g >= p.R)
            return finish(0.0, 0.0, p.rho_E);
        const auto res = integrate_polar([&](double r, double th)
                                         { return omega_integrand(r, th, ip); },
                                         p.R_g, p.R, opts.quad, polar_options(p));
        return finish(res.value, res.error, p.rho_E);
    }

    double pcon_tab_conditional(double z, const SystemParams &p, const AnalyticOptions &opts)
    {
        return pcon_tab_conditional_detail(z, p, opts).value;
    }

    double pcon_tab_unconditional(const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        const double beta = p.beta();
        const double z_lo = std::max(0.0, (beta - 1.0) / (1.0 - p.eps));
        auto pcon = [&](double z)
        { return pcon_tab_conditional(z, p, opts); };
        if (p.P_J > 0.0 && p.rho > 0.0)
        {
            auto cdf = [&](double z)
            { return cdf_Z(z, p); };
            auto pdf = [&](double z)
            { return pdf_Z(z, p); };
            if (p.rho_E == 0.0)
                return 1.0 - cdf(z_lo);
            return detail::average_conditional(pcon, cdf, pdf, z_lo, p.P_T, opts);
        }
        auto cdf = [&](double z)
        { return cdf_Z_no_jamming(z, p); };
        auto pdf = [&](double z)
        { return pdf_Z_no_jamming(z, p); };
        if (p.rho_E == 0.0)
            return 1.0 - cdf(z_lo);
        return detail::average_conditional(pcon, cdf, pdf, z_lo, p.P_T, opts);
    }

    double pcon_tab_alpha2_beta1(double z, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        require(p.alpha == 2.0, "pcon_tab_alpha2_beta1: requires alpha = 2");
        require(p.R_s == 0.0, "pcon_tab_alpha2_beta1: requires beta = 1");
        require(p.R_g == 0.0, "pcon_tab_alpha2_beta1: requires R_g = 0");
        if (!(z > 0.0))
            throw DomainError("pcon_tab_alpha2_beta1: z must be positive");
        if (p.rho_E == 0.0)
            return 1.0;
        const double zm = z * p.m();
        double an = 1.0;
        if (p.eps > 0.0)
            an = std::pow(1.0 + z * p.eps / (p.M - 1), p.M - 1);
        const double integral = alpha2_interference_integral(zm, p, opts) / an;
        return std::clamp(std::exp(-p.rho_E * integral), 0.0, 1.0);
    }

    double pcon_tab_pj_infinity(double h_norm_sq, double g_B_sq, const SystemParams &p, const AnalyticOptions &opts)
    {
        p.validate();
        require(p.alpha == 2.0, "pcon_tab_pj_infinity: requires alpha = 2");
        require(p.R_s == 0.0, "pcon_tab_pj_infinity: requires beta = 1");
        if (!(h_norm_sq > 0.0))
            throw DomainError("pcon_tab_pj_infinity: h_norm_sq must be positive");
        if (p.rho_E == 0.0 || p.rho * g_B_sq == 0.0)
            return 1.0;
        // z m -> ||h||^2 / (rho |g_B|^2) and z -> 0
        const double k = h_norm_sq / (p.rho * g_B_sq);
        return std::clamp(std::exp(-p.rho_E * alpha2_interference_integral(k, p, opts)), 0.0, 1.0);
    }

    double pcon_tab_hd(double h_norm_sq, const SystemParams &p)
    {
        p.validate();
        require(p.P_J == 0.0, "pcon_tab_hd: requires P_J = 0");
        if (!(h_norm_sq > 0.0))
            throw DomainError("pcon_tab_hd: h_norm_sq must be positive");
        if (p.rho_E == 0.0)
            return 1.0;
        const double beta = p.beta();
        const double k = 2.0 / p.alpha;
        const double s = h_norm_sq / beta;
        double gam = lower_incomplete_gamma(k, s * std::pow(p.R, p.alpha));
        if (p.R_g > 0.0)
            gam -= lower_incomplete_gamma(k, s * std::pow(p.R_g, p.alpha));
        double an = 1.0;
        if (p.eps > 0.0 && p.M > 1)
            an = std::pow(1.0 + p.eps * p.P_T * h_norm_sq / ((p.M - 1) * beta), p.M - 1);
        const double integral = 2.0 * std::numbers::pi * std::pow(beta, k) / (p.alpha * std::pow(h_norm_sq, k) * an) * gam;
        return std::exp(-p.rho_E * integral);
    }
}
