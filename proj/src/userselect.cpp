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

#include "fdsec/userselect.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fdsec
{
    UsParams UsParams::from(const SystemParams &p, int n)
    {
        UsParams up;
        up.sys = p;
        up.sys.P_J = 0.0;
        up.n = n;
        return up;
    }

    void UsParams::validate() const
    {
        sys.validate();
        if (n < 1)
            throw DomainError("n must be at least 1");
        if (!(sys.rho_U > 0.0))
            throw DomainError("rho_U must be positive for user selection");
        if (sys.P_J != 0.0)
            throw DomainError("P_J must be 0 for half-duplex users");
    }

    namespace
    {
        double shape_beta(const SystemParams &p)
        {
            const double k = 2.0 / p.alpha;
            if (!(p.M - k > 0.0))
                throw DomainError("M must exceed 2/alpha");
            return beta_fn(p.M - k, k);
        }
    }

    double tabus_exponent(double d_ABn, const UsParams &up, const AnalyticOptions &opts)
    {
        up.validate();
        const auto &p = up.sys;
        if (!(d_ABn > 0.0))
            throw DomainError("d_ABn must be positive");
        if (!(p.eps > 0.0))
            throw DomainError("eps must be positive; use the eps = 0 forms");
        if (p.M < 2)
            throw DomainError("M must be at least 2 with artificial noise");
        if (p.rho_E == 0.0)
            return 0.0;
        const double k = 2.0 / p.alpha;
        const double bd = p.beta() * std::pow(d_ABn, p.alpha);
        const double a = p.M - k;
        const double c = (p.M - 1) * bd / (p.eps * p.P_T);
        return 2.0 * std::numbers::pi * p.rho_E / p.alpha * shape_beta(p) * std::pow(bd, k) *
               hypergeom_u_scaled(a, 2.0 - k, c, opts.specfun);
    }

    double pcon_tabus_conditional(double d_ABn, const UsParams &up, const AnalyticOptions &opts)
    {
        return std::exp(-tabus_exponent(d_ABn, up, opts));
    }

    double pcon_tabus_eps0_conditional(double d_ABn, const UsParams &up)
    {
        up.validate();
        const auto &p = up.sys;
        if (!(d_ABn >= 0.0))
            throw DomainError("d_ABn must be nonnegative");
        if (p.rho_E == 0.0)
            return 1.0;
        const double k = 2.0 / p.alpha;
        return std::exp(-k * std::numbers::pi * p.rho_E * std::pow(p.beta(), k) * d_ABn * d_ABn * shape_beta(p));
    }

    double sop_tabus(const UsParams &up, const AnalyticOptions &opts)
    {
        up.validate();
        const auto &p = up.sys;
        if (p.rho_E == 0.0)
            return 0.0;
        if (p.eps == 0.0)
            return 1.0 - pcon_tabus_eps0(up);
        // v = rho_U pi d^2 is Gamma(n, 1)
        const double lg = std::lgamma(static_cast<double>(up.n));
        auto f = [&](double v)
        {
            if (v == 0.0)
                return 0.0;
            const double d = std::sqrt(v / (p.rho_U * std::numbers::pi));
            return std::exp((up.n - 1) * std::log(v) - v - lg - tabus_exponent(d, up, opts));
        };
        const double pcon = integrate_semi_infinite(f, 0.0, opts.quad, up.n).value;
        return std::clamp(1.0 - pcon, 0.0, 1.0);
    }

    double pcon_tabus_eps0(const UsParams &up)
    {
        up.validate();
        const auto &p = up.sys;
        const double k = 2.0 / p.alpha;
        const double base = 1.0 + p.rho_E / p.rho_U * k * std::pow(p.beta(), k) * shape_beta(p);
        return std::pow(base, -up.n);
    }

    double sop_tabus_eps0_nearest(const UsParams &up)
    {
        UsParams one = up;
        one.n = 1;
        return 1.0 - pcon_tabus_eps0(one);
    }

    double pcon_tabus_eps0_common_gain(const UsParams &up, const AnalyticOptions &opts)
    {
        up.validate();
        const auto &p = up.sys;
        if (p.rho_E == 0.0)
            return 1.0;
        const double k = 2.0 / p.alpha;
        const double K = p.rho_E / p.rho_U * std::tgamma(1.0 + k) * std::pow(p.beta(), k);
        const double lg = std::lgamma(static_cast<double>(p.M));
        auto f = [&](double x)
        {
            if (x == 0.0)
                return 0.0;
            const double dens = std::exp((p.M - 1) * std::log(x) - x - lg);
            return dens * std::pow(1.0 + K * std::pow(x, -k), -up.n);
        };
        return integrate_semi_infinite(f, 0.0, opts.quad, p.M).value;
    }
}
