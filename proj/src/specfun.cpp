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

#include "fdsec/specfun.hpp"
#include "double_exponential.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace fdsec
{
    void SpecFunConfig::validate() const
    {
        if (!(series_tol > 0.0))
            throw DomainError("SpecFunConfig: series_tol must be positive");
        if (max_terms < 1)
            throw DomainError("SpecFunConfig: max_terms must be at least 1");
    }

    namespace
    {
        constexpr double fp_min = 1e-300;

        void check_gamma_args(double a, double x, const char *name)
        {
            if (!(a > 0.0))
                throw DomainError(std::string(name) + ": shape a must be positive");
            if (!(x >= 0.0))
                throw DomainError(std::string(name) + ": argument x must be nonnegative");
        }

        // gamma(a,x) = x^a e^-x * sum
        double lower_gamma_series(double a, double x, const SpecFunConfig &cfg)
        {
            double ap = a;
            double del = 1.0 / a;
            double sum = del;
            for (int n = 1; n <= cfg.max_terms; ++n)
            {
                ap += 1.0;
                del *= x / ap;
                sum += del;
                if (std::abs(del) < std::abs(sum) * cfg.series_tol)
                    return sum;
            }
            throw ConvergenceError("incomplete gamma series did not converge", sum);
        }

        // Gamma(a,x) = x^a e^-x * cf (modified Lentz)
        double upper_gamma_cf(double a, double x, const SpecFunConfig &cfg)
        {
            double b = x + 1.0 - a;
            double c = 1.0 / fp_min;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i <= cfg.max_terms; ++i)
            {
                const double an = -i * (i - a);
                b += 2.0;
                d = an * d + b;
                if (std::abs(d) < fp_min)
                    d = fp_min;
                c = b + an / c;
                if (std::abs(c) < fp_min)
                    c = fp_min;
                d = 1.0 / d;
                const double del = d * c;
                h *= del;
                if (std::abs(del - 1.0) < cfg.series_tol)
                    return h;
            }
            throw ConvergenceError("incomplete gamma continued fraction did not converge", h);
        }

        double log_prefactor(double a, double x)
        {
            return a * std::log(x) - x;
        }

        // e^x E1(x) for x > 1 by continued fraction
        double e1_scaled_cf(double x, const SpecFunConfig &cfg)
        {
            double b = x + 1.0;
            double c = 1.0 / fp_min;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i <= cfg.max_terms; ++i)
            {
                const double an = -double(i) * double(i);
                b += 2.0;
                d = 1.0 / (an * d + b);
                c = b + an / c;
                const double del = c * d;
                h *= del;
                if (std::abs(del - 1.0) < cfg.series_tol)
                    return h;
            }
            throw ConvergenceError("exponential integral continued fraction did not converge", h);
        }

        // E1(x) for 0 < x <= 1 by power series
        double e1_series(double x, const SpecFunConfig &cfg)
        {
            constexpr double euler_gamma = 0.57721566490153286061;
            double sum = 0.0;
            double fact = 1.0;
            for (int k = 1; k <= cfg.max_terms; ++k)
            {
                fact *= -x / k;
                const double del = -fact / k;
                sum += del;
                if (std::abs(del) < std::abs(sum) * cfg.series_tol)
                    return -euler_gamma - std::log(x) + sum;
            }
            throw ConvergenceError("exponential integral series did not converge", -euler_gamma - std::log(x) + sum);
        }

        // Generalized Gauss-Laguerre rule for weight x^alpha e^-x, weights normalized to sum 1
        struct LaguerreRule
        {
            std::vector<double> nodes;
            std::vector<double> weights;
        };

        // Golub-Welsch: eigenvalues of the Jacobi matrix by implicit QL, tracking only
        // the first component of each eigenvector
        LaguerreRule build_laguerre_rule(double alpha, int n)
        {
            std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
            for (int k = 0; k < n; ++k)
                d[k] = 2.0 * k + alpha + 1.0;
            for (int k = 1; k < n; ++k)
                e[k - 1] = std::sqrt(k * (k + alpha));
            z[0] = 1.0;

            for (int l = 0; l < n; ++l)
            {
                int iter = 0;
                int m;
                do
                {
                    for (m = l; m < n - 1; ++m)
                    {
                        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                            break;
                    }
                    if (m != l)
                    {
                        if (iter++ == 100)
                            throw ConvergenceError("Gauss-Laguerre eigenvalue iteration did not converge", 0.0);
                        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                        double r = std::hypot(g, 1.0);
                        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                        double s = 1.0, c = 1.0, p = 0.0;
                        int i;
                        for (i = m - 1; i >= l; --i)
                        {
                            double f = s * e[i];
                            const double b = c * e[i];
                            r = std::hypot(f, g);
                            e[i + 1] = r;
                            if (r == 0.0)
                            {
                                d[i + 1] -= p;
                                e[m] = 0.0;
                                break;
                            }
                            s = f / r;
                            c = g / r;
                            g = d[i + 1] - p;
                            r = (d[i] - g) * s + 2.0 * c * b;
                            p = s * r;
                            d[i + 1] = g + p;
                            g = c * r - b;
                            f = z[i + 1];
                            z[i + 1] = s * z[i] + c * f;
                            z[i] = c * z[i] - s * f;
                        }
                        if (r == 0.0 && i >= l)
                            continue;
                        d[l] -= p;
                        e[l] = g;
                        e[m] = 0.0;
                    }
                } while (m != l);
            }

            LaguerreRule rule;
            rule.nodes = std::move(d);
            rule.weights.resize(n);
            for (int k = 0; k < n; ++k)
                rule.weights[k] = z[k] * z[k];
            return rule;
        }

        std::shared_ptr<const LaguerreRule> laguerre_rule(double alpha, int n)
        {
            static std::mutex mtx;
            static std::map<std::pair<double, int>, std::shared_ptr<const LaguerreRule>> cache;
            const auto key = std::make_pair(alpha, n);
            {
                std::lock_guard<std::mutex> lock(mtx);
                auto it = cache.find(key);
                if (it != cache.end())
                    return it->second;
            }
            auto rule = std::make_shared<const LaguerreRule>(build_laguerre_rule(alpha, n));
            std::lock_guard<std::mutex> lock(mtx);
            if (cache.size() > 256)
                cache.clear();
            cache.emplace(key, rule);
            return rule;
        }

        double hyp2f1_series(double a, double b, double c, double z, const SpecFunConfig &cfg)
        {
            double term = 1.0;
            double sum = 1.0;
            for (int k = 0; k < cfg.max_terms; ++k)
            {
                term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
                sum += term;
                if (term == 0.0 || std::abs(term) <= cfg.series_tol * std::abs(sum))
                    return sum;
            }
            throw ConvergenceError("hypergeometric 2F1 series exceeded max_terms", sum);
        }

        bool nonpositive_integer(double x)
        {
            return x <= 0.0 && x == std::floor(x);
        }

        // Euler integral, requires c > b > 0
        double hyp2f1_euler(double a, double b, double c, double z, const SpecFunConfig &cfg)
        {
            auto f = [=](double x, double xc)
            {
                return std::exp((b - 1.0) * std::log(x) + (c - b - 1.0) * std::log(xc) - a * std::log1p(-z * x));
            };
            const auto res = detail::tanh_sinh(f, cfg.series_tol);
            const double value = res.value / beta_fn(b, c - b);
            if (!res.converged)
                throw ConvergenceError("hypergeometric 2F1 Euler integral did not converge", value);
            return value;
        }
    }

    double gamma_p(double a, double x, const SpecFunConfig &cfg)
    {
        check_gamma_args(a, x, "gamma_p");
        cfg.validate();
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return 1.0;
        const double lp = log_prefactor(a, x) - std::lgamma(a);
        if (x < a + 1.0)
            return std::exp(lp) * lower_gamma_series(a, x, cfg);
        return 1.0 - std::exp(lp) * upper_gamma_cf(a, x, cfg);
    }

    double gamma_q(double a, double x, const SpecFunConfig &cfg)
    {
        check_gamma_args(a, x, "gamma_q");
        cfg.validate();
        if (x == 0.0)
            return 1.0;
        if (std::isinf(x))
            return 0.0;
        const double lp = log_prefactor(a, x) - std::lgamma(a);
        if (x < a + 1.0)
            return 1.0 - std::exp(lp) * lower_gamma_series(a, x, cfg);
        return std::exp(lp) * upper_gamma_cf(a, x, cfg);
    }

    double lower_incomplete_gamma(double a, double x, const SpecFunConfig &cfg)
    {
        check_gamma_args(a, x, "lower_incomplete_gamma");
        cfg.validate();
        if (x == 0.0)
            return 0.0;
        if (std::isinf(x))
            return std::tgamma(a);
        if (x < a + 1.0)
            return std::exp(log_prefactor(a, x)) * lower_gamma_series(a, x, cfg);
        return std::tgamma(a) - std::exp(log_prefactor(a, x)) * upper_gamma_cf(a, x, cfg);
    }

    double upper_incomplete_gamma(double a, double x, const SpecFunConfig &cfg)
    {
        check_gamma_args(a, x, "upper_incomplete_gamma");
        cfg.validate();
        if (x == 0.0)
            return std::tgamma(a);
        if (std::isinf(x))
            return 0.0;
        if (x < a + 1.0)
            return std::tgamma(a) - std::exp(log_prefactor(a, x)) * lower_gamma_series(a, x, cfg);
        return std::exp(log_prefactor(a, x)) * upper_gamma_cf(a, x, cfg);
    }

    double exp_integral_e1(double x, const SpecFunConfig &cfg)
    {
        if (!(x > 0.0))
            throw DomainError("exp_integral_e1: argument must be positive");
        cfg.validate();
        if (std::isinf(x))
            return 0.0;
        if (x <= 1.0)
            return e1_series(x, cfg);
        return e1_scaled_cf(x, cfg) * std::exp(-x);
    }

    double exp_integral_e1_scaled(double x, const SpecFunConfig &cfg)
    {
        if (!(x > 0.0))
            throw DomainError("exp_integral_e1_scaled: argument must be positive");
        cfg.validate();
        if (std::isinf(x))
            return 0.0;
        if (x <= 1.0)
            return std::exp(x) * e1_series(x, cfg);
        return e1_scaled_cf(x, cfg);
    }

    double hypergeom_u_scaled(double a, double b, double z, const SpecFunConfig &cfg)
    {
        if (!(a > 0.0))
            throw DomainError("hypergeom_u: parameter a must be positive");
        if (!(z > 0.0))
            throw DomainError("hypergeom_u: argument z must be positive");
        cfg.validate();

        // z^a U(a,b,z) = 1/Gamma(a) int_0^inf u^(a-1) e^-u (1 + u/z)^(b-a-1) du
        const double p = b - a - 1.0;
        auto f = [=](double u)
        { return std::exp(p * std::log1p(u / z)); };

        double previous = std::numeric_limits<double>::quiet_NaN();
        for (int n = 64; n <= 512; n *= 2)
        {
            const auto rule = laguerre_rule(a - 1.0, n);
            double sum = 0.0;
            for (int k = 0; k < n; ++k)
            {
                if (rule->weights[k] == 0.0)
                    continue;
                sum += rule->weights[k] * f(rule->nodes[k]);
            }
            if (std::isfinite(previous) && std::abs(sum - previous) <= cfg.series_tol * std::abs(sum))
                return sum;
            previous = sum;
        }

        // Small z: the integrand's singularity at u = -z sits too close to the
        // origin for the Laguerre rule; integrate the representation directly
        const double lg = std::lgamma(a);
        auto g = [=](double t)
        { return std::exp(-z * t + (a - 1.0) * std::log(t) + p * std::log1p(t) - lg); };
        const auto res = detail::exp_sinh(g, cfg.series_tol);
        const double value = res.value * std::pow(z, a);
        if (!res.converged)
            throw ConvergenceError("hypergeom_u: quadrature did not converge", value);
        return value;
    }

    double hypergeom_u(double a, double b, double z, const SpecFunConfig &cfg)
    {
        const double scaled = hypergeom_u_scaled(a, b, z, cfg);
        return std::exp(std::log(scaled) - a * std::log(z));
    }

    double hypergeom_2f1(double a, double b, double c, double z, const SpecFunConfig &cfg)
    {
        if (!(c > 0.0))
            throw DomainError("hypergeom_2f1: parameter c must be positive");
        if (!(z <= 0.0))
            throw DomainError("hypergeom_2f1: only z <= 0 is supported");
        cfg.validate();
        if (z == 0.0 || a == 0.0 || b == 0.0)
            return 1.0;
        if (z >= -0.5)
            return hyp2f1_series(a, b, c, z, cfg);

        // Pfaff: 2F1(a,b;c;z) = (1-z)^-a 2F1(a,c-b;c;z/(z-1))
        const double w = z / (z - 1.0);
        const double pref = std::pow(1.0 - z, -a);
        if (w <= 0.9 || nonpositive_integer(a) || nonpositive_integer(c - b))
            return pref * hyp2f1_series(a, c - b, c, w, cfg);
        if (c > b && b > 0.0)
            return hyp2f1_euler(a, b, c, z, cfg);
        if (c > a && a > 0.0)
            return hyp2f1_euler(b, a, c, z, cfg);
        return pref * hyp2f1_series(a, c - b, c, w, cfg);
    }

    double beta_fn(double x, double y)
    {
        if (!(x > 0.0) || !(y > 0.0))
            throw DomainError("beta_fn: arguments must be positive");
        if (x + y < 170.0)
            return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
        return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
    }
}
