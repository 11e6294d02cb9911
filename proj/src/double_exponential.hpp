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

// Double-exponential (tanh-sinh / exp-sinh) trapezoid rules used by the special
// functions for integral representations with endpoint singularities.

#ifndef FDSEC_DOUBLE_EXPONENTIAL_H
#define FDSEC_DOUBLE_EXPONENTIAL_H

#include <cmath>
#include <numbers>

namespace fdsec::detail
{
    struct DeResult
    {
        double value = 0.0;
        double change = 0.0; // |difference| between the last two levels
        bool converged = false;
    };

    // int_0^1 f(x) dx; f is called as f(x, 1-x) so singular factors at x = 1 keep full precision
    template <typename F>
    DeResult tanh_sinh(F &&f, double tol, int max_level = 11)
    {
        constexpr double s_max = 4.5;
        const double half_pi = 0.5 * std::numbers::pi;

        auto term = [&](double s) -> double
        {
            const double u = std::numbers::pi * std::sinh(s);
            const double x = 1.0 / (1.0 + std::exp(-u));
            const double xc = 1.0 / (1.0 + std::exp(u));
            if (x <= 0.0 || xc <= 0.0)
                return 0.0;
            const double w = 2.0 * half_pi * std::cosh(s) * x * xc;
            const double v = f(x, xc) * w;
            return std::isfinite(v) ? v : 0.0;
        };

        double h = 0.5;
        double sum = term(0.0);
        for (double s = h; s <= s_max; s += h)
            sum += term(s) + term(-s);
        DeResult res;
        res.value = h * sum;

        for (int level = 1; level <= max_level; ++level)
        {
            h *= 0.5;
            for (double s = h; s <= s_max; s += 2.0 * h)
                sum += term(s) + term(-s);
            const double next = h * sum;
            res.change = std::abs(next - res.value);
            res.value = next;
            if (level >= 3 && res.change <= tol * std::abs(next))
            {
                res.converged = true;
                break;
            }
        }
        return res;
    }

    // int_0^inf f(t) dt via t = exp(pi/2 sinh s)
    template <typename F>
    DeResult exp_sinh(F &&f, double tol, int max_level = 11)
    {
        constexpr double s_max = 4.5;
        const double half_pi = 0.5 * std::numbers::pi;

        auto term = [&](double s) -> double
        {
            const double t = std::exp(half_pi * std::sinh(s));
            if (t <= 0.0 || !std::isfinite(t))
                return 0.0;
            const double v = f(t) * t * half_pi * std::cosh(s);
            return std::isfinite(v) ? v : 0.0;
        };

        double h = 0.5;
        double sum = term(0.0);
        for (double s = h; s <= s_max; s += h)
            sum += term(s) + term(-s);
        DeResult res;
        res.value = h * sum;

        for (int level = 1; level <= max_level; ++level)
        {
            h *= 0.5;
            for (double s = h; s <= s_max; s += 2.0 * h)
                sum += term(s) + term(-s);
            const double next = h * sum;
            res.change = std::abs(next - res.value);
            res.value = next;
            if (level >= 3 && res.change <= tol * std::abs(next))
            {
                res.converged = true;
                break;
            }
        }
        return res;
    }
}

#endif
