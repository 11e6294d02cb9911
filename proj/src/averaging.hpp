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

#ifndef FDSEC_AVERAGING_H
#define FDSEC_AVERAGING_H

#include "fdsec/noncolluding.hpp"
#include "fdsec/quadrature.hpp"
#include "interp.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace fdsec::detail
{
    // E[pcon(X) 1{X > x_lo}] for X with the given cdf/pdf. pcon is sampled at
    // quantile-spaced nodes (Chebyshev-like in probability), interpolated by PCHIP
    // and integrated against the pdf; the node count doubles until the result settles.
    inline double average_conditional(const std::function<double(double)> &pcon,
                                      const std::function<double(double)> &cdf,
                                      const std::function<double(double)> &pdf,
                                      double x_lo, double scale, const AnalyticOptions &opts)
    {
        const double u_lo = cdf(x_lo);
        const double mass = 1.0 - u_lo;
        if (!(mass > 0.0))
            return 0.0;

        auto node_x = [&](int k, int n)
        {
            if (k == 0)
                return x_lo;
            double frac = 0.5 * (1.0 - std::cos(std::numbers::pi * k / n));
            if (k == n)
                frac = 1.0 - 1e-13 / mass;
            return quantile(cdf, u_lo + mass * frac, x_lo, scale);
        };

        auto outer = [&](const Pchip &ip)
        {
            return integrate_semi_infinite([&](double x)
                                           { return ip(x) * pdf(x); },
                                           x_lo, opts.quad, scale)
                .value;
        };

        int n = 64;
        std::vector<double> xs(n + 1), ys(n + 1);
        for (int k = 0; k <= n; ++k)
        {
            xs[k] = node_x(k, n);
            // The threshold itself is in outage; use the limit from above
            ys[k] = pcon(k == 0 ? x_lo + 1e-10 * scale : xs[k]);
        }
        auto build = [](const std::vector<double> &x, const std::vector<double> &y)
        {
            std::vector<double> ux, uy;
            for (std::size_t k = 0; k < x.size(); ++k)
                if (ux.empty() || x[k] > ux.back())
                {
                    ux.push_back(x[k]);
                    uy.push_back(y[k]);
                }
            return Pchip(std::move(ux), std::move(uy));
        };
        double prev = outer(build(xs, ys));
        while (2 * n <= opts.max_average_nodes)
        {
            const int n2 = 2 * n;
            std::vector<double> x2(n2 + 1), y2(n2 + 1);
            for (int k = 0; k <= n2; ++k)
            {
                if (k % 2 == 0 && k != n2)
                {
                    x2[k] = xs[k / 2];
                    y2[k] = ys[k / 2];
                }
                else
                {
                    x2[k] = k == n2 ? xs[n] : node_x(k, n2);
                    y2[k] = k == n2 ? ys[n] : pcon(x2[k]);
                }
            }
            xs = std::move(x2);
            ys = std::move(y2);
            n = n2;
            const double cur = outer(build(xs, ys));
            if (std::abs(cur - prev) <= opts.average_rel_tol * std::abs(cur) + opts.quad.abs_tol)
                return cur;
            prev = cur;
        }
        return prev;
    }
}

#endif
