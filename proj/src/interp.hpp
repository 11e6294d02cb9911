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

#ifndef FDSEC_INTERP_H
#define FDSEC_INTERP_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace fdsec::detail
{
    // Monotone piecewise cubic Hermite interpolant (Fritsch-Carlson slopes).
    // Constant extrapolation outside the node range.
    class Pchip
    {
    public:
        Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y))
        {
            const std::size_t n = x_.size();
            d_.assign(n, 0.0);
            if (n < 2)
                return;
            std::vector<double> h(n - 1), delta(n - 1);
            for (std::size_t k = 0; k + 1 < n; ++k)
            {
                h[k] = x_[k + 1] - x_[k];
                delta[k] = (y_[k + 1] - y_[k]) / h[k];
            }
            if (n == 2)
            {
                d_[0] = d_[1] = delta[0];
                return;
            }
            for (std::size_t k = 1; k + 1 < n; ++k)
            {
                if (delta[k - 1] * delta[k] <= 0.0)
                    d_[k] = 0.0;
                else
                {
                    const double w1 = 2.0 * h[k] + h[k - 1];
                    const double w2 = h[k] + 2.0 * h[k - 1];
                    d_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
                }
            }
            d_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
            d_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
        }

        double operator()(double x) const
        {
            if (x <= x_.front())
                return y_.front();
            if (x >= x_.back())
                return y_.back();
            const auto it = std::upper_bound(x_.begin(), x_.end(), x);
            const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
            const double h = x_[k + 1] - x_[k];
            const double t = (x - x_[k]) / h;
            const double t2 = t * t, t3 = t2 * t;
            const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
            const double h10 = t3 - 2.0 * t2 + t;
            const double h01 = -2.0 * t3 + 3.0 * t2;
            const double h11 = t3 - t2;
            return h00 * y_[k] + h * h10 * d_[k] + h01 * y_[k + 1] + h * h11 * d_[k + 1];
        }

        const std::vector<double> &nodes() const { return x_; }

    private:
        static double end_slope(double h0, double h1, double del0, double del1)
        {
            double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
            if (d * del0 <= 0.0)
                d = 0.0;
            else if (del0 * del1 <= 0.0 && std::abs(d) > std::abs(3.0 * del0))
                d = 3.0 * del0;
            return d;
        }

        std::vector<double> x_, y_, d_;
    };

    // Smallest x >= lo with cdf(x) >= u, by bracketing and bisection
    inline double quantile(const std::function<double(double)> &cdf, double u, double lo, double scale)
    {
        double a = lo;
        double b = lo + scale;
        int guard = 0;
        while (cdf(b) < u && guard++ < 200)
        {
            a = b;
            b = lo + 2.0 * (b - lo);
        }
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (a + b);
            if (!(mid > a && mid < b))
                break;
            if (cdf(mid) < u)
                a = mid;
            else
                b = mid;
        }
        return b;
    }
}

#endif
