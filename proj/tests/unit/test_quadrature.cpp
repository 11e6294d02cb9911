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

#include "doctest.h"

#include "fdsec/quadrature.hpp"
#include "fdsec/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fdsec;

TEST_CASE("integrate_1d: constants, Gaussian and polynomials")
{
    const auto one = integrate_1d([](double)
                                  { return 1.0; },
                                  0.0, 3.0);
    CHECK(one.value == doctest::Approx(3.0).epsilon(1e-14));

    QuadConfig q;
    q.rel_tol = 1e-10;
    const auto gauss = integrate_1d([](double x)
                                    { return std::exp(-x * x); },
                                    -6.0, 6.0, q);
    CHECK(std::abs(gauss.value - std::sqrt(std::numbers::pi)) < 1e-8);

    // Degree-7 polynomials against their exact antiderivative
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        double c[8];
        for (double &v : c)
            v = u(gen);
        const double lo = u(gen) - 2.0, hi = u(gen) + 2.5;
        auto poly = [&](double x)
        {
            double s = 0.0;
            for (int k = 7; k >= 0; --k)
                s = s * x + c[k];
            return s;
        };
        auto anti = [&](double x)
        {
            double s = 0.0;
            for (int k = 7; k >= 0; --k)
                s = s * x + c[k] / (k + 1);
            return s * x;
        };
        const auto r = integrate_1d(poly, lo, hi);
        const double want = anti(hi) - anti(lo);
        CHECK(std::abs(r.value - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("integrate_1d: reported error bounds the true error")
{
    auto f = [](double x)
    { return 1.0 / (1e-3 + (x - 0.3) * (x - 0.3)); };
    const double exact = (std::atan((1.0 - 0.3) / std::sqrt(1e-3)) - std::atan(-0.3 / std::sqrt(1e-3))) /
                         std::sqrt(1e-3);
    QuadConfig q;
    q.rel_tol = 1e-8;
    const auto r = integrate_1d(f, 0.0, 1.0, q);
    CHECK(std::abs(r.value - exact) <= r.error);
    CHECK(r.error <= q.rel_tol * std::abs(r.value));
}

TEST_CASE("integrate_1d: halving the tolerance stays within the previous error estimate")
{
    auto f = [](double x)
    { return std::exp(-3.0 * x) * std::sqrt(x) / (0.1 + x * x); };
    QuadConfig q;
    q.rel_tol = 1e-4;
    auto prev = integrate_1d(f, 0.0, 5.0, q);
    for (int i = 0; i < 10; ++i)
    {
        q.rel_tol *= 0.5;
        const auto next = integrate_1d(f, 0.0, 5.0, q);
        CHECK(std::abs(next.value - prev.value) <= prev.error);
        prev = next;
    }
}

TEST_CASE("integrate_1d: non-convergence carries the best estimate")
{
    QuadConfig q;
    q.max_subdivisions = 2;
    q.rel_tol = 1e-14;
    try
    {
        integrate_1d([](double x)
                     { return 1.0 / (1e-6 + x * x); },
                     -1.0, 1.0, q);
        FAIL("expected ConvergenceError");
    }
    catch (const ConvergenceError &e)
    {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.best_estimate() > 0.0);
    }
    CHECK_THROWS_AS(integrate_1d([](double x)
                                 { return x; },
                                 1.0, 0.0),
                    DomainError);
}

TEST_CASE("integrate_semi_infinite")
{
    QuadConfig q;
    q.rel_tol = 1e-10;
    CHECK(integrate_semi_infinite([](double x)
                                  { return std::exp(-x); },
                                  0.0, q)
              .value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite([](double x)
                                  { return x * std::exp(-x); },
                                  0.0, q)
              .value == doctest::Approx(1.0).epsilon(1e-10));
    const auto r = integrate_semi_infinite([](double x)
                                           { return std::exp(-x) / (1.0 + x); },
                                           0.0, q);
    CHECK(r.value == doctest::Approx(exp_integral_e1_scaled(1.0)).epsilon(1e-10));

    // Slowly decaying integrand with a matching scale
    const auto s = integrate_semi_infinite([](double x)
                                           { return std::exp(-x / 1e4); },
                                           2.0, q, 1e4);
    CHECK(s.value == doctest::Approx(1e4 * std::exp(-2.0 / 1e4)).epsilon(1e-10));
}

TEST_CASE("integrate_polar: areas and symmetry flag")
{
    const auto disk = integrate_polar([](double, double)
                                      { return 1.0; },
                                      0.0, 5.0);
    CHECK(disk.value == doctest::Approx(std::numbers::pi * 25.0).epsilon(1e-12));

    const auto ann = integrate_polar([](double, double)
                                     { return 1.0; },
                                     0.1, 5.0);
    CHECK(ann.value == doctest::Approx(std::numbers::pi * (25.0 - 0.01)).epsilon(1e-12));

    auto f = [](double r, double th)
    {
        const double db2 = r * r + 1.0 - 2.0 * r * std::cos(th);
        return std::exp(-0.3 * r * r) / (1.0 + 4.0 * r * r / db2);
    };
    QuadConfig q;
    q.rel_tol = 1e-8;
    PolarOptions sym;
    sym.theta_symmetric = true;
    sym.radial_breakpoints = {1.0};
    const auto full = integrate_polar(f, 0.0, 5.0, q);
    const auto half = integrate_polar(f, 0.0, 5.0, q, sym);
    CHECK(half.value == doctest::Approx(full.value).epsilon(q.rel_tol * 10));

    // alpha = 2 closed form of the theta integral: 2 pi (1 - k r^2 / sqrt(((1+k) r^2 + 1)^2 - 4 r^2))
    auto inner_exact = [](double r)
    {
        const double k = 4.0;
        const double a = (1.0 + k) * r * r + 1.0;
        return 2.0 * std::numbers::pi * (1.0 - k * r * r / std::sqrt(a * a - 4.0 * r * r));
    };
    const auto ref = integrate_1d([&](double r)
                                  { return r * std::exp(-0.3 * r * r) * inner_exact(r); },
                                  0.0, 5.0, q, std::vector<double>{1.0});
    CHECK(half.value == doctest::Approx(ref.value).epsilon(1e-7));
}

TEST_CASE("vector integrands share one mesh and match scalar results")
{
    QuadConfig q;
    q.rel_tol = 1e-10;
    const auto v = integrate_1d_vec([](double x, std::span<double> out)
                                    {
                                        out[0] = std::exp(-x);
                                        out[1] = std::sin(x);
                                        out[2] = 1.0 / (1.0 + x * x); },
                                    3, 0.0, 2.0, q);
    CHECK(v.value[0] == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-10));
    CHECK(v.value[1] == doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-10));
    CHECK(v.value[2] == doctest::Approx(std::atan(2.0)).epsilon(1e-10));

    const auto pv = integrate_polar_vec([](double r, double, std::span<double> out)
                                        {
                                            out[0] = 1.0;
                                            out[1] = r; },
                                        2, 0.0, 2.0, q);
    CHECK(pv.value[0] == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-10));
    CHECK(pv.value[1] == doctest::Approx(2.0 * std::numbers::pi * 8.0 / 3.0).epsilon(1e-10));

    const auto sv = integrate_semi_infinite_vec([](double x, std::span<double> out)
                                                {
                                                    out[0] = std::exp(-x);
                                                    out[1] = std::exp(-2.0 * x); },
                                                2, 0.0, q);
    CHECK(sv.value[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sv.value[1] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("QuadConfig validation")
{
    QuadConfig q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), DomainError);
    q = QuadConfig{};
    q.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate_1d([](double x)
                                 { return x; },
                                 0.0, 1.0, q),
                    DomainError);
}
