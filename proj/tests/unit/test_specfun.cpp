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

namespace
{
    double rel_err(double got, double want)
    {
        return std::abs(got - want) / std::abs(want);
    }

    QuadConfig tight()
    {
        QuadConfig q;
        q.rel_tol = 1e-12;
        q.abs_tol = 0.0;
        q.max_subdivisions = 5000;
        return q;
    }
}

TEST_CASE("lower incomplete gamma: identities and reference values")
{
    CHECK(lower_incomplete_gamma(1.0, 2.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
    CHECK(lower_incomplete_gamma(3.7, 0.0) == 0.0);
    // 30-digit reference of int_0^1.3 z^1.5 e^-z dz
    CHECK(rel_err(lower_incomplete_gamma(2.5, 1.3), 0.317226787475933608998589531549) < 1e-12);
    CHECK(rel_err(lower_incomplete_gamma(2.5, INFINITY), std::tgamma(2.5)) < 1e-15);

    double prev = 0.0;
    for (double x = 0.0; x < 40.0; x += 0.37)
    {
        const double v = lower_incomplete_gamma(4.2, x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("upper incomplete gamma: identities and reference values")
{
    for (double x : {0.0, 0.2, 1.0, 3.5, 12.0, 40.0})
        CHECK(rel_err(upper_incomplete_gamma(1.0, x), std::exp(-x)) < 1e-13);
    CHECK(rel_err(upper_incomplete_gamma(2.3, 0.0), std::tgamma(2.3)) < 1e-15);
    CHECK(rel_err(upper_incomplete_gamma(3.2, 2.0), 1.74775100022741239858866603077) < 1e-12);
}

TEST_CASE("lower plus upper incomplete gamma equals the complete gamma")
{
    double worst = 0.0;
    for (double a = 0.1; a <= 20.0; a += 0.35)
        for (double x = 0.0; x <= 50.0; x += 0.7)
        {
            const double s = lower_incomplete_gamma(a, x) + upper_incomplete_gamma(a, x);
            worst = std::max(worst, rel_err(s, std::tgamma(a)));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("regularized gamma functions are complementary and accurate in the tail")
{
    for (double a : {0.5, 1.0, 5.0, 10.0})
        for (double x : {0.01, 0.5, 3.0, 9.0, 30.0})
            CHECK(gamma_p(a, x) + gamma_q(a, x) == doctest::Approx(1.0).epsilon(1e-13));
    // Q(1,x) = e^-x keeps relative precision deep in the tail
    CHECK(rel_err(gamma_q(1.0, 200.0), std::exp(-200.0)) < 1e-12);
}

TEST_CASE("incomplete gamma domain errors")
{
    CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, -0.1), DomainError);
}

TEST_CASE("exponential integral")
{
    CHECK(rel_err(exp_integral_e1(0.3), 0.905676651675846739846109044231) < 1e-12);
    CHECK(rel_err(exp_integral_e1(5.0), 0.00114829559127532579733056196982) < 1e-12);
    CHECK(rel_err(exp_integral_e1(20.0), 9.8355252906498816903969871089e-11) < 1e-12);
    // int_0^inf e^-t/(1+t) dt = e E1(1)
    CHECK(rel_err(exp_integral_e1_scaled(1.0), 0.596347362323194074341078499369) < 1e-13);

    for (double x : {2.0, 10.0, 50.0, 300.0})
        CHECK(exp_integral_e1(x) < std::exp(-x) / x);

    double prev = exp_integral_e1(1e-4);
    for (double x = 2e-4; x < 60.0; x *= 1.13)
    {
        const double v = exp_integral_e1(x);
        CHECK(v < prev);
        prev = v;
    }

    // The scaled form stays finite where E1 underflows
    CHECK(exp_integral_e1_scaled(1e4) == doctest::Approx(1.0 / (1e4 + 1.0)).epsilon(1e-7));
    CHECK_THROWS_AS(exp_integral_e1(0.0), DomainError);
    CHECK_THROWS_AS(exp_integral_e1_scaled(-1.0), DomainError);
}

TEST_CASE("confluent hypergeometric U")
{
    CHECK(rel_err(hypergeom_u(4.0, 2.0, 0.7), 0.0425845685855475587418098973717) < 1e-10);
    CHECK(rel_err(hypergeom_u(1.5, 0.3, 0.02), 0.978179680919068810625755165282) < 1e-9);
    CHECK(rel_err(hypergeom_u(4.0, 1.0, 1e-3), 0.753705061178424820086020203426) < 1e-9);

    double worst = 0.0;
    for (double z = 0.01; z <= 50.0; z *= 1.25)
        worst = std::max(worst, rel_err(hypergeom_u(1.0, 1.0, z), exp_integral_e1_scaled(z)));
    CHECK(worst < 1e-9);

    // Leading asymptote z^-a
    CHECK(hypergeom_u_scaled(3.0, 1.5, 1e7) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS(hypergeom_u(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hypergeom_u(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("Gauss hypergeometric 2F1 on the negative axis")
{
    CHECK(rel_err(hypergeom_2f1(1.0, 1.0, 2.0, -1.0), std::log(2.0)) < 1e-12);
    CHECK(hypergeom_2f1(0.3, 1.7, 2.2, 0.0) == 1.0);
    CHECK(rel_err(hypergeom_2f1(1.0, 0.5, 1.5, -4.0), 0.553574358897045251508532730089) < 1e-11);

    double worst = 0.0;
    for (double x = 1e-3; x <= 100.0; x *= 1.07)
        worst = std::max(worst, rel_err(x * hypergeom_2f1(1.0, 1.0, 2.0, -x), std::log1p(x)));
    CHECK(rel_err(100.0 * hypergeom_2f1(1.0, 1.0, 2.0, -100.0), std::log(101.0)) < 1e-10);
    CHECK(worst < 1e-10);

    CHECK_THROWS_AS(hypergeom_2f1(1.0, 1.0, 0.0, -0.5), DomainError);
    CHECK_THROWS_AS(hypergeom_2f1(1.0, 1.0, 2.0, 0.5), DomainError);

    SpecFunConfig tiny;
    tiny.max_terms = 3;
    CHECK_THROWS_AS(hypergeom_2f1(1.0, 1.0, 2.0, -0.4, tiny), ConvergenceError);
}

TEST_CASE("beta function identities")
{
    for (int M = 2; M <= 12; ++M)
        CHECK(rel_err(beta_fn(1.0, M - 1.0), 1.0 / (M - 1.0)) < 1e-12);
    CHECK(rel_err(beta_fn(0.5, 0.5), std::numbers::pi) < 1e-13);
    CHECK(rel_err(beta_fn(4.0 - 1.0, 1.0), 1.0 / 3.0) < 1e-13);
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta_fn(1.0, -2.0), DomainError);
}

TEST_CASE("special functions match adaptive quadrature of their integral definitions")
{
    std::mt19937_64 gen(20260419);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const auto q = tight();

    for (int i = 0; i < 50; ++i)
    {
        // gamma(a,x) with t = z^a to remove the endpoint singularity
        const double a = 0.5 + 9.5 * u01(gen);
        const double x = 0.05 + 30.0 * u01(gen);
        const double ref_lower = integrate_1d([a](double t)
                                              { return std::exp(-std::pow(t, 1.0 / a)) / a; },
                                              0.0, std::pow(x, a), q)
                                     .value;
        CHECK(rel_err(lower_incomplete_gamma(a, x), ref_lower) < 1e-8);

        const double ref_upper = integrate_semi_infinite([a](double z)
                                                         { return std::exp((a - 1.0) * std::log(z) - z); },
                                                         x, q)
                                     .value;
        CHECK(rel_err(upper_incomplete_gamma(a, x), ref_upper) < 1e-8);
    }

    for (int i = 0; i < 50; ++i)
    {
        const double x = std::exp(-4.0 + 8.0 * u01(gen));
        const double ref = integrate_semi_infinite([x](double t)
                                                   { return std::exp(-x * t) / (1.0 + t); },
                                                   0.0, q, 1.0 / x)
                               .value;
        CHECK(rel_err(exp_integral_e1_scaled(x), ref) < 1e-8);
        CHECK(rel_err(exp_integral_e1(x), ref * std::exp(-x)) < 1e-8);
    }

    for (int i = 0; i < 50; ++i)
    {
        const double a = 1.0 + 4.0 * u01(gen);
        const double b = -1.0 + 4.0 * u01(gen);
        const double z = 0.05 + 20.0 * u01(gen);
        const double ref = integrate_semi_infinite([=](double t)
                                                   { return std::exp(-z * t + (a - 1.0) * std::log(t) +
                                                                     (b - a - 1.0) * std::log1p(t) - std::lgamma(a)); },
                                                   0.0, q, 1.0 / z)
                               .value;
        CHECK(rel_err(hypergeom_u(a, b, z), ref) < 1e-8);
    }

    for (int i = 0; i < 50; ++i)
    {
        const double a = -2.0 + 5.0 * u01(gen);
        const double b = 1.0 + 2.0 * u01(gen);
        const double c = b + 1.0 + 2.0 * u01(gen);
        const double z = -std::exp(-3.0 + 7.0 * u01(gen));
        const double ref = integrate_1d([=](double t)
                                        { return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
                                                 std::pow(1.0 - z * t, -a); },
                                        0.0, 1.0, q)
                               .value *
                           std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b));
        CHECK(rel_err(hypergeom_2f1(a, b, c, z), ref) < 1e-8);
    }

    for (int i = 0; i < 50; ++i)
    {
        const double x = 1.0 + 6.0 * u01(gen);
        const double y = 1.0 + 6.0 * u01(gen);
        const double ref = integrate_1d([=](double t)
                                        { return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0); },
                                        0.0, 1.0, q)
                               .value;
        CHECK(rel_err(beta_fn(x, y), ref) < 1e-8);
    }
}
