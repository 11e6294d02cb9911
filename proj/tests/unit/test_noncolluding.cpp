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

#include "fdsec/noncolluding.hpp"
#include "fdsec/quadrature.hpp"

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

    // Independent simulation of the per-eavesdropper field, with a generator that
    // the library does not use. Returns the fraction of fields in which no
    // eavesdropper beats the threshold, for a fixed state of the main channel.
    struct FieldOracle
    {
        std::mt19937_64 gen;
        explicit FieldOracle(unsigned long long seed) : gen(seed) {}

        template <class Fail>
        double run(const SystemParams &p, int trials, Fail &&fails)
        {
            std::poisson_distribution<int> count(p.rho_E * std::numbers::pi * (p.R * p.R - p.R_g * p.R_g));
            std::uniform_real_distribution<double> u(0.0, 1.0);
            int ok = 0;
            for (int t = 0; t < trials; ++t)
            {
                const int n = count(gen);
                bool secure = true;
                for (int e = 0; e < n && secure; ++e)
                {
                    const double r = std::sqrt(p.R_g * p.R_g + u(gen) * (p.R * p.R - p.R_g * p.R_g));
                    const double th = 2.0 * std::numbers::pi * u(gen);
                    secure = !fails(r, th, gen);
                }
                ok += secure;
            }
            return static_cast<double>(ok) / trials;
        }
    };

    SystemParams small_field()
    {
        auto p = SystemParams::defaults();
        p.R = 3.0;
        p.rho_E = 0.3;
        p.P_T = 100.0;
        p.P_J = 100.0;
        p.rho = 0.05;
        return p;
    }
}

TEST_CASE("per-eavesdropper integrands")
{
    auto p = SystemParams::defaults();
    const auto ip = make_tas_integrand(50.0, p);
    CHECK(ip.Y0 == doctest::Approx(50.0));
    // At Alice the interference term vanishes and only the noise factor remains
    CHECK(psi_integrand(0.0, 0.3, ip) == 1.0);
    // On top of Bob the jammer wins
    CHECK(psi_integrand(1.0, 0.0, ip) == 0.0);
    const double r = 2.0, th = 1.1;
    const double dbe2 = r * r + 1.0 - 2.0 * r * std::cos(th);
    CHECK(psi_integrand(r, th, ip) ==
          doctest::Approx(std::exp(-r * r * 50.0 / p.P_T) / (1.0 + p.m() * r * r / dbe2 * 50.0)).epsilon(1e-14));

    const auto tb = make_tab_integrand(30.0, p);
    const double want = std::exp(-r * r * 30.0 / p.P_T) /
                        ((1.0 + p.m() * r * r / dbe2 * 30.0) * std::pow(1.0 + p.eps * 30.0 / (p.M - 1), p.M - 1));
    CHECK(omega_integrand(r, th, tb) == doctest::Approx(want).epsilon(1e-14));

    auto il = make_tab_integrand(30.0, p, NoiseTerm::interference_limited);
    CHECK(omega_integrand(r, th, il) == doctest::Approx(want * std::exp(r * r * 30.0 / p.P_T)).epsilon(1e-14));

    auto as = make_tab_integrand(30.0, p, NoiseTerm::asymptotic);
    CHECK(omega_integrand(r, th, as) > omega_integrand(r, th, il));
    as.P_J = 0.0;
    CHECK_THROWS_AS(omega_integrand(r, th, as), DomainError);
}

TEST_CASE("antenna selection: polar quadrature matches the radial alpha=2 form")
{
    auto p = SystemParams::defaults();
    for (double Y : {0.5, 5.0, 80.0, 2000.0})
        for (double PJ : {0.0, 10.0, 1e4})
        {
            p.P_J = PJ;
            const double a = pcon_tas_conditional(Y, p);
            const double b = pcon_tas_alpha2_closedform(Y, p);
            CHECK(std::abs(a - b) <= 1e-6 * std::max(b, 1e-300) + 1e-12);
        }
    p.R_s = 1.0;
    CHECK_THROWS_AS(pcon_tas_alpha2_closedform(5.0, p), PreconditionError);
}

TEST_CASE("antenna selection: conditional probability against a field simulation")
{
    auto p = small_field();
    p.alpha = 3.0;
    p.R_s = 0.5;
    const double Y = 40.0;
    const double Y0 = Y / p.beta() + 1.0 / p.beta() - 1.0;
    FieldOracle oracle(11);
    std::exponential_distribution<double> ex(1.0);
    const int trials = 200000;
    const double mc = oracle.run(p, trials, [&](double r, double th, std::mt19937_64 &g)
                                 {
        const double dbe = distance_bob_to_point(r, th, p.d);
        const double snr = ex(g) * p.P_T * std::pow(r, -p.alpha) /
                           (1.0 + p.P_J * ex(g) * std::pow(dbe, -p.alpha));
        return snr >= Y0; });
    const double an = pcon_tas_conditional(Y, p);
    const double se = std::sqrt(an * (1.0 - an) / trials);
    CHECK(std::abs(mc - an) < 4.0 * se);
}

TEST_CASE("beamforming: conditional probability against a field simulation")
{
    auto p = small_field();
    p.R_s = 0.5;
    p.eps = 0.2;
    p.R_g = 0.2;
    const double z = 25.0;
    const double beta = p.beta();
    FieldOracle oracle(12);
    std::exponential_distribution<double> ex(1.0);
    std::gamma_distribution<double> an_gain(p.M - 1, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int trials = 200000;
    // Exact eavesdropper SINR: (1-eps) P_T Theta ||h_AE||^2 r^-a over noise,
    // jamming and AN with power eps P_T/(M-1) on an M-1 dimensional null space
    const double mc = oracle.run(p, trials, [&](double r, double th, std::mt19937_64 &g)
                                 {
        const double dbe = distance_bob_to_point(r, th, p.d);
        const double pl = std::pow(r, -p.alpha);
        const double signal = (1.0 - p.eps) * p.P_T * ex(g) * pl;
        const double noise = 1.0 + p.P_J * ex(g) * std::pow(dbe, -p.alpha) +
                             p.eps * p.P_T / (p.M - 1) * an_gain(g) * pl;
        // Bob: (1-eps) Z; secrecy requires 1 + SINR_E < (1 + (1-eps) z) / beta
        return 1.0 + signal / noise >= (1.0 + (1.0 - p.eps) * z) / beta; });
    const double an = pcon_tab_conditional(z, p);
    const double se = std::sqrt(an * (1.0 - an) / trials);
    CHECK(std::abs(mc - an) < 4.0 * se);
}

TEST_CASE("beamforming: interference-limited polar form matches the radial alpha=2 form")
{
    auto p = SystemParams::defaults();
    AnalyticOptions o;
    o.noise_term = NoiseTerm::interference_limited;
    for (double z : {0.3, 7.0, 300.0})
        for (double eps : {0.0, 0.05})
        {
            p.eps = eps;
            const double a = pcon_tab_conditional(z, p, o);
            const double b = pcon_tab_alpha2_beta1(z, p);
            CHECK(std::abs(a - b) <= 1e-6 * b + 1e-12);
        }
}

TEST_CASE("closed forms without jamming agree with the general conditional")
{
    auto p = SystemParams::defaults();
    p.P_J = 0.0;
    p.alpha = 3.5;
    p.R_g = 0.3;
    for (double h2 : {0.05, 0.7, 3.0})
    {
        // beta = 1 removes the constant the large-P_T forms drop
        const double Y = p.P_T * h2;
        CHECK(rel_err(pcon_tas_hd(h2, p), pcon_tas_conditional(Y, p)) < 1e-6);
        CHECK(rel_err(pcon_tab_hd(h2, p), pcon_tab_conditional(Y, p)) < 1e-6);
    }
    p.P_J = 1.0;
    CHECK_THROWS_AS(pcon_tas_hd(1.0, p), PreconditionError);
}

TEST_CASE("infinite radius limit of the no-jamming closed form")
{
    auto p = SystemParams::defaults();
    p.P_J = 0.0;
    p.P_T = 1.0;
    p.rho_E = 0.01;
    p.R = 1e3;
    for (double alpha : {2.0, 3.0, 4.0})
    {
        p.alpha = alpha;
        const double h2 = 0.8;
        const double lim = tas_hd_limit_R_inf(h2, p);
        CHECK(rel_err(std::log(pcon_tas_hd(h2, p)) / p.rho_E, lim) < 1e-8);
    }
}

TEST_CASE("infinite jamming power limits")
{
    auto p = SystemParams::defaults();
    const double h2 = 1.7, g2 = 0.6, hn = 4.1;
    p.P_J = 1e13;
    const double Y = tas_snr(p, h2, g2);
    CHECK(rel_err(pcon_tas_conditional(Y, p), pcon_tas_pj_infinity(h2, g2, p)) < 1e-5);
    AnalyticOptions o;
    o.noise_term = NoiseTerm::interference_limited;
    p.eps = 0.0;
    const double z = tab_snr_scale(p, hn, g2);
    CHECK(rel_err(pcon_tab_conditional(z, p, o), pcon_tab_pj_infinity(hn, g2, p)) < 1e-5);
}

TEST_CASE("conditional probabilities: bounds and monotonicity")
{
    auto p = SystemParams::defaults();
    double prev_tas = 1.0, prev_tab = 1.0;
    for (double rho_E : {0.0, 0.05, 0.2, 1.0, 3.0})
    {
        p.rho_E = rho_E;
        const double a = pcon_tas_conditional(20.0, p);
        const double b = pcon_tab_conditional(20.0, p);
        CHECK(a >= 0.0);
        CHECK(a <= prev_tas);
        CHECK(b >= 0.0);
        CHECK(b <= prev_tab);
        prev_tas = a;
        prev_tab = b;
    }
    p = SystemParams::defaults();
    double prev = 0.0;
    for (double Rg : {0.0, 0.1, 0.5, 2.0})
    {
        p.R_g = Rg;
        const double v = pcon_tas_conditional(20.0, p);
        CHECK(v >= prev);
        prev = v;
    }
    // Below the secrecy threshold the link is always in outage
    p = SystemParams::defaults();
    p.R_s = 2.0;
    CHECK(pcon_tas_conditional(2.0, p) == 0.0);
    CHECK(pcon_tab_conditional(2.0, p) == 0.0);
    CHECK_THROWS_AS(pcon_tas_conditional(-1.0, p), DomainError);
    AnalyticOptions o;
    o.noise_term = NoiseTerm::asymptotic;
    p.P_J = 0.0;
    CHECK_THROWS_AS(pcon_tab_conditional(5.0, p, o), DomainError);
}

TEST_CASE("unconditional probabilities against full simulation")
{
    auto p = small_field();
    p.R_s = 0.3;
    p.eps = 0.1;
    const double beta = p.beta();
    std::mt19937_64 gen(99);
    std::exponential_distribution<double> ex(1.0);
    std::gamma_distribution<double> gm(p.M, 1.0);
    std::gamma_distribution<double> an_gain(p.M - 1, 1.0);
    std::poisson_distribution<int> count(p.rho_E * std::numbers::pi * p.R * p.R);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int trials = 200000;
    int ok_tas = 0, ok_tab = 0;
    for (int t = 0; t < trials; ++t)
    {
        double hmax = 0.0;
        for (int i = 0; i < p.M; ++i)
            hmax = std::max(hmax, ex(gen));
        const double hn = gm(gen);
        const double g2 = ex(gen);
        const double den = 1.0 + p.rho * p.P_J * g2;
        const double Y = hmax * p.P_T / den;
        const double Zb = (1.0 - p.eps) * hn * p.P_T / den;
        const int n = count(gen);
        bool sec_tas = std::log2(1.0 + Y) >= p.R_s;
        bool sec_tab = std::log2(1.0 + Zb) >= p.R_s;
        for (int e = 0; e < n; ++e)
        {
            const double r = p.R * std::sqrt(u(gen));
            const double th = 2.0 * std::numbers::pi * u(gen);
            const double dbe = distance_bob_to_point(r, th, p.d);
            const double pl = 1.0 / (r * r);
            const double jam = p.P_J * ex(gen) / (dbe * dbe);
            const double snr_tas = p.P_T * ex(gen) * pl / (1.0 + jam);
            const double snr_tab = (1.0 - p.eps) * p.P_T * ex(gen) * pl /
                                   (1.0 + jam + p.eps * p.P_T / (p.M - 1) * an_gain(gen) * pl);
            sec_tas = sec_tas && (1.0 + Y) / (1.0 + snr_tas) >= beta;
            sec_tab = sec_tab && (1.0 + Zb) / (1.0 + snr_tab) >= beta;
        }
        ok_tas += sec_tas;
        ok_tab += sec_tab;
    }
    const double mc_tas = static_cast<double>(ok_tas) / trials;
    const double mc_tab = static_cast<double>(ok_tab) / trials;
    const double an_tas = pcon_tas_unconditional(p);
    const double an_tab = pcon_tab_unconditional(p);
    CHECK(std::abs(mc_tas - an_tas) < 4.0 * std::sqrt(an_tas * (1.0 - an_tas) / trials));
    CHECK(std::abs(mc_tab - an_tab) < 4.0 * std::sqrt(an_tab * (1.0 - an_tab) / trials));
}

TEST_CASE("unconditional average against direct quadrature")
{
    auto p = small_field();
    p.R_s = 0.3;
    AnalyticOptions o;
    o.quad.rel_tol = 1e-7;
    const double beta = p.beta();
    const double direct = integrate_semi_infinite([&](double y)
                                                  { return pcon_tas_conditional(y, p, o) * pdf_Y(y, p); },
                                                  beta - 1.0, QuadConfig{1e-6, 1e-12, 2000}, p.P_T)
                              .value;
    CHECK(rel_err(pcon_tas_unconditional(p, o), direct) < 1e-5);

    // Without eavesdroppers only the main-link outage remains
    p.rho_E = 0.0;
    CHECK(rel_err(pcon_tas_unconditional(p), 1.0 - cdf_Y(beta - 1.0, p)) < 1e-9);
    CHECK(rel_err(pcon_tab_unconditional(p), 1.0 - cdf_Z((beta - 1.0) / (1.0 - p.eps), p)) < 1e-9);
}
