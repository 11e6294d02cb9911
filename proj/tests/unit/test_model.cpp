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

#include "fdsec/model.hpp"
#include "fdsec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

using namespace fdsec;

namespace
{
    double ks_distance(std::vector<double> xs, const std::function<double(double)> &cdf)
    {
        std::sort(xs.begin(), xs.end());
        const double n = static_cast<double>(xs.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            const double F = cdf(xs[i]);
            worst = std::max({worst, std::abs(F - i / n), std::abs((i + 1) / n - F)});
        }
        return worst;
    }

    constexpr int kSamples = 100000;
}

TEST_CASE("counter-based generator known answers and stream independence")
{
    RngStream zero(0, 0, 0);
    CHECK(zero() == 0x6627e8d5u);
    CHECK(zero() == 0xe169c58du);
    CHECK(zero() == 0xbc57ac4cu);
    CHECK(zero() == 0x9b00dbd8u);

    RngStream a(42, 7, 1), b(42, 7, 1);
    for (int i = 0; i < 100; ++i)
        CHECK(a() == b());
    RngStream c2(42, 8, 1), d2(42, 7, 2), a2(42, 7, 1);
    int same_c = 0, same_d = 0;
    for (int i = 0; i < 100; ++i)
    {
        const auto v = a2();
        same_c += v == c2();
        same_d += v == d2();
    }
    CHECK(same_c < 3);
    CHECK(same_d < 3);

    RngStream u(1, 1);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 10000; ++i)
    {
        const double x = u.uniform();
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
}

TEST_CASE("parameter validation names the field")
{
    auto p = SystemParams::defaults();
    CHECK_NOTHROW(p.validate());
    CHECK(p.beta() == 1.0);
    CHECK(p.m() == doctest::Approx(1.0));
    p.R_s = 1.0;
    CHECK(p.derived().beta == 2.0);

    auto bad = SystemParams::defaults();
    bad.eps = 1.0;
    try
    {
        bad.validate();
        FAIL("expected DomainError");
    }
    catch (const DomainError &e)
    {
        CHECK(std::string(e.what()).find("eps") != std::string::npos);
    }
    bad = SystemParams::defaults();
    bad.M = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = SystemParams::defaults();
    bad.R_g = 6.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK(SystemParams::colluding_defaults().R_g == 0.1);
    const auto us = SystemParams::userselect_defaults();
    CHECK(us.P_J == 0.0);
    CHECK(us.beta() == 2.0);
}

TEST_CASE("geometry")
{
    CHECK(distance_bob_to_point(1.0, 0.0, 1.0) == 0.0);
    CHECK(distance_bob_to_point(3.0, std::numbers::pi / 2, 1.0) == doctest::Approx(std::sqrt(10.0)));
    CHECK(distance_bob_to_point(3.0, std::numbers::pi, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("eavesdropper field sampling")
{
    auto p = SystemParams::defaults();
    double sum = 0.0;
    const int draws = 100000;
    bool in_range = true;
    for (int t = 0; t < draws; ++t)
    {
        RngStream rng(5, t);
        const auto f = sample_ed_field(p, rng);
        sum += f.points.size();
        for (const auto &pt : f.points)
            in_range = in_range && pt.r >= p.R_g && pt.r <= p.R && pt.theta >= 0.0 && pt.theta < 2 * std::numbers::pi;
    }
    CHECK(in_range);
    const double mean = 25.0 * std::numbers::pi;
    CHECK(std::abs(sum / draws - mean) < 3.0 * std::sqrt(mean / draws));

    p.rho_E = 0.0;
    RngStream r0(1, 1);
    CHECK(sample_ed_field(p, r0).points.empty());
    p = SystemParams::defaults();
    p.R_g = p.R;
    CHECK(sample_ed_field(p, r0).points.empty());

    // Radii uniform in area on the annulus
    p = SystemParams::defaults();
    p.R_g = 1.0;
    std::vector<double> radii;
    for (int t = 0; radii.size() < kSamples; ++t)
    {
        RngStream rng(6, t);
        for (const auto &pt : sample_ed_field(p, rng).points)
            radii.push_back(pt.r);
    }
    radii.resize(kSamples);
    CHECK(ks_distance(radii, [&](double r)
                      { return (r * r - 1.0) / (p.R * p.R - 1.0); }) < 0.01);
}

TEST_CASE("conditioning identities")
{
    auto p = SystemParams::defaults();
    p.R_s = 0.7;
    for (int t = 0; t < 200; ++t)
    {
        RngStream rng(3, t);
        const auto ch = sample_main_channel(p.M, rng);
        const auto s = conditioning(p, ch.h_max_sq(), ch.h_norm_sq(), ch.g_B_sq());
        CHECK(s.g * s.Z == doctest::Approx(p.beta()).epsilon(1e-14));
        CHECK(s.c == doctest::Approx(1.0 / (s.g * p.P_T)).epsilon(1e-14));
        CHECK(s.Y0 == doctest::Approx(s.Y / p.beta() + 1.0 / p.beta() - 1.0));
        CHECK(s.Y <= s.Z * (1.0 + 1e-15));
        CHECK(std::norm(ch.h[ch.best_antenna()]) == ch.h_max_sq());
    }
}

TEST_CASE("distribution of the antenna-selection SNR")
{
    auto p = SystemParams::defaults();
    CHECK(cdf_Y(0.0, p) == 0.0);
    std::vector<double> ys, hs;
    for (int t = 0; t < kSamples; ++t)
    {
        RngStream rng(10, t);
        const auto ch = sample_main_channel(p.M, rng);
        ys.push_back(tas_snr(p, ch.h_max_sq(), ch.g_B_sq()));
        hs.push_back(ch.h_max_sq());
    }
    CHECK(ks_distance(ys, [&](double y)
                      { return cdf_Y(y, p); }) < 0.01);
    CHECK(ks_distance(hs, [&](double y)
                      { return std::pow(-std::expm1(-y), p.M); }) < 0.01);

    QuadConfig q{1e-10, 0.0, 4000};
    CHECK(integrate_semi_infinite([&](double y)
                                  { return pdf_Y(y, p); },
                                  0.0, q, p.P_T)
              .value == doctest::Approx(1.0).epsilon(1e-6));
    auto hd = p;
    hd.P_J = 0.0;
    for (double y : {10.0, 1e3, 3e4})
        CHECK(cdf_Y(y, hd) == doctest::Approx(std::pow(-std::expm1(-y / hd.P_T), hd.M)).epsilon(1e-12));
    // Density is the derivative of the distribution function
    for (double y : {50.0, 2e3, 4e4})
    {
        const double h = 1e-4 * y;
        CHECK(pdf_Y(y, p) == doctest::Approx((cdf_Y(y + h, p) - cdf_Y(y - h, p)) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("distribution of the beamforming SNR scale")
{
    auto p = SystemParams::defaults();
    std::vector<double> zs;
    for (int t = 0; t < kSamples; ++t)
    {
        RngStream rng(11, t);
        const auto ch = sample_main_channel(p.M, rng);
        zs.push_back(tab_snr_scale(p, ch.h_norm_sq(), ch.g_B_sq()));
    }
    CHECK(ks_distance(zs, [&](double z)
                      { return cdf_Z(z, p); }) < 0.01);

    // Chi-squared goodness of fit of the density on 20 equiprobable-ish bins
    std::sort(zs.begin(), zs.end());
    const QuadConfig q{1e-10, 0.0, 4000};
    double chi2 = 0.0;
    const int bins = 20;
    for (int b = 0; b < bins; ++b)
    {
        const double lo = b == 0 ? 0.0 : zs[b * kSamples / bins];
        const double hi = b == bins - 1 ? INFINITY : zs[(b + 1) * kSamples / bins];
        const auto cnt = std::count_if(zs.begin(), zs.end(), [&](double z)
                                       { return z >= lo && z < hi; });
        const double prob = std::isinf(hi) ? integrate_semi_infinite([&](double z)
                                                                     { return pdf_Z(z, p); },
                                                                     lo, q, p.P_T)
                                                 .value
                                           : integrate_1d([&](double z)
                                                          { return pdf_Z(z, p); },
                                                          lo, hi, q)
                                                 .value;
        const double expect = prob * kSamples;
        chi2 += (cnt - expect) * (cnt - expect) / expect;
    }
    // 99th percentile of chi-squared with 19 degrees of freedom
    CHECK(chi2 < 36.19);

    CHECK(integrate_semi_infinite([&](double z)
                                  { return pdf_Z(z, p); },
                                  0.0, q, p.P_T)
              .value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(integrate_semi_infinite([&](double z)
                                  { return pdf_Z_no_jamming(z, p); },
                                  0.0, q, p.P_T)
              .value == doctest::Approx(1.0).epsilon(1e-6));
    // The large-z asymptote is not a probability density
    const double asym = integrate_semi_infinite([&](double z)
                                                { return pdf_Z_asymptotic(z, p); },
                                                0.0, q, p.P_T)
                            .value;
    CHECK(std::abs(asym - 1.0) > 1e-3);

    auto hd = p;
    hd.P_J = 0.0;
    CHECK_THROWS_AS(pdf_Z(1.0, hd), DomainError);
}

TEST_CASE("distribution of the beam leakage fraction")
{
    for (int M : {2, 5, 8})
    {
        std::vector<double> inv, geo;
        double sum = 0.0;
        for (int t = 0; t < kSamples; ++t)
        {
            RngStream r1(20, t), r2(21, t);
            inv.push_back(sample_theta(M, r1));
            geo.push_back(sample_theta_geometric(M, r2));
            sum += inv.back();
        }
        auto F = [M](double x)
        { return cdf_theta(x, M); };
        CHECK(ks_distance(inv, F) < 0.01);
        CHECK(ks_distance(geo, F) < 0.01);
        const double sd = std::sqrt((M - 1.0) / (M * M * (M + 1.0)) / kSamples);
        CHECK(std::abs(sum / kSamples - 1.0 / M) < 3.0 * sd);
    }
    RngStream r(1, 1);
    CHECK(sample_theta(1, r) == 1.0);
}

TEST_CASE("ratio of an exponential to a chi-squared sum")
{
    const int M = 5;
    std::vector<double> xs;
    for (int t = 0; t < kSamples; ++t)
    {
        RngStream rng(30, t);
        const auto ch = sample_main_channel(M, rng);
        const double x2 = std::norm(sample_cn(rng));
        xs.push_back(x2 / ch.h_norm_sq());
    }
    // F(x) = 1 - (1+x)^-M
    CHECK(ks_distance(xs, [](double x)
                      { return 1.0 - std::pow(1.0 + x, -M); }) < 0.01);
}

TEST_CASE("distance to the n-th nearest user")
{
    const double rho_U = 0.5;
    const QuadConfig q{1e-12, 0.0, 4000};
    for (int n : {1, 2, 3, 6})
    {
        CHECK(integrate_semi_infinite([&](double x)
                                      { return pdf_dABn(x, n, rho_U); },
                                      0.0, q)
                  .value == doctest::Approx(1.0).epsilon(1e-8));
    }
    // Mode of the n = 1 density
    const double mode = 1.0 / std::sqrt(2.0 * std::numbers::pi * rho_U);
    CHECK(pdf_dABn(mode, 1, rho_U) > pdf_dABn(mode * 0.99, 1, rho_U));
    CHECK(pdf_dABn(mode, 1, rho_U) > pdf_dABn(mode * 1.01, 1, rho_U));

    // Empirical n-th nearest distance from simulated fields on a large disk
    auto p = SystemParams::defaults();
    p.rho_E = rho_U;
    p.R = 10.0;
    for (int n : {1, 2, 3})
    {
        std::vector<double> ds;
        for (int t = 0; t < kSamples; ++t)
        {
            RngStream rng(40 + n, t);
            auto f = sample_ed_field(p, rng);
            if (static_cast<int>(f.points.size()) < n)
                continue;
            std::nth_element(f.points.begin(), f.points.begin() + (n - 1), f.points.end(),
                             [](const EdPoint &a, const EdPoint &b)
                             { return a.r < b.r; });
            ds.push_back(f.points[n - 1].r);
        }
        CHECK(ks_distance(ds, [&](double x)
                          { return cdf_dABn(x, n, rho_U); }) < 0.01);
    }
}

TEST_CASE("artificial-noise feasibility bound")
{
    auto p = SystemParams::defaults();
    CHECK(eps_max(p, 5.0, 1.0) == doctest::Approx(1.0 - (1.0 + 0.01 * 1e4) * 15.0 / (5.0 * 1e4)).epsilon(1e-14));
    p.R_D = 0.0;
    CHECK(eps_max(p, 5.0, 1.0) == 1.0);
    p = SystemParams::defaults();
    p.P_T = 1e300;
    CHECK(eps_max(p, 5.0, 1.0) == doctest::Approx(1.0));
    p = SystemParams::defaults();
    CHECK(eps_max(p, 1e-4, 1.0) == 0.0);
}
