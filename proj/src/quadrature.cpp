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

#include "fdsec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fdsec
{
    void QuadConfig::validate() const
    {
        if (!(rel_tol > 0.0))
            throw DomainError("QuadConfig: rel_tol must be positive");
        if (!(abs_tol >= 0.0))
            throw DomainError("QuadConfig: abs_tol must be nonnegative");
        if (max_subdivisions < 1)
            throw DomainError("QuadConfig: max_subdivisions must be at least 1");
    }

    namespace
    {
        // Kronrod abscissae and weights (15 points) with the embedded 7-point Gauss weights
        constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                   0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                   0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                   0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                   0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                   0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                   0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                  0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b;
            std::vector<double> value;
            std::vector<double> error;
        };

        // One 15-point rule on [a,b] for every component; `eval(x, out)` writes dim values
        template <typename Eval>
        void gk15(Eval &eval, std::size_t dim, Segment &seg, std::vector<double> &fv, long &evals)
        {
            const double c = 0.5 * (seg.a + seg.b);
            const double h = 0.5 * (seg.b - seg.a);
            fv.resize(15 * dim);
            double *fc = fv.data();
            eval(c, fc);
            for (int j = 0; j < 7; ++j)
            {
                eval(c - h * xgk[j], fv.data() + (1 + 2 * j) * dim);
                eval(c + h * xgk[j], fv.data() + (2 + 2 * j) * dim);
            }
            evals += 15;

            constexpr double epmach = std::numeric_limits<double>::epsilon();
            constexpr double uflow = std::numeric_limits<double>::min();
            seg.value.assign(dim, 0.0);
            seg.error.assign(dim, 0.0);
            for (std::size_t k = 0; k < dim; ++k)
            {
                const double f0 = fc[k];
                double resk = wgk[7] * f0;
                double resg = wg[3] * f0;
                double resabs = std::abs(resk);
                for (int j = 0; j < 7; ++j)
                {
                    const double f1 = fv[(1 + 2 * j) * dim + k];
                    const double f2 = fv[(2 + 2 * j) * dim + k];
                    resk += wgk[j] * (f1 + f2);
                    resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
                    if (j % 2 == 1)
                        resg += wg[j / 2] * (f1 + f2);
                }
                const double reskh = 0.5 * resk;
                double resasc = wgk[7] * std::abs(f0 - reskh);
                for (int j = 0; j < 7; ++j)
                {
                    const double f1 = fv[(1 + 2 * j) * dim + k];
                    const double f2 = fv[(2 + 2 * j) * dim + k];
                    resasc += wgk[j] * (std::abs(f1 - reskh) + std::abs(f2 - reskh));
                }
                const double ah = std::abs(h);
                double err = std::abs((resk - resg) * h);
                resabs *= ah;
                resasc *= ah;
                if (resasc != 0.0 && err != 0.0)
                    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
                if (resabs > uflow / (50.0 * epmach))
                    err = std::max(epmach * 50.0 * resabs, err);
                seg.value[k] = resk * h;
                seg.error[k] = err;
            }
        }

        template <typename Eval>
        QuadVecResult adaptive(Eval &&eval, std::size_t dim, double lo, double hi, const QuadConfig &cfg,
                               std::span<const double> breakpoints)
        {
            cfg.validate();
            if (dim == 0)
                throw DomainError("integrate: integrand dimension must be positive");
            if (!(lo < hi))
                throw DomainError("integrate: requires lo < hi");

            std::vector<double> edges{lo};
            for (double b : breakpoints)
                if (b > lo && b < hi)
                    edges.push_back(b);
            edges.push_back(hi);
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

            QuadVecResult out;
            std::vector<double> fv;
            std::vector<Segment> segs;
            segs.reserve(64);
            for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            {
                Segment s{edges[i], edges[i + 1], {}, {}};
                gk15(eval, dim, s, fv, out.evaluations);
                segs.push_back(std::move(s));
            }

            std::vector<double> total(dim), err(dim), tol(dim);
            auto tally = [&]()
            {
                std::fill(total.begin(), total.end(), 0.0);
                std::fill(err.begin(), err.end(), 0.0);
                for (const auto &s : segs)
                    for (std::size_t k = 0; k < dim; ++k)
                    {
                        total[k] += s.value[k];
                        err[k] += s.error[k];
                    }
                bool ok = true;
                for (std::size_t k = 0; k < dim; ++k)
                {
                    tol[k] = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total[k]));
                    if (!(err[k] <= tol[k]))
                        ok = false;
                }
                return ok;
            };

            while (!tally())
            {
                if (static_cast<int>(segs.size()) >= cfg.max_subdivisions)
                {
                    double worst = 0.0;
                    for (std::size_t k = 0; k < dim; ++k)
                        worst = std::max(worst, err[k]);
                    throw ConvergenceError("adaptive quadrature: max_subdivisions reached (error " +
                                               std::to_string(worst) + ")",
                                           total[0], err[0]);
                }
                std::size_t pick = 0;
                double best = -1.0;
                for (std::size_t i = 0; i < segs.size(); ++i)
                {
                    double p = 0.0;
                    for (std::size_t k = 0; k < dim; ++k)
                        p = std::max(p, segs[i].error[k] / tol[k]);
                    if (p > best)
                    {
                        best = p;
                        pick = i;
                    }
                }
                const double a = segs[pick].a;
                const double b = segs[pick].b;
                const double mid = 0.5 * (a + b);
                if (!(mid > a && mid < b))
                    throw ConvergenceError("adaptive quadrature: segment below machine resolution", total[0], err[0]);
                Segment left{a, mid, {}, {}};
                Segment right{mid, b, {}, {}};
                gk15(eval, dim, left, fv, out.evaluations);
                gk15(eval, dim, right, fv, out.evaluations);
                segs[pick] = std::move(left);
                segs.push_back(std::move(right));
            }

            out.value = total;
            out.error = err;
            out.subdivisions = static_cast<int>(segs.size());
            return out;
        }

        QuadResult scalar(const QuadVecResult &r)
        {
            return QuadResult{r.value[0], r.error[0], r.evaluations, r.subdivisions};
        }

        QuadConfig inner_config(const QuadConfig &cfg, double r_hi)
        {
            QuadConfig inner = cfg;
            inner.rel_tol = 0.1 * cfg.rel_tol;
            inner.abs_tol = 0.1 * cfg.abs_tol / std::max(1.0, r_hi * r_hi);
            return inner;
        }
    }

    QuadResult integrate_1d(const Integrand1D &f, double lo, double hi, const QuadConfig &cfg,
                            std::span<const double> breakpoints)
    {
        auto eval = [&](double x, double *out)
        { out[0] = f(x); };
        return scalar(adaptive(eval, 1, lo, hi, cfg, breakpoints));
    }

    QuadVecResult integrate_1d_vec(const VecIntegrand1D &f, std::size_t dim, double lo, double hi,
                                   const QuadConfig &cfg, std::span<const double> breakpoints)
    {
        auto eval = [&](double x, double *out)
        { f(x, std::span<double>(out, dim)); };
        return adaptive(eval, dim, lo, hi, cfg, breakpoints);
    }

    QuadVecResult integrate_semi_infinite_vec(const VecIntegrand1D &f, std::size_t dim, double lo,
                                              const QuadConfig &cfg, double scale)
    {
        if (!(scale > 0.0))
            throw DomainError("integrate_semi_infinite: scale must be positive");
        auto eval = [&](double u, double *out)
        {
            const double x = lo - scale * std::log(u);
            std::span<double> o(out, dim);
            if (!std::isfinite(x))
            {
                std::fill(o.begin(), o.end(), 0.0);
                return;
            }
            f(x, o);
            const double jac = scale / u;
            for (auto &v : o)
                v *= jac;
        };
        return adaptive(eval, dim, 0.0, 1.0, cfg, {});
    }

    QuadResult integrate_semi_infinite(const Integrand1D &f, double lo, const QuadConfig &cfg, double scale)
    {
        if (!(scale > 0.0))
            throw DomainError("integrate_semi_infinite: scale must be positive");
        auto eval = [&](double u, double *out)
        {
            const double x = lo - scale * std::log(u);
            out[0] = std::isfinite(x) ? f(x) * (scale / u) : 0.0;
        };
        return scalar(adaptive(eval, 1, 0.0, 1.0, cfg, {}));
    }

    QuadVecResult integrate_polar_vec(const VecIntegrandPolar &f, std::size_t dim, double r_lo, double r_hi,
                                      const QuadConfig &cfg, const PolarOptions &opts)
    {
        if (!(r_lo >= 0.0) || !(r_lo < r_hi))
            throw DomainError("integrate_polar: requires 0 <= r_lo < r_hi");
        const QuadConfig inner = inner_config(cfg, r_hi);
        const double theta_hi = opts.theta_symmetric ? std::numbers::pi : 2.0 * std::numbers::pi;
        const double factor = opts.theta_symmetric ? 2.0 : 1.0;
        long inner_evals = 0;

        auto outer = [&](double r, double *out)
        {
            auto g = [&](double theta, double *o)
            { f(r, theta, std::span<double>(o, dim)); };
            const auto res = adaptive(g, dim, 0.0, theta_hi, inner, {});
            inner_evals += res.evaluations;
            for (std::size_t k = 0; k < dim; ++k)
                out[k] = factor * r * res.value[k];
        };
        auto res = adaptive(outer, dim, r_lo, r_hi, cfg, opts.radial_breakpoints);
        res.evaluations += inner_evals;
        return res;
    }

    QuadResult integrate_polar(const IntegrandPolar &f, double r_lo, double r_hi, const QuadConfig &cfg,
                               const PolarOptions &opts)
    {
        if (!(r_lo >= 0.0) || !(r_lo < r_hi))
            throw DomainError("integrate_polar: requires 0 <= r_lo < r_hi");
        const QuadConfig inner = inner_config(cfg, r_hi);
        const double theta_hi = opts.theta_symmetric ? std::numbers::pi : 2.0 * std::numbers::pi;
        const double factor = opts.theta_symmetric ? 2.0 : 1.0;
        long inner_evals = 0;

        auto outer = [&](double r, double *out)
        {
            auto g = [&](double theta, double *o)
            { o[0] = f(r, theta); };
            const auto res = adaptive(g, 1, 0.0, theta_hi, inner, {});
            inner_evals += res.evaluations;
            out[0] = factor * r * res.value[0];
        };
        auto res = scalar(adaptive(outer, 1, r_lo, r_hi, cfg, opts.radial_breakpoints));
        res.evaluations += inner_evals;
        return res;
    }
}
