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

#include "fdsec/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace fdsec
{
    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double x) { return 10.0 * std::log10(x); }

    void OptSpec::validate() const
    {
        if (!objective)
            throw DomainError("objective must be set");
        if (!(std::isfinite(lo_db) && std::isfinite(hi_db) && lo_db < hi_db))
            throw DomainError("pj_range_db must satisfy lo < hi");
        if (!(tol_db > 0.0))
            throw DomainError("tol_db must be positive");
        if (coarse_points < 3 || fallback_points < coarse_points)
            throw DomainError("coarse_points must be at least 3 and not exceed fallback_points");
    }

    namespace
    {
        constexpr double kInvPhi = 0.6180339887498949;

        // Indices of local minima of a sampled curve; a plateau counts once
        std::vector<int> local_minima(const std::vector<double> &f)
        {
            std::vector<int> out;
            const int n = static_cast<int>(f.size());
            int i = 0;
            while (i < n)
            {
                int j = i;
                while (j + 1 < n && f[j + 1] == f[i])
                    ++j;
                const bool left = i == 0 || f[i - 1] > f[i];
                const bool right = j == n - 1 || f[j + 1] > f[i];
                if (left && right)
                    out.push_back(i);
                i = j + 1;
            }
            return out;
        }
    }

    OptResult minimize_scalar(const std::function<double(double)> &f, double lo, double hi, double tol,
                              int coarse_points, int fallback_points)
    {
        OptResult res;
        auto eval = [&](double x)
        {
            ++res.evaluations;
            return f(x);
        };

        auto scan = [&](int n, std::vector<double> &xs, std::vector<double> &fs)
        {
            xs.resize(n);
            fs.resize(n);
            for (int i = 0; i < n; ++i)
            {
                xs[i] = lo + (hi - lo) * i / (n - 1);
                fs[i] = eval(xs[i]);
            }
        };

        std::vector<double> xs, fs;
        scan(coarse_points, xs, fs);
        if (local_minima(fs).size() > 1)
        {
            res.multimodal = true;
            scan(fallback_points, xs, fs);
        }
        const int n = static_cast<int>(xs.size());
        const int k = static_cast<int>(std::min_element(fs.begin(), fs.end()) - fs.begin());

        // Golden section inside the neighbouring grid cells
        double a = xs[std::max(k - 1, 0)];
        double b = xs[std::min(k + 1, n - 1)];
        double c = b - kInvPhi * (b - a);
        double d = a + kInvPhi * (b - a);
        double fc = eval(c), fd = eval(d);
        const double inner_tol = 0.1 * tol;
        while (b - a > inner_tol)
        {
            if (fc <= fd)
            {
                b = d;
                d = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = eval(c);
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + kInvPhi * (b - a);
                fd = eval(d);
            }
        }
        double x = fc <= fd ? c : d;
        double fx = std::min(fc, fd);
        if (fs[k] < fx)
        {
            x = xs[k];
            fx = fs[k];
        }
        // An end of the range that is at least as good wins
        for (double e : {lo, hi})
        {
            if (std::abs(x - e) <= tol)
            {
                const double fe = e == xs.front() ? fs.front() : e == xs.back() ? fs.back() : eval(e);
                if (fe <= fx)
                {
                    x = e;
                    fx = fe;
                }
            }
        }
        res.pj_star_db = x;
        res.pj_star = x;
        res.sop_star = fx;
        res.boundary = std::abs(x - lo) <= tol || std::abs(x - hi) <= tol;
        return res;
    }

    OptResult optimal_pj(const OptSpec &spec, const SystemParams &params)
    {
        spec.validate();
        auto f = [&](double db)
        {
            SystemParams q = params;
            q.P_J = db_to_linear(db);
            return spec.objective(q);
        };
        OptResult r = minimize_scalar(f, spec.lo_db, spec.hi_db, spec.tol_db, spec.coarse_points, spec.fallback_points);
        r.pj_star = db_to_linear(r.pj_star_db);
        return r;
    }

    const char *to_string(Axis a)
    {
        switch (a)
        {
        case Axis::P_J:
            return "P_J";
        case Axis::eps:
            return "eps";
        case Axis::rho_E:
            return "rho_E";
        case Axis::rho_U:
            return "rho_U";
        case Axis::M:
            return "M";
        case Axis::n:
            return "n";
        case Axis::R:
            return "R";
        }
        return "?";
    }

    Axis axis_from_string(const std::string &name)
    {
        for (Axis a : {Axis::P_J, Axis::eps, Axis::rho_E, Axis::rho_U, Axis::M, Axis::n, Axis::R})
            if (name == to_string(a))
                return a;
        throw DomainError("unknown sweep axis '" + name + "' (expected P_J, eps, rho_E, rho_U, M, n or R)");
    }

    void set_axis(SweepState &s, Axis a, double value)
    {
        auto as_int = [&](const char *what)
        {
            if (value != std::round(value))
                throw DomainError(std::string(what) + " must be an integer");
            return static_cast<int>(value);
        };
        switch (a)
        {
        case Axis::P_J:
            s.sys.P_J = value;
            break;
        case Axis::eps:
            s.sys.eps = value;
            break;
        case Axis::rho_E:
            s.sys.rho_E = value;
            break;
        case Axis::rho_U:
            s.sys.rho_U = value;
            break;
        case Axis::M:
            s.sys.M = as_int("M");
            break;
        case Axis::n:
            s.n = as_int("n");
            break;
        case Axis::R:
            s.sys.R = value;
            break;
        }
    }

    SweepTable sweep(const SweepObjective &objective, Axis axis, const std::vector<double> &grid,
                     const SweepState &base, int threads)
    {
        if (grid.empty())
            throw DomainError("sweep grid must not be empty");
        SweepTable table;
        table.axis = axis;
        table.rows.resize(grid.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]
        {
            for (std::size_t i = next++; i < grid.size(); i = next++)
            {
                SweepRow &row = table.rows[i];
                row.value = grid[i];
                try
                {
                    SweepState s = base;
                    set_axis(s, axis, grid[i]);
                    row.point = objective(s);
                }
                catch (const std::exception &e)
                {
                    row.ok = false;
                    row.error = e.what();
                    row.point.sop = std::nan("");
                }
            }
        };
        const int nt = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
        if (nt == 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (int t = 0; t < nt; ++t)
                pool.emplace_back(worker);
            for (auto &th : pool)
                th.join();
        }
        return table;
    }
}
