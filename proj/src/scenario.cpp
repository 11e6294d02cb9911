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

#include "fdsec/scenario.hpp"

#include "fdsec/noncolluding.hpp"
#include "fdsec/userselect.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdsec
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return "";
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        double to_double(const std::string &key, const std::string &v)
        {
            double x = 0.0;
            const char *first = v.data(), *last = v.data() + v.size();
            if (!v.empty() && v[0] == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars(first, last, x);
            if (ec != std::errc() || ptr != last || v.empty())
                throw ConfigError(key, "expected a number, got '" + v + "'");
            return x;
        }

        long long to_int(const std::string &key, const std::string &v)
        {
            long long x = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
            if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
                throw ConfigError(key, "expected an integer, got '" + v + "'");
            return x;
        }

        bool to_bool(const std::string &key, const std::string &v)
        {
            if (v == "1" || v == "true" || v == "yes" || v == "on")
                return true;
            if (v == "0" || v == "false" || v == "no" || v == "off")
                return false;
            throw ConfigError(key, "expected a boolean, got '" + v + "'");
        }

        // lo:hi:count, log:lo:hi:count, or a comma-separated list
        std::vector<double> parse_grid(const std::string &v)
        {
            std::vector<std::string> parts;
            const char sep = v.find(':') != std::string::npos ? ':' : ',';
            std::stringstream ss(v);
            for (std::string tok; std::getline(ss, tok, sep);)
                parts.push_back(trim(tok));
            std::vector<double> out;
            if (sep == ',')
            {
                for (const auto &t : parts)
                    out.push_back(to_double("grid", t));
                return out;
            }
            const bool log = parts.size() == 4 && parts[0] == "log";
            if (parts.size() != 3 && !log)
                throw ConfigError("grid", "expected lo:hi:count, log:lo:hi:count or a list");
            const std::size_t o = log ? 1 : 0;
            const double lo = to_double("grid", parts[o]), hi = to_double("grid", parts[o + 1]);
            const long long n = to_int("grid", parts[o + 2]);
            if (n < 1)
                throw ConfigError("grid", "count must be positive");
            if (log && !(lo > 0.0 && hi > 0.0))
                throw ConfigError("grid", "log grid needs positive ends");
            for (long long i = 0; i < n; ++i)
            {
                const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
                out.push_back(log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
            }
            return out;
        }

        std::string fmt17(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }

        std::string short_num(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.6g", x);
            return buf;
        }

        bool is_us(Scheme s) { return s == Scheme::TAB_US || s == Scheme::TAS_US; }

        std::string axis_name(const ScenarioConfig &c)
        {
            if (!c.axis || *c.axis == Axis::P_J)
                return "P_J_dB";
            return to_string(*c.axis);
        }

        // Grid in the units of the output (dB for P_J); a single point when no axis is set
        std::vector<double> axis_values(const ScenarioConfig &c)
        {
            if (c.axis)
                return c.grid;
            return {c.sys.P_J > 0.0 ? linear_to_db(c.sys.P_J) : -INFINITY};
        }

        SweepState state_at(const ScenarioConfig &c, double value)
        {
            SweepState s{c.sys, c.n};
            const Axis a = c.axis.value_or(Axis::P_J);
            set_axis(s, a, a == Axis::P_J ? db_to_linear(value) : value);
            return s;
        }

        std::string base_meta(const ScenarioConfig &c, const SweepState &s)
        {
            std::string m = "scheme=" + std::string(to_string(c.scheme));
            m += ";colluding=" + std::string(c.colluding ? "1" : "0");
            m += ";conditioning=" + std::string(c.effective_conditioning() == Conditioning::fixed ? "fixed" : "redraw");
            if (c.effective_conditioning() == Conditioning::fixed)
                m += ";channel=" + std::string(c.channel == ChannelChoice::typical ? "typical" : "seeded");
            m += ";M=" + std::to_string(s.sys.M);
            m += ";eps=" + short_num(s.sys.eps);
            m += ";rho=" + short_num(s.sys.rho);
            m += ";rho_E=" + short_num(s.sys.rho_E);
            if (is_us(c.scheme))
                m += ";rho_U=" + short_num(s.sys.rho_U) + ";n=" + std::to_string(s.n);
            if (!c.label.empty())
                m += ";label=" + c.label;
            return m;
        }

        SimSpec sim_spec(const ScenarioConfig &c, int M)
        {
            SimSpec spec;
            spec.scheme = c.scheme;
            spec.colluding = c.colluding;
            spec.conditioning = c.effective_conditioning();
            spec.trials = c.trials;
            spec.seed = c.seed;
            spec.eve_noise = c.eve_noise;
            spec.threads = c.threads;
            if (c.channel == ChannelChoice::typical)
                spec.channel = typical_main_channel(M);
            return spec;
        }

        double analytic_sop(const ScenarioConfig &c, const SweepState &s)
        {
            const SystemParams &p = s.sys;
            AnalyticOptions opts;
            opts.noise_term = c.noise_term;
            if (c.scheme == Scheme::TAB_US)
            {
                UsParams up = UsParams::from(p, s.n);
                return sop_tabus(up, opts);
            }
            p.validate();
            if (c.effective_conditioning() == Conditioning::redraw)
            {
                if (c.scheme == Scheme::TAS)
                    return 1.0 - pcon_tas_unconditional(p, opts);
                return 1.0 - pcon_tab_unconditional(p, opts);
            }
            SimSpec spec = sim_spec(c, p.M);
            const MainChannel ch = fixed_main_channel(spec, p.M);
            ChannelRealization cr;
            cr.h = ch.h;
            cr.g_B = ch.g_B;
            const double gb = cr.g_B_sq();
            if (!c.colluding)
            {
                if (c.scheme == Scheme::TAS)
                    return 1.0 - pcon_tas_conditional(tas_snr(p, cr.h_max_sq(), gb), p, opts);
                return 1.0 - pcon_tab_conditional(tab_snr_scale(p, cr.h_norm_sq(), gb), p, opts);
            }
            GammaApproxConfig g;
            g.N = c.series_terms;
            if (c.scheme == Scheme::TAS)
            {
                const double y0 = tas_snr(p, cr.h_max_sq(), gb) / p.beta() + 1.0 / p.beta() - 1.0;
                return p.P_J > 0.0 ? sop_tas_colluding(y0, p, g, opts) : sop_tas_colluding_hd(y0, p, g);
            }
            const double z = tab_snr_scale(p, cr.h_norm_sq(), gb);
            if (p.eps > 0.0)
                return sop_tab_colluding_an(z, p, g, opts);
            return p.P_J > 0.0 ? sop_tab_colluding_eps0(z, p, g, opts) : sop_tab_colluding_hd(z, p, g);
        }

        void record_failure(RunReport &rep, ResultRow &row, const std::exception &e)
        {
            row.sop = std::nan("");
            std::string msg = e.what();
            std::replace(msg.begin(), msg.end(), '\n', ' ');
            row.meta += ";error=" + msg;
            rep.warnings.push_back(row.axis + "=" + fmt17(row.value) + ": " + msg);
            if (dynamic_cast<const ConvergenceError *>(&e))
                rep.nonconvergence = true;
        }

        std::string csv_field(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char ch : s)
            {
                if (ch == '"')
                    out += '"';
                out += ch;
            }
            return out + "\"";
        }

        std::vector<std::string> split_csv_line(const std::string &line)
        {
            std::vector<std::string> out;
            std::string cur;
            bool quoted = false;
            for (std::size_t i = 0; i < line.size(); ++i)
            {
                const char ch = line[i];
                if (quoted)
                {
                    if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"')
                    {
                        cur += '"';
                        ++i;
                    }
                    else if (ch == '"')
                        quoted = false;
                    else
                        cur += ch;
                }
                else if (ch == '"')
                    quoted = true;
                else if (ch == ',')
                {
                    out.push_back(cur);
                    cur.clear();
                }
                else
                    cur += ch;
            }
            out.push_back(cur);
            return out;
        }
    }

    Conditioning ScenarioConfig::effective_conditioning() const
    {
        if (conditioning)
            return *conditioning;
        return is_us(scheme) ? Conditioning::redraw : Conditioning::fixed;
    }

    void ScenarioConfig::validate() const
    {
        try
        {
            sys.validate();
        }
        catch (const DomainError &e)
        {
            std::string msg = e.what();
            const auto colon = msg.find(": ");
            if (colon != std::string::npos)
                msg = msg.substr(colon + 2);
            throw ConfigError(msg.substr(0, msg.find(' ')), msg);
        }
        if (trials < 1)
            throw ConfigError("trials", "must be at least 1");
        if (n < 1)
            throw ConfigError("n", "must be at least 1");
        if (threads < 0)
            throw ConfigError("threads", "must be nonnegative");
        if (series_terms < 1 || series_terms > 60)
            throw ConfigError("N", "must lie in [1, 60]");
        if (axis && grid.empty())
            throw ConfigError("grid", "a sweep axis needs a grid");
        if (!axis && !grid.empty())
            throw ConfigError("axis", "a grid needs a sweep axis");
        if (format != "csv" && format != "json")
            throw ConfigError("format", "expected csv or json");
        if (!(pj_lo_db < pj_hi_db))
            throw ConfigError("pj_lo", "must be below pj_hi");
        if (!(tol_db > 0.0))
            throw ConfigError("tol_db", "must be positive");
        if (method != Method::mc)
        {
            if (scheme == Scheme::TAS_US)
                throw ConfigError("method", "TAS-US has no analytic form; use method = mc");
            if (is_us(scheme) && effective_conditioning() == Conditioning::fixed)
                throw ConfigError("conditioning", "the user-selection analysis averages the main channel; use redraw");
            if (is_us(scheme) && colluding)
                throw ConfigError("colluding", "no analytic form for colluding eavesdroppers with user selection");
            if (colluding && effective_conditioning() == Conditioning::redraw)
                throw ConfigError("conditioning", "colluding analysis is conditional on the main channel; use fixed");
        }
    }

    void apply_setting(ScenarioConfig &c, const std::string &key, const std::string &raw)
    {
        const std::string v = trim(raw);
        auto num = [&] { return to_double(key, v); };
        auto integer = [&] { return to_int(key, v); };
        if (key == "defaults")
        {
            if (v == "noncolluding")
                c.sys = SystemParams::defaults();
            else if (v == "colluding")
                c.sys = SystemParams::colluding_defaults();
            else if (v == "userselect")
                c.sys = SystemParams::userselect_defaults();
            else
                throw ConfigError(key, "expected noncolluding, colluding or userselect");
        }
        else if (key == "M")
            c.sys.M = static_cast<int>(integer());
        else if (key == "P_T")
            c.sys.P_T = db_to_linear(num());
        else if (key == "P_J")
            c.sys.P_J = db_to_linear(num());
        else if (key == "rho")
            c.sys.rho = num();
        else if (key == "eps")
            c.sys.eps = num();
        else if (key == "alpha")
            c.sys.alpha = num();
        else if (key == "R")
            c.sys.R = num();
        else if (key == "R_g")
            c.sys.R_g = num();
        else if (key == "d")
            c.sys.d = num();
        else if (key == "rho_E")
            c.sys.rho_E = num();
        else if (key == "rho_U")
            c.sys.rho_U = num();
        else if (key == "R_s")
            c.sys.R_s = num();
        else if (key == "R_D")
            c.sys.R_D = num();
        else if (key == "scheme")
        {
            try
            {
                c.scheme = scheme_from_string(v);
            }
            catch (const DomainError &e)
            {
                throw ConfigError(key, e.what());
            }
        }
        else if (key == "colluding")
            c.colluding = to_bool(key, v);
        else if (key == "method")
        {
            if (v == "analytic")
                c.method = Method::analytic;
            else if (v == "mc")
                c.method = Method::mc;
            else if (v == "both")
                c.method = Method::both;
            else
                throw ConfigError(key, "expected analytic, mc or both");
        }
        else if (key == "conditioning")
        {
            if (v == "fixed")
                c.conditioning = Conditioning::fixed;
            else if (v == "redraw")
                c.conditioning = Conditioning::redraw;
            else
                throw ConfigError(key, "expected fixed or redraw");
        }
        else if (key == "channel")
        {
            if (v == "typical")
                c.channel = ChannelChoice::typical;
            else if (v == "seeded")
                c.channel = ChannelChoice::seeded;
            else
                throw ConfigError(key, "expected typical or seeded");
        }
        else if (key == "axis")
        {
            if (v.empty() || v == "none")
                c.axis.reset();
            else
            {
                try
                {
                    c.axis = axis_from_string(v);
                }
                catch (const DomainError &e)
                {
                    throw ConfigError(key, e.what());
                }
            }
        }
        else if (key == "grid")
            c.grid = v.empty() ? std::vector<double>{} : parse_grid(v);
        else if (key == "n")
            c.n = static_cast<int>(integer());
        else if (key == "trials")
            c.trials = integer();
        else if (key == "seed")
        {
            std::uint64_t s = 0;
            const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
            if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
                throw ConfigError(key, "expected an unsigned 64-bit integer, got '" + v + "'");
            c.seed = s;
        }
        else if (key == "threads")
            c.threads = static_cast<int>(integer());
        else if (key == "eve_noise")
            c.eve_noise = to_bool(key, v);
        else if (key == "N")
            c.series_terms = static_cast<int>(integer());
        else if (key == "noise_term")
        {
            if (v == "exact")
                c.noise_term = NoiseTerm::exact;
            else if (v == "asymptotic")
                c.noise_term = NoiseTerm::asymptotic;
            else if (v == "interference_limited")
                c.noise_term = NoiseTerm::interference_limited;
            else
                throw ConfigError(key, "expected exact, asymptotic or interference_limited");
        }
        else if (key == "pj_lo")
            c.pj_lo_db = num();
        else if (key == "pj_hi")
            c.pj_hi_db = num();
        else if (key == "tol_db")
            c.tol_db = num();
        else if (key == "label")
            c.label = v;
        else if (key == "out")
            c.out = v;
        else if (key == "format")
            c.format = v;
        else
            throw ConfigError(key, "unknown key");
    }

    void apply_override(ScenarioConfig &c, const std::string &assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw ConfigError(trim(assignment), "expected KEY=VALUE");
        apply_setting(c, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
    }

    ScenarioConfig parse_config(const std::string &text, ScenarioConfig base)
    {
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
        {
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            if (trim(line).empty())
                continue;
            apply_override(base, line);
        }
        return base;
    }

    ScenarioConfig load_config(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw ConfigError("config", "cannot read '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return parse_config(ss.str());
    }

    MainChannel typical_main_channel(int M)
    {
        if (M < 1)
            throw DomainError("M must be at least 1");
        // Expected k-th largest of M unit exponentials: sum_{j=k}^{M} 1/j
        MainChannel c;
        for (int k = 1; k <= M; ++k)
        {
            double s = 0.0;
            for (int j = M; j >= k; --j)
                s += 1.0 / j;
            c.h.emplace_back(std::sqrt(s), 0.0);
        }
        c.g_B = {1.0, 0.0};
        return c;
    }

    std::vector<std::string> figure_names()
    {
        return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};
    }

    std::vector<ScenarioConfig> figure_preset(const std::string &name)
    {
        // P_J axes: 61 points, -10 ... 50 dB in 1 dB steps
        const std::string pj_grid = "-10:50:61";
        std::vector<ScenarioConfig> out;
        auto curve = [&](std::initializer_list<std::pair<const char *, std::string>> kv, ScenarioConfig base = {})
        {
            for (const auto &[k, v] : kv)
                apply_setting(base, k, v);
            out.push_back(base);
        };
        if (name == "fig2")
        {
            for (const char *rho : {"0.1", "0.01"})
                for (const char *s : {"TAS", "TAB"})
                    curve({{"scheme", s}, {"eps", "0"}, {"rho", rho}, {"axis", "P_J"}, {"grid", pj_grid},
                           {"label", std::string(s) + "_rho" + rho}});
        }
        else if (name == "fig3")
        {
            curve({{"scheme", "TAB"}, {"rho_E", "10"}, {"rho", "0.01"}, {"eps", "0.01"}, {"method", "both"},
                   {"axis", "P_J"}, {"grid", pj_grid}, {"label", "TAB_rhoE10"}});
        }
        else if (name == "fig4")
        {
            for (const char *e : {"0.001", "0.01", "0.1"})
                curve({{"scheme", "TAB"}, {"eps", e}, {"method", "both"}, {"axis", "P_J"}, {"grid", pj_grid},
                       {"label", std::string("TAB_eps") + e}});
        }
        else if (name == "fig5" || name == "fig6" || name == "fig7" || name == "fig8")
        {
            std::string axis, grid;
            if (name == "fig5")
                axis = "M", grid = "2:8:7";
            else if (name == "fig6")
                axis = "rho_E", grid = "log:0.01:1:61";
            else if (name == "fig7")
                axis = "rho_U", grid = "log:0.05:5:61";
            else
                axis = "n", grid = "1:10:10";
            for (const char *s : {"TAS-US", "TAB-US"})
                for (const char *e : {"0", "1e-05"})
                {
                    if (std::string(s) == "TAS-US" && std::string(e) == "0")
                        continue; // antenna selection carries no artificial noise
                    curve({{"defaults", "userselect"}, {"R", "10"}, {"scheme", s}, {"eps", e},
                           {"method", std::string(s) == "TAS-US" ? "mc" : "both"}, {"axis", axis}, {"grid", grid},
                           {"label", std::string(s) + "_eps" + e}});
                }
        }
        else if (name == "fig9")
        {
            for (const char *rho : {"0.1", "0.01"})
                for (const char *s : {"TAS", "TAB"})
                    curve({{"defaults", "colluding"}, {"scheme", s}, {"colluding", "1"}, {"eps", "0"}, {"rho", rho},
                           {"method", "both"}, {"axis", "P_J"}, {"grid", pj_grid},
                           {"label", std::string(s) + "_colluding_rho" + rho}});
        }
        else if (name == "fig10")
        {
            for (const char *coll : {"0", "1"})
                for (const char *s : {"TAS", "TAB"})
                    curve({{"defaults", "colluding"}, {"scheme", s}, {"colluding", coll}, {"eps", "0"}, {"rho", "0.01"},
                           {"axis", "P_J"}, {"grid", pj_grid},
                           {"label", std::string(s) + (coll[0] == '1' ? "_colluding" : "_noncolluding")}});
        }
        else
            throw ConfigError("figure", "unknown preset '" + name + "' (fig2 ... fig10)");
        return out;
    }

    RunReport run_analytic(const ScenarioConfig &c)
    {
        c.validate();
        RunReport rep;
        const auto values = axis_values(c);
        SweepState base{c.sys, c.n};
        SweepObjective f = [&](const SweepState &s)
        {
            SweepPoint pt;
            pt.sop = analytic_sop(c, s);
            pt.method = "analytic";
            return pt;
        };
        std::vector<double> grid = values;
        const Axis a = c.axis.value_or(Axis::P_J);
        if (a == Axis::P_J)
            for (auto &g : grid)
                g = db_to_linear(g);
        const SweepTable t = sweep(f, a, grid, base, c.threads == 0 ? 1 : c.threads);
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            ResultRow row;
            row.axis = axis_name(c);
            row.value = values[i];
            row.method = "analytic";
            const SweepState s = state_at(c, values[i]);
            row.meta = base_meta(c, s);
            if (c.colluding)
                row.meta += ";N=" + std::to_string(c.series_terms);
            if (t.rows[i].ok)
                row.sop = t.rows[i].point.sop;
            else
            {
                // Failed points are re-evaluated serially to recover the exception type
                try
                {
                    row.sop = analytic_sop(c, s);
                }
                catch (const std::exception &e)
                {
                    record_failure(rep, row, e);
                }
            }
            rep.rows.push_back(row);
        }
        return rep;
    }

    RunReport run_simulation(const ScenarioConfig &c)
    {
        c.validate();
        RunReport rep;
        const auto values = axis_values(c);
        const Axis a = c.axis.value_or(Axis::P_J);
        std::vector<SweepState> states;
        for (double v : values)
            states.push_back(state_at(c, v));

        auto make_row = [&](std::size_t i)
        {
            ResultRow row;
            row.axis = axis_name(c);
            row.value = values[i];
            row.method = "mc";
            row.meta = base_meta(c, states[i]) + ";trials=" + std::to_string(c.trials) + ";seed=" + std::to_string(c.seed);
            if (!c.eve_noise)
                row.meta += ";eve_noise=0";
            return row;
        };
        auto fill = [&](ResultRow &row, const SopEstimate &e)
        {
            row.sop = e.p_hat;
            row.std_err = e.std_err;
            if (e.discarded > 0)
                row.meta += ";discarded=" + std::to_string(e.discarded);
        };

        // Axes that leave the sampled fields unchanged share one batch of realizations
        const bool batch = a == Axis::P_J || a == Axis::eps;
        if (batch)
        {
            std::vector<SimSpec> specs;
            std::vector<SystemParams> params;
            bool ok = true;
            for (const auto &s : states)
            {
                SimSpec spec = sim_spec(c, s.sys.M);
                spec.user_order = s.n;
                specs.push_back(spec);
                params.push_back(s.sys);
                try
                {
                    s.sys.validate();
                }
                catch (const std::exception &)
                {
                    ok = false;
                }
            }
            if (ok)
            {
                const auto est = estimate_sop_batch(specs, params);
                for (std::size_t i = 0; i < states.size(); ++i)
                {
                    auto row = make_row(i);
                    fill(row, est[i]);
                    rep.rows.push_back(row);
                }
                return rep;
            }
        }
        for (std::size_t i = 0; i < states.size(); ++i)
        {
            auto row = make_row(i);
            try
            {
                SimSpec spec = sim_spec(c, states[i].sys.M);
                spec.user_order = states[i].n;
                fill(row, estimate_sop(spec, states[i].sys));
            }
            catch (const std::exception &e)
            {
                record_failure(rep, row, e);
            }
            rep.rows.push_back(row);
        }
        return rep;
    }

    RunReport run_scenario(const ScenarioConfig &c)
    {
        c.validate();
        RunReport rep;
        auto append = [&](RunReport r)
        {
            rep.rows.insert(rep.rows.end(), r.rows.begin(), r.rows.end());
            rep.warnings.insert(rep.warnings.end(), r.warnings.begin(), r.warnings.end());
            rep.nonconvergence = rep.nonconvergence || r.nonconvergence;
        };
        if (c.method != Method::mc)
            append(run_analytic(c));
        if (c.method != Method::analytic)
            append(run_simulation(c));
        return rep;
    }

    RunReport run_optimize(const ScenarioConfig &c)
    {
        c.validate();
        if (c.axis && *c.axis != Axis::eps)
            throw ConfigError("axis", "optimize sweeps only eps (or no axis)");
        if (c.method == Method::mc)
            throw ConfigError("method", "optimize uses the analytic objective");
        if (is_us(c.scheme))
            throw ConfigError("scheme", "user selection runs without jamming; nothing to optimize");
        RunReport rep;
        std::vector<double> eps_values = c.axis ? c.grid : std::vector<double>{c.sys.eps};
        for (double e : eps_values)
        {
            ScenarioConfig ce = c;
            ce.sys.eps = e;
            ce.axis.reset();
            ce.grid.clear();
            ResultRow row;
            row.axis = c.axis ? "eps" : "P_J_dB";
            row.method = "optimize";
            row.meta = base_meta(ce, SweepState{ce.sys, ce.n});
            try
            {
                OptSpec spec;
                spec.lo_db = c.pj_lo_db;
                spec.hi_db = c.pj_hi_db;
                spec.tol_db = c.tol_db;
                spec.objective = [&](const SystemParams &q) { return analytic_sop(ce, SweepState{q, ce.n}); };
                const auto r = optimal_pj(spec, ce.sys);
                row.value = c.axis ? e : r.pj_star_db;
                row.sop = r.sop_star;
                row.meta += ";pj_star_db=" + fmt17(r.pj_star_db) + ";boundary=" + (r.boundary ? "1" : "0") +
                            ";multimodal=" + (r.multimodal ? "1" : "0") + ";evaluations=" + std::to_string(r.evaluations);
                if (r.multimodal)
                    rep.warnings.push_back("eps=" + short_num(e) + ": objective not unimodal on the coarse scan; used the fallback grid");
            }
            catch (const std::exception &ex)
            {
                row.value = c.axis ? e : std::nan("");
                record_failure(rep, row, ex);
            }
            rep.rows.push_back(row);
        }
        return rep;
    }

    std::string to_csv(const std::vector<ResultRow> &rows)
    {
        std::string out = "axis,value,sop,method,std_err,meta\n";
        for (const auto &r : rows)
            out += csv_field(r.axis) + "," + fmt17(r.value) + "," + fmt17(r.sop) + "," + csv_field(r.method) + "," +
                   fmt17(r.std_err) + "," + csv_field(r.meta) + "\n";
        return out;
    }

    std::vector<ResultRow> parse_csv(const std::string &text)
    {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line) || line != "axis,value,sop,method,std_err,meta")
            throw DomainError("parse_csv: missing or wrong header");
        std::vector<ResultRow> rows;
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            const auto f = split_csv_line(line);
            if (f.size() != 6)
                throw DomainError("parse_csv: expected 6 fields in '" + line + "'");
            auto num = [](const std::string &s) { return std::strtod(s.c_str(), nullptr); };
            rows.push_back({f[0], num(f[1]), num(f[2]), f[3], num(f[4]), f[5]});
        }
        return rows;
    }

    std::string to_json(const std::vector<ResultRow> &rows)
    {
        auto num = [](double x) -> nlohmann::ordered_json
        {
            if (std::isfinite(x))
                return x;
            return nullptr;
        };
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &r : rows)
            arr.push_back({{"axis", r.axis}, {"value", num(r.value)}, {"sop", num(r.sop)}, {"method", r.method},
                           {"std_err", num(r.std_err)}, {"meta", r.meta}});
        return arr.dump(2) + "\n";
    }
}
