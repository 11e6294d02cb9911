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

// fdsec: secrecy outage probabilities from the command line.
//
//   fdsec analytic [--config F] [--set K=V ...] [--out F] [--format csv|json]
//   fdsec simulate ... [--trials N] [--seed S] [--threads T]
//   fdsec optimize ...
//   fdsec figure fig2 ... fig10
//
// Exit codes: 0 success, 2 configuration error, 3 numeric non-convergence.

#include "fdsec/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace
{
    constexpr int kExitConfig = 2;
    constexpr int kExitNonConvergence = 3;

    struct Common
    {
        std::string config;
        std::vector<std::string> sets;
        std::string out;
        std::optional<std::int64_t> trials;
        std::optional<std::uint64_t> seed;
        std::optional<int> threads;
        std::optional<std::string> format;
    };

    void add_common(CLI::App *cmd, Common &c)
    {
        cmd->add_option("--config", c.config, "key = value scenario file");
        cmd->add_option("--set", c.sets, "KEY=VALUE override (repeatable)")->take_all();
        cmd->add_option("--out", c.out, "output file (default stdout)");
        cmd->add_option("--trials", c.trials, "Monte Carlo trials per point");
        cmd->add_option("--seed", c.seed, "Monte Carlo seed");
        cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
        cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    }

    void apply_common(fdsec::ScenarioConfig &cfg, const Common &c)
    {
        if (!c.config.empty())
            cfg = fdsec::parse_config([&] {
                std::ifstream f(c.config);
                if (!f)
                    throw fdsec::ConfigError("config", "cannot read '" + c.config + "'");
                return std::string(std::istreambuf_iterator<char>(f), {});
            }(), cfg);
        for (const auto &s : c.sets)
            fdsec::apply_override(cfg, s);
        if (c.trials)
            cfg.trials = *c.trials;
        if (c.seed)
            cfg.seed = *c.seed;
        if (c.threads)
            cfg.threads = *c.threads;
        if (c.format)
            cfg.format = *c.format;
        if (!c.out.empty())
            cfg.out = c.out;
    }

    void emit(const std::vector<fdsec::ResultRow> &rows, const std::string &format, const std::string &out)
    {
        const std::string text = format == "json" ? fdsec::to_json(rows) : fdsec::to_csv(rows);
        if (out.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw fdsec::ConfigError("out", "cannot write '" + out + "'");
        f << text;
    }

    int finish(const fdsec::RunReport &rep, const std::string &format, const std::string &out)
    {
        for (const auto &w : rep.warnings)
            std::cerr << "warning: " << w << "\n";
        emit(rep.rows, format, out);
        return rep.nonconvergence ? kExitNonConvergence : 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy outage probability of jammed multi-antenna downlinks"};
    app.require_subcommand(1);

    Common common;
    auto *analytic = app.add_subcommand("analytic", "closed-form / quadrature evaluation");
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
    auto *optimize = app.add_subcommand("optimize", "optimal jamming power of the analytic objective");
    auto *figure = app.add_subcommand("figure", "reproduce a figure preset (fig2 ... fig10)");
    std::string figure_name;
    figure->add_option("name", figure_name, "preset name")->required();
    for (auto *cmd : {analytic, simulate, optimize, figure})
        add_common(cmd, common);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }

    try
    {
        if (figure->parsed())
        {
            auto curves = fdsec::figure_preset(figure_name);
            fdsec::RunReport all;
            std::string format = "csv", out;
            for (auto &cfg : curves)
            {
                apply_common(cfg, common);
                cfg.validate();
                format = cfg.format;
                out = cfg.out;
            }
            for (const auto &cfg : curves)
            {
                auto rep = fdsec::run_scenario(cfg);
                all.rows.insert(all.rows.end(), rep.rows.begin(), rep.rows.end());
                all.warnings.insert(all.warnings.end(), rep.warnings.begin(), rep.warnings.end());
                all.nonconvergence = all.nonconvergence || rep.nonconvergence;
            }
            return finish(all, format, out);
        }

        fdsec::ScenarioConfig cfg;
        apply_common(cfg, common);
        if (analytic->parsed())
            cfg.method = fdsec::Method::analytic;
        else if (simulate->parsed())
            cfg.method = fdsec::Method::mc;
        cfg.validate();
        const auto rep = optimize->parsed() ? fdsec::run_optimize(cfg) : fdsec::run_scenario(cfg);
        return finish(rep, cfg.format, cfg.out);
    }
    catch (const fdsec::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const fdsec::ConvergenceError &e)
    {
        std::cerr << "error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
        return kExitNonConvergence;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
