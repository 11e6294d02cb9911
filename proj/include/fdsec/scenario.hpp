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

#ifndef FDSEC_SCENARIO_H
#define FDSEC_SCENARIO_H

#include "fdsec/colluding.hpp"
#include "fdsec/montecarlo.hpp"
#include "fdsec/optimizer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fdsec
{
    // Bad configuration key or value; key() names it
    class ConfigError : public DomainError
    {
    public:
        ConfigError(const std::string &key, const std::string &what)
            : DomainError("config key '" + key + "': " + what), key_(key) {}
        const std::string &key() const noexcept { return key_; }

    private:
        std::string key_;
    };

    enum class Method
    {
        analytic,
        mc,
        both
    };

    enum class ChannelChoice
    {
        typical, // |h_i|^2 at the expected order statistics of M unit exponentials, |g_B|^2 = 1
        seeded   // drawn once from the seed
    };

    // One curve. Powers are in dB in the text form and linear here; P_J grid values stay in dB.
    struct ScenarioConfig
    {
        SystemParams sys = SystemParams::defaults();
        Scheme scheme = Scheme::TAB;
        bool colluding = false;
        Method method = Method::analytic;
        std::optional<Conditioning> conditioning; // fixed for single-user schemes, redraw for user selection
        ChannelChoice channel = ChannelChoice::typical;
        std::optional<Axis> axis;
        std::vector<double> grid;
        int n = 1;
        std::int64_t trials = 100000;
        std::uint64_t seed = 1;
        int threads = 1;
        bool eve_noise = true;
        int series_terms = 20;
        NoiseTerm noise_term = NoiseTerm::exact;
        double pj_lo_db = -20.0;
        double pj_hi_db = 80.0;
        double tol_db = 0.05;
        std::string label;
        std::string out;
        std::string format = "csv";

        Conditioning effective_conditioning() const;
        // Throws ConfigError naming the offending key
        void validate() const;
    };

    // key = value; throws ConfigError for unknown keys and unparsable values
    void apply_setting(ScenarioConfig &cfg, const std::string &key, const std::string &value);
    void apply_override(ScenarioConfig &cfg, const std::string &assignment);

    // Flat key = value lines, '#' starts a comment
    ScenarioConfig parse_config(const std::string &text, ScenarioConfig base = {});
    ScenarioConfig load_config(const std::string &path);

    // Curves of a figure-reproduction preset (fig2 ... fig10)
    std::vector<ScenarioConfig> figure_preset(const std::string &name);
    std::vector<std::string> figure_names();

    MainChannel typical_main_channel(int M);

    struct ResultRow
    {
        std::string axis;
        double value = 0.0;
        double sop = 0.0;
        std::string method;
        double std_err = 0.0;
        std::string meta;
    };

    struct RunReport
    {
        std::vector<ResultRow> rows;
        std::vector<std::string> warnings; // one per failed point
        bool nonconvergence = false;
    };

    RunReport run_analytic(const ScenarioConfig &cfg);
    RunReport run_simulation(const ScenarioConfig &cfg);
    RunReport run_scenario(const ScenarioConfig &cfg); // follows cfg.method

    // Optimal P_J of the analytic objective; one row per grid point when axis = eps
    RunReport run_optimize(const ScenarioConfig &cfg);

    // Header axis,value,sop,method,std_err,meta; numbers with 17 significant digits
    std::string to_csv(const std::vector<ResultRow> &rows);
    std::vector<ResultRow> parse_csv(const std::string &text);
    std::string to_json(const std::vector<ResultRow> &rows);
}

#endif
