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

#include "fdsec/colluding.hpp"
#include "fdsec/model.hpp"
#include "fdsec/montecarlo.hpp"
#include "fdsec/noncolluding.hpp"
#include "fdsec/optimizer.hpp"
#include "fdsec/scenario.hpp"
#include "fdsec/specfun.hpp"
#include "fdsec/userselect.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fdsec;

namespace
{
    py::list rows_to_list(const std::vector<ResultRow> &rows)
    {
        py::list out;
        for (const auto &r : rows)
        {
            py::dict d;
            d["axis"] = r.axis;
            d["value"] = r.value;
            d["sop"] = r.sop;
            d["method"] = r.method;
            d["std_err"] = r.std_err;
            d["meta"] = r.meta;
            out.append(d);
        }
        return out;
    }

    ScenarioConfig config_from(const std::string &text, const std::vector<std::string> &overrides)
    {
        ScenarioConfig c = parse_config(text);
        for (const auto &o : overrides)
            apply_override(c, o);
        c.validate();
        return c;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Secrecy outage probability of jammed multi-antenna downlinks";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("M", &SystemParams::M)
        .def_readwrite("P_T", &SystemParams::P_T)
        .def_readwrite("P_J", &SystemParams::P_J)
        .def_readwrite("rho", &SystemParams::rho)
        .def_readwrite("eps", &SystemParams::eps)
        .def_readwrite("alpha", &SystemParams::alpha)
        .def_readwrite("R", &SystemParams::R)
        .def_readwrite("R_g", &SystemParams::R_g)
        .def_readwrite("d", &SystemParams::d)
        .def_readwrite("rho_E", &SystemParams::rho_E)
        .def_readwrite("rho_U", &SystemParams::rho_U)
        .def_readwrite("R_s", &SystemParams::R_s)
        .def_readwrite("R_D", &SystemParams::R_D)
        .def("beta", &SystemParams::beta)
        .def("validate", &SystemParams::validate)
        .def_static("defaults", &SystemParams::defaults)
        .def_static("colluding_defaults", &SystemParams::colluding_defaults)
        .def_static("userselect_defaults", &SystemParams::userselect_defaults);

    py::enum_<Scheme>(m, "Scheme")
        .value("TAS", Scheme::TAS)
        .value("TAB", Scheme::TAB)
        .value("TAB_US", Scheme::TAB_US)
        .value("TAS_US", Scheme::TAS_US);
    py::enum_<Conditioning>(m, "Conditioning").value("fixed", Conditioning::fixed).value("redraw", Conditioning::redraw);

    py::class_<MainChannel>(m, "MainChannel")
        .def(py::init<>())
        .def_readwrite("h", &MainChannel::h)
        .def_readwrite("g_B", &MainChannel::g_B);

    py::class_<SimSpec>(m, "SimSpec")
        .def(py::init<>())
        .def_readwrite("scheme", &SimSpec::scheme)
        .def_readwrite("colluding", &SimSpec::colluding)
        .def_readwrite("conditioning", &SimSpec::conditioning)
        .def_readwrite("trials", &SimSpec::trials)
        .def_readwrite("seed", &SimSpec::seed)
        .def_readwrite("eve_noise", &SimSpec::eve_noise)
        .def_readwrite("user_order", &SimSpec::user_order)
        .def_readwrite("threads", &SimSpec::threads)
        .def_readwrite("channel", &SimSpec::channel);

    py::class_<SopEstimate>(m, "SopEstimate")
        .def_readonly("p_hat", &SopEstimate::p_hat)
        .def_readonly("std_err", &SopEstimate::std_err)
        .def_readonly("trials", &SopEstimate::trials)
        .def_readonly("outage_count", &SopEstimate::outage_count)
        .def_readonly("discarded", &SopEstimate::discarded);

    m.def("estimate_sop", &estimate_sop, py::arg("spec"), py::arg("params"),
          py::call_guard<py::gil_scoped_release>());
    m.def("typical_main_channel", &typical_main_channel, py::arg("M"));

    // Analytic operations with default options
    m.def("tas_snr", &tas_snr);
    m.def("tab_snr_scale", &tab_snr_scale);
    m.def("cdf_Y", &cdf_Y);
    m.def("pdf_Y", &pdf_Y);
    m.def("cdf_Z", &cdf_Z);
    m.def("pdf_Z", &pdf_Z);
    m.def("eps_max", &eps_max);
    m.def("pcon_tas_conditional", [](double Y, const SystemParams &p) { return pcon_tas_conditional(Y, p); });
    m.def("pcon_tab_conditional", [](double z, const SystemParams &p) { return pcon_tab_conditional(z, p); });
    m.def("pcon_tas_unconditional", [](const SystemParams &p) { return pcon_tas_unconditional(p); });
    m.def("pcon_tab_unconditional", [](const SystemParams &p) { return pcon_tab_unconditional(p); });
    m.def("pcon_tas_hd", &pcon_tas_hd);
    m.def("pcon_tab_hd", &pcon_tab_hd);
    m.def("sop_tabus", [](const SystemParams &p, int n) { return sop_tabus(UsParams::from(p, n)); },
          py::arg("params"), py::arg("n") = 1);
    m.def("sop_tabus_eps0_nearest", [](const SystemParams &p) { return sop_tabus_eps0_nearest(UsParams::from(p, 1)); });
    m.def("sop_tas_colluding", [](double y0, const SystemParams &p, int N)
          { return sop_tas_colluding(y0, p, GammaApproxConfig{N}); },
          py::arg("y0"), py::arg("params"), py::arg("N") = 20);
    m.def("sop_tab_colluding_eps0", [](double z, const SystemParams &p, int N)
          { return sop_tab_colluding_eps0(z, p, GammaApproxConfig{N}); },
          py::arg("z"), py::arg("params"), py::arg("N") = 20);
    m.def("sop_tab_colluding_an", [](double z, const SystemParams &p, int N)
          { return sop_tab_colluding_an(z, p, GammaApproxConfig{N}); },
          py::arg("z"), py::arg("params"), py::arg("N") = 20);

    m.def("exp_integral_e1", [](double x) { return exp_integral_e1(x); });
    m.def("gamma_p", [](double a, double x) { return gamma_p(a, x); });
    m.def("gamma_q", [](double a, double x) { return gamma_q(a, x); });

    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);
    m.def(
        "minimize_db",
        [](const std::function<double(double)> &f, double lo, double hi, double tol)
        {
            const auto r = minimize_scalar(f, lo, hi, tol);
            py::dict d;
            d["x"] = r.pj_star_db;
            d["value"] = r.sop_star;
            d["boundary"] = r.boundary;
            d["multimodal"] = r.multimodal;
            return d;
        },
        py::arg("f"), py::arg("lo") = -20.0, py::arg("hi") = 80.0, py::arg("tol") = 0.05);

    // Scenario front end: same text format and row layout as the command-line tool
    m.def(
        "run",
        [](const std::string &command, const std::string &config, const std::vector<std::string> &overrides)
        {
            ScenarioConfig c = config_from(config, overrides);
            RunReport rep;
            {
                py::gil_scoped_release release;
                if (command == "analytic")
                    c.method = Method::analytic;
                else if (command == "simulate")
                    c.method = Method::mc;
                else if (command != "optimize")
                    throw ConfigError("command", "expected analytic, simulate or optimize");
                rep = command == "optimize" ? run_optimize(c) : run_scenario(c);
            }
            return rows_to_list(rep.rows);
        },
        py::arg("command"), py::arg("config") = "", py::arg("overrides") = std::vector<std::string>{});
    m.def(
        "figure",
        [](const std::string &name, const std::vector<std::string> &overrides)
        {
            std::vector<ResultRow> rows;
            for (auto c : figure_preset(name))
            {
                for (const auto &o : overrides)
                    apply_override(c, o);
                c.validate();
                py::gil_scoped_release release;
                const auto rep = run_scenario(c);
                rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
            }
            return rows_to_list(rows);
        },
        py::arg("name"), py::arg("overrides") = std::vector<std::string>{});
    m.def("figure_names", &figure_names);
}
