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

#ifndef FDSEC_OPTIMIZER_H
#define FDSEC_OPTIMIZER_H

#include "fdsec/model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fdsec
{
    double db_to_linear(double db);
    double linear_to_db(double x);

    // Objective evaluated at the parameter set with P_J replaced by the trial power
    using PjObjective = std::function<double(const SystemParams &)>;

    struct OptSpec
    {
        PjObjective objective;
        double lo_db = -20.0;
        double hi_db = 80.0;
        double tol_db = 0.05;
        int coarse_points = 8;
        int fallback_points = 64; // grid used when the coarse scan is not unimodal

        void validate() const; // throws DomainError
    };

    struct OptResult
    {
        double pj_star = 0.0; // linear
        double pj_star_db = 0.0;
        double sop_star = 1.0;
        bool boundary = false;   // optimum at (within tol_db of) an end of the range
        bool multimodal = false; // coarse scan found several local minima
        int evaluations = 0;
    };

    // Golden-section search on the dB axis, bracketed by a coarse scan
    OptResult optimal_pj(const OptSpec &spec, const SystemParams &params);

    // Generic form on an arbitrary axis x in [lo, hi]
    OptResult minimize_scalar(const std::function<double(double)> &f, double lo, double hi, double tol,
                              int coarse_points = 8, int fallback_points = 64);

    enum class Axis
    {
        P_J,
        eps,
        rho_E,
        rho_U,
        M,
        n,
        R
    };

    const char *to_string(Axis a);
    Axis axis_from_string(const std::string &name); // throws DomainError

    // Parameters plus the user order of the user-selection schemes
    struct SweepState
    {
        SystemParams sys;
        int n = 1;
    };

    // Sets one axis; P_J is linear here
    void set_axis(SweepState &s, Axis a, double value);

    struct SweepPoint
    {
        double sop = 0.0;
        double std_err = 0.0; // 0 for analytic rows
        std::string method;
        std::string meta;
    };

    using SweepObjective = std::function<SweepPoint(const SweepState &)>;

    struct SweepRow
    {
        double value = 0.0;
        SweepPoint point;
        bool ok = true;
        std::string error; // set when the objective threw
    };

    struct SweepTable
    {
        Axis axis = Axis::P_J;
        std::vector<SweepRow> rows;
    };

    // Rows in grid order. A throwing point is recorded and the sweep continues.
    // threads > 1 evaluates points concurrently; the objective must then be thread-safe.
    SweepTable sweep(const SweepObjective &objective, Axis axis, const std::vector<double> &grid,
                     const SweepState &base, int threads = 1);
}

#endif
