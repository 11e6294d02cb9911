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

#ifndef FDSEC_ERRORS_H
#define FDSEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace fdsec
{
    // Argument outside the mathematical domain of a function
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A closed form was called outside the regime it was derived for (e.g. alpha != 2)
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Iterative evaluation did not reach its tolerance; carries the best estimate
    class ConvergenceError : public std::runtime_error
    {
    public:
        ConvergenceError(const std::string &what, double best_estimate, double error_estimate = 0.0)
            : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}

        double best_estimate() const noexcept { return best_; }
        double error_estimate() const noexcept { return err_; }

    private:
        double best_;
        double err_;
    };
}

#endif
