# SPDX-License-Identifier: Apache-2.0
#
# fdsecrecy - secrecy outage analysis for jammed multi-antenna downlinks
# Copyright (C) 2026 The fdsecrecy authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Secrecy outage probability of jammed multi-antenna downlinks."""

from ._core import (  # noqa: F401
    Conditioning,
    ConfigError,
    ConvergenceError,
    DomainError,
    MainChannel,
    PreconditionError,
    Scheme,
    SimSpec,
    SopEstimate,
    SystemParams,
    cdf_Y,
    cdf_Z,
    db_to_linear,
    eps_max,
    estimate_sop,
    exp_integral_e1,
    figure,
    figure_names,
    gamma_p,
    gamma_q,
    linear_to_db,
    minimize_db,
    pcon_tab_conditional,
    pcon_tab_hd,
    pcon_tab_unconditional,
    pcon_tas_conditional,
    pcon_tas_hd,
    pcon_tas_unconditional,
    pdf_Y,
    pdf_Z,
    run,
    sop_tab_colluding_an,
    sop_tab_colluding_eps0,
    sop_tabus,
    sop_tabus_eps0_nearest,
    sop_tas_colluding,
    tab_snr_scale,
    tas_snr,
    typical_main_channel,
)

__version__ = "0.1.0"
