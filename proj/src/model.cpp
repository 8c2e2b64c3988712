// SPDX-License-Identifier: Apache-2.0
//
// weit: wireless energy and information transfer tradeoff library
// Copyright (C) 2026 The weit authors
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
// ------------------------------------------------------------------------

#include "weit/model.hpp"

#include <cmath>
#include <stdexcept>

namespace weit {

std::string_view to_string(FormulaMode mode)
{
    return mode == FormulaMode::paper_exact ? "paper-exact" : "consistent";
}

FormulaMode formula_mode_from_string(std::string_view text)
{
    if (text == "paper-exact")
        return FormulaMode::paper_exact;
    if (text == "consistent")
        return FormulaMode::consistent;
    throw std::invalid_argument("mode must be 'paper-exact' or 'consistent', got '" + std::string(text) + "'");
}

void SystemParams::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw std::invalid_argument(what);
    };
    require(nt >= 1, "nt must be >= 1");
    require(feedback_bits >= 0, "feedback_bits must be >= 0");
    require(feedback_bits <= 30, "feedback_bits must be <= 30");
    require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
    require(p1_watts >= 0.0 && std::isfinite(p1_watts), "p1_watts must be non-negative");
    require(sigma2_watts > 0.0 && std::isfinite(sigma2_watts), "sigma2_watts must be positive");
    require(slot_seconds > 0.0 && std::isfinite(slot_seconds), "slot_seconds must be positive");
    require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
    require(theta > 0.0 && std::isfinite(theta), "theta must be positive");
    require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
    require(entry_variance > 0.0 && std::isfinite(entry_variance), "entry_variance must be positive");
}

SystemParams reference_params()
{
    SystemParams p;
    p.nt = 4;
    p.feedback_bits = 4;
    p.eta = 0.8;
    p.p1_watts = dbm_to_watts(0.0);
    p.sigma2_watts = dbm_to_watts(-125.0);
    p.slot_seconds = 5e-3;
    p.alpha = path_loss(10.0, 4.0);
    p.theta = p.alpha;
    return p;
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    if (!(watts > 0.0))
        throw std::domain_error("watts_to_dbm: power must be positive");
    return 10.0 * std::log10(watts) + 30.0;
}

double path_loss(double distance_m, double exponent)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss: distance must be positive");
    return 1e-2 * std::pow(distance_m, -exponent);
}

double snr_coefficient_a(const SystemParams &params)
{
    return params.eta * params.alpha * params.theta * params.p1_watts / params.sigma2_watts;
}

}  // namespace weit
