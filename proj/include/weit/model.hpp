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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace weit {

/// Selects which coefficient algebra the closed-form bounds use.
///
/// `paper_exact` evaluates the printed constants (fixed per-entry variance 2
/// in the upper bounds, unit variance in the lower bound and the CSI error
/// term). `consistent` scales every coefficient by the configured entry
/// variance so the bounds hold against the simulator for any variance.
enum class FormulaMode { paper_exact, consistent };

std::string_view to_string(FormulaMode mode);
FormulaMode formula_mode_from_string(std::string_view text);

/// Physical and protocol constants of one link. All quantities are SI.
struct SystemParams {
    int nt = 4;                   ///< antennas at the power source
    int feedback_bits = 4;        ///< codebook holds 2^feedback_bits beams
    bool full_csi = false;        ///< ideal MRT beam instead of a codebook (B = infinity)
    double eta = 0.8;             ///< energy conversion efficiency
    double p1_watts = 1e-3;       ///< power source transmit power
    double sigma2_watts = 3.1622776601683795e-16;  ///< receiver noise variance
    double slot_seconds = 5e-3;   ///< slot length T
    double alpha = 1e-6;          ///< forward path loss
    double theta = 1e-6;          ///< reverse path loss
    double rho = 1.0;             ///< correlation between true and estimated CSI
    double entry_variance = 2.0;  ///< E|h_i|^2 of every fading entry
    FormulaMode mode = FormulaMode::consistent;

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;
};

/// Constants of the reference scenario: 4 antennas, eta 0.8, noise -125 dBm,
/// 5 ms slots, 10 m link with exponent 4, 4 feedback bits, P1 = 0 dBm.
SystemParams reference_params();

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Power-law path loss with 20 dB of loss at the 1 m reference distance.
double path_loss(double distance_m, double exponent);

/// a = eta * alpha * theta * P1 / sigma^2
double snr_coefficient_a(const SystemParams &params);

}  // namespace weit
