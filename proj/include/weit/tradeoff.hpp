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

#include "weit/bounds.hpp"
#include "weit/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace weit {

enum class Algorithm { UA, LA, EA, OA, UA_imperfect };

std::string_view to_string(Algorithm alg);
Algorithm algorithm_from_string(std::string_view text);

struct TauCandidate {
    double tau;
    double objective;
};

/// Optimal harvest duration chosen by one tradeoff algorithm.
struct TauSolution {
    Algorithm algorithm = Algorithm::UA;
    double tau_star = 0.0;     ///< seconds
    double rate_at_tau = 0.0;  ///< the algorithm's own objective at tau_star
    std::vector<TauCandidate> candidates;
    std::optional<double> residual;  ///< |stationarity residual| at the interior candidate
};

/// Left side of the stationarity condition in the nondimensional variable
/// x = tau/T: k/((1 + (k-1)x) ln 2) - log2(1 + k x/(1 - x)).
double stationarity_residual(double x, double coeff);

/// Interior stationary point of (T - tau)/T log2(1 + k tau/(T - tau)).
/// Throws std::domain_error when coeff <= 0 (no interior maximum).
double stationary_tau(double coeff, double slot_seconds);

/// Candidate comparison over {0, T, stationary point} for coefficient k.
TauSolution solve_for_coefficient(Algorithm tag, double coeff, double slot_seconds);

TauSolution solve_ua(const SystemParams &params);
TauSolution solve_la(const SystemParams &params);
TauSolution solve_ea(const SystemParams &params);
TauSolution solve_ua_imperfect(const SystemParams &params);

}  // namespace weit
