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

#include "weit/tradeoff.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weit {

std::string_view to_string(Algorithm alg)
{
    switch (alg) {
    case Algorithm::UA: return "UA";
    case Algorithm::LA: return "LA";
    case Algorithm::EA: return "EA";
    case Algorithm::OA: return "OA";
    case Algorithm::UA_imperfect: return "UA-imperfect";
    }
    return "?";
}

Algorithm algorithm_from_string(std::string_view text)
{
    for (Algorithm alg : {Algorithm::UA, Algorithm::LA, Algorithm::EA, Algorithm::OA, Algorithm::UA_imperfect})
        if (text == to_string(alg))
            return alg;
    throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

double stationarity_residual(double x, double coeff)
{
    const double first = coeff / ((1.0 + (coeff - 1.0) * x) * std::numbers::ln2);
    const double second = std::log1p(coeff * x / (1.0 - x)) / std::numbers::ln2;
    return first - second;
}

double stationary_tau(double coeff, double slot_seconds)
{
    if (!(coeff > 0.0) || !std::isfinite(coeff))
        throw std::domain_error("stationary_tau: coefficient must be positive, no interior stationary point");
    if (!(slot_seconds > 0.0))
        throw std::domain_error("stationary_tau: slot length must be positive");

    constexpr double eps = 1e-9;
    double lo = eps;
    double hi = 1.0 - eps;
    if (!(stationarity_residual(lo, coeff) > 0.0 && stationarity_residual(hi, coeff) < 0.0))
        throw std::runtime_error("stationary_tau: no sign change on the bracket");

    // The residual is decreasing in x. Bisect until the midpoint no longer
    // separates the endpoints, which is tighter than 1e-12 relative width.
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (stationarity_residual(mid, coeff) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double x = std::abs(stationarity_residual(lo, coeff)) <= std::abs(stationarity_residual(hi, coeff)) ? lo : hi;
    return x * slot_seconds;
}

TauSolution solve_for_coefficient(Algorithm tag, double coeff, double slot_seconds)
{
    TauSolution sol;
    sol.algorithm = tag;
    sol.candidates.push_back({0.0, slot_rate(0.0, coeff, slot_seconds)});
    sol.candidates.push_back({slot_seconds, slot_rate(slot_seconds, coeff, slot_seconds)});
    if (coeff > 0.0) {
        const double tau = stationary_tau(coeff, slot_seconds);
        sol.candidates.push_back({tau, slot_rate(tau, coeff, slot_seconds)});
        sol.residual = std::abs(stationarity_residual(tau / slot_seconds, coeff));
    }
    // strict comparison keeps tau = 0 on ties, which covers the k = 0 case
    const TauCandidate *best = &sol.candidates.front();
    for (const auto &c : sol.candidates)
        if (c.objective > best->objective)
            best = &c;
    sol.tau_star = best->tau;
    sol.rate_at_tau = best->objective;
    return sol;
}

TauSolution solve_ua(const SystemParams &params)
{
    const Coefficients c = compute_coefficients(params);
    return solve_for_coefficient(Algorithm::UA, c.b_upper, params.slot_seconds);
}

TauSolution solve_la(const SystemParams &params)
{
    const Coefficients c = compute_coefficients(params);
    return solve_for_coefficient(Algorithm::LA, c.d_lower, params.slot_seconds);
}

TauSolution solve_ea(const SystemParams &params)
{
    params.validate();
    const Coefficients c = compute_coefficients(params);
    const double half = params.slot_seconds / 2.0;
    TauSolution sol;
    sol.algorithm = Algorithm::EA;
    sol.tau_star = half;
    sol.rate_at_tau = slot_rate(half, params.rho < 1.0 ? c.b_imperfect : c.b_upper, params.slot_seconds);
    sol.candidates.push_back({half, sol.rate_at_tau});
    return sol;
}

TauSolution solve_ua_imperfect(const SystemParams &params)
{
    const Coefficients c = compute_coefficients(params);
    return solve_for_coefficient(Algorithm::UA_imperfect, c.b_imperfect, params.slot_seconds);
}

}  // namespace weit
