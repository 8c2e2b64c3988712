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

#include "weit/bounds.hpp"

#include "weit/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weit {

double digamma_positive_int(int n)
{
    if (n < 1)
        throw std::domain_error("digamma_positive_int: n must be >= 1");
    double harmonic = 0.0;
    // smallest terms first
    for (int k = n - 1; k >= 1; --k)
        harmonic += 1.0 / k;
    return harmonic - euler_gamma;
}

namespace {

/// rho^2 b + (1 - rho^2) floor, clamped so rounding never lifts it above b;
/// exactly b at rho = 1.
double blend_toward(double b, double floor, double rho2)
{
    if (rho2 == 1.0)
        return b;
    return std::min(b, floor + rho2 * (b - floor));
}

}  // namespace

Coefficients compute_coefficients(const SystemParams &params)
{
    params.validate();
    const double nt = params.nt;
    const double a = snr_coefficient_a(params);

    double gain_upper = rvq_gain_upper(params.nt, params.feedback_bits);
    double gain_lower = rvq_gain_lower(params.nt, params.feedback_bits);
    if (params.full_csi || params.nt == 1) {
        gain_upper = 1.0;
        gain_lower = 1.0;
    }
    const double log_norm_offset = std::exp(2.0 * digamma_positive_int(params.nt));
    const double rho2 = params.rho * params.rho;

    Coefficients c;
    c.a = a;
    c.mode = params.mode;
    c.c_gain = a * gain_lower;
    if (params.mode == FormulaMode::paper_exact) {
        c.b_upper = 4.0 * a * nt * nt * gain_upper;
        c.d_lower = c.c_gain * log_norm_offset;
        c.b_imperfect = blend_toward(c.b_upper, 2.0 * a * nt, rho2);
    } else {
        const double v2 = params.entry_variance * params.entry_variance;
        c.b_upper = a * v2 * nt * nt * gain_upper;
        c.d_lower = v2 * c.c_gain * log_norm_offset;
        c.b_imperfect = blend_toward(c.b_upper, a * v2 * nt, rho2);
    }
    return c;
}

double slot_rate(double tau, double coeff, double slot_seconds)
{
    if (!(tau >= 0.0 && tau <= slot_seconds))
        throw std::domain_error("rate: tau must lie in [0, T]");
    if (tau == 0.0 || tau == slot_seconds || coeff == 0.0)
        return 0.0;
    const double rest = slot_seconds - tau;
    return rest / slot_seconds * std::log1p(coeff * tau / rest) / std::numbers::ln2;
}

double rate_upper(double tau, const Coefficients &coeff, double slot_seconds)
{
    return slot_rate(tau, coeff.b_upper, slot_seconds);
}

double rate_lower(double tau, const Coefficients &coeff, double slot_seconds)
{
    return slot_rate(tau, coeff.d_lower, slot_seconds);
}

double rate_upper_imperfect(double tau, const Coefficients &coeff, double slot_seconds)
{
    return slot_rate(tau, coeff.b_imperfect, slot_seconds);
}

}  // namespace weit
