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

#include "weit/model.hpp"

namespace weit {

/// Euler-Mascheroni constant, 11 significant digits.
inline constexpr double euler_gamma = 0.57721566490;

/// psi(n) = sum_{k=1}^{n-1} 1/k - gamma for integer n >= 1.
double digamma_positive_int(int n);

/// Scalars feeding the closed-form rate functions.
struct Coefficients {
    double a = 0.0;            ///< eta alpha theta P1 / sigma^2
    double b_upper = 0.0;      ///< Jensen upper-bound coefficient
    double c_gain = 0.0;       ///< a (1 - 2^(-B/(nt-1)))
    double d_lower = 0.0;      ///< approximate lower-bound coefficient
    double b_imperfect = 0.0;  ///< upper-bound coefficient under CSI error
    FormulaMode mode = FormulaMode::consistent;
};

Coefficients compute_coefficients(const SystemParams &params);

/// (T - tau)/T * log2(1 + k tau/(T - tau)), the common shape of every bound.
/// Zero at tau = 0 and, by continuity, at tau = T.
double slot_rate(double tau, double coeff, double slot_seconds);

double rate_upper(double tau, const Coefficients &coeff, double slot_seconds);
double rate_lower(double tau, const Coefficients &coeff, double slot_seconds);
double rate_upper_imperfect(double tau, const Coefficients &coeff, double slot_seconds);

}  // namespace weit
