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

#include "weit/codebook.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace weit {

namespace {

void check_support(double x, int nt, int bits, const char *fn)
{
    if (nt < 2)
        throw std::domain_error(std::string(fn) + ": nt must be >= 2 (gain is identically 1 for nt = 1)");
    if (bits < 0)
        throw std::domain_error(std::string(fn) + ": bits must be >= 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(fn) + ": x must lie in [0,1]");
}

}  // namespace

double max_beta_pdf(double x, int nt, int bits)
{
    check_support(x, nt, bits, "max_beta_pdf");
    const double count = std::ldexp(1.0, bits);
    const double tail = std::pow(1.0 - x, nt - 1);
    // (1 - tail)^(count-1) computed in log space; log1p keeps precision near x = 0
    const double head = count == 1.0 ? 1.0 : std::exp((count - 1.0) * std::log1p(-tail));
    return count * (nt - 1) * std::pow(1.0 - x, nt - 2) * head;
}

double max_beta_cdf(double x, int nt, int bits)
{
    check_support(x, nt, bits, "max_beta_cdf");
    const double count = std::ldexp(1.0, bits);
    const double tail = std::pow(1.0 - x, nt - 1);
    if (tail == 1.0)
        return 0.0;
    return std::exp(count * std::log1p(-tail));
}

double expected_max_beta(int nt, int bits)
{
    if (bits < 0)
        throw std::domain_error("expected_max_beta: bits must be >= 0");
    if (nt < 1)
        throw std::domain_error("expected_max_beta: nt must be >= 1");
    if (nt == 1)
        return 1.0;
    const double count = std::ldexp(1.0, bits);
    const double q = static_cast<double>(nt) / (nt - 1);
    // 2^B * Beta(2^B, q) = exp(B ln 2 + lnG(2^B) + lnG(q) - lnG(2^B + q))
    const double log_term = bits * std::numbers::ln2 + std::lgamma(count) + std::lgamma(q) - std::lgamma(count + q);
    return -std::expm1(log_term);
}

double rvq_gain_lower(int nt, int bits)
{
    if (nt < 2)
        return 1.0;
    return -std::expm1(-bits * std::numbers::ln2 / (nt - 1));
}

double rvq_gain_upper(int nt, int bits)
{
    if (nt < 2)
        return 1.0;
    const double ratio = static_cast<double>(nt - 1) / nt;
    return 1.0 - ratio * std::exp2(-static_cast<double>(bits) / (nt - 1));
}

}  // namespace weit
