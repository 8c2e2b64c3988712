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

#include <catch_amalgamated.hpp>

#include "weit/bounds.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <random>

using namespace weit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("digamma at positive integers", "[bounds]")
{
    CHECK_THAT(digamma_positive_int(1), WithinAbs(-0.57721566490, 1e-15));
    CHECK_THAT(digamma_positive_int(2), WithinAbs(1.0 - 0.57721566490, 1e-15));
    CHECK_THAT(digamma_positive_int(4), WithinAbs(11.0 / 6.0 - 0.57721566490, 1e-12));
    for (int n = 1; n <= 64; ++n)
        CHECK_THAT(digamma_positive_int(n), WithinAbs(boost::math::digamma(double(n)), 1e-11));
    CHECK_THROWS_AS(digamma_positive_int(0), std::domain_error);
}

TEST_CASE("coefficients", "[bounds]")
{
    SystemParams p = reference_params();
    const double a = 2.5298221281347035;

    SECTION("no feedback, printed formulas")
    {
        p.mode = FormulaMode::paper_exact;
        p.feedback_bits = 0;
        const Coefficients c = compute_coefficients(p);
        CHECK_THAT(c.b_upper, WithinRel(16.0 * a, 1e-13));
        CHECK(c.c_gain == 0.0);
        CHECK(c.d_lower == 0.0);
    }
    SECTION("reference scenario with 4 bits, two routes")
    {
        p.mode = FormulaMode::paper_exact;
        const Coefficients c = compute_coefficients(p);
        // 4 a nt^2 (1 - 3/4 2^(-4/3)) expanded by hand
        const double two_pow = std::exp(-4.0 / 3.0 * std::log(2.0));
        const double by_hand = 64.0 * c.a * (1.0 - 0.75 * two_pow);
        CHECK_THAT(c.b_upper, WithinRel(by_hand, 1e-14));
        CHECK_THAT(c.b_upper, WithinRel(113.71850851069953, 1e-13));
        CHECK_THAT(c.a, WithinRel(a, 1e-13));
    }
    SECTION("consistent mode at v = 2 matches the printed upper bound")
    {
        SystemParams q = p;
        q.mode = FormulaMode::paper_exact;
        CHECK_THAT(compute_coefficients(p).b_upper, WithinRel(compute_coefficients(q).b_upper, 1e-15));
        CHECK_THAT(compute_coefficients(p).d_lower, WithinRel(75.270545793869241, 1e-11));
        CHECK_THAT(compute_coefficients(q).d_lower, WithinRel(75.270545793869241 / 4.0, 1e-11));
    }
    SECTION("perfect CSI collapses the imperfect coefficient")
    {
        for (FormulaMode mode : {FormulaMode::paper_exact, FormulaMode::consistent})
            for (int bits : {0, 2, 4, 9}) {
                p.mode = mode;
                p.feedback_bits = bits;
                p.rho = 1.0;
                const Coefficients c = compute_coefficients(p);
                CHECK(c.b_imperfect == c.b_upper);
            }
    }
    SECTION("uncorrelated estimate makes the coefficient independent of B")
    {
        for (FormulaMode mode : {FormulaMode::paper_exact, FormulaMode::consistent}) {
            p.mode = mode;
            p.rho = 0.0;
            p.feedback_bits = 0;
            const double ref = compute_coefficients(p).b_imperfect;
            for (int bits : {1, 4, 10}) {
                p.feedback_bits = bits;
                CHECK_THAT(compute_coefficients(p).b_imperfect, WithinRel(ref, 1e-14));
            }
        }
    }
    SECTION("full CSI uses unit gain")
    {
        p.full_csi = true;
        const Coefficients c = compute_coefficients(p);
        CHECK_THAT(c.b_upper, WithinRel(c.a * 4.0 * 16.0, 1e-14));
        CHECK_THAT(c.c_gain, WithinRel(c.a, 1e-15));
    }
}

TEST_CASE("coefficient ordering properties", "[bounds]")
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        SystemParams p = reference_params();
        p.nt = 2 + static_cast<int>(unit(rng) * 15);
        p.feedback_bits = static_cast<int>(unit(rng) * 13);
        p.p1_watts = std::pow(10.0, -6.0 + 6.0 * unit(rng));
        p.entry_variance = 0.25 + 4.0 * unit(rng);
        p.rho = unit(rng);
        p.mode = unit(rng) < 0.5 ? FormulaMode::paper_exact : FormulaMode::consistent;
        const Coefficients c = compute_coefficients(p);
        INFO("nt=" << p.nt << " B=" << p.feedback_bits << " rho=" << p.rho);
        CHECK(c.a > 0.0);
        CHECK(c.d_lower < c.b_upper);
        CHECK(c.b_imperfect <= c.b_upper);
        // strict loss from CSI error unless beamforming carries no information
        const bool beamforming_matters = p.mode == FormulaMode::paper_exact || p.feedback_bits > 0;
        if (p.rho < 1.0 && beamforming_matters)
            CHECK(c.b_imperfect < c.b_upper);
        CHECK(c.c_gain >= 0.0);
    }
}

TEST_CASE("rate functions", "[bounds]")
{
    Coefficients unit;
    unit.b_upper = 1.0;
    unit.d_lower = 1.0;
    unit.b_imperfect = 1.0;
    const double T = 1.0;

    CHECK(rate_upper(0.0, unit, T) == 0.0);
    CHECK(rate_upper(T, unit, T) == 0.0);
    CHECK_THAT(rate_upper(0.5, unit, T), WithinAbs(0.5, 1e-15));
    CHECK_THAT(rate_upper(0.25, unit, T), WithinAbs(0.75 * std::log2(1.0 / 0.75), 1e-15));
    CHECK(rate_lower(0.0, unit, T) == 0.0);
    for (double tau : {0.1, 0.3, 0.9})
        CHECK(rate_lower(tau, unit, T) == rate_upper(tau, unit, T));
    CHECK_THROWS_AS(rate_upper(-1e-9, unit, T), std::domain_error);
    CHECK_THROWS_AS(rate_upper(1.0 + 1e-9, unit, T), std::domain_error);
    CHECK_THROWS_AS(rate_upper_imperfect(2.0, unit, T), std::domain_error);

    SECTION("continuous at the far endpoint")
    {
        CHECK(slot_rate(T * (1.0 - 1e-12), 1e6, T) < 1e-9);
    }
    SECTION("ordering on the reference scenario")
    {
        const SystemParams p = reference_params();
        const Coefficients c = compute_coefficients(p);
        SystemParams q = p;
        q.rho = 0.9;
        const Coefficients ce = compute_coefficients(q);
        for (int i = 1; i <= 50; ++i) {
            const double tau = p.slot_seconds * i / 51.0;
            CHECK(rate_lower(tau, c, p.slot_seconds) < rate_upper(tau, c, p.slot_seconds));
            CHECK(rate_upper_imperfect(tau, ce, p.slot_seconds) < rate_upper(tau, c, p.slot_seconds));
            CHECK(rate_upper_imperfect(tau, c, p.slot_seconds) == rate_upper(tau, c, p.slot_seconds));
        }
    }
    SECTION("positive inside, monotone in the coefficient")
    {
        for (double k : {1e-3, 0.5, 3.0, 1e4})
            for (double tau : {1e-6, 0.2, 0.5, 0.999}) {
                CHECK(slot_rate(tau, k, T) > 0.0);
                CHECK(slot_rate(tau, 1.5 * k, T) > slot_rate(tau, k, T));
            }
    }
}
