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
#include "weit/tradeoff.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace weit {

enum class SearchMethod { grid, golden_section };

struct McConfig {
    std::size_t n_draws = 100000;
    std::uint64_t master_seed = 20140101;
    /// Harvest durations in seconds, strictly increasing inside [0, T].
    /// Empty means 101 uniform points over [0, T].
    std::vector<double> tau_grid;
    SearchMethod search = SearchMethod::golden_section;
    /// When set, one codebook drawn from this seed serves every draw instead
    /// of a fresh random codebook per draw.
    std::optional<std::uint64_t> fixed_codebook_seed;
    /// Worker threads for drawing channels; results do not depend on it.
    unsigned threads = 1;

    void validate(double slot_seconds) const;
};

struct RateEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_draws = 0;
};

/// Per-draw random factors. Neither depends on P1 nor tau, so one set of
/// draws serves every point of a power or duration sweep.
struct LinkDraws {
    std::vector<double> harvest_gain;  ///< |h^H w|^2 on the true channel
    std::vector<double> link_gain;     ///< |h^H w|^2 |g|^2
};

std::vector<double> uniform_tau_grid(double slot_seconds, std::size_t points);

/// Draws the channel set. With `imperfect` the beam is chosen from the
/// estimate and evaluated on h = rho h_est + sqrt(1 - rho^2) n_err.
LinkDraws draw_links(const SystemParams &params, const McConfig &cfg, bool imperfect);

/// Order-fixed pairwise sum.
double pairwise_sum(std::span<const double> values);

/// Sample mean and its standard error, sample_std / sqrt(n).
RateEstimate summarize(std::span<const double> samples);

/// Average rate over the draw set at harvest duration tau.
RateEstimate estimate_rate(const LinkDraws &draws, double a, double tau, double slot_seconds);

RateEstimate mc_harvested_energy(const SystemParams &params, double tau, const McConfig &cfg);
RateEstimate mc_rate(const SystemParams &params, double tau, const McConfig &cfg);
RateEstimate mc_rate_imperfect(const SystemParams &params, double tau, const McConfig &cfg);

/// Numerically optimal tau of the simulated average rate. Every tau is
/// scored on the same draw set.
TauSolution solve_oa(const SystemParams &params, const McConfig &cfg);
TauSolution solve_oa(const LinkDraws &draws, double a, double slot_seconds, const McConfig &cfg);

}  // namespace weit
