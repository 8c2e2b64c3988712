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
#include "weit/montecarlo.hpp"
#include "weit/tradeoff.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weit {

/// Bad configuration; `key()` names the offending setting.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string &message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
    const std::string &key() const { return key_; }

private:
    std::string key_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { fig3, fig4, fig5, custom };
enum class SweepVariable { p1_dbm, feedback_bits, rho, tau };

std::string_view to_string(Scenario s);
std::string_view to_string(SweepVariable v);

struct SweepRange {
    double start = -10.0;
    double stop = 30.0;
    int steps = 21;

    std::vector<double> values() const;
};

/// Fully resolved experiment. Physical settings are held both in the unit
/// the user gave (dBm, ms, metres) and as the derived SI SystemParams.
struct ExperimentSpec {
    Scenario scenario = Scenario::custom;
    SweepVariable sweep = SweepVariable::p1_dbm;
    SweepRange range;
    std::vector<Algorithm> algorithms{Algorithm::UA, Algorithm::LA, Algorithm::EA, Algorithm::OA};

    double p1_dbm = 0.0;
    double sigma2_dbm = -125.0;
    double slot_ms = 5.0;
    double distance_m = 10.0;
    double pathloss_exponent = 4.0;
    SystemParams params = reference_params();

    McConfig mc;
    std::size_t tau_points = 101;
    std::string output_path;  ///< empty writes to stdout
    bool timestamp = false;
};

using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

/// Resolves key=value config text (one setting per line, '#' comments)
/// followed by `overrides`, which win over the text. The scenario preset is
/// applied before any other key. Throws ConfigError naming the key.
ExperimentSpec parse_spec(std::string_view config_text, const ConfigOverrides &overrides = {});

/// Keys accepted by parse_spec.
const std::vector<std::string> &config_keys();

/// Runs the sweep and returns the CSV document: '#' metadata lines, one
/// header line, one row per (sweep value, algorithm) sorted by both.
std::string run_sweep(const ExperimentSpec &spec);

/// run_sweep, then writes to spec.output_path (stdout when empty).
void write_sweep(const ExperimentSpec &spec);

/// 17 significant digits; reads back to exactly `value`.
std::string format_number(double value);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast self-consistency checks of the closed forms and the simulator.
std::vector<CheckResult> run_invariant_checks(const SystemParams &params, std::uint64_t seed);

}  // namespace weit
