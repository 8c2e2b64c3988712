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

#include "weit/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace weit;

namespace {

struct CsvRow {
    std::string sweep_var;
    double sweep_value;
    std::string algorithm;
    double tau_star;
    double closed_form;
    double mc_mean;
    double mc_se;
    std::string mode;
    std::string seed;
};

std::vector<std::string> split(const std::string &line, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

std::string body(const std::string &csv)
{
    std::string out;
    std::stringstream ss(csv);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#')
            out += line + '\n';
    return out;
}

std::vector<CsvRow> rows(const std::string &csv)
{
    std::vector<CsvRow> out;
    std::stringstream ss(body(csv));
    std::string line;
    std::getline(ss, line);
    REQUIRE(line == "sweep_var,sweep_value,algorithm,tau_star_s,closed_form_rate,mc_rate_mean,mc_rate_se,mode,seed");
    while (std::getline(ss, line)) {
        const auto f = split(line, ',');
        REQUIRE(f.size() == 9);
        out.push_back({f[0], std::stod(f[1]), f[2], std::stod(f[3]), std::stod(f[4]), std::stod(f[5]), std::stod(f[6]), f[7], f[8]});
    }
    return out;
}

}  // namespace

TEST_CASE("scenario presets", "[experiment]")
{
    const ExperimentSpec fig3 = parse_spec("scenario=fig3");
    CHECK(fig3.scenario == Scenario::fig3);
    CHECK(fig3.sweep == SweepVariable::p1_dbm);
    CHECK(fig3.range.start == -10.0);
    CHECK(fig3.range.stop == 30.0);
    CHECK(fig3.range.steps == 21);
    CHECK(fig3.algorithms == std::vector<Algorithm>{Algorithm::UA, Algorithm::LA, Algorithm::EA, Algorithm::OA});
    CHECK(fig3.params.nt == 4);
    CHECK(fig3.params.feedback_bits == 4);
    CHECK(fig3.params.eta == 0.8);
    CHECK(fig3.params.slot_seconds == 5e-3);
    CHECK(fig3.params.mode == FormulaMode::consistent);
    CHECK(fig3.mc.n_draws == 100000);
    CHECK(fig3.mc.tau_grid.size() == 101);

    const ExperimentSpec fig4 = parse_spec("scenario=fig4");
    CHECK(fig4.sweep == SweepVariable::feedback_bits);
    CHECK(fig4.algorithms == std::vector<Algorithm>{Algorithm::UA});

    const ExperimentSpec fig5 = parse_spec("scenario=fig5");
    CHECK(fig5.sweep == SweepVariable::rho);
}

TEST_CASE("config text and overrides", "[experiment]")
{
    const std::string text = "# comment\n"
                             "draws = 500   # trailing comment\n"
                             "bits=2\n"
                             "\n"
                             "p1_dbm=20\n"
                             "scenario=fig3\n";
    const ExperimentSpec spec = parse_spec(text, {{"bits", "6"}, {"mode", "paper-exact"}});
    CHECK(spec.mc.n_draws == 500);
    CHECK(spec.params.feedback_bits == 6);
    CHECK(spec.params.mode == FormulaMode::paper_exact);
    CHECK(spec.p1_dbm == 20.0);
    CHECK(spec.params.p1_watts == dbm_to_watts(20.0));
    // scenario applies first even when it appears last
    CHECK(spec.scenario == Scenario::fig3);

    const ExperimentSpec tau = parse_spec("", {{"sweep", "tau"}, {"range", "0:5:11"}});
    CHECK(tau.algorithms == std::vector<Algorithm>{Algorithm::UA, Algorithm::LA});
}

TEST_CASE("config errors name the key", "[experiment]")
{
    auto key_of = [](const std::string &text, const ConfigOverrides &ov = {}) -> std::string {
        try {
            parse_spec(text, ov);
        } catch (const ConfigError &e) {
            return e.key();
        }
        return "<no error>";
    };
    CHECK(key_of("range=0:1:0") == "range");
    try {
        parse_spec("range=0:1:0");
    } catch (const ConfigError &e) {
        CHECK(std::string(e.what()).find("steps must be >= 1") != std::string::npos);
    }
    CHECK(key_of("rho=1.5") == "rho");
    CHECK(key_of("colour=blue") == "colour");
    CHECK(key_of("bits=two") == "bits");
    CHECK(key_of("scenario=fig9") == "scenario");
    CHECK(key_of("", {{"alg", "UA,ZA"}}) == "alg");
    CHECK(key_of("sweep=rho\nrange=0:2:3") == "range");
    CHECK(key_of("sweep=feedback_bits\nrange=0:3:3") == "range");
    CHECK(key_of("sweep=tau\nrange=0:5:3\nalg=EA") == "alg");
    CHECK(key_of("mode=exact") == "mode");
    CHECK(key_of("draws=0") == "draws");
    CHECK_THROWS_AS(parse_spec("no equals sign"), ConfigError);
}

TEST_CASE("single-point smoke sweep", "[experiment]")
{
    const ExperimentSpec spec = parse_spec("range=10:10:1\ndraws=1");
    const auto r = rows(run_sweep(spec));
    REQUIRE(r.size() == 4);
    CHECK(r[0].algorithm == "EA");
    CHECK(r[1].algorithm == "LA");
    CHECK(r[2].algorithm == "OA");
    CHECK(r[3].algorithm == "UA");
    for (const auto &row : r) {
        CHECK(row.sweep_var == "p1_dbm");
        CHECK(row.sweep_value == 10.0);
        CHECK(row.mc_se == 0.0);
        CHECK(row.mode == "consistent");
    }
}

TEST_CASE("sweep output is reproducible and round-trips", "[experiment]")
{
    ExperimentSpec spec = parse_spec("range=0:20:3\ndraws=3000\nseed=9");
    const std::string first = run_sweep(spec);
    spec.mc.threads = 3;
    const std::string second = run_sweep(spec);
    CHECK(first == second);

    for (const auto &row : rows(first)) {
        for (double v : {row.tau_star, row.closed_form, row.mc_mean, row.mc_se})
            CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(first.find("# seed=9\n") != std::string::npos);
    CHECK(first.find("# draws=3000\n") != std::string::npos);
    CHECK(first.find("timestamp") == std::string::npos);

    spec.timestamp = true;
    CHECK(run_sweep(spec).find("# timestamp=") != std::string::npos);
    CHECK(body(run_sweep(spec)) == body(first));
}

TEST_CASE("fig3 ordering at 20 dBm", "[experiment]")
{
    const ExperimentSpec spec = parse_spec("scenario=fig3\nrange=20:20:1\ndraws=20000");
    std::map<std::string, CsvRow> by_alg;
    for (const auto &row : rows(run_sweep(spec)))
        by_alg[row.algorithm] = row;
    CHECK(by_alg.at("UA").mc_mean >= by_alg.at("EA").mc_mean);
    CHECK(by_alg.at("OA").mc_mean >= by_alg.at("UA").mc_mean);
}

TEST_CASE("fig4 feedback sweep", "[experiment]")
{
    const ExperimentSpec spec = parse_spec("scenario=fig4\nrange=0:4:3\ndraws=20000");
    const auto r = rows(run_sweep(spec));
    REQUIRE(r.size() == 3);
    CHECK(r[0].mc_mean < r[1].mc_mean);
    CHECK(r[1].mc_mean < r[2].mc_mean);
    CHECK(r[1].mc_mean - r[0].mc_mean > r[2].mc_mean - r[1].mc_mean);
}

TEST_CASE("fig5 correlation sweep", "[experiment]")
{
    const ExperimentSpec spec = parse_spec("scenario=fig5\nrange=0.5:1:3\ndraws=20000");
    const auto r = rows(run_sweep(spec));
    REQUIRE(r.size() == 3);
    CHECK(r[0].mc_mean < r[1].mc_mean);
    CHECK(r[1].mc_mean < r[2].mc_mean);
}

TEST_CASE("tau sweep evaluates fixed durations", "[experiment]")
{
    const ExperimentSpec spec = parse_spec("sweep=tau\nrange=0:5:6\ndraws=2000");
    const auto r = rows(run_sweep(spec));
    REQUIRE(r.size() == 12);
    CHECK(r.front().tau_star == 0.0);
    CHECK(r.front().mc_mean == 0.0);
    CHECK(r[2].algorithm == "LA");
    CHECK(r[3].algorithm == "UA");
    CHECK(r[2].closed_form < r[3].closed_form);
    CHECK(r[3].tau_star == 1e-3);
}

TEST_CASE("unwritable output is an I/O error", "[experiment]")
{
    ExperimentSpec spec = parse_spec("range=0:0:1\ndraws=1");
    spec.output_path = "/nonexistent-directory/out.csv";
    CHECK_THROWS_AS(write_sweep(spec), IoError);
}

TEST_CASE("invariant checks pass on the reference scenario", "[experiment]")
{
    for (const auto &r : run_invariant_checks(reference_params(), 1)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("every key is accepted", "[experiment]")
{
    CHECK(config_keys().size() > 20);
    CHECK(std::find(config_keys().begin(), config_keys().end(), "fixed_codebook") != config_keys().end());
}
