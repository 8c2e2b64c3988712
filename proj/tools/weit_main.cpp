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
#include "weit/experiment.hpp"
#include "weit/montecarlo.hpp"
#include "weit/tradeoff.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

constexpr int exit_config = 2;
constexpr int exit_io = 3;

/// Options shared by every subcommand; each maps onto one config key.
struct CommonOptions {
    std::string config_path;
    std::map<std::string, std::string> values;
    bool paper_exact = false;
    bool full_csi = false;

    void attach(CLI::App &cmd)
    {
        cmd.add_option("--config", config_path, "key=value configuration file (flags override it)");
        auto opt = [&](const char *flag, const char *key, const char *help) { cmd.add_option(flag, values[key], help); };
        opt("--scenario", "scenario", "fig3 | fig4 | fig5 | custom");
        opt("--sweep", "sweep", "p1_dbm | feedback_bits | rho | tau");
        opt("--range", "range", "start:stop:steps of the swept variable (tau in ms)");
        opt("--alg", "alg", "comma-separated subset of UA,LA,EA,OA");
        opt("--bits", "bits", "feedback bits B");
        opt("--rho", "rho", "CSI correlation coefficient");
        opt("--p1-dbm", "p1_dbm", "transmit power in dBm");
        opt("--sigma2-dbm", "sigma2_dbm", "noise power in dBm");
        opt("--slot-ms", "slot_ms", "slot length in ms");
        opt("--distance", "distance_m", "link distance in metres");
        opt("--exponent", "pathloss_exponent", "path loss exponent");
        opt("--nt", "nt", "antennas at the power source");
        opt("--eta", "eta", "energy conversion efficiency");
        opt("--entry-variance", "entry_variance", "per-entry fading variance");
        opt("--draws", "draws", "Monte Carlo draws");
        opt("--seed", "seed", "master seed");
        opt("--mode", "mode", "paper-exact | consistent");
        opt("--out", "out", "output CSV path (default stdout)");
        opt("--fixed-codebook", "fixed_codebook", "share one codebook drawn from this seed across all draws");
        opt("--threads", "threads", "worker threads for channel draws");
        opt("--tau-points", "tau_points", "OA grid points");
        opt("--search", "search", "grid | golden-section");
        cmd.add_flag("--paper-exact", paper_exact, "shorthand for --mode paper-exact");
        cmd.add_flag("--full-csi", full_csi, "ideal MRT beam instead of a codebook");
    }

    weit::ExperimentSpec resolve() const
    {
        std::string text;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw weit::IoError("cannot read config file '" + config_path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        weit::ConfigOverrides overrides;
        for (const auto &[key, value] : values)
            if (!value.empty())
                overrides.emplace_back(key, value);
        if (paper_exact)
            overrides.emplace_back("mode", "paper-exact");
        if (full_csi)
            overrides.emplace_back("full_csi", "true");
        return weit::parse_spec(text, overrides);
    }
};

void print_tradeoff(const weit::ExperimentSpec &spec)
{
    using namespace weit;
    const SystemParams &p = spec.params;
    const Coefficients c = compute_coefficients(p);
    const bool imperfect = p.rho < 1.0;
    const LinkDraws draws = draw_links(p, spec.mc, imperfect);

    std::printf("# p1_dbm=%s bits=%d rho=%s mode=%s draws=%zu seed=%llu\n", format_number(spec.p1_dbm).c_str(),
                p.feedback_bits, format_number(p.rho).c_str(), std::string(to_string(p.mode)).c_str(), spec.mc.n_draws,
                static_cast<unsigned long long>(spec.mc.master_seed));
    std::printf("# a=%s b=%s c=%s d=%s b_e=%s\n", format_number(c.a).c_str(), format_number(c.b_upper).c_str(),
                format_number(c.c_gain).c_str(), format_number(c.d_lower).c_str(), format_number(c.b_imperfect).c_str());
    std::printf("%-13s %12s %14s %14s %12s\n", "algorithm", "tau_ms", "closed_form", "mc_rate", "mc_se");
    for (Algorithm alg : spec.algorithms) {
        TauSolution sol;
        switch (alg) {
        case Algorithm::UA: sol = imperfect ? solve_ua_imperfect(p) : solve_ua(p); break;
        case Algorithm::LA: sol = solve_la(p); break;
        case Algorithm::EA: sol = solve_ea(p); break;
        case Algorithm::OA: sol = solve_oa(draws, c.a, p.slot_seconds, spec.mc); break;
        case Algorithm::UA_imperfect: sol = solve_ua_imperfect(p); break;
        }
        const RateEstimate mc = estimate_rate(draws, c.a, sol.tau_star, p.slot_seconds);
        std::printf("%-13s %12.6f %14.8f %14.8f %12.3e\n", std::string(to_string(sol.algorithm)).c_str(),
                    sol.tau_star * 1e3, sol.rate_at_tau, mc.mean, mc.std_error);
    }
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Energy-harvesting time-split tradeoff solver and simulator"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, tradeoff_opts, check_opts;
    CLI::App *sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
    sweep_opts.attach(*sweep);
    CLI::App *tradeoff = app.add_subcommand("tradeoff", "solve a single operating point and print tau* and rates");
    tradeoff_opts.attach(*tradeoff);
    CLI::App *check = app.add_subcommand("check", "run the invariant checks");
    check_opts.attach(*check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config;
    }

    try {
        if (*sweep) {
            weit::write_sweep(sweep_opts.resolve());
        } else if (*tradeoff) {
            print_tradeoff(tradeoff_opts.resolve());
        } else if (*check) {
            const weit::ExperimentSpec spec = check_opts.resolve();
            bool all = true;
            for (const auto &r : weit::run_invariant_checks(spec.params, spec.mc.master_seed)) {
                std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
                all = all && r.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const weit::ConfigError &e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return exit_config;
    } catch (const weit::IoError &e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return exit_io;
    }
    return 0;
}
