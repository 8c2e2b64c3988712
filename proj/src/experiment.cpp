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

#include "weit/experiment.hpp"

#include "weit/bounds.hpp"
#include "weit/codebook.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace weit {

std::string_view to_string(Scenario s)
{
    switch (s) {
    case Scenario::fig3: return "fig3";
    case Scenario::fig4: return "fig4";
    case Scenario::fig5: return "fig5";
    case Scenario::custom: return "custom";
    }
    return "?";
}

std::string_view to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::p1_dbm: return "p1_dbm";
    case SweepVariable::feedback_bits: return "feedback_bits";
    case SweepVariable::rho: return "rho";
    case SweepVariable::tau: return "tau";
    }
    return "?";
}

std::vector<double> SweepRange::values() const
{
    if (steps == 1)
        return {start};
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i)
        out[i] = start + (stop - start) * i / (steps - 1);
    out.back() = stop;
    return out;
}

std::string format_number(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// Configuration parsing

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string &key, const std::string &text)
{
    double value = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ConfigError(key, "expected a number, got '" + text + "'");
    return value;
}

long long parse_integer(const std::string &key, const std::string &text)
{
    long long value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(key, "expected an integer, got '" + text + "'");
    return value;
}

std::uint64_t parse_seed(const std::string &key, const std::string &text)
{
    std::uint64_t value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw ConfigError(key, "expected a non-negative 64-bit integer, got '" + text + "'");
    return value;
}

bool parse_bool(const std::string &key, const std::string &text)
{
    if (text == "1" || text == "true" || text == "yes" || text == "on")
        return true;
    if (text == "0" || text == "false" || text == "no" || text == "off")
        return false;
    throw ConfigError(key, "expected a boolean, got '" + text + "'");
}

SweepRange parse_range(const std::string &key, const std::string &text)
{
    // a:b:n
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError(key, "expected start:stop:steps, got '" + text + "'");
    SweepRange r;
    r.start = parse_real(key, text.substr(0, c1));
    r.stop = parse_real(key, text.substr(c1 + 1, c2 - c1 - 1));
    const long long steps = parse_integer(key, text.substr(c2 + 1));
    if (steps < 1)
        throw ConfigError(key, "steps must be >= 1");
    if (steps > 100000)
        throw ConfigError(key, "steps must be <= 100000");
    r.steps = static_cast<int>(steps);
    return r;
}

std::vector<Algorithm> parse_algorithms(const std::string &key, const std::string &text)
{
    std::vector<Algorithm> algs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        Algorithm alg;
        try {
            alg = algorithm_from_string(item);
        } catch (const std::invalid_argument &) {
            throw ConfigError(key, "unknown algorithm '" + item + "' (expected UA, LA, EA or OA)");
        }
        if (alg == Algorithm::UA_imperfect)
            throw ConfigError(key, "use UA with rho < 1 for the imperfect-CSI solver");
        if (std::find(algs.begin(), algs.end(), alg) == algs.end())
            algs.push_back(alg);
    }
    if (algs.empty())
        throw ConfigError(key, "at least one algorithm is required");
    return algs;
}

void apply_scenario(ExperimentSpec &spec, const std::string &name)
{
    spec.scenario = name == "fig3"   ? Scenario::fig3
                    : name == "fig4" ? Scenario::fig4
                    : name == "fig5" ? Scenario::fig5
                    : name == "custom"
                        ? Scenario::custom
                        : throw ConfigError("scenario", "unknown scenario '" + name + "' (expected fig3, fig4, fig5, custom)");
    switch (spec.scenario) {
    case Scenario::fig3:
    case Scenario::custom:
        spec.sweep = SweepVariable::p1_dbm;
        spec.range = {-10.0, 30.0, 21};
        spec.algorithms = {Algorithm::UA, Algorithm::LA, Algorithm::EA, Algorithm::OA};
        break;
    case Scenario::fig4:
        spec.sweep = SweepVariable::feedback_bits;
        spec.range = {0.0, 6.0, 7};
        spec.algorithms = {Algorithm::UA};
        spec.p1_dbm = 10.0;
        break;
    case Scenario::fig5:
        spec.sweep = SweepVariable::rho;
        spec.range = {0.5, 1.0, 6};
        spec.algorithms = {Algorithm::UA};
        spec.p1_dbm = 10.0;
        break;
    }
}

using Setter = void (*)(ExperimentSpec &, const std::string &key, const std::string &value);

const std::map<std::string, Setter> &setters()
{
    static const std::map<std::string, Setter> table{
        {"sweep",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             if (v == "p1_dbm")
                 s.sweep = SweepVariable::p1_dbm;
             else if (v == "feedback_bits" || v == "bits")
                 s.sweep = SweepVariable::feedback_bits;
             else if (v == "rho")
                 s.sweep = SweepVariable::rho;
             else if (v == "tau")
                 s.sweep = SweepVariable::tau;
             else
                 throw ConfigError(k, "unknown sweep variable '" + v + "' (expected p1_dbm, feedback_bits, rho, tau)");
         }},
        {"range", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.range = parse_range(k, v); }},
        {"alg", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.algorithms = parse_algorithms(k, v); }},
        {"bits",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const long long b = parse_integer(k, v);
             if (b < 0 || b > 30)
                 throw ConfigError(k, "feedback bits must lie in [0, 30]");
             s.params.feedback_bits = static_cast<int>(b);
         }},
        {"full_csi", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.params.full_csi = parse_bool(k, v); }},
        {"rho",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const double r = parse_real(k, v);
             if (!(r >= 0.0 && r <= 1.0))
                 throw ConfigError(k, "rho must lie in [0, 1]");
             s.params.rho = r;
         }},
        {"p1_dbm", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.p1_dbm = parse_real(k, v); }},
        {"sigma2_dbm", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.sigma2_dbm = parse_real(k, v); }},
        {"slot_ms",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             s.slot_ms = parse_real(k, v);
             if (!(s.slot_ms > 0.0))
                 throw ConfigError(k, "slot length must be positive");
         }},
        {"distance_m",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             s.distance_m = parse_real(k, v);
             if (!(s.distance_m > 0.0))
                 throw ConfigError(k, "distance must be positive");
         }},
        {"pathloss_exponent", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.pathloss_exponent = parse_real(k, v); }},
        {"nt",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const long long n = parse_integer(k, v);
             if (n < 1 || n > 1024)
                 throw ConfigError(k, "nt must lie in [1, 1024]");
             s.params.nt = static_cast<int>(n);
         }},
        {"eta",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const double e = parse_real(k, v);
             if (!(e >= 0.0 && e <= 1.0))
                 throw ConfigError(k, "eta must lie in [0, 1]");
             s.params.eta = e;
         }},
        {"entry_variance",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const double e = parse_real(k, v);
             if (!(e > 0.0))
                 throw ConfigError(k, "entry variance must be positive");
             s.params.entry_variance = e;
         }},
        {"mode",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             try {
                 s.params.mode = formula_mode_from_string(v);
             } catch (const std::invalid_argument &e) {
                 throw ConfigError(k, e.what());
             }
         }},
        {"draws",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const long long n = parse_integer(k, v);
             if (n < 1)
                 throw ConfigError(k, "draws must be >= 1");
             s.mc.n_draws = static_cast<std::size_t>(n);
         }},
        {"seed", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.mc.master_seed = parse_seed(k, v); }},
        {"fixed_codebook", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.mc.fixed_codebook_seed = parse_seed(k, v); }},
        {"threads",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const long long n = parse_integer(k, v);
             if (n < 1 || n > 1024)
                 throw ConfigError(k, "threads must lie in [1, 1024]");
             s.mc.threads = static_cast<unsigned>(n);
         }},
        {"tau_points",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             const long long n = parse_integer(k, v);
             if (n < 1 || n > 1000000)
                 throw ConfigError(k, "tau_points must lie in [1, 1000000]");
             s.tau_points = static_cast<std::size_t>(n);
         }},
        {"search",
         [](ExperimentSpec &s, const std::string &k, const std::string &v) {
             if (v == "grid")
                 s.mc.search = SearchMethod::grid;
             else if (v == "golden-section")
                 s.mc.search = SearchMethod::golden_section;
             else
                 throw ConfigError(k, "search must be 'grid' or 'golden-section'");
         }},
        {"out", [](ExperimentSpec &s, const std::string &, const std::string &v) { s.output_path = v; }},
        {"timestamp", [](ExperimentSpec &s, const std::string &k, const std::string &v) { s.timestamp = parse_bool(k, v); }},
    };
    return table;
}

void check_range_domain(const ExperimentSpec &spec)
{
    const auto values = spec.range.values();
    for (double v : values) {
        switch (spec.sweep) {
        case SweepVariable::p1_dbm:
            if (!std::isfinite(v))
                throw ConfigError("range", "p1_dbm values must be finite");
            break;
        case SweepVariable::feedback_bits:
            if (v < 0.0 || v > 30.0 || v != std::floor(v))
                throw ConfigError("range", "feedback_bits values must be integers in [0, 30]");
            break;
        case SweepVariable::rho:
            if (!(v >= 0.0 && v <= 1.0))
                throw ConfigError("range", "rho values must lie in [0, 1]");
            break;
        case SweepVariable::tau:
            if (!(v >= 0.0 && v <= spec.slot_ms))
                throw ConfigError("range", "tau values (ms) must lie in [0, slot_ms]");
            break;
        }
    }
    if (spec.sweep == SweepVariable::tau)
        for (Algorithm alg : spec.algorithms)
            if (alg == Algorithm::EA || alg == Algorithm::OA)
                throw ConfigError("alg", "a tau sweep evaluates fixed durations; only UA and LA bounds apply");
}

}  // namespace

const std::vector<std::string> &config_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k{"scenario"};
        for (const auto &[name, fn] : setters())
            k.push_back(name);
        return k;
    }();
    return keys;
}

ExperimentSpec parse_spec(std::string_view config_text, const ConfigOverrides &overrides)
{
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in{std::string(config_text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
        entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    entries.insert(entries.end(), overrides.begin(), overrides.end());

    // last assignment wins, but the scenario preset goes first
    ExperimentSpec spec;
    std::optional<std::string> scenario;
    for (const auto &[key, value] : entries) {
        if (key == "scenario")
            scenario = value;
        else if (!setters().contains(key))
            throw ConfigError(key, "unknown key");
    }
    if (scenario)
        apply_scenario(spec, *scenario);
    bool algorithms_given = false;
    for (const auto &[key, value] : entries) {
        if (key == "scenario")
            continue;
        setters().at(key)(spec, key, value);
        algorithms_given = algorithms_given || key == "alg";
    }
    if (spec.sweep == SweepVariable::tau && !algorithms_given)
        spec.algorithms = {Algorithm::UA, Algorithm::LA};

    spec.params.p1_watts = dbm_to_watts(spec.p1_dbm);
    spec.params.sigma2_watts = dbm_to_watts(spec.sigma2_dbm);
    spec.params.slot_seconds = spec.slot_ms * 1e-3;
    spec.params.alpha = path_loss(spec.distance_m, spec.pathloss_exponent);
    spec.params.theta = spec.params.alpha;
    spec.mc.tau_grid = uniform_tau_grid(spec.params.slot_seconds, spec.tau_points);
    check_range_domain(spec);
    try {
        spec.params.validate();
        spec.mc.validate(spec.params.slot_seconds);
    } catch (const std::invalid_argument &e) {
        throw ConfigError("", e.what());
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Sweep execution

namespace {

struct Row {
    double sweep_value;
    std::string algorithm;
    double tau_star;
    double closed_form;
    RateEstimate mc;
};

SystemParams params_at(const ExperimentSpec &spec, double value)
{
    SystemParams p = spec.params;
    switch (spec.sweep) {
    case SweepVariable::p1_dbm: p.p1_watts = dbm_to_watts(value); break;
    case SweepVariable::feedback_bits: p.feedback_bits = static_cast<int>(value); break;
    case SweepVariable::rho: p.rho = value; break;
    case SweepVariable::tau: break;
    }
    return p;
}

void append_metadata(std::ostringstream &out, const ExperimentSpec &spec)
{
    const SystemParams &p = spec.params;
    auto kv = [&](std::string_view key, const std::string &value) { out << "# " << key << '=' << value << '\n'; };
    std::string algs;
    for (Algorithm a : spec.algorithms)
        algs += (algs.empty() ? "" : ",") + std::string(to_string(a));
    kv("scenario", std::string(to_string(spec.scenario)));
    kv("sweep", std::string(to_string(spec.sweep)));
    kv("range", format_number(spec.range.start) + ":" + format_number(spec.range.stop) + ":" + std::to_string(spec.range.steps));
    kv("alg", algs);
    kv("nt", std::to_string(p.nt));
    kv("bits", std::to_string(p.feedback_bits));
    kv("full_csi", p.full_csi ? "true" : "false");
    kv("eta", format_number(p.eta));
    kv("p1_dbm", format_number(spec.p1_dbm));
    kv("sigma2_dbm", format_number(spec.sigma2_dbm));
    kv("slot_ms", format_number(spec.slot_ms));
    kv("distance_m", format_number(spec.distance_m));
    kv("pathloss_exponent", format_number(spec.pathloss_exponent));
    kv("alpha", format_number(p.alpha));
    kv("theta", format_number(p.theta));
    kv("rho", format_number(p.rho));
    kv("entry_variance", format_number(p.entry_variance));
    kv("mode", std::string(to_string(p.mode)));
    kv("draws", std::to_string(spec.mc.n_draws));
    kv("seed", std::to_string(spec.mc.master_seed));
    kv("fixed_codebook", spec.mc.fixed_codebook_seed ? std::to_string(*spec.mc.fixed_codebook_seed) : "none");
    kv("tau_points", std::to_string(spec.tau_points));
    kv("search", spec.mc.search == SearchMethod::grid ? "grid" : "golden-section");
    if (spec.timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        kv("timestamp", buf);
    }
}

}  // namespace

std::string run_sweep(const ExperimentSpec &spec)
{
    std::vector<Row> rows;
    std::optional<LinkDraws> draws;
    std::optional<std::pair<int, double>> draws_key;  // (bits, rho)

    for (double value : spec.range.values()) {
        const SystemParams p = params_at(spec, value);
        const bool imperfect = p.rho < 1.0;
        const std::pair<int, double> key{p.feedback_bits, p.rho};
        if (!draws_key || *draws_key != key) {
            draws = draw_links(p, spec.mc, imperfect);
            draws_key = key;
        }
        const Coefficients coeff = compute_coefficients(p);
        const double a = coeff.a;
        const double slot = p.slot_seconds;
        const double upper_k = imperfect ? coeff.b_imperfect : coeff.b_upper;

        for (Algorithm alg : spec.algorithms) {
            Row row{value, std::string(to_string(alg)), 0.0, 0.0, {}};
            if (spec.sweep == SweepVariable::tau) {
                row.tau_star = value * 1e-3;
                row.closed_form = slot_rate(row.tau_star, alg == Algorithm::LA ? coeff.d_lower : upper_k, slot);
            } else {
                TauSolution sol;
                switch (alg) {
                case Algorithm::UA: sol = imperfect ? solve_ua_imperfect(p) : solve_ua(p); break;
                case Algorithm::LA: sol = solve_la(p); break;
                case Algorithm::EA: sol = solve_ea(p); break;
                case Algorithm::OA: sol = solve_oa(*draws, a, slot, spec.mc); break;
                case Algorithm::UA_imperfect: sol = solve_ua_imperfect(p); break;
                }
                row.tau_star = sol.tau_star;
                row.closed_form = alg == Algorithm::OA ? slot_rate(sol.tau_star, upper_k, slot) : sol.rate_at_tau;
            }
            row.mc = estimate_rate(*draws, a, row.tau_star, slot);
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &l, const Row &r) {
        if (l.sweep_value != r.sweep_value)
            return l.sweep_value < r.sweep_value;
        return l.algorithm < r.algorithm;
    });

    std::ostringstream out;
    append_metadata(out, spec);
    out << "sweep_var,sweep_value,algorithm,tau_star_s,closed_form_rate,mc_rate_mean,mc_rate_se,mode,seed\n";
    const std::string sweep_name(to_string(spec.sweep));
    const std::string mode(to_string(spec.params.mode));
    for (const Row &r : rows) {
        out << sweep_name << ',' << format_number(r.sweep_value) << ',' << r.algorithm << ',' << format_number(r.tau_star)
            << ',' << format_number(r.closed_form) << ',' << format_number(r.mc.mean) << ',' << format_number(r.mc.std_error)
            << ',' << mode << ',' << spec.mc.master_seed << '\n';
    }
    return out.str();
}

void write_sweep(const ExperimentSpec &spec)
{
    const std::string csv = run_sweep(spec);
    if (spec.output_path.empty() || spec.output_path == "-") {
        std::cout << csv;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + spec.output_path + "' for writing");
    file << csv;
    file.close();
    if (!file)
        throw IoError("failed writing '" + spec.output_path + "'");
}

// ---------------------------------------------------------------------------
// Invariant checks

std::vector<CheckResult> run_invariant_checks(const SystemParams &params, std::uint64_t seed)
{
    std::vector<CheckResult> results;
    auto record = [&](std::string name, bool ok, std::string detail) {
        results.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        bool ok = true;
        std::string worst;
        for (int nt = 2; nt <= 8; ++nt)
            for (int bits = 0; bits <= 10; ++bits) {
                const double e = expected_max_beta(nt, bits);
                const double lo = rvq_gain_lower(nt, bits);
                const double hi = rvq_gain_upper(nt, bits);
                const bool good = bits == 0 ? (lo < e && std::abs(hi - e) <= 1e-14) : (lo < e && e < hi);
                if (!good) {
                    ok = false;
                    worst = "nt=" + std::to_string(nt) + " bits=" + std::to_string(bits);
                }
            }
        record("gain sandwich", ok, ok ? "nt 2..8, bits 0..10" : "violated at " + worst);
    }
    {
        const double err = std::abs(digamma_positive_int(4) - (11.0 / 6.0 - 0.57721566490));
        record("digamma(4)", err < 1e-10, "abs error " + format_number(err));
    }
    {
        double worst = 0.0;
        for (double k : {1e-2, 1.0, 10.0, 1e3, 1e6})
            worst = std::max(worst, std::abs(stationarity_residual(stationary_tau(k, 1.0), k)));
        record("stationarity residual", worst < 1e-10, "max |residual| " + format_number(worst));
    }
    {
        SystemParams p = params;
        p.rho = 1.0;
        const Coefficients c = compute_coefficients(p);
        record("rho=1 collapse", c.b_imperfect == c.b_upper, "b=" + format_number(c.b_upper) + " b_e=" + format_number(c.b_imperfect));
    }
    {
        const Coefficients c = compute_coefficients(params);
        const bool ok = c.d_lower < c.b_upper && c.b_imperfect <= c.b_upper;
        record("coefficient ordering", ok,
               "d=" + format_number(c.d_lower) + " b_e=" + format_number(c.b_imperfect) + " b=" + format_number(c.b_upper));
    }
    {
        SystemParams p = params;
        p.mode = FormulaMode::consistent;
        McConfig cfg;
        cfg.n_draws = 20000;
        cfg.master_seed = seed;
        const LinkDraws draws = draw_links(p, cfg, false);
        const Coefficients c = compute_coefficients(p);
        bool ok = true;
        double worst = -1e300;
        for (double tau : uniform_tau_grid(p.slot_seconds, 21)) {
            const RateEstimate est = estimate_rate(draws, c.a, tau, p.slot_seconds);
            const double gap = est.mean - rate_upper(tau, c, p.slot_seconds) - 3.0 * est.std_error;
            worst = std::max(worst, gap);
            ok = ok && gap <= 0.0;
        }
        record("simulated rate below upper bound", ok, "max excess " + format_number(worst));
    }
    return results;
}

}  // namespace weit
