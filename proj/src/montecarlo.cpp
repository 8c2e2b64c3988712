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

#include "weit/montecarlo.hpp"

#include "weit/channel.hpp"
#include "weit/codebook.hpp"
#include "weit/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace weit {

void McConfig::validate(double slot_seconds) const
{
    if (n_draws < 1)
        throw std::invalid_argument("n_draws must be >= 1");
    if (threads < 1)
        throw std::invalid_argument("threads must be >= 1");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] >= 0.0 && tau_grid[i] <= slot_seconds))
            throw std::invalid_argument("tau_grid values must lie in [0, T]");
        if (i > 0 && !(tau_grid[i] > tau_grid[i - 1]))
            throw std::invalid_argument("tau_grid must be strictly increasing");
    }
}

std::vector<double> uniform_tau_grid(double slot_seconds, std::size_t points)
{
    if (points == 1)
        return {slot_seconds / 2.0};
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = slot_seconds * static_cast<double>(i) / static_cast<double>(points - 1);
    grid.back() = slot_seconds;
    return grid;
}

namespace {

struct DrawContext {
    const SystemParams &params;
    const Codebook<double> *fixed;
    std::uint64_t seed;
    bool imperfect;
};

void draw_one(const DrawContext &ctx, std::size_t index, double &harvest, double &link)
{
    const SystemParams &p = ctx.params;
    Engine rng = substream(ctx.seed, index);
    const ComplexVector<double> h_est = sample_fading<double>(p.nt, p.entry_variance, rng);
    const ComplexVector<double> g = sample_fading<double>(p.nt, p.entry_variance, rng);

    ComplexVector<double> beam;
    if (p.full_csi) {
        beam = h_est / h_est.norm();
    } else if (ctx.fixed != nullptr) {
        beam = ctx.fixed->vectors.col(select_codeword(h_est, *ctx.fixed));
    } else {
        const Codebook<double> cb = generate_rvq<double>(p.nt, p.feedback_bits, rng);
        beam = cb.vectors.col(select_codeword(h_est, cb));
    }

    double gain;
    if (ctx.imperfect) {
        const ComplexVector<double> n_err = sample_fading<double>(p.nt, p.entry_variance, rng);
        const ComplexVector<double> h = apply_estimation_error(h_est, n_err, p.rho);
        gain = std::norm(h.dot(beam));
    } else {
        gain = std::norm(h_est.dot(beam));
    }
    harvest = gain;
    link = gain * g.squaredNorm();
}

}  // namespace

LinkDraws draw_links(const SystemParams &params, const McConfig &cfg, bool imperfect)
{
    params.validate();
    cfg.validate(params.slot_seconds);

    std::optional<Codebook<double>> fixed;
    if (cfg.fixed_codebook_seed && !params.full_csi) {
        Engine rng(*cfg.fixed_codebook_seed);
        fixed = generate_rvq<double>(params.nt, params.feedback_bits, rng);
    }
    const DrawContext ctx{params, fixed ? &*fixed : nullptr, cfg.master_seed, imperfect};

    LinkDraws out;
    out.harvest_gain.resize(cfg.n_draws);
    out.link_gain.resize(cfg.n_draws);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            draw_one(ctx, i, out.harvest_gain[i], out.link_gain[i]);
    };

    const std::size_t workers = std::min<std::size_t>(cfg.threads, cfg.n_draws);
    if (workers <= 1) {
        work(0, cfg.n_draws);
        return out;
    }
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (cfg.n_draws + workers - 1) / workers;
        for (std::size_t begin = 0; begin < cfg.n_draws; begin += chunk)
            pool.emplace_back(work, begin, std::min(cfg.n_draws, begin + chunk));
    }
    return out;
}

double pairwise_sum(std::span<const double> values)
{
    constexpr std::size_t block = 16;
    if (values.size() <= block) {
        double s = 0.0;
        for (double v : values)
            s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

RateEstimate summarize(std::span<const double> samples)
{
    RateEstimate est;
    est.n_draws = samples.size();
    if (samples.empty())
        return est;
    const double n = static_cast<double>(samples.size());
    est.mean = pairwise_sum(samples) / n;
    if (samples.size() > 1) {
        std::vector<double> dev(samples.size());
        std::transform(samples.begin(), samples.end(), dev.begin(), [&](double x) { return (x - est.mean) * (x - est.mean); });
        const double var = pairwise_sum(dev) / (n - 1.0);
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

RateEstimate estimate_rate(const LinkDraws &draws, double a, double tau, double slot_seconds)
{
    if (!(tau >= 0.0 && tau <= slot_seconds))
        throw std::domain_error("estimate_rate: tau must lie in [0, T]");
    const std::size_t n = draws.link_gain.size();
    if (tau == 0.0 || tau == slot_seconds || a == 0.0)
        return {0.0, 0.0, n};
    const double rest = slot_seconds - tau;
    const double scale = a * tau / rest;
    const double weight = rest / slot_seconds / std::numbers::ln2;
    std::vector<double> rate(n);
    std::transform(draws.link_gain.begin(), draws.link_gain.end(), rate.begin(),
                   [&](double x) { return weight * std::log1p(scale * x); });
    return summarize(rate);
}

RateEstimate mc_harvested_energy(const SystemParams &params, double tau, const McConfig &cfg)
{
    if (!(tau >= 0.0 && tau <= params.slot_seconds))
        throw std::domain_error("mc_harvested_energy: tau must lie in [0, T]");
    const LinkDraws draws = draw_links(params, cfg, params.rho < 1.0);
    const double scale = params.eta * params.alpha * params.p1_watts * tau;
    std::vector<double> energy(draws.harvest_gain.size());
    std::transform(draws.harvest_gain.begin(), draws.harvest_gain.end(), energy.begin(), [&](double x) { return scale * x; });
    return summarize(energy);
}

RateEstimate mc_rate(const SystemParams &params, double tau, const McConfig &cfg)
{
    const LinkDraws draws = draw_links(params, cfg, false);
    return estimate_rate(draws, snr_coefficient_a(params), tau, params.slot_seconds);
}

RateEstimate mc_rate_imperfect(const SystemParams &params, double tau, const McConfig &cfg)
{
    const LinkDraws draws = draw_links(params, cfg, true);
    return estimate_rate(draws, snr_coefficient_a(params), tau, params.slot_seconds);
}

TauSolution solve_oa(const SystemParams &params, const McConfig &cfg)
{
    const LinkDraws draws = draw_links(params, cfg, params.rho < 1.0);
    return solve_oa(draws, snr_coefficient_a(params), params.slot_seconds, cfg);
}

TauSolution solve_oa(const LinkDraws &draws, double a, double slot_seconds, const McConfig &cfg)
{
    cfg.validate(slot_seconds);
    const std::vector<double> grid = cfg.tau_grid.empty() ? uniform_tau_grid(slot_seconds, 101) : cfg.tau_grid;
    auto objective = [&](double tau) { return estimate_rate(draws, a, tau, slot_seconds).mean; };

    TauSolution sol;
    sol.algorithm = Algorithm::OA;
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sol.candidates.push_back({grid[i], objective(grid[i])});
        if (sol.candidates[i].objective > sol.candidates[best].objective)
            best = i;
    }
    sol.tau_star = sol.candidates[best].tau;
    sol.rate_at_tau = sol.candidates[best].objective;

    if (cfg.search == SearchMethod::golden_section && grid.size() > 1) {
        double lo = grid[best == 0 ? 0 : best - 1];
        double hi = grid[std::min(best + 1, grid.size() - 1)];
        constexpr double inv_phi = 0.6180339887498949;
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = objective(x1);
        double f2 = objective(x2);
        while (hi - lo > 1e-9 * slot_seconds) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = objective(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = objective(x1);
            }
        }
        const double tau = f1 >= f2 ? x1 : x2;
        const double value = std::max(f1, f2);
        sol.candidates.push_back({tau, value});
        if (value > sol.rate_at_tau) {
            sol.tau_star = tau;
            sol.rate_at_tau = value;
        }
    }
    return sol;
}

}  // namespace weit
