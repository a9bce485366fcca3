// SPDX-License-Identifier: Apache-2.0
//
// wlcdma: widely-linear CDMA transceiver games
// Copyright (C) 2026 The wlcdma Authors
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

#include "wlcdma/power_game.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace wlcdma
{

void UtilityConfig::validate() const
{
    require(packet_length >= 1, "UtilityConfig: M must be >= 1");
    require(info_symbols >= 1 && info_symbols <= packet_length, "UtilityConfig: need 1 <= L <= M");
    require(rate > 0.0 && std::isfinite(rate), "UtilityConfig: R must be positive");
}

double efficiency(double gamma, int packet_length)
{
    require(gamma >= 0.0 && !std::isnan(gamma), "efficiency: SINR must be nonnegative");
    require(packet_length >= 1, "efficiency: M must be >= 1");
    return std::pow(-std::expm1(-gamma), packet_length);
}

double efficiency_derivative(double gamma, int packet_length)
{
    require(gamma >= 0.0 && !std::isnan(gamma), "efficiency_derivative: SINR must be nonnegative");
    require(packet_length >= 1, "efficiency_derivative: M must be >= 1");
    return packet_length * std::pow(-std::expm1(-gamma), packet_length - 1) * std::exp(-gamma);
}

TargetSinr solve_target_sinr(int packet_length)
{
    if (packet_length < 2)
        throw ValidationError("solve_target_sinr: M must be >= 2, for M = 1 the equation f = gamma f' degenerates to "
                              "gamma = 0");
    const double m = packet_length;
    // g(0) = 0 and g'(0) = 1 - M < 0, so the positive root sits above ln M,
    // where g is still negative, and g is convex.
    auto g = [m](double x) { return std::expm1(x) - m * x; };
    double lo = std::log(m);
    double hi = 2.0 * lo + 1.0;
    while (g(hi) <= 0.0)
        hi *= 2.0;
    std::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(52),
                                                          iters);
    return {0.5 * (a + b)};
}

namespace
{

double interference_ratio(double noise_term, double cross, double own)
{
    if (own <= 0.0)
        return std::numeric_limits<double>::infinity();
    return (noise_term + cross) / own;
}

} // namespace

double effective_interference(const Scenario &scenario, const SpreadingMatrix &codes, const LinearReceiver &rx, int k)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            "effective_interference: codes do not match the scenario");
    require(k >= 0 && k < scenario.users(), "effective_interference: user index out of range");
    require(rx.d.size() == scenario.chips() && rx.d.allFinite(), "effective_interference: bad receiver");
    const double norm_sq = rx.d.squaredNorm();
    require(norm_sq > 0.0, "effective_interference: zero receiver");
    const RVector proj = (codes.matrix().adjoint() * rx.d).cwiseAbs2();
    const RVector d_sq = scenario.power_diagonal().d_sq;
    double cross = 0.0;
    for (int i = 0; i < scenario.users(); ++i)
        if (i != k)
            cross += d_sq[i] * proj[i];
    const double h2 = scenario.gain()[k] * scenario.gain()[k];
    return interference_ratio(scenario.noise_variance() * norm_sq, cross, h2 * proj[k]);
}

double effective_interference(const Scenario &scenario, const SpreadingMatrix &codes, const WlReceiver &rx, int k)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            "effective_interference: codes do not match the scenario");
    require(k >= 0 && k < scenario.users(), "effective_interference: user index out of range");
    require(rx.d_a.size() == 2 * scenario.chips() && rx.d_a.allFinite(), "effective_interference: bad receiver");
    const double norm_sq = rx.d_a.squaredNorm();
    require(norm_sq > 0.0, "effective_interference: zero receiver");
    const RVector proj = (augment(codes, scenario.phase()).matrix().adjoint() * rx.d_a).cwiseAbs2();
    const RVector a_sq = scenario.power_diagonal().a_sq;
    double cross = 0.0;
    for (int i = 0; i < scenario.users(); ++i)
        if (i != k)
            cross += a_sq[i] * proj[i];
    const double h2 = scenario.gain()[k] * scenario.gain()[k];
    return interference_ratio(scenario.noise_variance() * norm_sq, cross, 2.0 * h2 * proj[k]);
}

double best_response_power(double interference, double gamma_bar, double p_max)
{
    require(interference > 0.0, "best_response_power: interference must be positive");
    require(gamma_bar > 0.0 && p_max > 0.0, "best_response_power: gamma_bar and p_max must be positive");
    if (std::isinf(interference))
        return p_max;
    return std::min(gamma_bar * interference, p_max);
}

double utility(double power, double gamma, const UtilityConfig &config)
{
    config.validate();
    require(power > 0.0 && std::isfinite(power), "utility: power must be positive");
    return config.rate * (static_cast<double>(config.info_symbols) / config.packet_length) *
           efficiency(gamma, config.packet_length) / power;
}

std::string to_string(GameVariant variant)
{
    switch (variant)
    {
    case GameVariant::PLinear:
        return "P-linear";
    case GameVariant::PRLinear:
        return "PR-linear";
    case GameVariant::PRCLinear:
        return "PRC-linear";
    case GameVariant::PWl:
        return "P-WL";
    case GameVariant::PRWl:
        return "PR-WL";
    case GameVariant::PRCWl:
        return "PRC-WL";
    }
    return "PR-WL";
}

GameVariant parse_game_variant(const std::string &name)
{
    for (GameVariant v : kAllGameVariants)
        if (to_string(v) == name)
            return v;
    throw ValidationError("unknown game variant '" + name +
                          "' (expected P-linear, PR-linear, PRC-linear, P-WL, PR-WL or PRC-WL)");
}

Detector detector_of(GameVariant variant)
{
    switch (variant)
    {
    case GameVariant::PLinear:
    case GameVariant::PRLinear:
    case GameVariant::PRCLinear:
        return Detector::Linear;
    default:
        return Detector::WidelyLinear;
    }
}

bool uses_mmse(GameVariant variant) { return variant != GameVariant::PLinear && variant != GameVariant::PWl; }

bool optimizes_codes(GameVariant variant)
{
    return variant == GameVariant::PRCLinear || variant == GameVariant::PRCWl;
}

void GameSchedule::validate() const
{
    require(max_rounds >= 1, "GameSchedule: max_rounds must be >= 1");
    require(power_tol > 0.0 && code_tol > 0.0, "GameSchedule: tolerances must be positive");
    require(code_sweeps >= 1, "GameSchedule: code_sweeps must be >= 1");
}

namespace
{

double mean_of(const std::vector<UserOutcome> &users, double UserOutcome::*field)
{
    double acc = 0.0;
    for (const auto &u : users)
        acc += u.*field;
    return users.empty() ? 0.0 : acc / static_cast<double>(users.size());
}

// Game state in the coordinates the variant works in: the stacked embedding
// for WL detection, the codes themselves for linear detection.
struct Codes
{
    Detector detector;
    RMatrix stacked;
    CMatrix complex;
};

RVector sinr_for(const Codes &c, bool mmse, const RVector &h2, const RVector &power, double noise_variance)
{
    const RVector d_sq = power.cwiseProduct(h2);
    if (c.detector == Detector::WidelyLinear)
        return mmse ? mmse_sinr_all_wl(2.0 * d_sq, c.stacked, noise_variance)
                    : matched_sinr_all_wl(2.0 * d_sq, c.stacked, noise_variance);
    return mmse ? mmse_sinr_all_linear(d_sq, c.complex, noise_variance)
                : matched_sinr_all_linear(d_sq, c.complex, noise_variance);
}

} // namespace

double GameOutcome::mean_utility() const { return mean_of(users, &UserOutcome::utility); }
double GameOutcome::mean_power() const { return mean_of(users, &UserOutcome::power); }
double GameOutcome::mean_sinr() const { return mean_of(users, &UserOutcome::sinr); }

double GameOutcome::fraction_at_max() const
{
    if (users.empty())
        return 0.0;
    const auto n = std::count_if(users.begin(), users.end(), [](const UserOutcome &u) { return u.at_max_power; });
    return static_cast<double>(n) / static_cast<double>(users.size());
}

RVector variant_sinr(const Scenario &scenario, const SpreadingMatrix &codes, GameVariant variant, const RVector &power)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            "variant_sinr: codes do not match the scenario");
    require(power.size() == scenario.users() && (power.array() > 0.0).all(), "variant_sinr: bad power vector");
    const Detector det = detector_of(variant);
    Codes c{det, det == Detector::WidelyLinear ? stacked_embedding(codes, scenario.phase()) : RMatrix(),
            det == Detector::Linear ? codes.matrix() : CMatrix()};
    return sinr_for(c, uses_mmse(variant), scenario.gain().cwiseAbs2(), power, scenario.noise_variance());
}

GameOutcome run_ee_game(const Scenario &scenario, const SpreadingMatrix &codes0, GameVariant variant,
                        const UtilityConfig &utility_config, const GameSchedule &schedule)
{
    utility_config.validate();
    schedule.validate();
    require(codes0.users() == scenario.users() && codes0.chips() == scenario.chips(),
            "run_ee_game: codes do not match the scenario");

    const int k_users = scenario.users();
    const RVector h2 = scenario.gain().cwiseAbs2();
    const RVector &p_max = scenario.max_power();
    const double sigma2 = scenario.noise_variance();
    const double gamma_bar = solve_target_sinr(utility_config.packet_length).gamma_bar;
    const Detector det = detector_of(variant);
    const bool wl = det == Detector::WidelyLinear;
    const bool mmse = uses_mmse(variant);
    const bool with_codes = optimizes_codes(variant);

    RVector power = schedule.initial_power.value_or(scenario.power());
    require(power.size() == k_users, "run_ee_game: initial power vector size mismatch");
    for (int k = 0; k < k_users; ++k)
        require(power[k] > 0.0 && power[k] <= p_max[k], "run_ee_game: initial powers must lie in (0, p_max]");

    Codes c{det, wl ? stacked_embedding(codes0, scenario.phase()) : RMatrix(), wl ? CMatrix() : codes0.matrix()};
    std::optional<WlCodeIteration> wl_it;
    std::optional<LinearCodeIteration> lin_it;
    if (with_codes && wl)
        wl_it.emplace(2.0 * power.cwiseProduct(h2), c.stacked, sigma2);
    if (with_codes && !wl)
        lin_it.emplace(power.cwiseProduct(h2), c.complex, sigma2);

    GameOutcome out{
        .variant = variant, .gamma_bar = gamma_bar, .users = {}, .codes = codes0, .iterations = 0, .converged = false, .power_change = {}};
    RVector sinr;
    for (int round = 1; round <= schedule.max_rounds; ++round)
    {
        double code_metric = 0.0;
        if (with_codes)
        {
            const RVector d_sq = power.cwiseProduct(h2);
            if (wl)
                wl_it->set_weights(2.0 * d_sq);
            else
                lin_it->set_weights(d_sq);
            for (int sweep = 0; sweep < schedule.code_sweeps; ++sweep)
            {
                if (wl)
                {
                    wl_it->sweep();
                    code_metric = metric_d_stacked(c.stacked, wl_it->codes());
                    c.stacked = wl_it->codes();
                }
                else
                {
                    lin_it->sweep();
                    RMatrix before(2 * c.complex.rows(), k_users), after(2 * c.complex.rows(), k_users);
                    before << c.complex.real(), c.complex.imag();
                    after << lin_it->codes().real(), lin_it->codes().imag();
                    code_metric = metric_d_stacked(before, after);
                    c.complex = lin_it->codes();
                }
                if (code_metric < schedule.code_tol)
                    break;
            }
        }

        sinr = sinr_for(c, mmse, h2, power, sigma2);
        double change = 0.0;
        for (int k = 0; k < k_users; ++k)
        {
            const double interference =
                sinr[k] > 0.0 ? power[k] / sinr[k] : std::numeric_limits<double>::infinity();
            const double next = best_response_power(interference, gamma_bar, p_max[k]);
            change = std::max(change, std::abs(next - power[k]) / power[k]);
            power[k] = next;
        }
        out.power_change.push_back(change);
        out.iterations = round;
        if (change < schedule.power_tol && code_metric < schedule.code_tol)
        {
            out.converged = true;
            break;
        }
    }

    sinr = sinr_for(c, mmse, h2, power, sigma2);
    out.codes = wl ? codes_from_stacked(c.stacked, scenario.phase()) : SpreadingMatrix(c.complex);
    out.users.reserve(static_cast<std::size_t>(k_users));
    for (int k = 0; k < k_users; ++k)
    {
        UserOutcome u;
        u.power = power[k];
        u.sinr = sinr[k];
        u.mse = 1.0 / (1.0 + sinr[k]);
        u.utility = utility(power[k], sinr[k], utility_config);
        u.interference = sinr[k] > 0.0 ? power[k] / sinr[k] : std::numeric_limits<double>::infinity();
        u.at_max_power = power[k] == p_max[k];
        out.users.push_back(u);
    }
    return out;
}

double max_unilateral_gain(const Scenario &scenario, const GameOutcome &outcome, const UtilityConfig &utility_config,
                           int grid_points)
{
    require(grid_points >= 2, "max_unilateral_gain: need at least two grid points");
    require(static_cast<int>(outcome.users.size()) == scenario.users(), "max_unilateral_gain: outcome size mismatch");
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < scenario.users(); ++k)
    {
        const UserOutcome &u = outcome.users[static_cast<std::size_t>(k)];
        const double p_max = scenario.max_power()[k];
        const double base = u.utility;
        const double lo = std::log(p_max * 1e-15);
        const double hi = std::log(p_max);
        for (int g = 0; g < grid_points; ++g)
        {
            const double p = g + 1 == grid_points ? p_max : std::exp(lo + (hi - lo) * g / (grid_points - 1));
            const double gamma = std::isinf(u.interference) ? 0.0 : p / u.interference;
            const double alt = utility(p, gamma, utility_config);
            worst = std::max(worst, base > 0.0 ? (alt - base) / base : alt);
        }
    }
    return worst;
}

} // namespace wlcdma
