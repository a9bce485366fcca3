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

#ifndef WLCDMA_POWER_GAME_HPP
#define WLCDMA_POWER_GAME_HPP

#include "wlcdma/code_game.hpp"
#include "wlcdma/receivers.hpp"
#include "wlcdma/signal_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wlcdma
{

// Packet of M symbols carrying L information symbols at rate R (bit/s).
struct UtilityConfig
{
    int packet_length = 120;
    int info_symbols = 120;
    double rate = 1e5;

    void validate() const;
};

// f(gamma) = (1 - e^{-gamma})^M.
double efficiency(double gamma, int packet_length);
double efficiency_derivative(double gamma, int packet_length);

struct TargetSinr
{
    double gamma_bar = 0.0;
};

// Unique positive root of f(gamma) = gamma f'(gamma), i.e. e^gamma - 1 = M gamma.
// M < 2 has no positive root and is rejected.
TargetSinr solve_target_sinr(int packet_length);

// I_k with gamma_k = p_k / I_k for the given filter. Returns +infinity when the
// filter has no projection on the user's own signature.
double effective_interference(const Scenario &scenario, const SpreadingMatrix &codes, const LinearReceiver &rx, int k);
double effective_interference(const Scenario &scenario, const SpreadingMatrix &codes, const WlReceiver &rx, int k);

// min(gamma_bar * I, p_max).
double best_response_power(double interference, double gamma_bar, double p_max);

// R (L / M) f(gamma) / p in bit/J.
double utility(double power, double gamma, const UtilityConfig &config);

// P: power only (matched filter), PR: power and MMSE receiver,
// PRC: power, MMSE receiver and spreading code.
enum class GameVariant
{
    PLinear,
    PRLinear,
    PRCLinear,
    PWl,
    PRWl,
    PRCWl,
};

inline constexpr std::array<GameVariant, 6> kAllGameVariants = {
    GameVariant::PLinear, GameVariant::PRLinear, GameVariant::PRCLinear,
    GameVariant::PWl,     GameVariant::PRWl,     GameVariant::PRCWl,
};

std::string to_string(GameVariant variant);
GameVariant parse_game_variant(const std::string &name);
Detector detector_of(GameVariant variant);
bool uses_mmse(GameVariant variant);
bool optimizes_codes(GameVariant variant);

struct GameSchedule
{
    int max_rounds = 10000;
    double power_tol = 1e-8; // max relative power change over a round
    double code_tol = 1e-9;  // metric_d between consecutive code sweeps
    int code_sweeps = 1;     // max inner code sweeps per round, stops early once below code_tol
    std::optional<RVector> initial_power; // defaults to the scenario powers

    void validate() const;
};

struct UserOutcome
{
    double power = 0.0;
    double sinr = 0.0;
    double mse = 1.0;
    double utility = 0.0;
    double interference = 0.0;
    bool at_max_power = false;
};

struct GameOutcome
{
    GameVariant variant = GameVariant::PRWl;
    double gamma_bar = 0.0;
    std::vector<UserOutcome> users;
    SpreadingMatrix codes;
    int iterations = 0;
    bool converged = false;
    std::vector<double> power_change; // per round

    double mean_utility() const;
    double mean_power() const;
    double mean_sinr() const;
    double fraction_at_max() const;
};

// Synchronous best-response rounds: every user refreshes its code (PRC only,
// one Gauss-Seidel sweep at the current powers) and receiver, then every user
// sets p_k = min(gamma_bar I_k, p_max).
GameOutcome run_ee_game(const Scenario &scenario, const SpreadingMatrix &codes0, GameVariant variant,
                        const UtilityConfig &utility_config, const GameSchedule &schedule = {});

// SINR of every user under the variant's receivers for the given powers.
RVector variant_sinr(const Scenario &scenario, const SpreadingMatrix &codes, GameVariant variant, const RVector &power);

// Largest relative utility gain any single user gets by moving to one of
// grid_points log-spaced powers in (0, p_max], others and filters held fixed.
double max_unilateral_gain(const Scenario &scenario, const GameOutcome &outcome, const UtilityConfig &utility_config,
                           int grid_points = 1000);

} // namespace wlcdma

#endif
