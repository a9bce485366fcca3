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

#ifndef WLCDMA_LSA_HPP
#define WLCDMA_LSA_HPP

#include "wlcdma/power_game.hpp"
#include "wlcdma/signal_model.hpp"

namespace wlcdma
{

struct LsaInput
{
    RVector gain_sq;         // h_k^2
    double noise_psd = 0.0;  // N0
    double gamma_bar = 0.0;
    double alpha = 0.0;      // load entering the equal-power formula
    double p_max = 0.0;      // common to all users
    int chips = 0;

    int users() const { return static_cast<int>(gain_sq.size()); }
    void validate() const;

    // alpha = K / N. All users must share one p_max.
    static LsaInput from_scenario(const Scenario &scenario, double gamma_bar);
};

struct LsaPrediction
{
    RVector power;
    RVector received_power; // P_k = 2 h_k^2 p_k
    RVector sinr;
    RVector utility;
    std::vector<bool> at_max_power;
    int n_max_hat = 0;
    double common_received_power = 0.0; // P_R targeted by the uncapped users
};

// Self-consistent large-system SINR of user k with WL filtering:
//   gamma = P_k / (2 N0 + 1/(2N) sum_{j != k} P_k P_j / (P_k + P_j gamma)),
// with P_k = 2 p_k h_k^2.
double lsa_sinr(const RVector &received_power, int k, int chips, double noise_psd);
RVector lsa_sinr_all(const RVector &received_power, int chips, double noise_psd);

// Real-channel linear MMSE counterpart with q_k = p_k h_k^2:
//   gamma = q_k / (N0/2 + 1/N sum_{j != k} q_k q_j / (q_k + q_j gamma)).
double lsa_sinr_real(const RVector &received_power, int k, int chips, double noise_psd);

// P_R = 2 N0 gamma_bar / (1 - gamma_bar alpha / (2 (1 + gamma_bar))).
// Throws when alpha >= 2 (1 + gamma_bar) / gamma_bar.
double plain_received_power(double gamma_bar, double alpha, double noise_psd);

// Equal received power for everybody, capped at p_max.
LsaPrediction lsa_power_plain(const LsaInput &input, const UtilityConfig &utility_config = {});

// Number of users whose uncapped equal-received-power transmit power exceeds p_max.
int estimate_maxpower_count(const LsaInput &input);

// Common received power of the uncapped users when the n_max_hat weakest
// users transmit at p_max: the root P of
//   2N / (4 N N0 / P + u1 / (1 + gamma_bar) + sum_capped Q_i / (P + Q_i gamma_bar)) = gamma_bar
// with Q_i = 2 p_max h_i^2, u1 = K - n_max_hat - 1.
double improved_received_power(const LsaInput &input, int n_max_hat);

LsaPrediction lsa_power_improved(const LsaInput &input, const UtilityConfig &utility_config = {});

} // namespace wlcdma

#endif
