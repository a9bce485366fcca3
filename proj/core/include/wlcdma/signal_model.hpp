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

#ifndef WLCDMA_SIGNAL_MODEL_HPP
#define WLCDMA_SIGNAL_MODEL_HPP

#include "wlcdma/common.hpp"

#include <cstdint>
#include <string>

namespace wlcdma
{

// Diagonal received-power weights: a_k^2 = 2 p_k h_k^2 (augmented model)
// and d_k^2 = p_k h_k^2 (linear model).
struct PowerDiagonal
{
    RVector a_sq;
    RVector d_sq;
};

// Synchronous CDMA uplink: K users, processing gain N, flat complex channels
// h_k e^{j phi_k}, noise covariance 2 N0 I. Powers in W, N0 in W/Hz.
class Scenario
{
public:
    Scenario(int chips, RVector power, RVector gain, RVector phase, double noise_psd, RVector max_power);

    int users() const { return static_cast<int>(power_.size()); }
    int chips() const { return chips_; }

    const RVector &power() const { return power_; }
    const RVector &gain() const { return gain_; }
    const RVector &phase() const { return phase_; }
    const RVector &max_power() const { return max_power_; }
    double noise_psd() const { return noise_psd_; }

    // 2 N0, the per-dimension noise variance seen by both receivers.
    double noise_variance() const { return 2.0 * noise_psd_; }

    PowerDiagonal power_diagonal() const;

    // Same channels and limits with a different power vector (validated).
    Scenario with_power(RVector power) const;

private:
    int chips_;
    RVector power_;
    RVector gain_;
    RVector phase_;
    double noise_psd_;
    RVector max_power_;
};

// N x K matrix of unit-norm complex spreading codes.
class SpreadingMatrix
{
public:
    explicit SpreadingMatrix(CMatrix columns);

    int chips() const { return static_cast<int>(columns_.rows()); }
    int users() const { return static_cast<int>(columns_.cols()); }
    const CMatrix &matrix() const { return columns_; }
    CVector column(int k) const { return columns_.col(k); }

private:
    CMatrix columns_;
};

// Element of the set V: a unit-norm 2N vector whose lower half is the
// conjugate of its upper half.
class AugmentedSignature
{
public:
    explicit AugmentedSignature(CVector data);

    int chips() const { return static_cast<int>(data_.size() / 2); }
    const CVector &data() const { return data_; }
    CVector upper() const { return data_.head(chips()); }
    CVector lower() const { return data_.tail(chips()); }

private:
    CVector data_;
};

// 2N x K aggregate S_a whose columns all lie in V (an element of the set S).
class AugmentedSet
{
public:
    explicit AugmentedSet(CMatrix columns);

    int chips() const { return static_cast<int>(columns_.rows() / 2); }
    int users() const { return static_cast<int>(columns_.cols()); }
    const CMatrix &matrix() const { return columns_; }
    AugmentedSignature column(int k) const { return AugmentedSignature(columns_.col(k)); }

private:
    CMatrix columns_;
};

// s_a = [s e^{j phi}; s^* e^{-j phi}] / sqrt(2).
AugmentedSignature build_augmented_signature(const CVector &code, double phase);

AugmentedSet augment(const SpreadingMatrix &codes, const RVector &phase);

// Inverse of augment(): recovers s_k = sqrt(2) e^{-j phi_k} upper(s_{k,a}).
SpreadingMatrix deaugment(const AugmentedSet &set, const RVector &phase);

// M = sum_k p_k h_k^2 s_k s_k^H + 2 N0 I_N.
CMatrix covariance(const Scenario &scenario, const SpreadingMatrix &codes);

// M' = sum_k p_k h_k^2 e^{2 j phi_k} s_k s_k^T.
CMatrix pseudo_covariance(const Scenario &scenario, const SpreadingMatrix &codes);

// M_a = sum_k 2 p_k h_k^2 s_{k,a} s_{k,a}^H + 2 N0 I_{2N}, built as outer products.
CMatrix augmented_covariance(const Scenario &scenario, const SpreadingMatrix &codes);

// Real stacked embedding of V. For v_a = [v; v^*] the map
//   v_a -> sqrt(2) [Re v; Im v]
// is an isometry onto R^{2N}, and v1_a^H v2_a equals the real dot product of
// the images. M_a is unitarily similar to the real matrix
//   R = sum_k a_k^2 x_k x_k^T + 2 N0 I,  x_k = [Re(s_k e^{j phi_k}); Im(s_k e^{j phi_k})].
RVector stacked_from_augmented(const CVector &augmented);
CVector augmented_from_stacked(const RVector &stacked);
RMatrix stacked_embedding(const SpreadingMatrix &codes, const RVector &phase);
SpreadingMatrix codes_from_stacked(const RMatrix &stacked, const RVector &phase);

// The real matrix R above, unitarily similar to augmented_covariance().
RMatrix stacked_covariance(const RVector &a_sq, const RMatrix &stacked, double noise_variance);

enum class CodeKind
{
    Binary,
    ComplexGaussian,
};

std::string to_string(CodeKind kind);
CodeKind parse_code_kind(const std::string &name);

// Random scenario drawn from a single-cell layout: uniform distances and a
// circular complex Gaussian channel g_k with variance d_k^{-path_loss_exponent}.
struct ScenarioConfig
{
    int users = 10;
    int chips = 11;
    double noise_psd = 2.5e-10;    // W/Hz
    double max_power = 1.0;        // W (0 dBW)
    double initial_power = 1.0;    // W, must not exceed max_power
    double min_distance = 10.0;    // m
    double max_distance = 500.0;   // m
    double path_loss_exponent = 1.5;
    CodeKind code_kind = CodeKind::Binary;

    void validate() const;
};

Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed);

// Codes with N chips for K users. Binary entries are +-1/sqrt(N).
SpreadingMatrix generate_codes(int chips, int users, CodeKind kind, std::uint64_t seed);

// Scenario with unit channel gains and p_k = a_k^2 / 2, so that the augmented
// received powers are exactly a_sq. max_power equals power.
Scenario scenario_from_received_powers(int chips, const RVector &a_sq, double noise_psd, const RVector &phase);

// JSON using the field names K, N, p, h, phi, noise_psd, p_max.
std::string scenario_to_json(const Scenario &scenario);
Scenario scenario_from_json(const std::string &text);

std::string scenario_config_to_json(const ScenarioConfig &config);
ScenarioConfig scenario_config_from_json(const std::string &text);

} // namespace wlcdma

#endif
