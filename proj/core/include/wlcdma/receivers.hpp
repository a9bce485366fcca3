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

#ifndef WLCDMA_RECEIVERS_HPP
#define WLCDMA_RECEIVERS_HPP

#include "wlcdma/signal_model.hpp"

namespace wlcdma
{

// Receive filter d_k for the linear decision rule.
struct LinearReceiver
{
    CVector d;
};

// Widely-linear filter d_{k,a} = [d_{1,k}; d_{2,k}] acting on [r; r^*].
struct WlReceiver
{
    CVector d_a;
};

// d_k = sqrt(p_k) h_k e^{j phi_k} M^{-1} s_k.
LinearReceiver linear_mmse(const Scenario &scenario, const SpreadingMatrix &codes, int k);

// d_{k,a} = sqrt(2 p_k) h_k M_a^{-1} s_{k,a}.
WlReceiver wl_mmse(const Scenario &scenario, const SpreadingMatrix &codes, int k);

LinearReceiver matched_filter_linear(const Scenario &scenario, const SpreadingMatrix &codes, int k);
WlReceiver matched_filter_wl(const Scenario &scenario, const SpreadingMatrix &codes, int k);

// Output SINR of an arbitrary filter. Both are invariant to positive scaling
// of the filter and reject the zero filter.
double sinr_linear(const Scenario &scenario, const SpreadingMatrix &codes, const LinearReceiver &rx, int k);
double sinr_wl(const Scenario &scenario, const SpreadingMatrix &codes, const WlReceiver &rx, int k);

// MSE of the MMSE filter at output SINR gamma: 1 / (1 + gamma).
double mse_wl(double gamma);

// Batched SINR of every user. These work on precomputed inputs and are the
// hot path of the games; a_sq, d_sq are received powers, noise_variance = 2 N0.
//
// MMSE: c_k = w_k v_k^H R^{-1} v_k and gamma_k = c_k / (1 - c_k), which is the
// matrix-inversion-lemma form of w_k v_k^H A_k^{-1} v_k.
RVector mmse_sinr_all_wl(const RVector &a_sq, const RMatrix &stacked, double noise_variance);
RVector mmse_sinr_all_linear(const RVector &d_sq, const CMatrix &codes, double noise_variance);
RVector matched_sinr_all_wl(const RVector &a_sq, const RMatrix &stacked, double noise_variance);
RVector matched_sinr_all_linear(const RVector &d_sq, const CMatrix &codes, double noise_variance);

} // namespace wlcdma

#endif
