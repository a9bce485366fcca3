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


// Independent reference computations for the test suites. Nothing here calls
// into the library's numerics: augmented vectors are built from scratch in
// the complex domain, systems are solved by full-pivot LU and scalar roots by
// plain bisection.

#ifndef WLCDMA_TEST_ORACLES_HPP
#define WLCDMA_TEST_ORACLES_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace oracle
{

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

// Bisection on a sign change; throws if [lo, hi] does not bracket a root.
double bisect(const std::function<double(double)> &f, double lo, double hi, double tol = 1e-14, int max_iter = 400);

// [s e^{j phi}; conj(s) e^{-j phi}] / sqrt(2)
CVector augmented(const CVector &code, double phase);

// sum_k w_k v_k v_k^H + sigma2 I over the columns of V.
CMatrix weighted_gram(const CMatrix &v, const RVector &w, double sigma2);

// Same without column k.
CMatrix interference_plus_noise(const CMatrix &v, const RVector &w, double sigma2, int k);

// Optimum SINR w_k v_k^H A_k^{-1} v_k. Covers WL (augmented columns, w = 2 p h^2)
// and linear (raw codes, w = p h^2) detection.
double mmse_sinr(const CMatrix &v, const RVector &w, double sigma2, int k);

// SINR of an arbitrary filter f: w_k |f^H v_k|^2 / f^H A_k f.
double filter_sinr(const CMatrix &v, const RVector &w, double sigma2, int k, const CVector &f);

// Augmented matrix of a code set: 2N x K.
CMatrix augmented_set(const CMatrix &codes, const RVector &phase);

// (1 - e^{-gamma})^M in 50 significant digits.
double efficiency_hp(double gamma, int packet_length);

// Root of e^g - 1 - M g on (0, inf) by bisection in 50-digit arithmetic.
double target_sinr_hp(int packet_length);

// log det(I + X / sigma2) for Hermitian PSD X, via LU.
double log_det_identity_plus(const CMatrix &x, double sigma2);

// Self-consistent large-system SINR by bisection on
// g = P_k / (2 N0 + 1/(2N) sum_{j != k} P_k P_j / (P_k + P_j g)).
double lsa_sinr_bisect(const RVector &received, int k, int chips, double noise_psd);

} // namespace oracle

#endif
