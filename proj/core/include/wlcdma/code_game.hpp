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

#ifndef WLCDMA_CODE_GAME_HPP
#define WLCDMA_CODE_GAME_HPP

#include "wlcdma/receivers.hpp"
#include "wlcdma/signal_model.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wlcdma
{

enum class Detector
{
    Linear,
    WidelyLinear,
};

std::string to_string(Detector detector);
Detector parse_detector(const std::string &name);

// Gauss-Seidel sweep of the MMSE code update over all users.
//
// Each column v_k of the code matrix is replaced, in index order, by the
// normalized MMSE direction R^{-1} v_k where R = sum_i w_i v_i v_i^H + sigma^2 I
// already contains the users updated earlier in the same sweep. Since
// R^{-1} v_k is parallel to A_k^{-1} v_k (A_k = R - w_k v_k v_k^H) this is the
// update that uses the intermediate interference-plus-noise matrix.
//
// Scalar = double: widely-linear iteration on the real stacked embedding
//   (weights a_k^2, columns x_k in R^{2N}).
// Scalar = Complex: linear iteration on the codes themselves (weights d_k^2).
template <typename Scalar>
class MmseCodeIteration
{
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    MmseCodeIteration(RVector weights, Matrix codes, double noise_variance);

    // Updates code k and returns R^{-1} v_k computed before the update.
    Vector step(int k);
    void sweep();

    void set_weights(RVector weights);
    void set_codes(Matrix codes);

    const Matrix &codes() const { return codes_; }
    const RVector &weights() const { return weights_; }
    double noise_variance() const { return noise_variance_; }
    int users() const { return static_cast<int>(codes_.cols()); }
    int dimension() const { return static_cast<int>(codes_.rows()); }
    const Matrix &covariance() const { return cov_; }

private:
    void rebuild();

    RVector weights_;
    Matrix codes_;
    double noise_variance_;
    Matrix cov_;
};

using WlCodeIteration = MmseCodeIteration<double>;
using LinearCodeIteration = MmseCodeIteration<Complex>;

WlCodeIteration make_wl_iteration(const Scenario &scenario, const SpreadingMatrix &codes);
LinearCodeIteration make_linear_iteration(const Scenario &scenario, const SpreadingMatrix &codes);

// One intermediate step in the natural coordinates: returns the WL MMSE filter
// sqrt(a_k^2) M_a^{-1} s_{k,a} of the current state and the new signature.
std::pair<WlReceiver, AugmentedSignature> wl_code_iteration_step(WlCodeIteration &state, int k);

// Linear counterpart. The returned filter carries the channel phase; the code
// update drops it (|s_i^H s_j| and M do not depend on the phases, and keeping
// the rotation would make the codes spin without ever settling).
std::pair<LinearReceiver, CVector> linear_code_iteration_step(LinearCodeIteration &state, int k, double phase);

struct IterationSchedule
{
    int max_sweeps = 5000;
    double tol = 1e-9;
    double perturbation_eps = 1e-4;
    bool record_trace = false;
    std::uint64_t seed = 0;

    void validate() const;
};

struct SweepRecord
{
    int sweep = 0;
    double wl_twsc = 0.0;
    double twsc = 0.0;
    double gram_min = 0.0; // extreme eigenvalues of S_a^H S_a (WL) or S^H S (linear)
    double gram_max = 0.0;
    double metric = 0.0;   // metric_d to the previous sweep
    RVector spectrum;      // eigenvalues of S_a A S_a^H, descending
};

struct EigenGroup
{
    double lambda = 0.0;
    std::vector<int> users;
    int multiplicity = 0;
};

struct FixedPointReport
{
    SpreadingMatrix codes;
    RVector eigenvalues; // 2N eigenvalues of S_a A S_a^H, descending
    // Eigenvalue groups of the detector's own weighted correlation matrix:
    // S_a A S_a^H for WL, S D S^H (N x N) for linear.
    std::vector<EigenGroup> partition;
    double wl_twsc = 0.0;
    double twsc = 0.0;
    double tmmse = 0.0;
    double c_sum = 0.0;
    int sweeps_used = 0;
    bool converged = false;
    int perturbations = 0;
    Detector detector = Detector::WidelyLinear;
    std::vector<SweepRecord> trace;
};

FixedPointReport run_to_fixed_point(const Scenario &scenario, const SpreadingMatrix &codes0,
                                    const IterationSchedule &schedule, Detector detector);

// 1/4 sum_ij a_i^2 a_j^2 |s_{i,a}^H s_{j,a}|^2.
double wl_twsc(const SpreadingMatrix &codes, const Scenario &scenario);
double wl_twsc(const RVector &a_sq, const RMatrix &stacked);
// sum_ij d_i^2 d_j^2 |s_i^H s_j|^2.
double twsc(const SpreadingMatrix &codes, const Scenario &scenario);
double twsc(const RVector &d_sq, const CMatrix &codes);

// max_k arccos(s'_{k,a}^H s''_{k,a}), evaluated as 2 asin(|s' - s''| / 2) so
// that tiny angles keep full precision.
double metric_d(const AugmentedSet &first, const AugmentedSet &second);
// Same on raw 2N x K matrices; rejects columns outside V.
double metric_d(const CMatrix &first, const CMatrix &second);
// Same on stacked embeddings or on any unit-column real matrices.
double metric_d_stacked(const RMatrix &first, const RMatrix &second);

// Users whose power exceeds the oversize threshold for an m-dimensional
// signal space, scanned in descending power order (ties by index) and
// stopping at the first user that is not oversized.
std::vector<int> detect_oversized(const RVector &power, int dimension);

// Eigenvalue profile of the optimal signature set, descending, m entries.
RVector optimal_eigenvalue_profile(const RVector &power, int dimension);

struct CapacityMetrics
{
    double c_sum = 0.0; // nats
    double tmmse = 0.0;
    double wl_twsc = 0.0;
};

// Metrics of an eigenvalue vector of S_a A S_a^H with noise variance 2 N0.
CapacityMetrics capacity_metrics(const RVector &eigenvalues, double noise_psd, int users);

struct SumCapacity
{
    double widely_linear = 0.0; // N chips, WL receiver
    double complex_2n = 0.0;    // 2N complex chips, linear receiver
    double real_2n = 0.0;       // 2N real chips (carries the factor 1/2)
};

SumCapacity sum_capacity_comparison(const Scenario &scenario);

// Rotates every column by an angle in [0, eps] towards a random orthogonal
// direction of the real stacked space.
SpreadingMatrix perturb_codes(const SpreadingMatrix &codes, double eps, std::uint64_t seed);

// Groups eigenvalues of V W V^H (V: unit columns) and assigns each user to the
// group nearest its Rayleigh quotient.
std::vector<EigenGroup> eigen_partition(const RVector &weights, const RMatrix &codes, double rel_gap = 1e-6);
std::vector<EigenGroup> eigen_partition(const RVector &weights, const CMatrix &codes, double rel_gap = 1e-6);

} // namespace wlcdma

#endif
