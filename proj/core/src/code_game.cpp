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

#include "wlcdma/code_game.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace wlcdma
{

namespace
{

constexpr double kColumnTolerance = 1e-9;

template <typename Matrix>
void require_unit_columns(const Matrix &m, double tol, const std::string &what)
{
    for (Eigen::Index k = 0; k < m.cols(); ++k)
        require(std::abs(m.col(k).norm() - 1.0) <= tol, what + ": column " + std::to_string(k) + " is not unit norm");
}

// [Re S; Im S]: the augmented inner products of codes that share a phase are
// the real dot products of these columns.
RMatrix realify(const CMatrix &codes)
{
    RMatrix out(2 * codes.rows(), codes.cols());
    out.topRows(codes.rows()) = codes.real();
    out.bottomRows(codes.rows()) = codes.imag();
    return out;
}

CMatrix complexify(const RMatrix &stacked)
{
    const Eigen::Index n = stacked.rows() / 2;
    CMatrix out(n, stacked.cols());
    out.real() = stacked.topRows(n);
    out.imag() = stacked.bottomRows(n);
    for (Eigen::Index k = 0; k < out.cols(); ++k)
        out.col(k).normalize();
    return out;
}

void perturb_columns(RMatrix &stacked, double eps, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Eigen::Index n = stacked.rows();
    for (Eigen::Index k = 0; k < stacked.cols(); ++k)
    {
        RVector x = stacked.col(k);
        x.normalize();
        if (n == 1)
            continue; // the unit sphere of R^1 is two points, nothing to rotate
        RVector u(n);
        double len = 0.0;
        do
        {
            for (Eigen::Index i = 0; i < n; ++i)
                u[i] = normal(rng);
            u -= u.dot(x) * x;
            len = u.norm();
        } while (len < 1e-8);
        u /= len;
        const double theta = eps * unit(rng);
        stacked.col(k) = std::cos(theta) * x + std::sin(theta) * u;
    }
}

template <typename Matrix>
RVector descending(const Eigen::SelfAdjointEigenSolver<Matrix> &solver)
{
    return solver.eigenvalues().reverse();
}

template <typename Matrix>
Matrix weighted_correlation(const RVector &weights, const Matrix &codes)
{
    using Scalar = typename Matrix::Scalar;
    return codes * weights.cast<Scalar>().asDiagonal() * codes.adjoint();
}

template <typename Matrix>
std::vector<EigenGroup> partition_impl(const RVector &weights, const Matrix &codes, double rel_gap)
{
    require(weights.size() == codes.cols(), "eigen_partition: weight vector size mismatch");
    require(rel_gap > 0.0, "eigen_partition: gap must be positive");
    const Matrix c = weighted_correlation(weights, codes);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(c, Eigen::EigenvaluesOnly);
    const RVector eig = descending(solver);
    const double scale = std::max(eig[0], 0.0);
    const double gap = rel_gap * (scale > 0.0 ? scale : 1.0);

    std::vector<EigenGroup> groups;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.size(); ++i)
    {
        if (groups.empty() || eig[i - 1] - eig[i] > gap)
        {
            if (!groups.empty())
                groups.back().lambda = sum / groups.back().multiplicity;
            groups.push_back({});
            sum = 0.0;
        }
        sum += eig[i];
        ++groups.back().multiplicity;
    }
    groups.back().lambda = sum / groups.back().multiplicity;

    for (int k = 0; k < codes.cols(); ++k)
    {
        const double q = std::real(codes.col(k).dot(c * codes.col(k))) / codes.col(k).squaredNorm();
        std::size_t best = 0;
        for (std::size_t g = 1; g < groups.size(); ++g)
            if (std::abs(groups[g].lambda - q) < std::abs(groups[best].lambda - q))
                best = g;
        groups[best].users.push_back(k);
    }
    return groups;
}

RVector augmented_spectrum(const RVector &a_sq, const RMatrix &stacked)
{
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(weighted_correlation(a_sq, stacked), Eigen::EigenvaluesOnly);
    return descending(solver);
}

template <typename Matrix>
std::pair<double, double> gram_extremes(const Matrix &codes)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(codes.adjoint() * codes, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues()[0], solver.eigenvalues()[solver.eigenvalues().size() - 1]};
}

double sum_of_squares(const RVector &v) { return v.squaredNorm(); }

} // namespace

std::string to_string(Detector detector) { return detector == Detector::Linear ? "linear" : "wl"; }

Detector parse_detector(const std::string &name)
{
    if (name == "linear")
        return Detector::Linear;
    if (name == "wl" || name == "widely-linear")
        return Detector::WidelyLinear;
    throw ValidationError("unknown detector '" + name + "' (expected linear or wl)");
}

template <typename Scalar>
MmseCodeIteration<Scalar>::MmseCodeIteration(RVector weights, Matrix codes, double noise_variance)
    : weights_(std::move(weights)), codes_(std::move(codes)), noise_variance_(noise_variance)
{
    require(codes_.rows() >= 1 && codes_.cols() >= 1, "code iteration: empty code matrix");
    require(weights_.size() == codes_.cols(), "code iteration: one weight per user is required");
    require(weights_.allFinite() && (weights_.array() > 0.0).all(), "code iteration: weights must be positive");
    require(std::isfinite(noise_variance_) && noise_variance_ > 0.0, "code iteration: noise variance must be positive");
    require(codes_.allFinite(), "code iteration: non-finite code entry");
    require_unit_columns(codes_, kColumnTolerance, "code iteration");
    rebuild();
}

template <typename Scalar>
void MmseCodeIteration<Scalar>::rebuild()
{
    cov_ = weighted_correlation(weights_, codes_);
    cov_.diagonal().array() += noise_variance_;
}

template <typename Scalar>
typename MmseCodeIteration<Scalar>::Vector MmseCodeIteration<Scalar>::step(int k)
{
    require(k >= 0 && k < users(), "code iteration: user index out of range");
    Eigen::LLT<Matrix> llt(cov_);
    if (llt.info() != Eigen::Success)
        throw NumericalError("code iteration: covariance lost positive definiteness");
    const Vector old = codes_.col(k);
    Vector y = llt.solve(old);
    const Vector fresh = y / y.norm();
    cov_.noalias() += weights_[k] * (fresh * fresh.adjoint() - old * old.adjoint());
    codes_.col(k) = fresh;
    return y;
}

template <typename Scalar>
void MmseCodeIteration<Scalar>::sweep()
{
    for (int k = 0; k < users(); ++k)
        step(k);
    // The rank-one bookkeeping drifts slowly; refresh once per sweep.
    rebuild();
}

template <typename Scalar>
void MmseCodeIteration<Scalar>::set_weights(RVector weights)
{
    require(weights.size() == codes_.cols(), "code iteration: one weight per user is required");
    require(weights.allFinite() && (weights.array() > 0.0).all(), "code iteration: weights must be positive");
    weights_ = std::move(weights);
    rebuild();
}

template <typename Scalar>
void MmseCodeIteration<Scalar>::set_codes(Matrix codes)
{
    require(codes.rows() == codes_.rows() && codes.cols() == codes_.cols(), "code iteration: code shape mismatch");
    require_unit_columns(codes, kColumnTolerance, "code iteration");
    codes_ = std::move(codes);
    rebuild();
}

template class MmseCodeIteration<double>;
template class MmseCodeIteration<Complex>;

WlCodeIteration make_wl_iteration(const Scenario &scenario, const SpreadingMatrix &codes)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            "make_wl_iteration: codes do not match the scenario");
    return WlCodeIteration(scenario.power_diagonal().a_sq, stacked_embedding(codes, scenario.phase()),
                           scenario.noise_variance());
}

LinearCodeIteration make_linear_iteration(const Scenario &scenario, const SpreadingMatrix &codes)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            "make_linear_iteration: codes do not match the scenario");
    return LinearCodeIteration(scenario.power_diagonal().d_sq, codes.matrix(), scenario.noise_variance());
}

std::pair<WlReceiver, AugmentedSignature> wl_code_iteration_step(WlCodeIteration &state, int k)
{
    const RVector y = state.step(k);
    WlReceiver rx{std::sqrt(state.weights()[k]) * augmented_from_stacked(y)};
    return {std::move(rx), AugmentedSignature(augmented_from_stacked(state.codes().col(k)))};
}

std::pair<LinearReceiver, CVector> linear_code_iteration_step(LinearCodeIteration &state, int k, double phase)
{
    const CVector y = state.step(k);
    LinearReceiver rx{std::sqrt(state.weights()[k]) * std::polar(1.0, phase) * y};
    return {std::move(rx), state.codes().col(k)};
}

void IterationSchedule::validate() const
{
    require(max_sweeps >= 1, "IterationSchedule: max_sweeps must be >= 1");
    require(tol > 0.0 && std::isfinite(tol), "IterationSchedule: tol must be positive");
    require(perturbation_eps >= 0.0 && perturbation_eps <= std::numbers::pi,
            "IterationSchedule: perturbation_eps must lie in [0, pi]");
}

FixedPointReport run_to_fixed_point(const Scenario &scenario, const SpreadingMatrix &codes0,
                                    const IterationSchedule &schedule, Detector detector)
{
    schedule.validate();
    require(codes0.users() == scenario.users() && codes0.chips() == scenario.chips(),
            "run_to_fixed_point: codes do not match the scenario");

    const PowerDiagonal pd = scenario.power_diagonal();
    const RVector &phase = scenario.phase();
    const bool wl = detector == Detector::WidelyLinear;
    const int n = scenario.chips();
    std::mt19937_64 rng(schedule.seed);

    // Both iterations are driven through the real stacked representation so
    // that the metric and the perturbation share one code path.
    WlCodeIteration wl_it = wl ? make_wl_iteration(scenario, codes0)
                               : WlCodeIteration(pd.a_sq, stacked_embedding(codes0, phase), scenario.noise_variance());
    LinearCodeIteration lin_it = make_linear_iteration(scenario, codes0);

    auto current_real = [&]() { return wl ? wl_it.codes() : realify(lin_it.codes()); };
    auto objective = [&]() { return wl ? wl_twsc(pd.a_sq, wl_it.codes()) : twsc(pd.d_sq, lin_it.codes()); };
    const double optimum = wl ? 0.25 * sum_of_squares(optimal_eigenvalue_profile(pd.a_sq, 2 * n))
                              : sum_of_squares(optimal_eigenvalue_profile(pd.d_sq, n));

    auto stacked_now = [&]() { return wl ? wl_it.codes() : stacked_embedding(SpreadingMatrix(lin_it.codes()), phase); };

    int sweeps = 0;
    int perturbations = 0;
    bool converged = false;
    std::vector<SweepRecord> trace;
    double obj = objective();

    for (sweeps = 1; sweeps <= schedule.max_sweeps; ++sweeps)
    {
        const RMatrix before = current_real();
        const double obj_before = obj;
        if (wl)
            wl_it.sweep();
        else
            lin_it.sweep();
        const RMatrix after = current_real();
        const double metric = metric_d_stacked(before, after);
        obj = objective();

        if (schedule.record_trace)
        {
            SweepRecord rec;
            rec.sweep = sweeps;
            rec.metric = metric;
            const RMatrix stacked = stacked_now();
            const CMatrix lin_codes = wl ? codes_from_stacked(stacked, phase).matrix() : lin_it.codes();
            rec.wl_twsc = wl_twsc(pd.a_sq, stacked);
            rec.twsc = twsc(pd.d_sq, lin_codes);
            const auto [lo, hi] = wl ? gram_extremes(stacked) : gram_extremes(lin_codes);
            rec.gram_min = lo;
            rec.gram_max = hi;
            rec.spectrum = augmented_spectrum(pd.a_sq, stacked);
            trace.push_back(std::move(rec));
        }

        const double gap = (obj - optimum) / optimum;
        const bool stalled = obj_before - obj <= 1e-12 * obj_before;
        if (metric < schedule.tol || stalled)
        {
            if (schedule.perturbation_eps > 0.0 && gap > 1e-6)
            {
                RMatrix shaken = current_real();
                perturb_columns(shaken, schedule.perturbation_eps, rng);
                if (wl)
                    wl_it.set_codes(shaken);
                else
                    lin_it.set_codes(complexify(shaken));
                obj = objective();
                ++perturbations;
                continue;
            }
            if (metric < schedule.tol)
            {
                converged = true;
                break;
            }
        }
    }
    sweeps = std::min(sweeps, schedule.max_sweeps);

    const RMatrix stacked = stacked_now();
    SpreadingMatrix final_codes = wl ? codes_from_stacked(stacked, phase) : SpreadingMatrix(lin_it.codes());
    const RVector eig = augmented_spectrum(pd.a_sq, stacked);
    const CapacityMetrics cm = capacity_metrics(eig.cwiseMax(0.0), scenario.noise_psd(), scenario.users());

    FixedPointReport report{
        .codes = final_codes,
        .eigenvalues = eig,
        .partition = wl ? eigen_partition(pd.a_sq, stacked) : eigen_partition(pd.d_sq, final_codes.matrix()),
        .wl_twsc = wl_twsc(pd.a_sq, stacked),
        .twsc = twsc(pd.d_sq, final_codes.matrix()),
        .tmmse = cm.tmmse,
        .c_sum = cm.c_sum,
        .sweeps_used = sweeps,
        .converged = converged,
        .perturbations = perturbations,
        .detector = detector,
        .trace = std::move(trace),
    };
    return report;
}

double wl_twsc(const RVector &a_sq, const RMatrix &stacked)
{
    require(a_sq.size() == stacked.cols(), "wl_twsc: weight vector size mismatch");
    const RMatrix g = stacked.transpose() * stacked;
    return 0.25 * a_sq.dot(g.cwiseAbs2() * a_sq);
}

double wl_twsc(const SpreadingMatrix &codes, const Scenario &scenario)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(), "wl_twsc: dimension mismatch");
    return wl_twsc(scenario.power_diagonal().a_sq, stacked_embedding(codes, scenario.phase()));
}

double twsc(const RVector &d_sq, const CMatrix &codes)
{
    require(d_sq.size() == codes.cols(), "twsc: weight vector size mismatch");
    const RMatrix g = (codes.adjoint() * codes).cwiseAbs2();
    return d_sq.dot(g * d_sq);
}

double twsc(const SpreadingMatrix &codes, const Scenario &scenario)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(), "twsc: dimension mismatch");
    return twsc(scenario.power_diagonal().d_sq, codes.matrix());
}

double metric_d_stacked(const RMatrix &first, const RMatrix &second)
{
    require(first.rows() == second.rows() && first.cols() == second.cols(), "metric_d: shape mismatch");
    require_unit_columns(first, kColumnTolerance, "metric_d");
    require_unit_columns(second, kColumnTolerance, "metric_d");
    double worst = 0.0;
    for (Eigen::Index k = 0; k < first.cols(); ++k)
    {
        const double chord = (first.col(k) - second.col(k)).norm();
        worst = std::max(worst, 2.0 * std::asin(std::min(1.0, 0.5 * chord)));
    }
    return worst;
}

double metric_d(const CMatrix &first, const CMatrix &second)
{
    require(first.rows() == second.rows() && first.cols() == second.cols(), "metric_d: shape mismatch");
    require(first.rows() % 2 == 0, "metric_d: augmented matrices need an even row count");
    const Eigen::Index n = first.rows() / 2;
    for (const CMatrix *m : {&first, &second})
    {
        const double mismatch = (m->bottomRows(n) - m->topRows(n).conjugate()).cwiseAbs().maxCoeff();
        require(mismatch <= 1e-10, "metric_d: a column lies outside V, so its inner products are not real");
    }
    RMatrix a(2 * n, first.cols()), b(2 * n, first.cols());
    a << std::numbers::sqrt2 * first.topRows(n).real(), std::numbers::sqrt2 * first.topRows(n).imag();
    b << std::numbers::sqrt2 * second.topRows(n).real(), std::numbers::sqrt2 * second.topRows(n).imag();
    return metric_d_stacked(a, b);
}

double metric_d(const AugmentedSet &first, const AugmentedSet &second)
{
    return metric_d(first.matrix(), second.matrix());
}

std::vector<int> detect_oversized(const RVector &power, int dimension)
{
    require(dimension >= 1, "detect_oversized: dimension must be >= 1");
    require(power.size() >= 1 && power.allFinite() && (power.array() > 0.0).all(),
            "detect_oversized: powers must be positive");
    std::vector<int> order(static_cast<std::size_t>(power.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return power[i] > power[j]; });
    const double floor = power.minCoeff();

    std::vector<int> oversized;
    for (int i : order)
    {
        const double p = power[i];
        if (p <= floor)
            break;
        double below = 0.0;
        int at_least = 0;
        for (Eigen::Index j = 0; j < power.size(); ++j)
        {
            if (power[j] < p)
                below += power[j];
            else
                ++at_least;
        }
        const int room = dimension - at_least;
        if (room <= 0 || !(p > below / room))
            break;
        oversized.push_back(i);
    }
    return oversized;
}

RVector optimal_eigenvalue_profile(const RVector &power, int dimension)
{
    require(dimension >= 1, "optimal_eigenvalue_profile: dimension must be >= 1");
    require(power.size() >= 1 && power.allFinite() && (power.array() > 0.0).all(),
            "optimal_eigenvalue_profile: powers must be positive");
    std::vector<double> sorted(power.data(), power.data() + power.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    RVector out = RVector::Zero(dimension);
    if (power.size() <= dimension)
    {
        for (std::size_t i = 0; i < sorted.size(); ++i)
            out[static_cast<Eigen::Index>(i)] = sorted[i];
        return out;
    }
    const std::vector<int> big = detect_oversized(power, dimension);
    const int q = static_cast<int>(big.size());
    double rest = power.sum();
    for (int i = 0; i < q; ++i)
    {
        out[i] = power[big[static_cast<std::size_t>(i)]];
        rest -= out[i];
    }
    out.tail(dimension - q).setConstant(rest / (dimension - q));
    return out;
}

CapacityMetrics capacity_metrics(const RVector &eigenvalues, double noise_psd, int users)
{
    require(noise_psd > 0.0 && std::isfinite(noise_psd), "capacity_metrics: noise_psd must be positive");
    require(users >= 0, "capacity_metrics: user count must be nonnegative");
    require(eigenvalues.allFinite(), "capacity_metrics: non-finite eigenvalue");
    require(eigenvalues.size() == 0 || eigenvalues.minCoeff() >= 0.0, "capacity_metrics: negative eigenvalue");
    const double sigma2 = 2.0 * noise_psd;
    CapacityMetrics m;
    m.tmmse = users;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    {
        const double l = eigenvalues[i];
        m.c_sum += std::log1p(l / sigma2);
        m.tmmse -= l / (l + sigma2);
        m.wl_twsc += 0.25 * l * l;
    }
    return m;
}

SumCapacity sum_capacity_comparison(const Scenario &scenario)
{
    const RVector a_sq = scenario.power_diagonal().a_sq;
    const double sigma2 = scenario.noise_variance();
    const int m = 2 * scenario.chips();
    auto log_det = [&](const RVector &eig) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < eig.size(); ++i)
            acc += std::log1p(eig[i] / sigma2);
        return acc;
    };
    // N-chip WL system and 2N-chip complex linear system share the feasible
    // eigenvalue set { lambda in R_+^{2N} : (lambda, 0) majorizes a^2 }; the
    // real 2N-chip system has the same set and carries a factor 1/2.
    SumCapacity out;
    out.widely_linear = log_det(optimal_eigenvalue_profile(a_sq, m));
    out.complex_2n = log_det(optimal_eigenvalue_profile(a_sq, m));
    out.real_2n = 0.5 * log_det(optimal_eigenvalue_profile(a_sq, m));
    return out;
}

SpreadingMatrix perturb_codes(const SpreadingMatrix &codes, double eps, std::uint64_t seed)
{
    require(eps >= 0.0 && eps <= std::numbers::pi, "perturb_codes: eps must lie in [0, pi]");
    if (eps == 0.0)
        return codes;
    RMatrix stacked = realify(codes.matrix());
    std::mt19937_64 rng(seed);
    perturb_columns(stacked, eps, rng);
    return SpreadingMatrix(complexify(stacked));
}

std::vector<EigenGroup> eigen_partition(const RVector &weights, const RMatrix &codes, double rel_gap)
{
    return partition_impl(weights, codes, rel_gap);
}

std::vector<EigenGroup> eigen_partition(const RVector &weights, const CMatrix &codes, double rel_gap)
{
    return partition_impl(weights, codes, rel_gap);
}

} // namespace wlcdma
