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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wlcdma/code_game.hpp"

using namespace wlcdma;

namespace
{

constexpr double kPi = 3.14159265358979323846;

// sum_ij w_i w_j |v_i^H v_j|^2 straight from the definition.
double weighted_correlation(const CMatrix &v, const RVector &w)
{
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.cols(); ++i)
        for (Eigen::Index j = 0; j < v.cols(); ++j)
            acc += w[i] * w[j] * std::norm(v.col(i).dot(v.col(j)));
    return acc;
}

// S_a A S_a^H from scratch.
CMatrix weighted_outer(const CMatrix &sa, const RVector &a2)
{
    return oracle::weighted_gram(sa, a2, 0.0);
}

double log_det_shift(const CMatrix &x, double shift)
{
    const RVector ev = Eigen::SelfAdjointEigenSolver<CMatrix>(x).eigenvalues();
    double acc = 0.0;
    for (double l : ev)
        acc += std::log(std::max(l, 0.0) + shift);
    return acc;
}

Scenario oversized_scenario(double noise_psd = 0.05)
{
    RVector a2 = RVector::Ones(12);
    a2[0] = 11.51;
    a2[1] = 7.94;
    return scenario_from_received_powers(5, a2, noise_psd, RVector::LinSpaced(12, 0.1, 5.9));
}

TEST(Detector, Names)
{
    EXPECT_EQ(parse_detector(to_string(Detector::Linear)), Detector::Linear);
    EXPECT_EQ(parse_detector(to_string(Detector::WidelyLinear)), Detector::WidelyLinear);
    EXPECT_THROW(parse_detector("nonlinear"), ValidationError);
}

TEST(Schedule, Validation)
{
    IterationSchedule s;
    EXPECT_NO_THROW(s.validate());
    s.tol = 0.0;
    EXPECT_THROW(s.validate(), ValidationError);
    s.tol = 1e-9;
    s.max_sweeps = 0;
    EXPECT_THROW(s.validate(), ValidationError);
    s.max_sweeps = 1;
    s.perturbation_eps = -1.0;
    EXPECT_THROW(s.validate(), ValidationError);
}

TEST(Twsc, Examples)
{
    const Scenario one = scenario_from_received_powers(2, RVector::Ones(1), 0.5, RVector::Zero(1));
    EXPECT_NEAR(wl_twsc(SpreadingMatrix(CMatrix::Identity(2, 1)), one), 0.25, 1e-15);
    const Scenario two = scenario_from_received_powers(2, RVector::Ones(2), 0.5, RVector::Zero(2));
    EXPECT_NEAR(wl_twsc(SpreadingMatrix(CMatrix::Identity(2, 2)), two), 0.5, 1e-15);
}

TEST(Twsc, MatchesDefinitionAndBound)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const int n = 2 + static_cast<int>(seed % 4), k_users = 1 + static_cast<int>(seed % 11);
        const Scenario s = fixture::random_scenario(n, k_users, seed);
        const SpreadingMatrix c = fixture::random_codes(n, k_users, seed + 50);
        const PowerDiagonal pd = s.power_diagonal();
        const CMatrix sa = oracle::augmented_set(c.matrix(), s.phase());
        const double ref_wl = 0.25 * weighted_correlation(sa, pd.a_sq);
        EXPECT_NEAR(wl_twsc(c, s), ref_wl, 1e-12 * ref_wl);
        EXPECT_NEAR(twsc(c, s), weighted_correlation(c.matrix(), pd.d_sq), 1e-12 * twsc(c, s));
        EXPECT_GE(wl_twsc(c, s), 0.25 * pd.a_sq.squaredNorm() * (1.0 - 1e-12));
    }
}

TEST(Step, SingleUserIsFixed)
{
    const Scenario s = fixture::random_scenario(4, 1, 3);
    const SpreadingMatrix c = fixture::random_codes(4, 1, 4);
    WlCodeIteration wl = make_wl_iteration(s, c);
    const RMatrix before = wl.codes();
    wl_code_iteration_step(wl, 0);
    EXPECT_LT((wl.codes() - before).norm(), 1e-12);
    LinearCodeIteration lin = make_linear_iteration(s, c);
    linear_code_iteration_step(lin, 0, s.phase()[0]);
    EXPECT_LT((lin.codes() - c.matrix()).norm(), 1e-12);
}

TEST(Step, OrthonormalSetIsFixed)
{
    // N = 3, K = 6: an orthonormal basis of the 6-dim real stacked space.
    const int n = 3;
    RMatrix basis = RMatrix::Identity(2 * n, 2 * n);
    const RVector a2 = RVector::LinSpaced(2 * n, 0.5, 2.0);
    WlCodeIteration wl(a2, basis, 0.1);
    wl.sweep();
    EXPECT_LT((wl.codes() - basis).norm(), 1e-10);
    // Linear, K = N orthonormal start.
    const CMatrix eye = CMatrix::Identity(n, n);
    LinearCodeIteration lin(RVector::LinSpaced(n, 0.5, 2.0), eye, 0.1);
    lin.sweep();
    EXPECT_LT((lin.codes() - eye).norm(), 1e-10);
}

TEST(Step, ReceiverIsMmseAndSignatureStaysInV)
{
    const Scenario s = fixture::random_scenario(4, 7, 5);
    const SpreadingMatrix c = fixture::random_codes(4, 7, 6);
    WlCodeIteration it = make_wl_iteration(s, c);
    const RVector a2 = s.power_diagonal().a_sq;
    for (int k = 0; k < 7; ++k)
    {
        const CMatrix sa = augment(codes_from_stacked(it.codes(), s.phase()), s.phase()).matrix();
        const CMatrix ma = oracle::weighted_gram(sa, a2, s.noise_variance());
        const CVector expect = std::sqrt(a2[k]) * ma.fullPivLu().solve(CVector(sa.col(k)));
        const auto [rx, sig] = wl_code_iteration_step(it, k);
        EXPECT_LT((rx.d_a - expect).norm(), 1e-10 * expect.norm());
        EXPECT_LT((sig.lower() - sig.upper().conjugate()).norm(), 1e-14);
        EXPECT_NEAR(sig.data().norm(), 1.0, 1e-14);
        EXPECT_LT((sig.data() - expect.normalized()).norm(), 1e-10);
    }
}

TEST(Step, LinearReceiverCarriesPhase)
{
    const Scenario s = fixture::random_scenario(3, 5, 7);
    const SpreadingMatrix c = fixture::random_codes(3, 5, 8);
    LinearCodeIteration it = make_linear_iteration(s, c);
    const CMatrix m = oracle::weighted_gram(c.matrix(), s.power_diagonal().d_sq, s.noise_variance());
    const CVector expect = std::sqrt(s.power_diagonal().d_sq[0]) * std::polar(1.0, s.phase()[0]) *
                           m.fullPivLu().solve(CVector(c.column(0)));
    const auto [rx, code] = linear_code_iteration_step(it, 0, s.phase()[0]);
    EXPECT_LT((rx.d - expect).norm(), 1e-10 * expect.norm());
    EXPECT_NEAR(code.norm(), 1.0, 1e-14);
}

TEST(Invariants, StepMonotonicity)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed)
    {
        const int n = 3, k_users = 4 + static_cast<int>(seed % 6);
        const Scenario s = fixture::random_scenario(n, k_users, seed + 200);
        const SpreadingMatrix c = fixture::random_codes(n, k_users, seed + 300);
        const PowerDiagonal pd = s.power_diagonal();
        WlCodeIteration wl = make_wl_iteration(s, c);
        LinearCodeIteration lin = make_linear_iteration(s, c);
        double w_prev = wl_twsc(pd.a_sq, wl.codes());
        double l_prev = twsc(pd.d_sq, lin.codes());
        for (int sweep = 0; sweep < 5; ++sweep)
            for (int k = 0; k < k_users; ++k)
            {
                wl.step(k);
                lin.step(k);
                const double w = wl_twsc(pd.a_sq, wl.codes());
                const double l = twsc(pd.d_sq, lin.codes());
                EXPECT_LE(w, w_prev * (1.0 + 1e-12));
                EXPECT_LE(l, l_prev * (1.0 + 1e-12));
                w_prev = w;
                l_prev = l;
            }
    }
}

TEST(Invariants, DeterminantLemma)
{
    // K > 2N keeps S_a A S_a^H nonsingular so x = 0 is meaningful.
    for (std::uint64_t seed = 0; seed < 30; ++seed)
    {
        const int n = 3, k_users = 7 + static_cast<int>(seed % 4);
        const Scenario s = fixture::random_scenario(n, k_users, seed + 400);
        const SpreadingMatrix c = fixture::random_codes(n, k_users, seed + 500);
        const RVector a2 = s.power_diagonal().a_sq;
        WlCodeIteration it = make_wl_iteration(s, c);
        for (int k = 0; k < k_users; ++k)
        {
            const CMatrix before = weighted_outer(augment(codes_from_stacked(it.codes(), s.phase()), s.phase()).matrix(), a2);
            it.step(k);
            const CMatrix after = weighted_outer(augment(codes_from_stacked(it.codes(), s.phase()), s.phase()).matrix(), a2);
            for (double x : {0.0, 0.1, 1.0, 10.0})
                EXPECT_GE(log_det_shift(after, x), log_det_shift(before, x) - 1e-9) << "x=" << x << " k=" << k;
        }
    }
}

TEST(Invariants, CorrelationInequality)
{
    // E[1/((Y+x)(Y+c)^2)] >= E[1/(Y+x)] E[1/(Y+c)^2] for any discrete Y >= 0.
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 2000; ++t)
    {
        const int m = 2 + t % 12;
        std::vector<double> y(m), w(m);
        double total = 0.0;
        for (int i = 0; i < m; ++i)
        {
            y[i] = 10.0 * u(rng) * u(rng);
            w[i] = u(rng);
            total += w[i];
        }
        const double x = (t % 4 == 0) ? 1e-3 : 5.0 * u(rng);
        const double c = 0.01 + u(rng);
        double lhs = 0.0, e1 = 0.0, e2 = 0.0;
        for (int i = 0; i < m; ++i)
        {
            const double p = w[i] / total;
            lhs += p / ((y[i] + x) * (y[i] + c) * (y[i] + c));
            e1 += p / (y[i] + x);
            e2 += p / ((y[i] + c) * (y[i] + c));
        }
        EXPECT_GE(lhs, e1 * e2 * (1.0 - 1e-12));
    }
}

TEST(Metric, Properties)
{
    const int n = 4, k_users = 3;
    const RVector phi = RVector::LinSpaced(k_users, 0.2, 1.4);
    const AugmentedSet a = augment(fixture::random_codes(n, k_users, 1), phi);
    const AugmentedSet b = augment(fixture::random_codes(n, k_users, 2), phi);
    const AugmentedSet c = augment(fixture::random_codes(n, k_users, 3), phi);
    EXPECT_NEAR(metric_d(a, a), 0.0, 1e-15);
    EXPECT_NEAR(metric_d(a, b), metric_d(b, a), 1e-15);
    EXPECT_GT(metric_d(a, b), 0.0);

    std::mt19937_64 rng(5);
    for (std::uint64_t t = 0; t < 500; ++t)
    {
        const AugmentedSet x = augment(fixture::random_codes(n, k_users, 10 * t + 1), phi);
        const AugmentedSet y = augment(fixture::random_codes(n, k_users, 10 * t + 2), phi);
        const AugmentedSet z = augment(fixture::random_codes(n, k_users, 10 * t + 3), phi);
        EXPECT_LE(metric_d(x, z), metric_d(x, y) + metric_d(y, z) + 1e-12);
        const double d = metric_d(x, y);
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, kPi);
    }

    // Orthogonal pair.
    CMatrix e(2, 1), f(2, 1);
    e << Complex(1.0 / std::sqrt(2.0), 0), Complex(1.0 / std::sqrt(2.0), 0);
    f << Complex(0, 1.0 / std::sqrt(2.0)), Complex(0, -1.0 / std::sqrt(2.0));
    EXPECT_NEAR(metric_d(AugmentedSet(e), AugmentedSet(f)), kPi / 2.0, 1e-15);

    // Inputs outside V are rejected.
    CMatrix bad = e;
    bad(1, 0) = Complex(0, 1.0 / std::sqrt(2.0));
    EXPECT_THROW(metric_d(bad, e), ValidationError);
}

TEST(Oversized, TwoDominantUsers)
{
    const RVector a2 = oversized_scenario().power_diagonal().a_sq;
    EXPECT_EQ(detect_oversized(a2, 5), (std::vector<int>{0, 1}));
    EXPECT_EQ(detect_oversized(a2, 10), (std::vector<int>{0, 1}));
    EXPECT_TRUE(detect_oversized(RVector::Ones(9), 4).empty());
}

TEST(Oversized, SetSmallerThanDimension)
{
    RVector p(5);
    p << 100.0, 50.0, 20.0, 10.0, 1.0;
    EXPECT_LT(static_cast<int>(detect_oversized(p, 3).size()), 3);
    // K <= m can still flag users whose power dwarfs the rest
    const std::vector<int> big = detect_oversized(p, 6);
    EXPECT_LT(static_cast<int>(big.size()), 5);
    EXPECT_TRUE(detect_oversized(RVector::Ones(5), 6).empty());
}

TEST(Oversized, InclusionLinearInWl)
{
    std::mt19937_64 rng(99);
    std::exponential_distribution<double> ex(1.0);
    for (int t = 0; t < 10000; ++t)
    {
        const int n = 2 + t % 6, k_users = 2 * n + 1 + t % 9;
        RVector p(k_users);
        for (auto &x : p)
            x = std::pow(ex(rng), 3.0) + 1e-6;
        const std::vector<int> lin = detect_oversized(p, n), wl = detect_oversized(p, 2 * n);
        for (int k : lin)
            EXPECT_NE(std::find(wl.begin(), wl.end(), k), wl.end()) << "draw " << t;
    }
}

TEST(Profile, Examples)
{
    const RVector a2 = oversized_scenario().power_diagonal().a_sq;
    RVector expect = RVector::Constant(10, 1.25);
    expect[0] = 11.51;
    expect[1] = 7.94;
    EXPECT_LT((optimal_eigenvalue_profile(a2, 10) - expect).cwiseAbs().maxCoeff(), 1e-12);

    EXPECT_LT((optimal_eigenvalue_profile(RVector::Ones(8), 4) - RVector::Constant(4, 2.0)).norm(), 1e-14);

    RVector few(3);
    few << 0.5, 2.0, 1.0;
    RVector padded(5);
    padded << 2.0, 1.0, 0.5, 0.0, 0.0;
    EXPECT_LT((optimal_eigenvalue_profile(few, 5) - padded).norm(), 1e-15);
}

TEST(Profile, MajorizedByAnySignatureSet)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        const int n = 2 + static_cast<int>(seed % 3), k_users = 3 + static_cast<int>(seed % 9);
        const Scenario s = fixture::random_scenario(n, k_users, seed + 700);
        const SpreadingMatrix c = fixture::random_codes(n, k_users, seed + 800);
        const RVector a2 = s.power_diagonal().a_sq;
        const RVector prof = optimal_eigenvalue_profile(a2, 2 * n);
        EXPECT_NEAR(prof.sum(), a2.sum(), 1e-12 * a2.sum());
        RVector ev = Eigen::SelfAdjointEigenSolver<CMatrix>(weighted_outer(augment(c, s.phase()).matrix(), a2))
                         .eigenvalues()
                         .reverse();
        double ps = 0.0, pe = 0.0;
        for (int i = 0; i < 2 * n; ++i)
        {
            ps += prof[i];
            pe += ev[i];
            EXPECT_GE(pe, ps - 1e-10);
        }
    }
}

TEST(Capacity, Examples)
{
    const CapacityMetrics m = capacity_metrics(RVector::Ones(2), 0.5, 2);
    EXPECT_NEAR(m.c_sum, 2.0 * std::log(2.0), 1e-15);
    EXPECT_NEAR(m.tmmse, 1.0, 1e-15);
    EXPECT_NEAR(m.wl_twsc, 0.5, 1e-15);
    const CapacityMetrics z = capacity_metrics(RVector::Zero(4), 0.5, 3);
    EXPECT_EQ(z.c_sum, 0.0);
    EXPECT_NEAR(z.tmmse, 3.0, 1e-15);
    EXPECT_THROW(capacity_metrics(RVector::Constant(2, -1.0), 0.5, 2), ValidationError);
}

TEST(Capacity, SumCapacityOrthonormalCase)
{
    const double n0 = 0.3;
    const Scenario s = scenario_from_received_powers(4, RVector::Ones(6), n0, RVector::Zero(6));
    const SumCapacity c = sum_capacity_comparison(s);
    const double expect = 6.0 * std::log(1.0 + 1.0 / (2.0 * n0));
    EXPECT_NEAR(c.widely_linear, expect, 1e-12);
    EXPECT_NEAR(c.complex_2n, expect, 1e-12);
    EXPECT_NEAR(c.real_2n, expect / 2.0, 1e-12);
}

TEST(FixedPoint, OrthonormalWhenKAtMostTwoN)
{
    const Scenario s = fixture::random_scenario(4, 8, 31);
    const SpreadingMatrix c0 = generate_codes(4, 8, CodeKind::Binary, 32);
    IterationSchedule sched;
    sched.record_trace = true;
    const FixedPointReport r = run_to_fixed_point(s, c0, sched, Detector::WidelyLinear);
    ASSERT_TRUE(r.converged);
    const CMatrix sa = augment(r.codes, s.phase()).matrix();
    EXPECT_LT((sa.adjoint() * sa - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_NEAR(r.wl_twsc, 0.25 * s.power_diagonal().a_sq.squaredNorm(), 1e-8);
    EXPECT_EQ(r.eigenvalues.size(), 8);
    for (std::size_t i = 1; i < r.trace.size(); ++i)
        if (r.perturbations == 0)
        {
            EXPECT_LE(r.trace[i].wl_twsc, r.trace[i - 1].wl_twsc * (1.0 + 1e-12));
        }
}

TEST(FixedPoint, TheoremOneStructure)
{
    for (std::uint64_t seed = 0; seed < 8; ++seed)
    {
        const int n = 2 + static_cast<int>(seed % 3), k_users = 2 * n + 2 + static_cast<int>(seed % 4);
        const Scenario s = fixture::random_scenario(n, k_users, seed + 900);
        const SpreadingMatrix c0 = fixture::random_codes(n, k_users, seed + 950);
        const FixedPointReport r = run_to_fixed_point(s, c0, {}, Detector::WidelyLinear);
        ASSERT_TRUE(r.converged) << "seed " << seed;
        const RVector a2 = s.power_diagonal().a_sq;
        const CMatrix sa = augment(r.codes, s.phase()).matrix();
        const CMatrix ma = oracle::weighted_gram(sa, a2, s.noise_variance());

        // Eigenvector residual.
        for (int k = 0; k < k_users; ++k)
        {
            const CVector v = sa.col(k);
            const Complex q = v.dot(ma * v);
            EXPECT_LT((ma * v - q * v).norm(), 1e-6);
        }

        double trace = 0.0;
        for (const EigenGroup &g : r.partition)
        {
            double sum = 0.0;
            for (int k : g.users)
                sum += a2[k];
            EXPECT_NEAR(g.lambda, sum / g.multiplicity, 1e-6 * g.lambda);
            trace += g.lambda * g.multiplicity;
        }
        EXPECT_NEAR(trace, a2.sum(), 1e-8 * a2.sum());

        // Cross-group orthogonality and ordering of powers between groups.
        for (std::size_t g1 = 0; g1 < r.partition.size(); ++g1)
            for (std::size_t g2 = 0; g2 < r.partition.size(); ++g2)
            {
                if (g1 == g2)
                    continue;
                for (int k1 : r.partition[g1].users)
                    for (int k2 : r.partition[g2].users)
                    {
                        EXPECT_LT(std::abs(sa.col(k1).dot(sa.col(k2))), 1e-6);
                        if (r.partition[g1].lambda > r.partition[g2].lambda)
                        {
                            EXPECT_GE(a2[k1], a2[k2] - 1e-12);
                        }
                    }
            }
        // |J| <= |I| away from the smallest eigenvalue.
        const double lmin = r.partition.back().lambda;
        for (const EigenGroup &g : r.partition)
            if (g.lambda > lmin)
            {
                EXPECT_LE(static_cast<int>(g.users.size()), g.multiplicity);
            }
    }
}

TEST(FixedPoint, OversizedEigenvaluesAndLogDet)
{
    const Scenario s = oversized_scenario();
    const FixedPointReport r =
        run_to_fixed_point(s, generate_codes(5, 12, CodeKind::Binary, 3), {}, Detector::WidelyLinear);
    ASSERT_TRUE(r.converged);
    RVector expect = RVector::Constant(10, 1.25);
    expect[0] = 11.51;
    expect[1] = 7.94;
    EXPECT_LT((r.eigenvalues - expect).cwiseAbs().maxCoeff(), 1e-3);
    const CMatrix sa = oracle::augmented_set(r.codes.matrix(), s.phase());
    const double ref = oracle::log_det_identity_plus(weighted_outer(sa, s.power_diagonal().a_sq), s.noise_variance());
    EXPECT_NEAR(r.c_sum, ref, 1e-8);
    const CapacityMetrics prof = capacity_metrics(expect, s.noise_psd(), 12);
    EXPECT_NEAR(prof.c_sum, ref, 1e-8);
}

TEST(Perturb, BoundsAndIdentity)
{
    const SpreadingMatrix c = fixture::random_codes(5, 6, 1);
    EXPECT_EQ(perturb_codes(c, 0.0, 3).matrix(), c.matrix());
    const RVector phi = RVector::Zero(6);
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        const double eps = 1e-3 * (1 + seed % 7);
        const SpreadingMatrix p = perturb_codes(c, eps, seed);
        EXPECT_LE(metric_d(augment(c, phi), augment(p, phi)), eps + 1e-12);
        for (int k = 0; k < 6; ++k)
            EXPECT_NEAR(p.column(k).norm(), 1.0, 1e-13);
    }
}

TEST(Perturb, EscapesSuboptimalFixedPoint)
{
    // Two equal-power users stacked on one real dimension, the other dimension
    // of the N = 1 augmented space left empty.
    const Scenario s = scenario_from_received_powers(1, RVector::Ones(2), 0.05, RVector::Zero(2));
    const SpreadingMatrix stuck(CMatrix::Ones(1, 2));
    IterationSchedule plain;
    plain.perturbation_eps = 0.0;
    const FixedPointReport r0 = run_to_fixed_point(s, stuck, plain, Detector::WidelyLinear);
    EXPECT_NEAR(r0.wl_twsc, 1.0, 1e-12);

    IterationSchedule noisy;
    noisy.seed = 4;
    const FixedPointReport r1 = run_to_fixed_point(s, stuck, noisy, Detector::WidelyLinear);
    EXPECT_TRUE(r1.converged);
    EXPECT_GE(r1.perturbations, 1);
    EXPECT_NEAR(r1.wl_twsc, 0.5, 1e-8);
}

TEST(Partition, GroupsEqualEigenvalues)
{
    // Orthonormal columns: one group per distinct weight.
    RVector w(4);
    w << 2.0, 1.0, 2.0, 0.5;
    const std::vector<EigenGroup> g = eigen_partition(w, RMatrix(RMatrix::Identity(4, 4)));
    ASSERT_EQ(g.size(), 3u);
    EXPECT_NEAR(g[0].lambda, 2.0, 1e-14);
    EXPECT_EQ(g[0].users, (std::vector<int>{0, 2}));
    EXPECT_EQ(g[0].multiplicity, 2);
}

} // namespace
