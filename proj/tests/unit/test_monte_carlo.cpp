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
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "wlcdma/common.hpp"
#include "wlcdma/monte_carlo.hpp"

using namespace wlcdma;

namespace
{

TEST(TrialSeed, DeterministicAndSpread)
{
    EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 100000; ++i)
        seen.insert(trial_seed(1, i));
    EXPECT_EQ(seen.size(), 100000u);
    EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
    EXPECT_NE(trial_seed(0, 1), trial_seed(1, 0));
}

TEST(RunTrials, IndependentOfWorkerCount)
{
    auto task = [](std::uint64_t seed, std::size_t i) { return static_cast<double>(seed % 1000) + 0.5 * i; };
    const auto one = run_trials<double>(257, 11, 1, task);
    const auto many = run_trials<double>(257, 11, 5, task);
    EXPECT_EQ(one, many);
    for (std::size_t i = 0; i < one.size(); ++i)
        EXPECT_EQ(one[i], static_cast<double>(trial_seed(11, i) % 1000) + 0.5 * i);
    EXPECT_TRUE(run_trials<int>(0, 1, 3, [](std::uint64_t, std::size_t) { return 1; }).empty());
}

TEST(RunTrials, ReportsLowestFailingTrial)
{
    auto task = [](std::uint64_t, std::size_t i) -> int {
        if (i == 13 || i == 40)
            throw std::runtime_error("boom");
        return 0;
    };
    for (int workers : {1, 4})
    {
        try
        {
            run_trials<int>(64, 5, workers, task);
            FAIL() << "expected TrialFailure";
        }
        catch (const TrialFailure &e)
        {
            EXPECT_EQ(e.index(), 13u);
            EXPECT_EQ(e.seed(), trial_seed(5, 13));
        }
    }
}

TEST(Workers, Resolve)
{
    EXPECT_EQ(resolve_workers(3), 3);
    EXPECT_GE(resolve_workers(0), 1);
}

TEST(Stats, MatchesTwoPass)
{
    RunningStats s;
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i)
    {
        const double x = std::sin(0.37 * i) * 1e3 + 1e6;
        xs.push_back(x);
        s.add(x);
    }
    double mean = 0.0;
    for (double x : xs)
        mean += x;
    mean /= xs.size();
    double var = 0.0;
    for (double x : xs)
        var += (x - mean) * (x - mean);
    var /= xs.size() - 1;
    const MetricStats m = s.finish("x");
    EXPECT_EQ(m.name, "x");
    EXPECT_EQ(m.count, 1000u);
    EXPECT_NEAR(m.mean, mean, 1e-9);
    EXPECT_NEAR(m.stddev, std::sqrt(var), 1e-9);
    EXPECT_EQ(m.min, *std::min_element(xs.begin(), xs.end()));
    EXPECT_EQ(m.max, *std::max_element(xs.begin(), xs.end()));

    RunningStats one;
    one.add(2.0);
    EXPECT_EQ(one.finish("y").stddev, 0.0);
}

TEST(MonteCarlo, BitIdenticalAcrossWorkers)
{
    auto task = [](std::uint64_t seed) {
        const double u = static_cast<double>(seed >> 11) * 0x1.0p-53;
        return std::vector<double>{u, u * u};
    };
    const MonteCarloResult a = monte_carlo({"u", "u2"}, task, 500, 3, 1, true);
    const MonteCarloResult b = monte_carlo({"u", "u2"}, task, 500, 3, 4, true);
    ASSERT_EQ(a.stats.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i)
    {
        EXPECT_EQ(a.stats[i].mean, b.stats[i].mean);
        EXPECT_EQ(a.stats[i].stddev, b.stats[i].stddev);
    }
    EXPECT_EQ(a.trials, b.trials);
    EXPECT_NEAR(a.stats[0].mean, 0.5, 0.05);
    EXPECT_THROW(monte_carlo({}, task, 5, 1, 1), ValidationError);
    EXPECT_THROW(monte_carlo({"u"}, task, 5, 1, 1), TrialFailure); // row size mismatch
}

} // namespace
