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

#include "wlcdma/monte_carlo.hpp"

#include "wlcdma/common.hpp"

#include <algorithm>
#include <cmath>

namespace wlcdma
{

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(master) ^ index);
}

TrialFailure::TrialFailure(std::size_t index, std::uint64_t seed, const std::string &what)
    : std::runtime_error("trial " + std::to_string(index) + " (seed " + std::to_string(seed) + ") failed: " + what),
      index_(index), seed_(seed)
{
}

int resolve_workers(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void RunningStats::add(double x)
{
    ++n_;
    if (n_ == 1)
    {
        min_ = max_ = x;
    }
    else
    {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
}

MetricStats RunningStats::finish(std::string name) const
{
    MetricStats s;
    s.name = std::move(name);
    s.count = n_;
    s.mean = mean_;
    s.stddev = n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1)) : 0.0;
    s.min = min_;
    s.max = max_;
    return s;
}

MonteCarloResult monte_carlo(const std::vector<std::string> &metrics,
                             const std::function<std::vector<double>(std::uint64_t seed)> &task, std::size_t trials,
                             std::uint64_t master_seed, int workers, bool keep_trials)
{
    require(!metrics.empty(), "monte_carlo: at least one metric is required");
    require(trials >= 1, "monte_carlo: trials must be >= 1");
    auto rows = run_trials<std::vector<double>>(trials, master_seed, workers,
                                                [&](std::uint64_t seed, std::size_t) { return task(seed); });
    std::vector<RunningStats> acc(metrics.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].size() != metrics.size())
            throw TrialFailure(i, trial_seed(master_seed, i), "metric row has the wrong length");
        for (std::size_t m = 0; m < metrics.size(); ++m)
            acc[m].add(rows[i][m]);
    }
    MonteCarloResult out;
    for (std::size_t m = 0; m < metrics.size(); ++m)
        out.stats.push_back(acc[m].finish(metrics[m]));
    if (keep_trials)
        out.trials = std::move(rows);
    return out;
}

} // namespace wlcdma
