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

#ifndef WLCDMA_MONTE_CARLO_HPP
#define WLCDMA_MONTE_CARLO_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wlcdma
{

// Seed of trial `index` under `master`: a splitmix64 finalizer over both, so
// any subset of trials can be replayed on its own.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Raised when a trial throws; carries the trial index and seed for replay.
class TrialFailure : public std::runtime_error
{
public:
    TrialFailure(std::size_t index, std::uint64_t seed, const std::string &what);
    std::size_t index() const { return index_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::size_t index_;
    std::uint64_t seed_;
};

int resolve_workers(int requested);

// Runs task(trial_seed(master, i), i) for i in [0, trials) on `workers`
// threads. Results are stored by index, so the output does not depend on the
// worker count. The failure with the smallest index is rethrown.
template <typename Result, typename Task>
std::vector<Result> run_trials(std::size_t trials, std::uint64_t master_seed, int workers, Task &&task)
{
    std::vector<std::optional<Result>> slots(trials);
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::optional<std::size_t> failed_index;
    std::string failed_what;

    auto worker = [&]() {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= trials)
                return;
            try
            {
                slots[i].emplace(task(trial_seed(master_seed, i), i));
            }
            catch (const std::exception &e)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failed_index || i < *failed_index)
                {
                    failed_index = i;
                    failed_what = e.what();
                }
            }
        }
    };

    const int n = std::min<int>(resolve_workers(workers), static_cast<int>(std::max<std::size_t>(trials, 1)));
    if (n <= 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (failed_index)
        throw TrialFailure(*failed_index, trial_seed(master_seed, *failed_index), failed_what);

    std::vector<Result> out;
    out.reserve(trials);
    for (auto &s : slots)
        out.push_back(std::move(*s));
    return out;
}

struct MetricStats
{
    std::string name;
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
    double min = 0.0;
    double max = 0.0;
};

// Welford accumulation in index order.
class RunningStats
{
public:
    void add(double x);
    MetricStats finish(std::string name) const;
    std::size_t count() const { return n_; }
    double mean() const { return mean_; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
};

struct MonteCarloResult
{
    std::vector<MetricStats> stats;
    std::vector<std::vector<double>> trials; // kept only on request
};

// Runs a per-trial metric closure and aggregates every metric. Each row
// returned by the task must have one entry per metric name.
MonteCarloResult monte_carlo(const std::vector<std::string> &metrics,
                             const std::function<std::vector<double>(std::uint64_t seed)> &task, std::size_t trials,
                             std::uint64_t master_seed, int workers, bool keep_trials = false);

} // namespace wlcdma

#endif
