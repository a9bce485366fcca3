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


#include <benchmark/benchmark.h>

#include "wlcdma/code_game.hpp"
#include "wlcdma/experiments.hpp"
#include "wlcdma/lsa.hpp"
#include "wlcdma/power_game.hpp"
#include "wlcdma/receivers.hpp"

using namespace wlcdma;

namespace
{

Scenario fig4_scenario(int users, std::uint64_t seed)
{
    ScenarioConfig sc;
    sc.users = users;
    return generate_scenario(sc, seed);
}

void BM_WlCodeSweep(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    const Scenario s = code_figure_scenario(n, k, 0.0, 0.05, 1);
    WlCodeIteration it = make_wl_iteration(s, generate_codes(n, k, CodeKind::Binary, 2));
    for (auto _ : state)
    {
        it.sweep();
        benchmark::DoNotOptimize(it.codes().data());
    }
}
BENCHMARK(BM_WlCodeSweep)->Args({11, 22})->Args({15, 20})->Args({64, 128});

void BM_LinearCodeSweep(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    const Scenario s = code_figure_scenario(n, k, 0.0, 0.05, 1);
    LinearCodeIteration it = make_linear_iteration(s, generate_codes(n, k, CodeKind::Binary, 2));
    for (auto _ : state)
    {
        it.sweep();
        benchmark::DoNotOptimize(it.codes().data());
    }
}
BENCHMARK(BM_LinearCodeSweep)->Args({11, 22})->Args({15, 20})->Args({64, 128});

void BM_MmseSinrAllWl(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    const Scenario s = fig4_scenario(k, 3);
    const RMatrix stacked = stacked_embedding(generate_codes(n, k, CodeKind::Binary, 4), s.phase());
    const RVector a2 = s.power_diagonal().a_sq;
    for (auto _ : state)
        benchmark::DoNotOptimize(mmse_sinr_all_wl(a2, stacked, s.noise_variance()));
}
BENCHMARK(BM_MmseSinrAllWl)->Args({11, 22})->Args({64, 128});

void BM_EeGame(benchmark::State &state)
{
    const auto variant = static_cast<GameVariant>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const Scenario s = fig4_scenario(k, 5);
    const SpreadingMatrix c0 = generate_codes(11, k, CodeKind::Binary, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ee_game(s, c0, variant, {}).iterations);
    state.SetLabel(to_string(variant));
}
BENCHMARK(BM_EeGame)
    ->Args({static_cast<int>(GameVariant::PLinear), 10})
    ->Args({static_cast<int>(GameVariant::PRWl), 10})
    ->Args({static_cast<int>(GameVariant::PRCWl), 10})
    ->Args({static_cast<int>(GameVariant::PRCWl), 22})
    ->Unit(benchmark::kMillisecond);

void BM_LsaImproved(benchmark::State &state)
{
    const int k = static_cast<int>(state.range(0));
    ScenarioConfig sc = default_experiment_config("fig8").scenario;
    sc.users = k;
    const LsaInput in = LsaInput::from_scenario(generate_scenario(sc, 7), solve_target_sinr(120).gamma_bar);
    for (auto _ : state)
        benchmark::DoNotOptimize(lsa_power_improved(in).power.data());
}
BENCHMARK(BM_LsaImproved)->Arg(32)->Arg(128);

void BM_LsaTrial(benchmark::State &state)
{
    const ExperimentConfig cfg = default_experiment_config("fig8");
    const int k = static_cast<int>(state.range(0));
    std::size_t t = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(lsa_trial(cfg, k, grid_seed(cfg.seed, k, t++)).error_improved);
}
BENCHMARK(BM_LsaTrial)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
