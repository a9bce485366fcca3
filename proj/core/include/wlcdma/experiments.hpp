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

#ifndef WLCDMA_EXPERIMENTS_HPP
#define WLCDMA_EXPERIMENTS_HPP

#include "wlcdma/code_game.hpp"
#include "wlcdma/lsa.hpp"
#include "wlcdma/power_game.hpp"
#include "wlcdma/signal_model.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wlcdma
{

class CsvTable
{
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    const std::vector<std::string> &header() const { return header_; }
    const std::vector<std::vector<std::string>> &rows() const { return rows_; }

    void write(std::ostream &os) const;
    void write_file(const std::filesystem::path &path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// Shortest round-trip decimal form.
std::string csv_number(double value);
std::string csv_number(long long value);

struct Dataset
{
    std::string name; // file stem
    CsvTable table;
};

struct ExperimentConfig
{
    std::string figure = "custom"; // fig1 .. fig8 or custom
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    ScenarioConfig scenario;
    std::vector<int> users{10};
    std::vector<GameVariant> variants{kAllGameVariants.begin(), kAllGameVariants.end()};
    UtilityConfig utility;
    IterationSchedule iteration;
    GameSchedule game;
    // Noise level of the code-iteration figures, whose powers are O(1).
    double code_noise_psd = 0.05;

    void validate() const;
};

bool is_figure_id(const std::string &id);
ExperimentConfig default_experiment_config(const std::string &figure);
// Keys that are absent keep the defaults of the named figure ("figure" key,
// else fallback_figure).
ExperimentConfig experiment_config_from_json(const std::string &text, const std::string &fallback_figure = "custom");
std::string experiment_config_to_json(const ExperimentConfig &config);

// FNV-1a 64 of the canonical JSON form.
std::uint64_t config_hash(const ExperimentConfig &config);

// metadata.json with the command, seed, config hash and the config itself.
void write_run_metadata(const std::filesystem::path &dir, const std::string &command, const ExperimentConfig &config,
                        const std::map<std::string, std::string> &extra = {});

// Random received powers a_k^2 drawn uniformly in [0.5, 1.5] and rescaled so
// that sum a_k^4 equals trace_a2 (no rescaling when trace_a2 <= 0).
Scenario code_figure_scenario(int chips, int users, double trace_a2, double noise_psd, std::uint64_t seed);

// Received powers of the oversized-user example: 11.51, 7.94 and ten users at 1.
RVector oversized_example_powers();

struct VariantMetrics
{
    double mean_utility = 0.0;
    double mean_power = 0.0;
    double mean_sinr = 0.0;
    double fraction_at_max = 0.0;
    double iterations = 0.0;
    double converged = 0.0;
};

// One Monte-Carlo realization of the energy-efficiency games: one scenario and
// one binary start shared by every variant in config.variants.
std::vector<VariantMetrics> game_trial(const ExperimentConfig &config, int users, std::uint64_t seed);

struct LsaTrialMetrics
{
    double error_plain = 0.0;    // sum_k |v_k - u_k| / sum_k u_k
    double error_improved = 0.0;
    double n_max_hat = 0.0;
    double actual_at_max = 0.0;
    double converged = 0.0;
};

// PR-WL game versus both large-system predictors on one realization.
LsaTrialMetrics lsa_trial(const ExperimentConfig &config, int users, std::uint64_t seed);

// Seed of trial t at load K: independent of the rest of the K grid.
std::uint64_t grid_seed(std::uint64_t master, int users, std::size_t trial);

std::vector<Dataset> run_figure(const std::string &figure, const ExperimentConfig &config);
std::vector<Dataset> run_code_game_experiment(const ExperimentConfig &config);
std::vector<Dataset> run_ee_game_experiment(const ExperimentConfig &config);
std::vector<Dataset> run_lsa_experiment(const ExperimentConfig &config);

} // namespace wlcdma

#endif
