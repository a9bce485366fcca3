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


// wlcdma command line front end: runs the experiment drivers and writes CSV
// tables plus a metadata.json next to them.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlcdma/common.hpp"
#include "wlcdma/experiments.hpp"

namespace fs = std::filesystem;

namespace
{

struct RunOptions
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<int> workers;
    std::string out = ".";
};

void add_run_options(CLI::App *cmd, RunOptions &o)
{
    cmd->add_option("--config", o.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "master seed (u64)");
    cmd->add_option("--out", o.out, "output directory")->capture_default_str();
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials per load point")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "worker threads, 0 = hardware concurrency")
        ->check(CLI::NonNegativeNumber);
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

wlcdma::ExperimentConfig load_config(const RunOptions &o, const std::string &figure)
{
    wlcdma::ExperimentConfig c = o.config_path.empty()
                                     ? wlcdma::default_experiment_config(figure)
                                     : wlcdma::experiment_config_from_json(slurp(o.config_path), figure);
    if (o.seed)
        c.seed = *o.seed;
    if (o.trials)
        c.trials = *o.trials;
    if (o.workers)
        c.workers = *o.workers;
    c.validate();
    return c;
}

void emit(const RunOptions &o, const std::string &command, const wlcdma::ExperimentConfig &config,
          const std::vector<wlcdma::Dataset> &sets)
{
    const fs::path dir(o.out);
    fs::create_directories(dir);
    std::string files;
    for (const auto &d : sets)
    {
        const fs::path file = dir / (d.name + ".csv");
        d.table.write_file(file);
        files += (files.empty() ? "" : ",") + file.filename().string();
        std::cout << file.string() << '\n';
    }
    wlcdma::write_run_metadata(dir, command, config, {{"files", files}});
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"wlcdma: widely-linear CDMA code, power and large-system experiments"};
    app.require_subcommand(1);

    RunOptions fig_opts, code_opts, ee_opts, lsa_opts;
    std::string figure_id;

    auto *fig = app.add_subcommand("figure", "regenerate the data behind one figure (fig1 .. fig8)");
    fig->add_option("id", figure_id, "figure id")->required()->check(
        [](const std::string &id) { return wlcdma::is_figure_id(id) ? std::string() : "unknown figure id " + id; });
    add_run_options(fig, fig_opts);

    auto *code = app.add_subcommand("code-game", "code/receiver iteration to its fixed point, per load");
    add_run_options(code, code_opts);
    auto *ee = app.add_subcommand("ee-game", "energy-efficiency power games, Monte-Carlo over loads");
    add_run_options(ee, ee_opts);
    auto *lsa = app.add_subcommand("lsa", "large-system predictions versus the PR-WL game");
    add_run_options(lsa, lsa_opts);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*fig)
        {
            auto c = load_config(fig_opts, figure_id);
            emit(fig_opts, "figure " + figure_id, c, wlcdma::run_figure(figure_id, c));
        }
        else if (*code)
        {
            auto c = load_config(code_opts, "fig1");
            emit(code_opts, "code-game", c, wlcdma::run_code_game_experiment(c));
        }
        else if (*ee)
        {
            auto c = load_config(ee_opts, "fig4");
            emit(ee_opts, "ee-game", c, wlcdma::run_ee_game_experiment(c));
        }
        else if (*lsa)
        {
            auto c = load_config(lsa_opts, "fig8");
            emit(lsa_opts, "lsa", c, wlcdma::run_lsa_experiment(c));
        }
    }
    catch (const wlcdma::ValidationError &e)
    {
        std::cerr << "wlcdma: invalid input: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "wlcdma: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
