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

#include "wlcdma/experiments.hpp"

#include "json_io.hpp"
#include "wlcdma/monte_carlo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace wlcdma
{

using nlohmann::json;

// ---------------------------------------------------------------- CSV

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header))
{
    require(!header_.empty(), "CsvTable: header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> row)
{
    require(row.size() == header_.size(), "CsvTable: row has " + std::to_string(row.size()) + " fields, header has " +
                                              std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

namespace
{

void write_field(std::ostream &os, const std::string &field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
    {
        os << field;
        return;
    }
    os << '"';
    for (char c : field)
    {
        if (c == '"')
            os << '"';
        os << c;
    }
    os << '"';
}

void write_line(std::ostream &os, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i)
            os << ',';
        write_field(os, fields[i]);
    }
    os << '\n';
}

} // namespace

void CsvTable::write(std::ostream &os) const
{
    write_line(os, header_);
    for (const auto &r : rows_)
        write_line(os, r);
}

void CsvTable::write_file(const std::filesystem::path &path) const
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    write(os);
    if (!os)
        throw std::runtime_error("failed writing " + path.string());
}

std::string csv_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string csv_number(long long value) { return std::to_string(value); }

// ---------------------------------------------------------------- config

namespace
{

const std::vector<std::string> kFigures = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "custom"};

std::vector<int> range(int lo, int hi)
{
    std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

json config_json(const ExperimentConfig &c, bool with_workers)
{
    std::vector<std::string> variants;
    for (GameVariant v : c.variants)
        variants.push_back(to_string(v));
    json j = {
        {"figure", c.figure},
        {"trials", c.trials},
        {"seed", c.seed},
        {"scenario", detail::scenario_config_json(c.scenario)},
        {"users", c.users},
        {"variants", variants},
        {"utility", {{"M", c.utility.packet_length}, {"L", c.utility.info_symbols}, {"R", c.utility.rate}}},
        {"iteration",
         {{"max_sweeps", c.iteration.max_sweeps},
          {"tol", c.iteration.tol},
          {"perturbation_eps", c.iteration.perturbation_eps}}},
        {"game", {{"max_rounds", c.game.max_rounds}, {"power_tol", c.game.power_tol}, {"code_tol", c.game.code_tol},
                  {"code_sweeps", c.game.code_sweeps}}},
        {"code_noise_psd", c.code_noise_psd},
    };
    if (with_workers)
        j["workers"] = c.workers;
    return j;
}

} // namespace

bool is_figure_id(const std::string &id) { return std::find(kFigures.begin(), kFigures.end(), id) != kFigures.end(); }

void ExperimentConfig::validate() const
{
    require(is_figure_id(figure), "ExperimentConfig: unknown figure id '" + figure + "' (expected fig1..fig8 or custom)");
    require(trials >= 1, "ExperimentConfig: trials must be >= 1");
    require(workers >= 0, "ExperimentConfig: workers must be >= 0 (0 picks the hardware concurrency)");
    require(!users.empty(), "ExperimentConfig: the user-count list is empty");
    for (int k : users)
        require(k >= 1, "ExperimentConfig: user counts must be >= 1");
    require(!variants.empty(), "ExperimentConfig: the variant list is empty");
    require(code_noise_psd > 0.0 && std::isfinite(code_noise_psd), "ExperimentConfig: code_noise_psd must be positive");
    scenario.validate();
    utility.validate();
    iteration.validate();
    game.validate();
}

ExperimentConfig default_experiment_config(const std::string &figure)
{
    require(is_figure_id(figure), "unknown figure id '" + figure + "' (expected fig1..fig8 or custom)");
    ExperimentConfig c;
    c.figure = figure;
    if (figure == "fig1" || figure == "fig2")
    {
        c.scenario.chips = 15;
        c.users = {10, 20};
        c.trials = 1;
        c.iteration.record_trace = true;
    }
    else if (figure == "fig3")
    {
        c.scenario.chips = 5;
        c.users = {12};
        c.trials = 1;
        c.iteration.record_trace = true;
    }
    else if (figure == "fig8")
    {
        c.scenario.chips = 64;
        c.scenario.path_loss_exponent = 3.0;
        c.users = {32, 64, 96, 128};
        c.trials = 200;
        c.variants = {GameVariant::PRWl};
    }
    else
    {
        c.scenario.chips = 11;
        c.users = range(2, 22);
    }
    return c;
}

ExperimentConfig experiment_config_from_json(const std::string &text, const std::string &fallback_figure)
{
    try
    {
        const json j = json::parse(text);
        ExperimentConfig c = default_experiment_config(j.value("figure", fallback_figure));
        c.trials = j.value("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        c.workers = j.value("workers", c.workers);
        if (j.contains("scenario"))
            c.scenario = detail::scenario_config_from(j.at("scenario"), c.scenario);
        if (j.contains("users"))
            c.users = j.at("users").get<std::vector<int>>();
        if (j.contains("variants"))
        {
            c.variants.clear();
            for (const auto &v : j.at("variants"))
                c.variants.push_back(parse_game_variant(v.get<std::string>()));
        }
        if (j.contains("utility"))
        {
            const json &u = j.at("utility");
            c.utility.packet_length = u.value("M", c.utility.packet_length);
            c.utility.info_symbols = u.value("L", c.utility.info_symbols);
            c.utility.rate = u.value("R", c.utility.rate);
        }
        if (j.contains("iteration"))
        {
            const json &it = j.at("iteration");
            c.iteration.max_sweeps = it.value("max_sweeps", c.iteration.max_sweeps);
            c.iteration.tol = it.value("tol", c.iteration.tol);
            c.iteration.perturbation_eps = it.value("perturbation_eps", c.iteration.perturbation_eps);
        }
        if (j.contains("game"))
        {
            const json &g = j.at("game");
            c.game.max_rounds = g.value("max_rounds", c.game.max_rounds);
            c.game.power_tol = g.value("power_tol", c.game.power_tol);
            c.game.code_tol = g.value("code_tol", c.game.code_tol);
            c.game.code_sweeps = g.value("code_sweeps", c.game.code_sweeps);
        }
        c.code_noise_psd = j.value("code_noise_psd", c.code_noise_psd);
        c.validate();
        return c;
    }
    catch (const json::exception &e)
    {
        throw ValidationError(std::string("experiment config: ") + e.what());
    }
}

std::string experiment_config_to_json(const ExperimentConfig &config) { return config_json(config, true).dump(2); }

std::uint64_t config_hash(const ExperimentConfig &config)
{
    const std::string text = config_json(config, false).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_run_metadata(const std::filesystem::path &dir, const std::string &command, const ExperimentConfig &config,
                        const std::map<std::string, std::string> &extra)
{
    std::ostringstream hash;
    hash << std::hex;
    hash.width(16);
    hash.fill('0');
    hash << config_hash(config);
    json j = {
        {"command", command},
        {"seed", config.seed},
        {"config_hash", hash.str()},
        {"config", config_json(config, true)},
    };
    for (const auto &[k, v] : extra)
        j[k] = v;
    std::ofstream os(dir / "metadata.json");
    if (!os)
        throw std::runtime_error("cannot write metadata to " + (dir / "metadata.json").string());
    os << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- scenarios

Scenario code_figure_scenario(int chips, int users, double trace_a2, double noise_psd, std::uint64_t seed)
{
    require(users >= 1 && chips >= 1, "code_figure_scenario: N and K must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> power(0.5, 1.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    RVector a_sq(users), phase(users);
    for (int k = 0; k < users; ++k)
        a_sq[k] = power(rng);
    for (int k = 0; k < users; ++k)
        phase[k] = angle(rng);
    if (trace_a2 > 0.0)
        a_sq *= std::sqrt(trace_a2 / a_sq.squaredNorm());
    return scenario_from_received_powers(chips, a_sq, noise_psd, phase);
}

RVector oversized_example_powers()
{
    RVector p = RVector::Ones(12);
    p[0] = 11.51;
    p[1] = 7.94;
    return p;
}

std::uint64_t grid_seed(std::uint64_t master, int users, std::size_t trial)
{
    return trial_seed(trial_seed(master, static_cast<std::uint64_t>(users)), trial);
}

namespace
{

struct Realization
{
    Scenario scenario;
    SpreadingMatrix codes;
};

Realization draw(const ExperimentConfig &config, int users, std::uint64_t seed)
{
    ScenarioConfig sc = config.scenario;
    sc.users = users;
    return {generate_scenario(sc, trial_seed(seed, 0)),
            generate_codes(sc.chips, users, sc.code_kind, trial_seed(seed, 1))};
}

VariantMetrics metrics_of(const GameOutcome &o)
{
    return {o.mean_utility(), o.mean_power(), o.mean_sinr(), o.fraction_at_max(), static_cast<double>(o.iterations),
            o.converged ? 1.0 : 0.0};
}

double relative_l1(const RVector &predicted, const RVector &actual)
{
    return (predicted - actual).cwiseAbs().sum() / actual.cwiseAbs().sum();
}

std::string db(double x) { return csv_number(10.0 * std::log10(x)); }

} // namespace

std::vector<VariantMetrics> game_trial(const ExperimentConfig &config, int users, std::uint64_t seed)
{
    const Realization r = draw(config, users, seed);
    std::vector<VariantMetrics> out;
    out.reserve(config.variants.size());
    for (GameVariant v : config.variants)
        out.push_back(metrics_of(run_ee_game(r.scenario, r.codes, v, config.utility, config.game)));
    return out;
}

namespace
{

struct LsaComparison
{
    GameOutcome actual;
    LsaPrediction plain;
    LsaPrediction improved;
};

LsaComparison compare_lsa(const Realization &r, const ExperimentConfig &config)
{
    GameOutcome actual = run_ee_game(r.scenario, r.codes, GameVariant::PRWl, config.utility, config.game);
    const LsaInput in = LsaInput::from_scenario(r.scenario, actual.gamma_bar);
    return {std::move(actual), lsa_power_plain(in, config.utility), lsa_power_improved(in, config.utility)};
}

RVector actual_utilities(const GameOutcome &o)
{
    RVector u(static_cast<Eigen::Index>(o.users.size()));
    for (std::size_t k = 0; k < o.users.size(); ++k)
        u[static_cast<Eigen::Index>(k)] = o.users[k].utility;
    return u;
}

} // namespace

LsaTrialMetrics lsa_trial(const ExperimentConfig &config, int users, std::uint64_t seed)
{
    const LsaComparison c = compare_lsa(draw(config, users, seed), config);
    const RVector u = actual_utilities(c.actual);
    return {relative_l1(c.plain.utility, u), relative_l1(c.improved.utility, u),
            static_cast<double>(c.improved.n_max_hat), c.actual.fraction_at_max() * users,
            c.actual.converged ? 1.0 : 0.0};
}

// ---------------------------------------------------------------- drivers

namespace
{

std::vector<Dataset> code_figures(const std::string &figure, const ExperimentConfig &config)
{
    const int n = config.scenario.chips;
    IterationSchedule schedule = config.iteration;
    schedule.record_trace = true;

    if (figure == "fig3")
    {
        const RVector a_sq = oversized_example_powers();
        std::mt19937_64 rng(trial_seed(config.seed, 0));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        RVector phase(a_sq.size());
        for (Eigen::Index k = 0; k < phase.size(); ++k)
            phase[k] = angle(rng);
        const Scenario s = scenario_from_received_powers(n, a_sq, config.code_noise_psd, phase);
        const SpreadingMatrix codes0 = generate_codes(n, s.users(), CodeKind::Binary, trial_seed(config.seed, 1));
        schedule.seed = trial_seed(config.seed, 2);
        const FixedPointReport rep = run_to_fixed_point(s, codes0, schedule, Detector::WidelyLinear);
        std::vector<std::string> header{"sweep"};
        for (int i = 1; i <= 2 * n; ++i)
            header.push_back("lambda_" + std::to_string(i));
        CsvTable t(header);
        for (const SweepRecord &r : rep.trace)
        {
            std::vector<std::string> row{csv_number(static_cast<long long>(r.sweep))};
            for (Eigen::Index i = 0; i < r.spectrum.size(); ++i)
                row.push_back(csv_number(r.spectrum[i]));
            t.add_row(std::move(row));
        }
        return {{figure, std::move(t)}};
    }

    CsvTable t(figure == "fig1"
                   ? std::vector<std::string>{"K", "detector", "sweep", "gram_min", "gram_max", "metric_d"}
                   : std::vector<std::string>{"K", "detector", "sweep", "wl_twsc", "twsc", "bound"});
    for (int k : config.users)
    {
        // The trace targets of the bound plot; other K keep raw random powers.
        const double target = k == 10 ? 5.36 : (k == 20 ? 12.08 : 0.0);
        const Scenario s = code_figure_scenario(n, k, target, config.code_noise_psd, trial_seed(config.seed, k));
        const SpreadingMatrix codes0 = generate_codes(n, k, CodeKind::Binary, trial_seed(config.seed, 1000 + k));
        const double bound = 0.25 * s.power_diagonal().a_sq.squaredNorm();
        for (Detector det : {Detector::WidelyLinear, Detector::Linear})
        {
            schedule.seed = trial_seed(config.seed, 2000 + k);
            const FixedPointReport rep = run_to_fixed_point(s, codes0, schedule, det);
            for (const SweepRecord &r : rep.trace)
            {
                if (figure == "fig1")
                    t.add_row({csv_number(static_cast<long long>(k)), to_string(det),
                               csv_number(static_cast<long long>(r.sweep)), csv_number(r.gram_min),
                               csv_number(r.gram_max), csv_number(r.metric)});
                else
                    t.add_row({csv_number(static_cast<long long>(k)), to_string(det),
                               csv_number(static_cast<long long>(r.sweep)), csv_number(r.wl_twsc), csv_number(r.twsc),
                               csv_number(bound)});
            }
        }
    }
    return {{figure, std::move(t)}};
}

CsvTable lsa_user_rows(const ExperimentConfig &config)
{
    CsvTable t({"K", "rank", "user", "h2", "actual_power", "actual_sinr", "actual_utility", "plain_power", "plain_sinr",
                "plain_utility", "improved_power", "improved_sinr", "improved_utility"});
    for (int k : config.users)
    {
        const Realization r = draw(config, k, grid_seed(config.seed, k, 0));
        const LsaComparison c = compare_lsa(r, config);
        const RVector h2 = r.scenario.gain().cwiseAbs2();
        std::vector<int> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h2[a] > h2[b]; });
        for (int rank = 0; rank < k; ++rank)
        {
            const int i = order[static_cast<std::size_t>(rank)];
            const UserOutcome &u = c.actual.users[static_cast<std::size_t>(i)];
            t.add_row({csv_number(static_cast<long long>(k)), csv_number(static_cast<long long>(rank + 1)),
                       csv_number(static_cast<long long>(i)), csv_number(h2[i]), csv_number(u.power),
                       csv_number(u.sinr), csv_number(u.utility), csv_number(c.plain.power[i]),
                       csv_number(c.plain.sinr[i]), csv_number(c.plain.utility[i]), csv_number(c.improved.power[i]),
                       csv_number(c.improved.sinr[i]), csv_number(c.improved.utility[i])});
        }
    }
    return t;
}

} // namespace

std::vector<Dataset> run_figure(const std::string &figure, const ExperimentConfig &config)
{
    config.validate();
    require(is_figure_id(figure), "run_figure: unknown figure id '" + figure + "'");
    if (figure == "fig1" || figure == "fig2" || figure == "fig3")
        return code_figures(figure, config);
    if (figure == "fig8")
        return {{figure, lsa_user_rows(config)}};
    // fig4 .. fig7 and custom share the per-K summary of the games.
    std::vector<Dataset> sets = run_ee_game_experiment(config);
    Dataset summary = std::move(sets.front());
    summary.name = figure;
    return {std::move(summary)};
}

std::vector<Dataset> run_ee_game_experiment(const ExperimentConfig &config)
{
    config.validate();
    CsvTable summary({"K", "variant", "trials", "mean_utility", "std_utility", "mean_power", "std_power", "mean_sinr",
                      "mean_sinr_db", "std_sinr", "fraction_at_max", "std_fraction_at_max", "mean_iterations",
                      "converged_fraction"});
    CsvTable per_trial({"K", "trial", "seed", "variant", "mean_utility", "mean_power", "mean_sinr", "fraction_at_max",
                        "iterations", "converged"});
    for (int k : config.users)
    {
        const std::uint64_t master = trial_seed(config.seed, static_cast<std::uint64_t>(k));
        const auto rows = run_trials<std::vector<VariantMetrics>>(
            config.trials, master, config.workers,
            [&](std::uint64_t seed, std::size_t) { return game_trial(config, k, seed); });
        for (std::size_t v = 0; v < config.variants.size(); ++v)
        {
            RunningStats util, power, sinr, frac, iters, conv;
            for (std::size_t t = 0; t < rows.size(); ++t)
            {
                const VariantMetrics &m = rows[t][v];
                util.add(m.mean_utility);
                power.add(m.mean_power);
                sinr.add(m.mean_sinr);
                frac.add(m.fraction_at_max);
                iters.add(m.iterations);
                conv.add(m.converged);
                per_trial.add_row({csv_number(static_cast<long long>(k)), csv_number(static_cast<long long>(t)),
                                   std::to_string(trial_seed(master, t)), to_string(config.variants[v]),
                                   csv_number(m.mean_utility), csv_number(m.mean_power), csv_number(m.mean_sinr),
                                   csv_number(m.fraction_at_max), csv_number(m.iterations), csv_number(m.converged)});
            }
            const MetricStats su = util.finish("utility"), sp = power.finish("power"), ss = sinr.finish("sinr"),
                              sf = frac.finish("fraction_at_max");
            summary.add_row({csv_number(static_cast<long long>(k)), to_string(config.variants[v]),
                             csv_number(static_cast<long long>(rows.size())), csv_number(su.mean),
                             csv_number(su.stddev), csv_number(sp.mean), csv_number(sp.stddev), csv_number(ss.mean),
                             db(ss.mean), csv_number(ss.stddev), csv_number(sf.mean), csv_number(sf.stddev),
                             csv_number(iters.mean()), csv_number(conv.mean())});
        }
    }

    // Per-user outcomes of the first realization at each K.
    CsvTable users({"K", "variant", "user", "power_W", "sinr_dB", "utility_bpJ", "at_max"});
    for (int k : config.users)
    {
        const Realization r = draw(config, k, grid_seed(config.seed, k, 0));
        for (GameVariant v : config.variants)
        {
            const GameOutcome o = run_ee_game(r.scenario, r.codes, v, config.utility, config.game);
            for (std::size_t i = 0; i < o.users.size(); ++i)
                users.add_row({csv_number(static_cast<long long>(k)), to_string(v),
                               csv_number(static_cast<long long>(i)), csv_number(o.users[i].power),
                               db(o.users[i].sinr), csv_number(o.users[i].utility),
                               o.users[i].at_max_power ? "1" : "0"});
        }
    }
    return {{"ee_game_summary", std::move(summary)},
            {"ee_game_trials", std::move(per_trial)},
            {"ee_game_users", std::move(users)}};
}

std::vector<Dataset> run_lsa_experiment(const ExperimentConfig &config)
{
    config.validate();
    CsvTable summary({"K", "trials", "mean_error_plain", "std_error_plain", "mean_error_improved",
                      "std_error_improved", "mean_n_max_hat", "mean_actual_at_max", "converged_fraction"});
    for (int k : config.users)
    {
        const std::uint64_t master = trial_seed(config.seed, static_cast<std::uint64_t>(k));
        const auto rows = run_trials<LsaTrialMetrics>(
            config.trials, master, config.workers,
            [&](std::uint64_t seed, std::size_t) { return lsa_trial(config, k, seed); });
        RunningStats plain, improved, nhat, at_max, conv;
        for (const LsaTrialMetrics &m : rows)
        {
            plain.add(m.error_plain);
            improved.add(m.error_improved);
            nhat.add(m.n_max_hat);
            at_max.add(m.actual_at_max);
            conv.add(m.converged);
        }
        const MetricStats sp = plain.finish("plain"), si = improved.finish("improved");
        summary.add_row({csv_number(static_cast<long long>(k)), csv_number(static_cast<long long>(rows.size())),
                         csv_number(sp.mean), csv_number(sp.stddev), csv_number(si.mean), csv_number(si.stddev),
                         csv_number(nhat.mean()), csv_number(at_max.mean()), csv_number(conv.mean())});
    }
    return {{"lsa_summary", std::move(summary)}, {"lsa_users", lsa_user_rows(config)}};
}

std::vector<Dataset> run_code_game_experiment(const ExperimentConfig &config)
{
    config.validate();
    const int n = config.scenario.chips;
    CsvTable trials({"K", "detector", "trial", "seed", "sweeps", "converged", "perturbations", "wl_twsc", "twsc",
                     "bound", "gram_min", "gram_max", "c_sum", "tmmse"});
    CsvTable trace({"K", "detector", "sweep", "wl_twsc", "twsc", "gram_min", "gram_max", "metric_d"});

    struct Row
    {
        FixedPointReport report;
        double bound;
        double gram_min;
        double gram_max;
    };

    for (int k : config.users)
    {
        for (Detector det : {Detector::WidelyLinear, Detector::Linear})
        {
            const std::uint64_t master =
                trial_seed(config.seed, static_cast<std::uint64_t>(k) * 2 + (det == Detector::Linear ? 1 : 0));
            auto rows = run_trials<Row>(config.trials, master, config.workers, [&](std::uint64_t seed, std::size_t i) {
                const Scenario s = code_figure_scenario(n, k, 0.0, config.code_noise_psd, trial_seed(seed, 0));
                const SpreadingMatrix codes0 = generate_codes(n, k, CodeKind::Binary, trial_seed(seed, 1));
                IterationSchedule schedule = config.iteration;
                schedule.seed = trial_seed(seed, 2);
                schedule.record_trace = i == 0;
                FixedPointReport rep = run_to_fixed_point(s, codes0, schedule, det);
                const CMatrix &c = rep.codes.matrix();
                RVector gram_eig;
                if (det == Detector::WidelyLinear)
                {
                    const RMatrix x = stacked_embedding(rep.codes, s.phase());
                    gram_eig = Eigen::SelfAdjointEigenSolver<RMatrix>(x.transpose() * x).eigenvalues();
                }
                else
                {
                    gram_eig = Eigen::SelfAdjointEigenSolver<CMatrix>(c.adjoint() * c).eigenvalues();
                }
                const double bound = 0.25 * s.power_diagonal().a_sq.squaredNorm();
                return Row{std::move(rep), bound, gram_eig.minCoeff(), gram_eig.maxCoeff()};
            });
            for (std::size_t t = 0; t < rows.size(); ++t)
            {
                const FixedPointReport &rep = rows[t].report;
                trials.add_row({csv_number(static_cast<long long>(k)), to_string(det),
                                csv_number(static_cast<long long>(t)), std::to_string(trial_seed(master, t)),
                                csv_number(static_cast<long long>(rep.sweeps_used)), rep.converged ? "1" : "0",
                                csv_number(static_cast<long long>(rep.perturbations)), csv_number(rep.wl_twsc),
                                csv_number(rep.twsc), csv_number(rows[t].bound), csv_number(rows[t].gram_min),
                                csv_number(rows[t].gram_max), csv_number(rep.c_sum), csv_number(rep.tmmse)});
            }
            for (const SweepRecord &r : rows.front().report.trace)
                trace.add_row({csv_number(static_cast<long long>(k)), to_string(det),
                               csv_number(static_cast<long long>(r.sweep)), csv_number(r.wl_twsc), csv_number(r.twsc),
                               csv_number(r.gram_min), csv_number(r.gram_max), csv_number(r.metric)});
        }
    }
    return {{"code_game_trials", std::move(trials)}, {"code_game_trace", std::move(trace)}};
}

} // namespace wlcdma
