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

#include "wlcdma/lsa.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace wlcdma
{

namespace
{

// Unique root of gamma = q_k / (c0 + f sum_{j != k} q_k q_j / (q_k + q_j gamma)).
// gamma * denominator(gamma) is strictly increasing, so the root is unique and
// lies in [0, q_k / c0].
double self_consistent_sinr(const RVector &q, int k, double c0, double f)
{
    require(k >= 0 && k < q.size(), "lsa_sinr: user index out of range");
    require(q.allFinite() && (q.array() > 0.0).all(), "lsa_sinr: received powers must be positive");
    const double qk = q[k];
    auto denominator = [&](double gamma) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < q.size(); ++j)
            if (j != k)
                acc += qk * q[j] / (qk + q[j] * gamma);
        return c0 + f * acc;
    };

    // plain fixed-point stalls near heavy load; bracket and solve instead
    auto excess = [&](double g) { return g * denominator(g) - qk; };
    const double hi = qk / c0;
    if (excess(hi) <= 0.0)
        return hi;
    std::uintmax_t iters = 300;
    const auto [a, b] =
        boost::math::tools::toms748_solve(excess, 0.0, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (a + b);
}

LsaPrediction finish(const LsaInput &in, RVector power, int n_max_hat, double common, const UtilityConfig &cfg)
{
    LsaPrediction out;
    out.received_power = 2.0 * in.gain_sq.cwiseProduct(power);
    out.sinr = lsa_sinr_all(out.received_power, in.chips, in.noise_psd);
    out.utility.resize(power.size());
    out.at_max_power.resize(static_cast<std::size_t>(power.size()));
    for (Eigen::Index k = 0; k < power.size(); ++k)
    {
        out.utility[k] = utility(power[k], out.sinr[k], cfg);
        out.at_max_power[static_cast<std::size_t>(k)] = power[k] >= in.p_max;
    }
    out.power = std::move(power);
    out.n_max_hat = n_max_hat;
    out.common_received_power = common;
    return out;
}

} // namespace

void LsaInput::validate() const
{
    require(gain_sq.size() >= 1, "LsaInput: at least one user is required");
    require(gain_sq.allFinite() && (gain_sq.array() > 0.0).all(), "LsaInput: channel gains must be positive");
    require(noise_psd > 0.0 && std::isfinite(noise_psd), "LsaInput: noise_psd must be positive");
    require(gamma_bar > 0.0 && std::isfinite(gamma_bar), "LsaInput: gamma_bar must be positive");
    require(alpha > 0.0 && std::isfinite(alpha), "LsaInput: load alpha must be positive");
    require(p_max > 0.0 && std::isfinite(p_max), "LsaInput: p_max must be positive");
    require(chips >= 1, "LsaInput: N must be >= 1");
}

LsaInput LsaInput::from_scenario(const Scenario &scenario, double gamma_bar)
{
    const RVector &pm = scenario.max_power();
    require((pm.array() == pm[0]).all(), "LsaInput: all users must share one p_max");
    LsaInput in;
    in.gain_sq = scenario.gain().cwiseAbs2();
    in.noise_psd = scenario.noise_psd();
    in.gamma_bar = gamma_bar;
    in.alpha = static_cast<double>(scenario.users()) / scenario.chips();
    in.p_max = pm[0];
    in.chips = scenario.chips();
    in.validate();
    return in;
}

double lsa_sinr(const RVector &received_power, int k, int chips, double noise_psd)
{
    require(chips >= 1 && noise_psd > 0.0, "lsa_sinr: need N >= 1 and N0 > 0");
    return self_consistent_sinr(received_power, k, 2.0 * noise_psd, 1.0 / (2.0 * chips));
}

RVector lsa_sinr_all(const RVector &received_power, int chips, double noise_psd)
{
    RVector out(received_power.size());
    for (Eigen::Index k = 0; k < received_power.size(); ++k)
        out[k] = lsa_sinr(received_power, static_cast<int>(k), chips, noise_psd);
    return out;
}

double lsa_sinr_real(const RVector &received_power, int k, int chips, double noise_psd)
{
    require(chips >= 1 && noise_psd > 0.0, "lsa_sinr_real: need N >= 1 and N0 > 0");
    return self_consistent_sinr(received_power, k, 0.5 * noise_psd, 1.0 / chips);
}

double plain_received_power(double gamma_bar, double alpha, double noise_psd)
{
    require(gamma_bar > 0.0 && alpha >= 0.0 && noise_psd > 0.0, "plain_received_power: invalid arguments");
    const double bound = 2.0 * (1.0 + gamma_bar) / gamma_bar;
    const double slack = 1.0 - gamma_bar * alpha / (2.0 * (1.0 + gamma_bar));
    if (slack <= 0.0)
    {
        std::ostringstream msg;
        msg << "equal received power is infeasible: load alpha = " << alpha
            << " must satisfy alpha < 2(1 + gamma_bar)/gamma_bar = " << bound;
        throw ValidationError(msg.str());
    }
    return 2.0 * noise_psd * gamma_bar / slack;
}

int estimate_maxpower_count(const LsaInput &input)
{
    input.validate();
    const double pr = plain_received_power(input.gamma_bar, input.alpha, input.noise_psd);
    int count = 0;
    for (Eigen::Index k = 0; k < input.gain_sq.size(); ++k)
        if (pr / (2.0 * input.gain_sq[k]) - input.p_max > 0.0)
            ++count;
    return count;
}

LsaPrediction lsa_power_plain(const LsaInput &input, const UtilityConfig &utility_config)
{
    input.validate();
    const double pr = plain_received_power(input.gamma_bar, input.alpha, input.noise_psd);
    RVector power(input.users());
    int capped = 0;
    for (int k = 0; k < input.users(); ++k)
    {
        const double want = pr / (2.0 * input.gain_sq[k]);
        power[k] = std::min(want, input.p_max);
        capped += want > input.p_max ? 1 : 0;
    }
    return finish(input, std::move(power), capped, pr, utility_config);
}

double improved_received_power(const LsaInput &input, int n_max_hat)
{
    input.validate();
    const int k_users = input.users();
    require(n_max_hat >= 0 && n_max_hat < k_users, "improved_received_power: need 0 <= n_max_hat < K");

    std::vector<double> g(input.gain_sq.data(), input.gain_sq.data() + k_users);
    std::sort(g.begin(), g.end(), std::greater<>());
    std::vector<double> q; // the n_max_hat weakest users, at p_max
    for (int i = k_users - n_max_hat; i < k_users; ++i)
        q.push_back(2.0 * input.p_max * g[static_cast<std::size_t>(i)]);

    const double n = input.chips;
    const double gb = input.gamma_bar;
    const double u1 = k_users - n_max_hat - 1;
    if (u1 > 0.0 && gb >= 2.0 * n * (1.0 + gb) / u1)
    {
        std::ostringstream msg;
        msg << "improved power prediction is infeasible: the target SINR " << gb
            << " is not below the interference-limited ceiling 2N(1 + gamma_bar)/u1 = " << 2.0 * n * (1.0 + gb) / u1;
        throw ValidationError(msg.str());
    }

    auto lhs = [&](double p) {
        double capped = 0.0;
        for (double qi : q)
            capped += qi / (p + qi * gb);
        return 2.0 * n / (4.0 * n * input.noise_psd / p + u1 / (1.0 + gb) + capped);
    };
    auto residual = [&](double p) { return lhs(p) - gb; };

    double lo = 2.0 * input.noise_psd * gb; // single-user value, always below the root
    double hi = 2.0 * lo;
    int doublings = 0;
    while (residual(hi) <= 0.0)
    {
        hi *= 2.0;
        if (++doublings > 2000)
            throw NumericalError("improved_received_power: no root in bracket");
    }
    while (residual(lo) > 0.0)
        lo *= 0.5;
    std::uintmax_t iters = 300;
    const auto [a, b] =
        boost::math::tools::toms748_solve(residual, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    const double p = 0.5 * (a + b);
    if (!(std::abs(residual(p)) < 1e-8))
        throw NumericalError("improved_received_power: root check failed");
    return p;
}

LsaPrediction lsa_power_improved(const LsaInput &input, const UtilityConfig &utility_config)
{
    input.validate();
    const int k_users = input.users();
    const int n_hat = estimate_maxpower_count(input);
    if (n_hat == k_users)
        return finish(input, RVector::Constant(k_users, input.p_max), n_hat, 2.0 * input.p_max * input.gain_sq.maxCoeff(),
                      utility_config);

    const double pr = improved_received_power(input, n_hat);
    RVector power(k_users);
    for (int k = 0; k < k_users; ++k)
        power[k] = std::min(pr / (2.0 * input.gain_sq[k]), input.p_max);
    return finish(input, std::move(power), n_hat, pr, utility_config);
}

} // namespace wlcdma
