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

#include "wlcdma/signal_model.hpp"

#include "json_io.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace wlcdma
{

namespace
{

bool all_finite(const RVector &v) { return v.allFinite(); }

void require_unit_columns(const CMatrix &m, const char *what)
{
    for (Eigen::Index k = 0; k < m.cols(); ++k)
        require(std::abs(m.col(k).norm() - 1.0) <= kUnitNormTolerance,
                std::string(what) + ": column " + std::to_string(k) + " is not unit norm");
}

void require_conjugate_structure(const CVector &v, double tol, const char *what)
{
    require(v.size() % 2 == 0 && v.size() > 0, std::string(what) + ": augmented vector must have even, nonzero length");
    const Eigen::Index n = v.size() / 2;
    require((v.tail(n) - v.head(n).conjugate()).cwiseAbs().maxCoeff() <= tol,
            std::string(what) + ": lower half is not the conjugate of the upper half");
}

} // namespace

Scenario::Scenario(int chips, RVector power, RVector gain, RVector phase, double noise_psd, RVector max_power)
    : chips_(chips), power_(std::move(power)), gain_(std::move(gain)), phase_(std::move(phase)), noise_psd_(noise_psd),
      max_power_(std::move(max_power))
{
    const auto k = power_.size();
    require(k >= 1, "Scenario: at least one user is required");
    require(chips_ >= 1, "Scenario: processing gain must be >= 1");
    require(gain_.size() == k && phase_.size() == k && max_power_.size() == k,
            "Scenario: per-user vectors must all have K entries");
    require(std::isfinite(noise_psd_) && noise_psd_ > 0.0, "Scenario: noise_psd must be positive");
    require(all_finite(power_) && all_finite(gain_) && all_finite(phase_) && all_finite(max_power_),
            "Scenario: non-finite entry");
    for (Eigen::Index i = 0; i < k; ++i)
    {
        require(power_[i] > 0.0, "Scenario: powers must be positive");
        require(power_[i] <= max_power_[i], "Scenario: power exceeds p_max for user " + std::to_string(i));
        require(gain_[i] > 0.0, "Scenario: channel gains must be positive");
    }
}

PowerDiagonal Scenario::power_diagonal() const
{
    RVector d_sq = power_.cwiseProduct(gain_.cwiseAbs2());
    return {2.0 * d_sq, d_sq};
}

Scenario Scenario::with_power(RVector power) const
{
    return Scenario(chips_, std::move(power), gain_, phase_, noise_psd_, max_power_);
}

SpreadingMatrix::SpreadingMatrix(CMatrix columns) : columns_(std::move(columns))
{
    require(columns_.rows() >= 1 && columns_.cols() >= 1, "SpreadingMatrix: empty matrix");
    require(columns_.allFinite(), "SpreadingMatrix: non-finite entry");
    require_unit_columns(columns_, "SpreadingMatrix");
}

AugmentedSignature::AugmentedSignature(CVector data) : data_(std::move(data))
{
    require(data_.allFinite(), "AugmentedSignature: non-finite entry");
    require_conjugate_structure(data_, 1e-12, "AugmentedSignature");
    require(std::abs(data_.norm() - 1.0) <= kUnitNormTolerance, "AugmentedSignature: not unit norm");
}

AugmentedSet::AugmentedSet(CMatrix columns) : columns_(std::move(columns))
{
    require(columns_.cols() >= 1 && columns_.rows() >= 2, "AugmentedSet: empty matrix");
    require(columns_.allFinite(), "AugmentedSet: non-finite entry");
    for (Eigen::Index k = 0; k < columns_.cols(); ++k)
        require_conjugate_structure(columns_.col(k), 1e-12, "AugmentedSet");
    require_unit_columns(columns_, "AugmentedSet");
}

AugmentedSignature build_augmented_signature(const CVector &code, double phase)
{
    require(code.size() >= 1, "build_augmented_signature: empty code");
    require(std::abs(code.norm() - 1.0) <= kUnitNormTolerance, "build_augmented_signature: code is not unit norm");
    const Eigen::Index n = code.size();
    const Complex rot = std::polar(1.0, phase);
    CVector out(2 * n);
    out.head(n) = code * rot;
    out.tail(n) = out.head(n).conjugate();
    out /= std::numbers::sqrt2;
    return AugmentedSignature(std::move(out));
}

AugmentedSet augment(const SpreadingMatrix &codes, const RVector &phase)
{
    require(phase.size() == codes.users(), "augment: phase vector size mismatch");
    CMatrix out(2 * codes.chips(), codes.users());
    for (int k = 0; k < codes.users(); ++k)
        out.col(k) = build_augmented_signature(codes.column(k), phase[k]).data();
    return AugmentedSet(std::move(out));
}

SpreadingMatrix deaugment(const AugmentedSet &set, const RVector &phase)
{
    require(phase.size() == set.users(), "deaugment: phase vector size mismatch");
    CMatrix out(set.chips(), set.users());
    for (int k = 0; k < set.users(); ++k)
        out.col(k) = std::numbers::sqrt2 * std::polar(1.0, -phase[k]) * set.matrix().col(k).head(set.chips());
    return SpreadingMatrix(std::move(out));
}

namespace
{

void require_dimensions(const Scenario &scenario, const SpreadingMatrix &codes, const char *what)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            std::string(what) + ": codes are " + std::to_string(codes.chips()) + "x" + std::to_string(codes.users()) +
                " but the scenario has N=" + std::to_string(scenario.chips()) + ", K=" + std::to_string(scenario.users()));
}

} // namespace

CMatrix covariance(const Scenario &scenario, const SpreadingMatrix &codes)
{
    require_dimensions(scenario, codes, "covariance");
    const RVector d_sq = scenario.power_diagonal().d_sq;
    const CMatrix &s = codes.matrix();
    CMatrix m = s * d_sq.cast<Complex>().asDiagonal() * s.adjoint();
    m.diagonal().array() += scenario.noise_variance();
    return m;
}

CMatrix pseudo_covariance(const Scenario &scenario, const SpreadingMatrix &codes)
{
    require_dimensions(scenario, codes, "pseudo_covariance");
    const RVector d_sq = scenario.power_diagonal().d_sq;
    CVector w(scenario.users());
    for (int k = 0; k < scenario.users(); ++k)
        w[k] = d_sq[k] * std::polar(1.0, 2.0 * scenario.phase()[k]);
    const CMatrix &s = codes.matrix();
    return s * w.asDiagonal() * s.transpose();
}

CMatrix augmented_covariance(const Scenario &scenario, const SpreadingMatrix &codes)
{
    require_dimensions(scenario, codes, "augmented_covariance");
    const RVector a_sq = scenario.power_diagonal().a_sq;
    const Eigen::Index dim = 2 * scenario.chips();
    CMatrix m = scenario.noise_variance() * CMatrix::Identity(dim, dim);
    for (int k = 0; k < scenario.users(); ++k)
    {
        const CVector s = build_augmented_signature(codes.column(k), scenario.phase()[k]).data();
        m.noalias() += a_sq[k] * s * s.adjoint();
    }
    return m;
}

RVector stacked_from_augmented(const CVector &augmented)
{
    const Eigen::Index n = augmented.size() / 2;
    RVector out(2 * n);
    out.head(n) = std::numbers::sqrt2 * augmented.head(n).real();
    out.tail(n) = std::numbers::sqrt2 * augmented.head(n).imag();
    return out;
}

CVector augmented_from_stacked(const RVector &stacked)
{
    const Eigen::Index n = stacked.size() / 2;
    CVector out(2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const Complex v(stacked[i], stacked[n + i]);
        out[i] = v / std::numbers::sqrt2;
        out[n + i] = std::conj(v) / std::numbers::sqrt2;
    }
    return out;
}

RMatrix stacked_embedding(const SpreadingMatrix &codes, const RVector &phase)
{
    require(phase.size() == codes.users(), "stacked_embedding: phase vector size mismatch");
    const int n = codes.chips();
    RMatrix out(2 * n, codes.users());
    for (int k = 0; k < codes.users(); ++k)
    {
        const CVector rotated = codes.matrix().col(k) * std::polar(1.0, phase[k]);
        out.col(k).head(n) = rotated.real();
        out.col(k).tail(n) = rotated.imag();
    }
    return out;
}

SpreadingMatrix codes_from_stacked(const RMatrix &stacked, const RVector &phase)
{
    require(stacked.rows() % 2 == 0 && phase.size() == stacked.cols(), "codes_from_stacked: dimension mismatch");
    const Eigen::Index n = stacked.rows() / 2;
    CMatrix out(n, stacked.cols());
    for (Eigen::Index k = 0; k < stacked.cols(); ++k)
    {
        const Complex rot = std::polar(1.0, -phase[k]);
        for (Eigen::Index i = 0; i < n; ++i)
            out(i, k) = Complex(stacked(i, k), stacked(n + i, k)) * rot;
        out.col(k).normalize();
    }
    return SpreadingMatrix(std::move(out));
}

RMatrix stacked_covariance(const RVector &a_sq, const RMatrix &stacked, double noise_variance)
{
    RMatrix r = stacked * a_sq.asDiagonal() * stacked.transpose();
    r.diagonal().array() += noise_variance;
    return r;
}

std::string to_string(CodeKind kind)
{
    switch (kind)
    {
    case CodeKind::Binary:
        return "binary";
    case CodeKind::ComplexGaussian:
        return "complex-gaussian-normalized";
    }
    return "binary";
}

CodeKind parse_code_kind(const std::string &name)
{
    if (name == "binary")
        return CodeKind::Binary;
    if (name == "complex-gaussian-normalized" || name == "gaussian")
        return CodeKind::ComplexGaussian;
    throw ValidationError("unknown code kind '" + name + "'");
}

void ScenarioConfig::validate() const
{
    require(users >= 1, "ScenarioConfig: K must be >= 1");
    require(chips >= 1, "ScenarioConfig: N must be >= 1");
    require(noise_psd > 0.0 && std::isfinite(noise_psd), "ScenarioConfig: noise_psd must be positive");
    require(max_power > 0.0 && std::isfinite(max_power), "ScenarioConfig: p_max must be positive");
    require(initial_power > 0.0 && initial_power <= max_power, "ScenarioConfig: need 0 < p_init <= p_max");
    require(min_distance > 0.0 && max_distance >= min_distance, "ScenarioConfig: need 0 < min_distance <= max_distance");
    require(path_loss_exponent >= 0.0 && std::isfinite(path_loss_exponent),
            "ScenarioConfig: path_loss_exponent must be nonnegative");
}

Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed)
{
    config.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> distance(config.min_distance, config.max_distance);
    std::normal_distribution<double> normal(0.0, 1.0);

    const int k = config.users;
    RVector gain(k), phase(k);
    for (int i = 0; i < k; ++i)
    {
        const double d = distance(rng);
        const double sigma = std::sqrt(0.5 * std::pow(d, -config.path_loss_exponent));
        Complex g;
        do
        {
            g = Complex(sigma * normal(rng), sigma * normal(rng));
        } while (std::abs(g) == 0.0);
        gain[i] = std::abs(g);
        phase[i] = std::arg(g);
    }
    return Scenario(config.chips, RVector::Constant(k, config.initial_power), std::move(gain), std::move(phase),
                    config.noise_psd, RVector::Constant(k, config.max_power));
}

SpreadingMatrix generate_codes(int chips, int users, CodeKind kind, std::uint64_t seed)
{
    require(chips >= 1 && users >= 1, "generate_codes: N and K must be >= 1");
    std::mt19937_64 rng(seed);
    CMatrix s(chips, users);
    if (kind == CodeKind::Binary)
    {
        std::bernoulli_distribution coin(0.5);
        const double amplitude = 1.0 / std::sqrt(static_cast<double>(chips));
        for (int k = 0; k < users; ++k)
            for (int i = 0; i < chips; ++i)
                s(i, k) = coin(rng) ? amplitude : -amplitude;
    }
    else
    {
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int k = 0; k < users; ++k)
        {
            do
            {
                for (int i = 0; i < chips; ++i)
                    s(i, k) = Complex(normal(rng), normal(rng));
            } while (s.col(k).norm() == 0.0);
            s.col(k).normalize();
        }
    }
    return SpreadingMatrix(std::move(s));
}

Scenario scenario_from_received_powers(int chips, const RVector &a_sq, double noise_psd, const RVector &phase)
{
    require(a_sq.size() == phase.size(), "scenario_from_received_powers: size mismatch");
    const RVector p = 0.5 * a_sq;
    return Scenario(chips, p, RVector::Ones(a_sq.size()), phase, noise_psd, p);
}

std::string scenario_to_json(const Scenario &s)
{
    const nlohmann::json j = {
        {"K", s.users()},
        {"N", s.chips()},
        {"p", detail::to_std(s.power())},
        {"h", detail::to_std(s.gain())},
        {"phi", detail::to_std(s.phase())},
        {"noise_psd", s.noise_psd()},
        {"p_max", detail::to_std(s.max_power())},
    };
    return j.dump(2);
}

Scenario scenario_from_json(const std::string &text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
        const int k = j.at("K").get<int>();
        Scenario s(j.at("N").get<int>(), detail::to_eigen(j.at("p").get<std::vector<double>>()),
                   detail::to_eigen(j.at("h").get<std::vector<double>>()),
                   detail::to_eigen(j.at("phi").get<std::vector<double>>()), j.at("noise_psd").get<double>(),
                   detail::to_eigen(j.at("p_max").get<std::vector<double>>()));
        require(s.users() == k, "scenario JSON: K does not match the vector lengths");
        return s;
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError(std::string("scenario JSON: ") + e.what());
    }
}

std::string scenario_config_to_json(const ScenarioConfig &config) { return detail::scenario_config_json(config).dump(2); }

ScenarioConfig scenario_config_from_json(const std::string &text)
{
    try
    {
        return detail::scenario_config_from(nlohmann::json::parse(text));
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ValidationError(std::string("scenario config JSON: ") + e.what());
    }
}

} // namespace wlcdma
