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

#include "wlcdma/receivers.hpp"

#include <cmath>
#include <limits>

namespace wlcdma
{

namespace
{

void require_user(const Scenario &scenario, const SpreadingMatrix &codes, int k, const char *what)
{
    require(codes.users() == scenario.users() && codes.chips() == scenario.chips(),
            std::string(what) + ": codes do not match the scenario dimensions");
    require(k >= 0 && k < scenario.users(), std::string(what) + ": user index out of range");
}

CVector solve_hermitian(const CMatrix &m, const CVector &rhs)
{
    Eigen::LLT<CMatrix> llt(m);
    if (llt.info() != Eigen::Success)
        throw NumericalError("covariance is not numerically positive definite");
    return llt.solve(rhs);
}

// gamma = c / (1 - c), guarded against round-off pushing c to 1.
double sinr_from_quadratic(double c)
{
    if (c <= 0.0)
        return 0.0;
    const double rest = 1.0 - c;
    if (rest <= 0.0)
        return std::numeric_limits<double>::infinity();
    return c / rest;
}

} // namespace

LinearReceiver linear_mmse(const Scenario &scenario, const SpreadingMatrix &codes, int k)
{
    require_user(scenario, codes, k, "linear_mmse");
    const double amp = std::sqrt(scenario.power()[k]) * scenario.gain()[k];
    const Complex scale = amp * std::polar(1.0, scenario.phase()[k]);
    return {scale * solve_hermitian(covariance(scenario, codes), codes.column(k))};
}

WlReceiver wl_mmse(const Scenario &scenario, const SpreadingMatrix &codes, int k)
{
    require_user(scenario, codes, k, "wl_mmse");
    const double amp = std::sqrt(2.0 * scenario.power()[k]) * scenario.gain()[k];
    const CVector s_a = build_augmented_signature(codes.column(k), scenario.phase()[k]).data();
    return {amp * solve_hermitian(augmented_covariance(scenario, codes), s_a)};
}

LinearReceiver matched_filter_linear(const Scenario &scenario, const SpreadingMatrix &codes, int k)
{
    require_user(scenario, codes, k, "matched_filter_linear");
    return {codes.column(k) * std::polar(1.0, scenario.phase()[k])};
}

WlReceiver matched_filter_wl(const Scenario &scenario, const SpreadingMatrix &codes, int k)
{
    require_user(scenario, codes, k, "matched_filter_wl");
    return {build_augmented_signature(codes.column(k), scenario.phase()[k]).data()};
}

double sinr_linear(const Scenario &scenario, const SpreadingMatrix &codes, const LinearReceiver &rx, int k)
{
    require_user(scenario, codes, k, "sinr_linear");
    require(rx.d.size() == scenario.chips(), "sinr_linear: receiver length must be N");
    require(rx.d.allFinite(), "sinr_linear: non-finite receiver");
    const double norm_sq = rx.d.squaredNorm();
    require(norm_sq > 0.0, "sinr_linear: zero receiver");

    const RVector d_sq = scenario.power_diagonal().d_sq;
    const RVector proj = (codes.matrix().adjoint() * rx.d).cwiseAbs2();
    double interference = scenario.noise_variance() * norm_sq;
    for (int i = 0; i < scenario.users(); ++i)
        if (i != k)
            interference += d_sq[i] * proj[i];
    return d_sq[k] * proj[k] / interference;
}

double sinr_wl(const Scenario &scenario, const SpreadingMatrix &codes, const WlReceiver &rx, int k)
{
    require_user(scenario, codes, k, "sinr_wl");
    require(rx.d_a.size() == 2 * scenario.chips(), "sinr_wl: receiver length must be 2N");
    require(rx.d_a.allFinite(), "sinr_wl: non-finite receiver");
    const double norm_sq = rx.d_a.squaredNorm();
    require(norm_sq > 0.0, "sinr_wl: zero receiver");

    const RVector a_sq = scenario.power_diagonal().a_sq;
    const CMatrix s_a = augment(codes, scenario.phase()).matrix();
    const RVector proj = (s_a.adjoint() * rx.d_a).cwiseAbs2();
    double interference = scenario.noise_variance() * norm_sq;
    for (int i = 0; i < scenario.users(); ++i)
        if (i != k)
            interference += a_sq[i] * proj[i];
    return a_sq[k] * proj[k] / interference;
}

double mse_wl(double gamma)
{
    require(gamma >= 0.0 && !std::isnan(gamma), "mse_wl: SINR must be nonnegative");
    return 1.0 / (1.0 + gamma);
}

RVector mmse_sinr_all_wl(const RVector &a_sq, const RMatrix &stacked, double noise_variance)
{
    RMatrix r = stacked_covariance(a_sq, stacked, noise_variance);
    Eigen::LLT<RMatrix> llt(r);
    if (llt.info() != Eigen::Success)
        throw NumericalError("mmse_sinr_all_wl: covariance is not positive definite");
    const RMatrix y = llt.solve(stacked);
    RVector out(a_sq.size());
    for (Eigen::Index k = 0; k < a_sq.size(); ++k)
        out[k] = sinr_from_quadratic(a_sq[k] * stacked.col(k).dot(y.col(k)));
    return out;
}

RVector mmse_sinr_all_linear(const RVector &d_sq, const CMatrix &codes, double noise_variance)
{
    CMatrix m = codes * d_sq.cast<Complex>().asDiagonal() * codes.adjoint();
    m.diagonal().array() += noise_variance;
    Eigen::LLT<CMatrix> llt(m);
    if (llt.info() != Eigen::Success)
        throw NumericalError("mmse_sinr_all_linear: covariance is not positive definite");
    const CMatrix y = llt.solve(codes);
    RVector out(d_sq.size());
    for (Eigen::Index k = 0; k < d_sq.size(); ++k)
        out[k] = sinr_from_quadratic(d_sq[k] * codes.col(k).dot(y.col(k)).real());
    return out;
}

RVector matched_sinr_all_wl(const RVector &a_sq, const RMatrix &stacked, double noise_variance)
{
    const RMatrix gram_sq = (stacked.transpose() * stacked).cwiseAbs2();
    RVector out(a_sq.size());
    for (Eigen::Index k = 0; k < a_sq.size(); ++k)
    {
        const double interference = gram_sq.row(k).dot(a_sq) - a_sq[k] * gram_sq(k, k);
        out[k] = a_sq[k] * gram_sq(k, k) / (noise_variance * stacked.col(k).squaredNorm() + interference);
    }
    return out;
}

RVector matched_sinr_all_linear(const RVector &d_sq, const CMatrix &codes, double noise_variance)
{
    const RMatrix gram_sq = (codes.adjoint() * codes).cwiseAbs2();
    RVector out(d_sq.size());
    for (Eigen::Index k = 0; k < d_sq.size(); ++k)
    {
        const double interference = gram_sq.row(k).dot(d_sq) - d_sq[k] * gram_sq(k, k);
        out[k] = d_sq[k] * gram_sq(k, k) / (noise_variance * codes.col(k).squaredNorm() + interference);
    }
    return out;
}

} // namespace wlcdma
