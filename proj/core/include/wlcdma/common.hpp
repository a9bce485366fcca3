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

#ifndef WLCDMA_COMMON_HPP
#define WLCDMA_COMMON_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace wlcdma
{

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Raised when an argument violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an iterative or bracketing solver cannot produce a result.
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kUnitNormTolerance = 1e-12;

inline void require(bool condition, const std::string &message)
{
    if (!condition)
        throw ValidationError(message);
}

} // namespace wlcdma

#endif
