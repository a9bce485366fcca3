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


// Shared fixtures for the unit suites.

#ifndef WLCDMA_TEST_FIXTURES_HPP
#define WLCDMA_TEST_FIXTURES_HPP

#include <cstdint>
#include <random>

#include "wlcdma/signal_model.hpp"

namespace fixture
{

// Random scenario with unit-order received powers, channel magnitudes in
// [0.5, 1.5] and uniform phases. Noise is 2 N0 = 0.1.
inline wlcdma::Scenario random_scenario(int chips, int users, std::uint64_t seed, double noise_psd = 0.05)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.5, 1.5), pw(0.2, 1.0), ang(0.0, 6.283185307179586);
    wlcdma::RVector p(users), h(users), phi(users);
    for (int k = 0; k < users; ++k)
    {
        p[k] = pw(rng);
        h[k] = mag(rng);
        phi[k] = ang(rng);
    }
    return wlcdma::Scenario(chips, p, h, phi, noise_psd, wlcdma::RVector::Ones(users));
}

inline wlcdma::SpreadingMatrix random_codes(int chips, int users, std::uint64_t seed)
{
    return wlcdma::generate_codes(chips, users, wlcdma::CodeKind::ComplexGaussian, seed);
}

} // namespace fixture

#endif
