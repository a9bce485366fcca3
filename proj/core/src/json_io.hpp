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

// nlohmann/json bindings shared by the translation units that read or write
// configuration files. Not installed.
#ifndef WLCDMA_JSON_IO_HPP
#define WLCDMA_JSON_IO_HPP

#include "wlcdma/signal_model.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace wlcdma::detail
{

inline std::vector<double> to_std(const RVector &v) { return {v.data(), v.data() + v.size()}; }

inline RVector to_eigen(const std::vector<double> &v)
{
    return Eigen::Map<const RVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline nlohmann::json scenario_config_json(const ScenarioConfig &c)
{
    return {
        {"K", c.users},
        {"N", c.chips},
        {"noise_psd", c.noise_psd},
        {"p_max", c.max_power},
        {"p_init", c.initial_power},
        {"min_distance", c.min_distance},
        {"max_distance", c.max_distance},
        {"path_loss_exponent", c.path_loss_exponent},
        {"code_kind", to_string(c.code_kind)},
    };
}

// Missing keys keep their defaults so partial configs are accepted.
inline ScenarioConfig scenario_config_from(const nlohmann::json &j, ScenarioConfig c = {})
{
    c.users = j.value("K", c.users);
    c.chips = j.value("N", c.chips);
    c.noise_psd = j.value("noise_psd", c.noise_psd);
    c.max_power = j.value("p_max", c.max_power);
    c.initial_power = j.value("p_init", c.max_power);
    c.min_distance = j.value("min_distance", c.min_distance);
    c.max_distance = j.value("max_distance", c.max_distance);
    c.path_loss_exponent = j.value("path_loss_exponent", c.path_loss_exponent);
    if (j.contains("code_kind"))
        c.code_kind = parse_code_kind(j.at("code_kind").get<std::string>());
    c.validate();
    return c;
}

} // namespace wlcdma::detail

#endif
