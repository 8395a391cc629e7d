// Copyright 2026 fgflip contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include "fgflip/braidgraph.hpp"
#include "fgflip/modulardata.hpp"
#include "fgflip/qdilog.hpp"
#include "fgflip/skewspace.hpp"
#include "fgflip/wordalgebra.hpp"

namespace fgflip {

inline constexpr const char* kSchemaTag = "fgflip/1";

nlohmann::json to_json(const SkewVector& v);
SkewVector skewvector_from_json(const nlohmann::json& j, const SpacePtr& space);

nlohmann::json to_json(const SkewSpace& s);
SpacePtr space_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FormSum& s);
nlohmann::json to_json(const LabeledBraidGraph& g);
nlohmann::json to_json(const TVector& v);
nlohmann::json to_json(const RewriteTrace& t);
nlohmann::json to_json(const qd::ResidualReport& r);
nlohmann::json to_json(const ModularReport& r);

}  // namespace fgflip
