// Copyright 2026 The majex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"
#include "majex/compile.hpp"
#include "majex/exchange.hpp"
#include "majex/lattice.hpp"
#include "majex/simulate.hpp"

namespace majex {

using Json = nlohmann::ordered_json;

Json to_json(const ShotMetadata &meta);

/// {"num_cbits", "metadata", "records": ["01101", ...]}; character k of a
/// record is classical bit k.
Json to_json(const ShotTable &table);
ShotTable shot_table_from_json(const Json &j);

/// Header "shot,c0,c1,..." then one row per shot with 0/1 columns.
std::string to_csv(const ShotTable &table);

Json to_json(const CorrelationResult &c);
Json to_json(const TomographyResult &t);
Json to_json(const QubitAssignment &a);

Json to_json(const Lattice &lattice);
Json to_json(const Generator &g);
Json to_json(const ExchangeSchedule &schedule);
Json to_json(const TruncatedExperiment &truncated);

}  // namespace majex
