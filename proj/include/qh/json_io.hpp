/*
 * Copyright 2026 The qhurwitz authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "json.hpp"
#include "qh/characters.hpp"
#include "qh/polynomial.hpp"
#include "qh/tau.hpp"

namespace qh {

/// Ordered document type so emitted objects keep their declared field order;
/// map-backed payloads iterate in the canonical partition order, which makes
/// every dump byte-identical across runs.
using Json = nlohmann::ordered_json;

/// A partition is an array of parts, [] for the empty partition.
Json partition_to_json(const Partition& p);
Json partition_to_json(const StrictPartition& a);
Partition partition_from_json(const Json& j);
StrictPartition strict_partition_from_json(const Json& j);

/// {"num": "...", "den": "..."} with decimal-string big integers.
Json rational_to_json(const Rat& r);
Rat rational_from_json(const Json& j);

/// {"value": {"num": ..., "den": ...}} for scalar results.
Json value_to_json(const Rat& r);
Rat value_from_json(const Json& j);

/// {"terms": [{"mono": [3,1], "num": "4", "den": "3"}, ...]}.
Json poly_to_json(const PowerSumPoly& f);
PowerSumPoly poly_from_json(const Json& j);

/// {"sign": "+", "D": 8, "coeffs": [{"alpha": [...], "num": ..., "den": ...}]}.
Json series_to_json(const TauSeries& t);
TauSeries series_from_json(const Json& j);

/// {"d": 5, "kind": "sergeev", "rows": [{"label", "class", "num", "den"}]};
/// the same layout the disk cache uses.
Json table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j);

/// CSV companions; partitions are space-separated part lists inside one cell.
std::string table_to_csv(const CharacterTable& t);
std::string series_to_csv(const TauSeries& t);
std::string poly_to_csv(const PowerSumPoly& f);

/// Canonical text form: two-space indent plus trailing newline.
std::string dump_json(const Json& j);

}  // namespace qh
