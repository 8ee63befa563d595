/*
 * Copyright 2026 The coadinv Authors
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

#include <json.hpp>

#include "coadinv/liealg.hpp"
#include "coadinv/matrix.hpp"

namespace coadinv {

using json = nlohmann::json;

// Matrix encoding: {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.
// Decoding also accepts integer JSON numbers as entries. Malformed input
// throws std::invalid_argument.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);
json to_json(const Mat& m);
Mat mat_from_json(const json& j);

// Dual points: {"algebra": "glvv", "n": 3, "y": Mat, "wstar": Mat, "xi": Mat};
// aff/isl carry "vstar", io/iso carry "wstar".
json to_json(const AlgebraKind& kind, const DualPointA& l);
json to_json(const AlgebraKind& kind, const DualPointB& l);
json to_json(const AlgebraKind& kind, const DualPointC& l);
json to_json(const GroupElemA& a);
json to_json(const GroupElemB& b);

/// Reads "algebra" and "n", checking n against the shape of "y".
AlgebraKind kind_from_json(const json& j);
DualPointA dual_a_from_json(const json& j);
DualPointB dual_b_from_json(const json& j);
DualPointC dual_c_from_json(const json& j);
GroupElemA group_a_from_json(const json& j);
GroupElemB group_b_from_json(const json& j);

}  // namespace coadinv
