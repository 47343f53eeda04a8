// Copyright 2026 The gyw Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GYW_IO_HPP
#define GYW_IO_HPP

#include <optional>

#include <json.hpp>

#include <gyw/gk.hpp>
#include <gyw/kostant.hpp>
#include <gyw/young_wall.hpp>

namespace gyw
{

// Canonical wall JSON: {"n": int, "rows": [int, ...]} bottom row first.
nlohmann::json wall_to_json(const Wall &w);
// Accepts the canonical form or {"n": int, "colors": [[int, ...], ...]} with
// colors listed rightmost box first. When expected_n is given, "n" may be
// omitted but must match if present. Throws ValidationError naming the field.
Wall wall_from_json(const nlohmann::json &j, std::optional<int> expected_n = std::nullopt);

// {"real": [[k,i,l],...], "imag": [[k,j],...], "delta": [m,...]}, one entry per copy.
nlohmann::json expr_to_json(const KostantExpr &e);
KostantExpr expr_from_json(const CartanData &cartan, const nlohmann::json &j);

// {"n","D","equal","first_mismatch":{"gamma","lhs","rhs"}|null,"wall_count","root_count"}
nlohmann::json report_to_json(const VerificationReport &report);

} // namespace gyw

#endif
