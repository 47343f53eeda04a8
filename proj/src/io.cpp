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

#include <gyw/io.hpp>

#include <string>

#include <gyw/errors.hpp>

namespace gyw
{

using nlohmann::json;

namespace
{

int as_int(const json &value, const std::string &field)
{
    if (!value.is_number_integer()) {
        throw ValidationError("field \"" + field + "\" must be an integer");
    }
    return value.get<int>();
}

const json &require_array(const json &value, const std::string &field)
{
    if (!value.is_array()) {
        throw ValidationError("field \"" + field + "\" must be an array");
    }
    return value;
}

std::vector<int> int_array(const json &value, const std::string &field)
{
    std::vector<int> out;
    for (std::size_t t = 0; t < require_array(value, field).size(); ++t) {
        out.push_back(as_int(value[t], field + "[" + std::to_string(t) + "]"));
    }
    return out;
}

} // namespace

json wall_to_json(const Wall &w)
{
    return json{{"n", w.n()}, {"rows", std::vector<int>(w.rows().begin(), w.rows().end())}};
}

Wall wall_from_json(const json &j, std::optional<int> expected_n)
{
    if (!j.is_object()) {
        throw ValidationError("wall must be a JSON object");
    }
    int n = 0;
    if (j.contains("n")) {
        n = as_int(j["n"], "n");
        if (expected_n && *expected_n != n) {
            throw ValidationError("field \"n\" is " + std::to_string(n) + " but --n is " + std::to_string(*expected_n));
        }
    } else if (expected_n) {
        n = *expected_n;
    } else {
        throw ValidationError("missing field \"n\"");
    }
    const CartanData cartan(n);
    const bool has_rows = j.contains("rows");
    const bool has_colors = j.contains("colors");
    if (has_rows == has_colors) {
        throw ValidationError("wall needs exactly one of \"rows\" or \"colors\"");
    }
    if (has_rows) {
        auto rows = int_array(j["rows"], "rows");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r] < 0) {
                throw ValidationError("field \"rows[" + std::to_string(r) + "]\" must be >= 0");
            }
        }
        return Wall(cartan, std::move(rows));
    }
    std::vector<std::vector<int>> colors;
    const auto &arr = require_array(j["colors"], "colors");
    for (std::size_t r = 0; r < arr.size(); ++r) {
        colors.push_back(int_array(arr[r], "colors[" + std::to_string(r) + "]"));
    }
    return from_color_rows(cartan, colors);
}

json expr_to_json(const KostantExpr &e)
{
    json real = json::array();
    json imag = json::array();
    json delta = json::array();
    for (const auto &[part, count] : e.parts()) {
        for (long c = 0; c < count; ++c) {
            switch (part.kind) {
            case PartKind::Real:
                real.push_back({part.k, part.index, part.ell});
                break;
            case PartKind::Imag:
                imag.push_back({part.k, part.index});
                break;
            case PartKind::Delta:
                delta.push_back(part.k);
                break;
            }
        }
    }
    return json{{"real", real}, {"imag", imag}, {"delta", delta}};
}

KostantExpr expr_from_json(const CartanData &cartan, const json &j)
{
    if (!j.is_object()) {
        throw ValidationError("Kostant expression must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "real" && key != "imag" && key != "delta") {
            throw ValidationError("unknown field \"" + key + "\" in Kostant expression");
        }
    }
    KostantExpr e(cartan);
    if (j.contains("real")) {
        const auto &arr = require_array(j["real"], "real");
        for (std::size_t t = 0; t < arr.size(); ++t) {
            const std::string field = "real[" + std::to_string(t) + "]";
            const auto v = int_array(arr[t], field);
            if (v.size() != 3) {
                throw ValidationError("field \"" + field + "\" must be [k, i, l]");
            }
            e.add(KostantPart::real(v[0], v[1], v[2]));
        }
    }
    if (j.contains("imag")) {
        const auto &arr = require_array(j["imag"], "imag");
        for (std::size_t t = 0; t < arr.size(); ++t) {
            const std::string field = "imag[" + std::to_string(t) + "]";
            const auto v = int_array(arr[t], field);
            if (v.size() != 2) {
                throw ValidationError("field \"" + field + "\" must be [k, j]");
            }
            e.add(KostantPart::imag(v[0], v[1]));
        }
    }
    if (j.contains("delta")) {
        for (int m : int_array(j["delta"], "delta")) {
            e.add(KostantPart::delta(m));
        }
    }
    return e;
}

json report_to_json(const VerificationReport &report)
{
    json mismatch = nullptr;
    if (report.first_mismatch) {
        const auto &m = *report.first_mismatch;
        mismatch = json{{"gamma", std::vector<int>(m.gamma.coeffs().begin(), m.gamma.coeffs().end())},
                        {"lhs", m.lhs.to_string()},
                        {"rhs", m.rhs.to_string()}};
    }
    return json{{"n", report.n},
                {"D", report.cutoff},
                {"equal", report.equal},
                {"first_mismatch", mismatch},
                {"wall_count", report.wall_count},
                {"root_count", report.root_count}};
}

} // namespace gyw
