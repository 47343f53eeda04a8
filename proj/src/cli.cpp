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

#include <gyw/cli.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <gyw/errors.hpp>
#include <gyw/gk.hpp>
#include <gyw/io.hpp>
#include <gyw/kostant.hpp>
#include <gyw/young_wall.hpp>

namespace gyw::cli
{

using nlohmann::json;

namespace
{

constexpr int kMaxInt = std::numeric_limits<int>::max();

struct Config
{
    int n = 1;
    int degree = 0;
    int boxes = 0;
    bool y0 = false;
    std::string wall;
    std::string fold_expr;
    std::string unfold_expr;
    std::string gamma;
    std::string format;
};

// Inline JSON when the argument starts with '{', otherwise a file path.
json load_json_argument(const std::string &arg, const std::string &option)
{
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || arg[first] != '{') {
        std::ifstream in(arg);
        if (!in) {
            throw ValidationError(option + ": cannot open file '" + arg + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(option + ": malformed JSON: " + e.what());
    }
}

RootVector parse_gamma(const std::string &text, const CartanData &cartan)
{
    std::vector<int> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        int value = 0;
        const auto *end = piece.data() + piece.size();
        auto [ptr, ec] = std::from_chars(piece.data(), end, value);
        if (piece.empty() || ec != std::errc() || ptr != end) {
            throw ValidationError("--gamma: '" + piece + "' is not an integer");
        }
        if (value < 0) {
            throw ValidationError("--gamma: coefficient a" + std::to_string(coeffs.size()) + " is negative");
        }
        coeffs.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (static_cast<int>(coeffs.size()) != cartan.rank()) {
        throw ValidationError("--gamma: expected " + std::to_string(cartan.rank()) + " coefficients a0..a"
                              + std::to_string(cartan.n()) + ", got " + std::to_string(coeffs.size()));
    }
    return RootVector(std::move(coeffs));
}

std::string join(const auto &values, const char *sep = " ")
{
    std::ostringstream os;
    bool first = true;
    for (const auto &v : values) {
        os << (first ? "" : sep) << v;
        first = false;
    }
    return os.str();
}


int run_enumerate(const Config &cfg, std::ostream &out)
{
    const CartanData cartan(cfg.n);
    const auto walls = cfg.y0 ? enumerate_empty_zero_class(cartan, cfg.boxes) : enumerate_reduced_proper(cartan, cfg.boxes);
    for (const auto &w : walls) {
        if (cfg.format == "json") {
            out << wall_to_json(w).dump() << '\n';
        } else {
            out << box_count(w) << ":" << (w.empty() ? "" : " ") << join(w.rows()) << '\n';
        }
    }
    return kSuccess;
}

json stats_json(const Wall &w)
{
    const auto comps = part_statistic_components(w);
    json s = json::array();
    for (const auto &set : comps.lengths) {
        s.push_back(std::vector<int>(set.begin(), set.end()));
    }
    json pq = json::array();
    for (const auto &[p, q] : comps.top_class_factors) {
        pq.push_back({p, q});
    }
    json split = json::array();
    for (const auto &[key, count] : split_rows(w)) {
        for (int c = 0; c < count; ++c) {
            split.push_back({key.residue_class, key.length});
        }
    }
    const auto psi = wall_to_kostant(w);
    const auto unfolded = unfold(psi);
    const auto wt = weight(w);
    json j{{"n", w.n()},
           {"rows", std::vector<int>(w.rows().begin(), w.rows().end())},
           {"weight", std::vector<int>(wt.coeffs().begin(), wt.coeffs().end())},
           {"box_count", box_count(w)},
           {"S", s},
           {"pq", pq},
           {"Q", std::vector<int>(comps.absorbed.begin(), comps.absorbed.end())},
           {"P", comps.power_sum},
           {"N", part_statistic(w)},
           {"N_split", part_statistic_by_splitting(w)},
           {"split_rows", split},
           {"psi", expr_to_json(psi)},
           {"psi_text", to_string(psi)},
           {"unfolded", expr_to_json(unfolded)},
           {"unfolded_text", to_string(unfolded)},
           {"distinct_parts", distinct_parts(unfolded)},
           {"empty_zero_class", has_empty_zero_class(w)}};
    if (has_empty_zero_class(w)) {
        j["M"] = weighted_row_count(w);
    }
    return j;
}

int run_stats(const Config &cfg, std::ostream &out)
{
    const Wall w = wall_from_json(load_json_argument(cfg.wall, "--wall"), cfg.n);
    if (!is_proper(w)) {
        throw ValidationError("--wall: wall is not proper");
    }
    if (!is_reduced(w)) {
        throw ValidationError("--wall: wall is not reduced");
    }
    const json j = stats_json(w);
    if (cfg.format == "json") {
        out << j.dump() << '\n';
        return kSuccess;
    }
    auto ints = [](const json &arr) { return join(arr.get<std::vector<int>>()); };
    auto pairs = [](const json &arr) {
        std::vector<std::string> items;
        for (const auto &p : arr) {
            items.push_back("(" + std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>()) + ")");
        }
        return join(items);
    };
    out << "n: " << j["n"] << '\n'
        << "rows: " << ints(j["rows"]) << '\n'
        << "weight: " << ints(j["weight"]) << '\n'
        << "box_count: " << j["box_count"] << '\n';
    for (std::size_t t = 0; t < j["S"].size(); ++t) {
        out << "S_" << t + 1 << ": " << ints(j["S"][t]) << '\n';
    }
    out << "pq: " << pairs(j["pq"]) << '\n'
        << "Q: " << ints(j["Q"]) << '\n'
        << "P: " << j["P"] << '\n'
        << "N: " << j["N"] << '\n'
        << "N_split: " << j["N_split"] << '\n'
        << "split_rows: " << pairs(j["split_rows"]) << '\n'
        << "psi: " << j["psi_text"].get<std::string>() << '\n'
        << "unfolded: " << j["unfolded_text"].get<std::string>() << '\n'
        << "distinct_parts: " << j["distinct_parts"] << '\n'
        << "empty_zero_class: " << j["empty_zero_class"] << '\n';
    if (j.contains("M")) {
        out << "M: " << j["M"] << '\n';
    }
    return kSuccess;
}

int run_kostant(const Config &cfg, std::ostream &out)
{
    const CartanData cartan(cfg.n);
    const bool folding = !cfg.fold_expr.empty();
    const auto input = expr_from_json(cartan, load_json_argument(folding ? cfg.fold_expr : cfg.unfold_expr,
                                                                 folding ? "--fold" : "--unfold"));
    const auto result = folding ? fold(input) : unfold(input);
    if (cfg.format == "json") {
        out << json{{"n", cfg.n},
                    {"op", folding ? "fold" : "unfold"},
                    {"result", expr_to_json(result)},
                    {"text", to_string(result)},
                    {"reduced", is_reduced_expr(result)},
                    {"distinct_parts", distinct_parts(result)}}
                   .dump()
            << '\n';
    } else {
        out << to_string(result) << '\n';
    }
    return kSuccess;
}

int run_intersections(const Config &cfg, std::ostream &out)
{
    const CartanData cartan(cfg.n);
    const auto gamma = parse_gamma(cfg.gamma, cartan);
    const auto poly = intersection_polynomial(cartan, gamma);
    if (cfg.format == "json") {
        out << json{{"n", cfg.n},
                    {"gamma", std::vector<int>(gamma.coeffs().begin(), gamma.coeffs().end())},
                    {"polynomial", poly.to_string()},
                    {"negative_exponents", poly.has_negative_exponents()}}
                   .dump()
            << '\n';
    } else {
        out << poly.to_string() << '\n';
    }
    return kSuccess;
}

} // namespace

int emit_report(const VerificationReport &report, const std::string &format, std::ostream &out)
{
    if (format == "json") {
        out << report_to_json(report).dump() << '\n';
    } else {
        out << "n: " << report.n << '\n'
            << "D: " << report.cutoff << '\n'
            << "equal: " << (report.equal ? "true" : "false") << '\n'
            << "wall_count: " << report.wall_count << '\n'
            << "root_count: " << report.root_count << '\n';
        if (report.first_mismatch) {
            const auto &m = *report.first_mismatch;
            out << "first_mismatch: gamma=" << to_string(m.gamma) << " lhs=" << m.lhs.to_string()
                << " rhs=" << m.rhs.to_string() << '\n';
        } else {
            out << "first_mismatch: none\n";
        }
    }
    return report.equal ? kSuccess : kMismatch;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Generalized Young walls of affine type A_n^(1): statistics, Kostant partitions, series identities"};
    app.name("gyw");
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&](CLI::App *sub, const std::string &default_format) {
        sub->add_option("--n", cfg.n, "rank parameter n >= 1")->required()->check(CLI::Range(1, kMaxInt));
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->default_str(default_format);
    };

    std::vector<CLI::App *> verify;
    for (const auto *name : {"verify-gk", "verify-correction", "verify-ig"}) {
        auto *sub = app.add_subcommand(name, "verify a truncated series identity");
        sub->add_option("--degree", cfg.degree, "height cutoff D >= 0")->required()->check(CLI::Range(0, kMaxInt));
        verify.push_back(sub);
    }
    auto *enumerate = app.add_subcommand("enumerate", "list reduced proper walls as JSON lines");
    enumerate->add_option("--boxes", cfg.boxes, "maximum number of boxes")->required()->check(CLI::Range(0, kMaxInt));
    enumerate->add_flag("--y0", cfg.y0, "only walls with empty rows in positions divisible by n+1");
    auto *stats = app.add_subcommand("stats", "statistics of one wall");
    stats->add_option("--wall", cfg.wall, "wall as inline JSON or a JSON file")->required();
    auto *kostant = app.add_subcommand("kostant", "fold or unfold a Kostant expression");
    auto *direction = kostant->add_option_group("direction", "exactly one of --fold, --unfold");
    direction->add_option("--fold", cfg.fold_expr, "expression JSON (inline or file) to fold");
    direction->add_option("--unfold", cfg.unfold_expr, "expression JSON (inline or file) to unfold");
    direction->require_option(1);
    auto *intersections = app.add_subcommand("intersections", "orbit intersection point count polynomial");
    intersections->add_option("--gamma", cfg.gamma, "comma-separated coefficients a0,...,an")->required();

    for (auto *sub : verify) {
        add_common(sub, "json");
    }
    add_common(enumerate, "json");
    add_common(stats, "json");
    add_common(kostant, "json");
    add_common(intersections, "table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    auto *active = app.get_subcommands().front();
    if (active->count("--format") == 0) {
        cfg.format = active == intersections ? "table" : "json";
    }

    try {
        const std::string name = active->get_name();
        if (name == "verify-gk") {
            return emit_report(verify_gk(CartanData(cfg.n), cfg.degree), cfg.format, out);
        }
        if (name == "verify-correction") {
            return emit_report(verify_correction(CartanData(cfg.n), cfg.degree), cfg.format, out);
        }
        if (name == "verify-ig") {
            return emit_report(verify_intersections(CartanData(cfg.n), cfg.degree), cfg.format, out);
        }
        if (name == "enumerate") {
            return run_enumerate(cfg, out);
        }
        if (name == "stats") {
            return run_stats(cfg, out);
        }
        if (name == "kostant") {
            return run_kostant(cfg, out);
        }
        return run_intersections(cfg, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace gyw::cli
