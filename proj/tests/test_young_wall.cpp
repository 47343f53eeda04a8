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

#include <doctest.h>

#include <random>

#include <gyw/errors.hpp>
#include <gyw/gk.hpp>
#include <gyw/young_wall.hpp>

#include "oracles.hpp"

using namespace gyw;

namespace
{

Wall wall(int n, std::vector<int> rows)
{
    return Wall(CartanData(n), std::move(rows));
}

std::vector<std::vector<int>> rows_of(const std::vector<Wall> &walls)
{
    std::vector<std::vector<int>> out;
    for (const auto &w : walls) {
        out.emplace_back(w.rows().begin(), w.rows().end());
    }
    return out;
}

const std::vector<int> kNoSplit{5, 3, 1, 0, 1};
const std::vector<int> kSplit{3, 2, 9, 0, 0, 6};

} // namespace

TEST_CASE("board coloring and trimming")
{
    const auto w = wall(2, {3, 0, 1, 0, 0});
    CHECK(w.num_rows() == 3);
    CHECK(w.row(7) == 0);
    CHECK(w.color(1, 1) == 0);
    CHECK(w.color(1, 2) == 2);
    CHECK(w.color(3, 7) == 2);
    CHECK(w.residue_class(3) == 3);
    CHECK(w.residue_class(4) == 1);
    CHECK_THROWS_AS(wall(2, {1, -1}), ValidationError);
}

TEST_CASE("properness")
{
    CHECK_FALSE(is_proper(wall(1, {2, 0, 3})));
    CHECK(is_proper(wall(2, kSplit)));
    CHECK(is_proper(wall(2, {})));
}

TEST_CASE("column counts")
{
    CHECK(column_counts(wall(1, {1, 1}), 1) == std::vector<int>{1, 1});
    CHECK(column_counts(wall(2, kSplit), 10) == std::vector<int>{0, 0, 0});
    CHECK(column_counts(wall(2, kSplit), 7) == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(column_counts(wall(2, kSplit), 0), ParameterError);
}

TEST_CASE("reducedness")
{
    CHECK_FALSE(is_reduced(wall(1, {1, 1})));
    CHECK(is_reduced(wall(2, kNoSplit)));
    CHECK(is_reduced(wall(1, {1, 0, 1})));
    CHECK(is_reduced(wall(2, {})));
    CHECK_THROWS_AS(is_reduced(wall(1, {2, 0, 3})), PreconditionError);
}

TEST_CASE("weight and content")
{
    const auto w = wall(2, kSplit);
    CHECK(weight(w) == RootVector({7, 7, 6}));
    CHECK(box_count(w) == 20);
    CHECK(weight(wall(2, {})) == RootVector({0, 0, 0}));
    CHECK(box_count(wall(2, {})) == 0);
    CHECK(weight(wall(2, kNoSplit)) == RootVector({3, 3, 4}));
}

TEST_CASE("statistic components, wall without a splitting row")
{
    const auto c = part_statistic_components(wall(2, kNoSplit));
    CHECK(c.lengths[0] == std::set<int>{0, 5});
    CHECK(c.lengths[1] == std::set<int>{0, 1, 3});
    CHECK(c.lengths[2] == std::set<int>{0, 1});
    CHECK(c.top_class_factors == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(c.absorbed == std::set<int>{0});
    CHECK(c.power_sum == 0);
    CHECK(part_statistic(wall(2, kNoSplit)) == 4);
}

TEST_CASE("statistic components, wall with splitting rows")
{
    const auto c = part_statistic_components(wall(2, kSplit));
    CHECK(c.lengths[0] == std::set<int>{0, 3});
    CHECK(c.lengths[1] == std::set<int>{0, 2});
    CHECK(c.lengths[2] == std::set<int>{0, 6, 9});
    CHECK(c.top_class_factors == std::vector<std::pair<int, int>>{{2, 1}, {1, 2}});
    CHECK(c.absorbed == std::set<int>{0, 1, 2, 3});
    CHECK(c.power_sum == 3);
    CHECK(part_statistic(wall(2, kSplit)) == 8);
}

TEST_CASE("statistics of the empty wall")
{
    const auto c = part_statistic_components(wall(3, {}));
    for (const auto &s : c.lengths) {
        CHECK(s == std::set<int>{0});
    }
    CHECK(c.absorbed == std::set<int>{0});
    CHECK(c.power_sum == 0);
    CHECK(part_statistic(wall(3, {})) == 0);
    CHECK(split_rows(wall(3, {})).empty());
    CHECK(part_statistic_by_splitting(wall(3, {})) == 0);
}

TEST_CASE("statistics reject walls outside the reduced proper set")
{
    CHECK_THROWS_AS(part_statistic(wall(1, {1, 1})), PreconditionError);
    CHECK_THROWS_AS(part_statistic(wall(1, {2, 0, 3})), PreconditionError);
    CHECK_THROWS_AS(split_rows(wall(1, {1, 1})), PreconditionError);
}

TEST_CASE("splitting rows")
{
    const auto rows = split_rows(wall(2, kSplit));
    const std::map<RowKey, int> expected{{{1, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 1}, 1}, {{2, 2}, 2},
                                         {{2, 3}, 1}, {{3, 1}, 1}, {{3, 2}, 1}};
    CHECK(rows == expected);
    CHECK(part_statistic_by_splitting(wall(2, kSplit)) == 8);

    const auto untouched = split_rows(wall(2, kNoSplit));
    const std::map<RowKey, int> same{{{1, 5}, 1}, {{2, 3}, 1}, {{3, 1}, 1}, {{2, 1}, 1}};
    CHECK(untouched == same);
}

TEST_CASE("enumeration examples")
{
    CHECK(rows_of(enumerate_reduced_proper(CartanData(1), 2))
          == std::vector<std::vector<int>>{{}, {1}, {0, 1}, {2}, {0, 2}, {1, 0, 1}, {0, 1, 0, 1}});
    CHECK(rows_of(enumerate_reduced_proper(CartanData(1), 0)) == std::vector<std::vector<int>>{{}});
    CHECK(rows_of(enumerate_reduced_proper(CartanData(2), 1))
          == std::vector<std::vector<int>>{{}, {1}, {0, 1}, {0, 0, 1}});
}

TEST_CASE("enumeration matches an exhaustive filter of all row tuples")
{
    for (int n = 1; n <= 3; ++n) {
        const int max_boxes = n == 1 ? 8 : 7;
        const auto expected = oracle::reduced_proper_walls(n, max_boxes);
        const auto walls = enumerate_reduced_proper(CartanData(n), max_boxes);
        std::set<std::vector<int>> got;
        int last_boxes = 0;
        for (const auto &w : walls) {
            CHECK(is_proper(w));
            CHECK(is_reduced(w));
            CHECK(box_count(w) >= last_boxes);
            last_boxes = box_count(w);
            got.emplace(w.rows().begin(), w.rows().end());
        }
        CHECK(got.size() == walls.size());
        CHECK(got == expected);
    }
}

TEST_CASE("the two formulations of the part statistic agree")
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &w : enumerate_reduced_proper(CartanData(n), 8)) {
            CHECK_MESSAGE(part_statistic(w) == part_statistic_by_splitting(w), "n=", n, " rows=",
                          to_string(RootVector(std::vector<int>(w.rows().begin(), w.rows().end()))));
        }
    }
}

TEST_CASE("character of the wall set is the Kostant partition function")
{
    for (int n = 1; n <= 3; ++n) {
        const int max_boxes = 8;
        std::map<std::vector<int>, long> got;
        for (const auto &w : enumerate_reduced_proper(CartanData(n), max_boxes)) {
            const auto wt = weight(w);
            ++got[std::vector<int>(wt.coeffs().begin(), wt.coeffs().end())];
        }
        CHECK(got == oracle::kostant_partition_counts(n, max_boxes));
    }
}

TEST_CASE("walls with an empty zero class")
{
    CHECK(rows_of(enumerate_empty_zero_class(CartanData(1), 2))
          == std::vector<std::vector<int>>{{}, {1}, {2}, {1, 0, 1}});
    for (int n = 1; n <= 3; ++n) {
        const auto all = enumerate_reduced_proper(CartanData(n), 7);
        std::vector<Wall> filtered;
        std::copy_if(all.begin(), all.end(), std::back_inserter(filtered), has_empty_zero_class);
        CHECK(rows_of(enumerate_empty_zero_class(CartanData(n), 7)) == rows_of(filtered));
        for (const auto &w : filtered) {
            const auto c = part_statistic_components(w);
            int expected = 0;
            for (int j = 0; j < n; ++j) {
                expected += static_cast<int>(c.lengths[static_cast<std::size_t>(j)].size()) - 1;
            }
            CHECK(part_statistic(w) == expected);
        }
    }
}

TEST_CASE("multipartitions and walls")
{
    const CartanData cartan(2);
    const MultiPartition mp({{5, 2, 1}, {3, 2, 2}});
    const auto w = wall_from_multipartition(cartan, mp);
    CHECK(std::vector<int>(w.rows().begin(), w.rows().end()) == std::vector<int>{5, 3, 0, 2, 2, 0, 1, 2});
    CHECK(weighted_row_count(w) == 15);
    CHECK(box_count(w) == 15);
    CHECK(multipartition_from_wall(w) == mp);

    CHECK(weighted_row_count(wall(1, {1})) == 2);
    CHECK(weighted_row_count(wall(2, {})) == 0);
    CHECK_THROWS_AS(weighted_row_count(wall(2, {0, 0, 1})), DomainError);
    CHECK_THROWS_AS(multipartition_from_wall(wall(2, {0, 0, 1})), DomainError);
    CHECK_THROWS_AS(MultiPartition(std::vector<std::vector<int>>{{1, 2}}), ValidationError);
    CHECK_THROWS_AS(wall_from_multipartition(cartan, MultiPartition(std::vector<std::vector<int>>{{1}})), ValidationError);

    std::mt19937 gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 3;
        std::vector<std::vector<int>> comps(static_cast<std::size_t>(n));
        for (auto &p : comps) {
            std::uniform_int_distribution<int> len(0, 4);
            std::uniform_int_distribution<int> part(1, 6);
            for (int t = len(gen); t > 0; --t) {
                p.push_back(part(gen));
            }
            std::sort(p.rbegin(), p.rend());
        }
        const MultiPartition random_mp(comps);
        const auto rw = wall_from_multipartition(CartanData(n), random_mp);
        CHECK(has_empty_zero_class(rw));
        CHECK(is_reduced(rw));
        CHECK(multipartition_from_wall(rw) == random_mp);
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto &w0 : enumerate_empty_zero_class(CartanData(n), 7)) {
            CHECK(wall_from_multipartition(CartanData(n), multipartition_from_wall(w0)) == w0);
        }
    }
}

TEST_CASE("color rows")
{
    const CartanData cartan(2);
    CHECK(from_color_rows(cartan, {{0, 2, 1, 0, 2}, {1, 0, 2}, {2}, {}, {1}}) == wall(2, kNoSplit));
    const std::vector<std::vector<int>> split_colors{
        {0, 2, 1}, {1, 0}, {2, 1, 0, 2, 1, 0, 2, 1, 0}, {}, {}, {2, 1, 0, 2, 1, 0}};
    CHECK(from_color_rows(cartan, split_colors) == wall(2, kSplit));
    CHECK(to_color_rows(wall(2, kSplit)) == split_colors);
    try {
        from_color_rows(cartan, {{1}});
        FAIL("expected a validation error");
    } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("row 1 column 1 must have color 0") != std::string::npos);
    }
    for (const auto &w : enumerate_reduced_proper(CartanData(3), 6)) {
        CHECK(from_color_rows(w.cartan(), to_color_rows(w)) == w);
    }
}
