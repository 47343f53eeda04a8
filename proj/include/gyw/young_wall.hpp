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

#ifndef GYW_YOUNG_WALL_HPP
#define GYW_YOUNG_WALL_HPP

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <gyw/root_system.hpp>

namespace gyw
{

// A generalized Young wall of type A_n^(1), stored as row lengths.
//
// Rows are numbered from 1 at the bottom and filled right to left; the box in
// row r, column c (counted from the right) has color (r - c) mod (n+1), so
// colors are implied by position and never stored. Trailing empty rows are
// trimmed, which makes structural equality the natural one.
class Wall
{
public:
    explicit Wall(CartanData cartan, std::vector<int> rows = {});

    const CartanData &cartan() const noexcept { return cartan_; }
    int n() const noexcept { return cartan_.n(); }

    std::span<const int> rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    // Length N_r of row r (1-based); zero above the top nonempty row.
    int row(int r) const;
    int max_length() const noexcept;
    bool empty() const noexcept { return rows_.empty(); }

    int color(int r, int c) const noexcept { return cartan_.reduce(r - c); }
    // Residue class of row r in 1..n+1.
    int residue_class(int r) const noexcept { return cartan_.reduce(r - 1) + 1; }

    friend bool operator==(const Wall &, const Wall &) = default;

private:
    CartanData cartan_;
    std::vector<int> rows_;
};

// Within each residue class of row indices, lengths weakly decrease upward.
bool is_proper(const Wall &w);

// a_i(k) for i in I: the number of i-colored boxes in column k >= 1.
std::vector<int> column_counts(const Wall &w, int k);

// No column carries a removable delta. Throws PreconditionError on an
// improper wall.
bool is_reduced(const Wall &w);

// Throws PreconditionError unless w is proper and reduced.
void require_reduced_proper(const Wall &w);

// The color counts m_i, i.e. -wt(W) as a nonnegative root vector.
RootVector weight(const Wall &w);
int box_count(const Wall &w);

struct PartStatisticComponents
{
    // lengths[j-1] = S_j, the distinct lengths of rows in class j (always contains 0).
    std::vector<std::set<int>> lengths;
    // (p_m, q_m) for each class-(n+1) row position m = 0, 1, ... within the wall.
    std::vector<std::pair<int, int>> top_class_factors;
    std::set<int> absorbed; // the set Q
    int power_sum = 0;      // the integer P
};

PartStatisticComponents part_statistic_components(const Wall &w);

// The statistic n*P + sum_j #(S_j \ Q): the number of distinct parts of the
// fully unfolded Kostant partition attached to the wall.
int part_statistic(const Wall &w);

struct RowKey
{
    int residue_class;
    int length;
    friend auto operator<=>(const RowKey &, const RowKey &) = default;
};

// Splits every class-(n+1) row of length (n+1)*l, longest first, into n+1
// rows of length l (one per class) until no such row remains. Returns the
// resulting multiset of nonempty rows keyed by (class, length).
std::map<RowKey, int> split_rows(const Wall &w);
// Number of distinct rows after splitting.
int part_statistic_by_splitting(const Wall &w);

// Reduced proper walls with exactly `boxes` boxes, ordered by number of rows
// and then lexicographically on row lengths.
std::vector<Wall> reduced_proper_walls_with_boxes(const CartanData &cartan, int boxes);
void for_each_reduced_proper(const CartanData &cartan, int max_boxes, const std::function<void(const Wall &)> &fn);
// All reduced proper walls with at most max_boxes boxes, graded by box count.
std::vector<Wall> enumerate_reduced_proper(const CartanData &cartan, int max_boxes);

// Walls whose rows in positions = 0 mod n+1 are all empty.
bool has_empty_zero_class(const Wall &w);
std::vector<Wall> empty_zero_class_walls_with_boxes(const CartanData &cartan, int boxes);
std::vector<Wall> enumerate_empty_zero_class(const CartanData &cartan, int max_boxes);

// An n-tuple of partitions, each weakly decreasing with positive parts.
class MultiPartition
{
public:
    explicit MultiPartition(std::vector<std::vector<int>> components);

    const std::vector<std::vector<int>> &components() const noexcept { return components_; }
    int size() const noexcept;

    friend bool operator==(const MultiPartition &, const MultiPartition &) = default;

private:
    std::vector<std::vector<int>> components_;
};

// Component j gives the lengths of rows = j mod n+1, largest at the bottom.
Wall wall_from_multipartition(const CartanData &cartan, const MultiPartition &mp);
// Throws DomainError unless the wall has an empty zero class.
MultiPartition multipartition_from_wall(const Wall &w);

// sum_{i=1}^n (i+1) * (number of nonempty rows in class i); walls with an
// empty zero class only.
int weighted_row_count(const Wall &w);

// Rows given as color lists, rightmost box first. Every color is validated
// against the board.
Wall from_color_rows(const CartanData &cartan, const std::vector<std::vector<int>> &rows);
std::vector<std::vector<int>> to_color_rows(const Wall &w);

} // namespace gyw

#endif
