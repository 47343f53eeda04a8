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

#include <gyw/young_wall.hpp>

#include <algorithm>
#include <deque>
#include <string>

#include <gyw/errors.hpp>

namespace gyw
{

Wall::Wall(CartanData cartan, std::vector<int> rows) : cartan_(cartan), rows_(std::move(rows))
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r] < 0) {
            throw ValidationError("row " + std::to_string(r + 1) + " has negative length");
        }
    }
    while (!rows_.empty() && rows_.back() == 0) {
        rows_.pop_back();
    }
}

int Wall::row(int r) const
{
    if (r < 1) {
        throw ParameterError("row index must be >= 1");
    }
    return r <= num_rows() ? rows_[static_cast<std::size_t>(r - 1)] : 0;
}

int Wall::max_length() const noexcept
{
    return rows_.empty() ? 0 : *std::max_element(rows_.begin(), rows_.end());
}

bool is_proper(const Wall &w)
{
    const int step = w.cartan().rank();
    for (int r = 1 + step; r <= w.num_rows(); ++r) {
        if (w.row(r) > w.row(r - step)) {
            return false;
        }
    }
    return true;
}

std::vector<int> column_counts(const Wall &w, int k)
{
    if (k < 1) {
        throw ParameterError("column index must be >= 1");
    }
    std::vector<int> counts(static_cast<std::size_t>(w.cartan().rank()), 0);
    for (int r = 1; r <= w.num_rows(); ++r) {
        if (w.row(r) >= k) {
            ++counts[static_cast<std::size_t>(w.color(r, k))];
        }
    }
    return counts;
}

bool is_reduced(const Wall &w)
{
    if (!is_proper(w)) {
        throw PreconditionError("reducedness is only defined for proper walls");
    }
    const int rank = w.cartan().rank();
    const int last = w.max_length();
    if (last == 0) {
        return true;
    }
    auto here = column_counts(w, 1);
    for (int k = 1; k <= last; ++k) {
        auto next = column_counts(w, k + 1);
        bool removable = true;
        for (int i = 0; i < rank && removable; ++i) {
            const auto prev_color = static_cast<std::size_t>(w.cartan().reduce(i - 1));
            removable = next[prev_color] < here[static_cast<std::size_t>(i)];
        }
        if (removable) {
            return false;
        }
        here = std::move(next);
    }
    return true;
}

void require_reduced_proper(const Wall &w)
{
    if (!is_proper(w)) {
        throw PreconditionError("wall is not proper");
    }
    if (!is_reduced(w)) {
        throw PreconditionError("wall is not reduced");
    }
}

RootVector weight(const Wall &w)
{
    auto m = w.cartan().zero();
    for (int r = 1; r <= w.num_rows(); ++r) {
        for (int c = 1; c <= w.row(r); ++c) {
            ++m[static_cast<std::size_t>(w.color(r, c))];
        }
    }
    return m;
}

int box_count(const Wall &w)
{
    int total = 0;
    for (int len : w.rows()) {
        total += len;
    }
    return total;
}

PartStatisticComponents part_statistic_components(const Wall &w)
{
    require_reduced_proper(w);
    const int rank = w.cartan().rank();
    PartStatisticComponents out;
    out.lengths.assign(static_cast<std::size_t>(rank), std::set<int>{0});
    for (int r = 1; r <= w.num_rows(); ++r) {
        out.lengths[static_cast<std::size_t>(w.residue_class(r) - 1)].insert(w.row(r));
    }

    out.absorbed.insert(0);
    std::map<int, int> max_power; // q -> max p
    for (int top = rank; top <= w.num_rows(); top += rank) {
        int len = w.row(top);
        if (len == 0) {
            out.top_class_factors.emplace_back(0, 0);
            continue;
        }
        int p = 0;
        while (len % rank == 0) {
            len /= rank;
            ++p;
        }
        out.top_class_factors.emplace_back(p, len);
        int value = len;
        for (int s = 0; s < p; ++s, value *= rank) {
            out.absorbed.insert(value);
        }
        auto &best = max_power[len];
        best = std::max(best, p);
    }
    for (const auto &[q, p] : max_power) {
        out.power_sum += p;
    }
    return out;
}

int part_statistic(const Wall &w)
{
    const auto parts = part_statistic_components(w);
    int total = w.n() * parts.power_sum;
    for (const auto &s : parts.lengths) {
        total += static_cast<int>(std::count_if(s.begin(), s.end(), [&](int len) { return !parts.absorbed.contains(len); }));
    }
    return total;
}

std::map<RowKey, int> split_rows(const Wall &w)
{
    require_reduced_proper(w);
    const int rank = w.cartan().rank();
    std::map<RowKey, int> rows;
    for (int r = 1; r <= w.num_rows(); ++r) {
        if (w.row(r) > 0) {
            ++rows[{w.residue_class(r), w.row(r)}];
        }
    }
    for (int ell = w.max_length() / rank; ell >= 1; --ell) {
        auto it = rows.find({rank, rank * ell});
        if (it == rows.end()) {
            continue;
        }
        const int count = it->second;
        rows.erase(it);
        for (int j = 1; j <= rank; ++j) {
            rows[{j, ell}] += count;
        }
    }
    return rows;
}

int part_statistic_by_splitting(const Wall &w)
{
    return static_cast<int>(split_rows(w).size());
}

namespace
{

using Partition = std::vector<int>;

void partitions_into(int remaining, int max_part, Partition &current, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

const std::vector<Partition> &partitions_of(int size)
{
    // Grown on demand; deque growth keeps earlier entries in place.
    thread_local std::deque<std::vector<Partition>> cache;
    while (static_cast<int>(cache.size()) <= size) {
        std::vector<Partition> ps;
        Partition scratch;
        partitions_into(static_cast<int>(cache.size()), static_cast<int>(cache.size()), scratch, ps);
        cache.push_back(std::move(ps));
    }
    return cache[static_cast<std::size_t>(size)];
}

// Proper walls with exactly `boxes` boxes whose rows live in classes
// 1..classes: each class holds a partition, realized bottom-up.
std::vector<Wall> class_partition_walls(const CartanData &cartan, int boxes, int classes)
{
    const int rank = cartan.rank();
    std::vector<Wall> out;
    std::vector<const Partition *> chosen(static_cast<std::size_t>(classes), nullptr);

    std::function<void(int, int)> pick = [&](int cls, int remaining) {
        if (cls == classes - 1) {
            for (const auto &p : partitions_of(remaining)) {
                chosen[static_cast<std::size_t>(cls)] = &p;
                std::vector<int> rows;
                for (int j = 0; j < classes; ++j) {
                    const auto &parts = *chosen[static_cast<std::size_t>(j)];
                    for (std::size_t t = 0; t < parts.size(); ++t) {
                        const auto r = static_cast<std::size_t>(j) + t * static_cast<std::size_t>(rank);
                        if (rows.size() <= r) {
                            rows.resize(r + 1, 0);
                        }
                        rows[r] = parts[t];
                    }
                }
                Wall w(cartan, std::move(rows));
                if (is_reduced(w)) {
                    out.push_back(std::move(w));
                }
            }
            return;
        }
        for (int size = 0; size <= remaining; ++size) {
            for (const auto &p : partitions_of(size)) {
                chosen[static_cast<std::size_t>(cls)] = &p;
                pick(cls + 1, remaining - size);
            }
        }
    };
    pick(0, boxes);

    std::sort(out.begin(), out.end(), [](const Wall &a, const Wall &b) {
        if (a.num_rows() != b.num_rows()) {
            return a.num_rows() < b.num_rows();
        }
        return std::lexicographical_compare(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end());
    });
    return out;
}

} // namespace

std::vector<Wall> reduced_proper_walls_with_boxes(const CartanData &cartan, int boxes)
{
    if (boxes < 0) {
        throw ParameterError("box count must be >= 0");
    }
    return class_partition_walls(cartan, boxes, cartan.rank());
}

void for_each_reduced_proper(const CartanData &cartan, int max_boxes, const std::function<void(const Wall &)> &fn)
{
    for (int b = 0; b <= max_boxes; ++b) {
        for (const auto &w : reduced_proper_walls_with_boxes(cartan, b)) {
            fn(w);
        }
    }
}

std::vector<Wall> enumerate_reduced_proper(const CartanData &cartan, int max_boxes)
{
    std::vector<Wall> out;
    for_each_reduced_proper(cartan, max_boxes, [&](const Wall &w) { out.push_back(w); });
    return out;
}

bool has_empty_zero_class(const Wall &w)
{
    const int rank = w.cartan().rank();
    for (int r = rank; r <= w.num_rows(); r += rank) {
        if (w.row(r) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Wall> empty_zero_class_walls_with_boxes(const CartanData &cartan, int boxes)
{
    if (boxes < 0) {
        throw ParameterError("box count must be >= 0");
    }
    return class_partition_walls(cartan, boxes, cartan.n());
}

std::vector<Wall> enumerate_empty_zero_class(const CartanData &cartan, int max_boxes)
{
    std::vector<Wall> out;
    for (int b = 0; b <= max_boxes; ++b) {
        auto walls = empty_zero_class_walls_with_boxes(cartan, b);
        out.insert(out.end(), walls.begin(), walls.end());
    }
    return out;
}

MultiPartition::MultiPartition(std::vector<std::vector<int>> components) : components_(std::move(components))
{
    for (std::size_t j = 0; j < components_.size(); ++j) {
        const auto &p = components_[j];
        for (std::size_t t = 0; t < p.size(); ++t) {
            if (p[t] <= 0) {
                throw ValidationError("component " + std::to_string(j + 1) + " has a nonpositive part");
            }
            if (t > 0 && p[t] > p[t - 1]) {
                throw ValidationError("component " + std::to_string(j + 1) + " is not weakly decreasing");
            }
        }
    }
}

int MultiPartition::size() const noexcept
{
    int total = 0;
    for (const auto &p : components_) {
        for (int part : p) {
            total += part;
        }
    }
    return total;
}

Wall wall_from_multipartition(const CartanData &cartan, const MultiPartition &mp)
{
    const auto &comps = mp.components();
    if (static_cast<int>(comps.size()) != cartan.n()) {
        throw ValidationError("expected " + std::to_string(cartan.n()) + " partitions, got "
                              + std::to_string(comps.size()));
    }
    const auto rank = static_cast<std::size_t>(cartan.rank());
    std::vector<int> rows;
    for (std::size_t j = 0; j < comps.size(); ++j) {
        for (std::size_t t = 0; t < comps[j].size(); ++t) {
            const std::size_t r = j + t * rank;
            if (rows.size() <= r) {
                rows.resize(r + 1, 0);
            }
            rows[r] = comps[j][t];
        }
    }
    return Wall(cartan, std::move(rows));
}

MultiPartition multipartition_from_wall(const Wall &w)
{
    if (!has_empty_zero_class(w)) {
        throw DomainError("wall has a nonempty row in a position divisible by n+1");
    }
    if (!is_proper(w)) {
        throw DomainError("wall is not proper");
    }
    std::vector<std::vector<int>> comps(static_cast<std::size_t>(w.n()));
    for (int r = 1; r <= w.num_rows(); ++r) {
        const int cls = w.residue_class(r);
        if (cls <= w.n() && w.row(r) > 0) {
            comps[static_cast<std::size_t>(cls - 1)].push_back(w.row(r));
        }
    }
    return MultiPartition(std::move(comps));
}

int weighted_row_count(const Wall &w)
{
    if (!has_empty_zero_class(w)) {
        throw DomainError("weighted row count needs empty rows in positions divisible by n+1");
    }
    int total = 0;
    for (int r = 1; r <= w.num_rows(); ++r) {
        if (w.row(r) > 0) {
            total += w.residue_class(r) + 1;
        }
    }
    return total;
}

Wall from_color_rows(const CartanData &cartan, const std::vector<std::vector<int>> &rows)
{
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int row = static_cast<int>(r) + 1;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int column = static_cast<int>(c) + 1;
            const int expected = cartan.reduce(row - column);
            if (rows[r][c] != expected) {
                throw ValidationError("row " + std::to_string(row) + " column " + std::to_string(column)
                                      + " must have color " + std::to_string(expected) + ", got "
                                      + std::to_string(rows[r][c]));
            }
        }
        lengths.push_back(static_cast<int>(rows[r].size()));
    }
    return Wall(cartan, std::move(lengths));
}

std::vector<std::vector<int>> to_color_rows(const Wall &w)
{
    std::vector<std::vector<int>> out;
    for (int r = 1; r <= w.num_rows(); ++r) {
        std::vector<int> colors;
        for (int c = 1; c <= w.row(r); ++c) {
            colors.push_back(w.color(r, c));
        }
        out.push_back(std::move(colors));
    }
    return out;
}

} // namespace gyw
