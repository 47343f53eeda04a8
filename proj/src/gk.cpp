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

#include <gyw/gk.hpp>

#include <algorithm>

#include <gyw/errors.hpp>
#include <gyw/young_wall.hpp>

namespace gyw
{

namespace
{

std::size_t rank_of(const CartanData &cartan)
{
    return static_cast<std::size_t>(cartan.rank());
}

void check_cutoff(int cutoff)
{
    if (cutoff < 0) {
        throw ParameterError("degree bound must be >= 0");
    }
}

// 1 - q^e
QLaurent one_minus_q_power(int e)
{
    return QLaurent(1) - QLaurent::q_power(e);
}

struct Product
{
    ZSeries series;
    std::size_t factors;
};

Product gk_product_counted(const CartanData &cartan, int cutoff)
{
    check_cutoff(cutoff);
    ZSeries out = ZSeries::one(rank_of(cartan), cutoff);
    std::size_t factors = 0;
    const QLaurent q_inv = QLaurent::q_power(-1);
    for (const auto &root : positive_roots_up_to(cartan, cutoff)) {
        const auto factor = zs_geom_factor(rank_of(cartan), cutoff, root.root, q_inv, QLaurent(1));
        for (int t = 0; t < root.multiplicity; ++t) {
            out = out * factor;
            ++factors;
        }
    }
    return {std::move(out), factors};
}

struct Sum
{
    ZSeries series;
    std::size_t walls;
};

Sum gk_sum_counted(const CartanData &cartan, int cutoff)
{
    check_cutoff(cutoff);
    ZSeries out(rank_of(cartan), cutoff);
    std::size_t walls = 0;
    const QLaurent base = one_minus_q_power(-1);
    for_each_reduced_proper(cartan, cutoff, [&](const Wall &w) {
        out.add_term(weight(w), base.pow(static_cast<unsigned>(part_statistic(w))));
        ++walls;
    });
    return {std::move(out), walls};
}

// (1 - q)^N q^-M for a wall with an empty zero class.
QLaurent correction_term(const Wall &w)
{
    return one_minus_q_power(1).pow(static_cast<unsigned>(part_statistic(w)))
           * QLaurent::q_power(-weighted_row_count(w));
}

Product correction_product_counted(const CartanData &cartan, int cutoff)
{
    check_cutoff(cutoff);
    ZSeries out = ZSeries::one(rank_of(cartan), cutoff);
    std::size_t factors = 0;
    for (int i = 1; i <= cartan.n(); ++i) {
        for (int j = 1; j * cartan.rank() <= cutoff; ++j) {
            out = out * zs_geom_factor(rank_of(cartan), cutoff, j * cartan.delta(), QLaurent::q_power(-i),
                                       QLaurent::q_power(-(i + 1)));
            ++factors;
        }
    }
    return {std::move(out), factors};
}

Sum correction_sum_counted(const CartanData &cartan, int cutoff)
{
    check_cutoff(cutoff);
    ZSeries out(rank_of(cartan), cutoff);
    std::size_t walls = 0;
    for (const auto &w : enumerate_empty_zero_class(cartan, cutoff / cartan.rank())) {
        out.add_term(box_count(w) * cartan.delta(), correction_term(w));
        ++walls;
    }
    return {std::move(out), walls};
}

Sum intersection_sum_counted(const CartanData &cartan, int cutoff)
{
    check_cutoff(cutoff);
    ZSeries out(rank_of(cartan), cutoff);
    std::size_t pairs = 0;
    const QLaurent base = one_minus_q_power(-1);
    for (const auto &upper : enumerate_empty_zero_class(cartan, cutoff / cartan.rank())) {
        const int upper_boxes = box_count(upper);
        const auto shift = upper_boxes * cartan.delta();
        const auto upper_term = correction_term(upper);
        for_each_reduced_proper(cartan, cutoff - cartan.rank() * upper_boxes, [&](const Wall &lower) {
            out.add_term(weight(lower) + shift,
                         base.pow(static_cast<unsigned>(part_statistic(lower))) * upper_term);
            ++pairs;
        });
    }
    return {std::move(out), pairs};
}

VerificationReport make_report(const CartanData &cartan, int cutoff, Product product, Sum sum)
{
    VerificationReport report{cartan.n(), cutoff, std::move(product.series), std::move(sum.series), false,
                              std::nullopt, sum.walls, product.factors};
    report.first_mismatch = first_mismatch(report.side_a, report.side_b);
    report.equal = !report.first_mismatch.has_value();
    return report;
}

} // namespace

std::optional<Mismatch> first_mismatch(const ZSeries &a, const ZSeries &b)
{
    if (a.cutoff() != b.cutoff() || a.rank() != b.rank()) {
        throw UsageError("cannot compare series with different cutoffs or ranks");
    }
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const auto ea = a.terms().end();
    const auto eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return Mismatch{ia->first, ia->second, QLaurent()};
        }
        if (ia == ea || ib->first < ia->first) {
            return Mismatch{ib->first, QLaurent(), ib->second};
        }
        if (ia->second != ib->second) {
            return Mismatch{ia->first, ia->second, ib->second};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

ZSeries gk_product(const CartanData &cartan, int cutoff)
{
    return gk_product_counted(cartan, cutoff).series;
}

ZSeries gk_sum(const CartanData &cartan, int cutoff)
{
    return gk_sum_counted(cartan, cutoff).series;
}

VerificationReport verify_gk(const CartanData &cartan, int cutoff)
{
    return make_report(cartan, cutoff, gk_product_counted(cartan, cutoff), gk_sum_counted(cartan, cutoff));
}

ZSeries correction_product(const CartanData &cartan, int cutoff)
{
    return correction_product_counted(cartan, cutoff).series;
}

ZSeries correction_sum(const CartanData &cartan, int cutoff)
{
    return correction_sum_counted(cartan, cutoff).series;
}

VerificationReport verify_correction(const CartanData &cartan, int cutoff)
{
    return make_report(cartan, cutoff, correction_product_counted(cartan, cutoff),
                       correction_sum_counted(cartan, cutoff));
}

ZSeries intersection_product(const CartanData &cartan, int cutoff)
{
    return correction_product(cartan, cutoff) * gk_product(cartan, cutoff);
}

ZSeries intersection_sum(const CartanData &cartan, int cutoff)
{
    return intersection_sum_counted(cartan, cutoff).series;
}

VerificationReport verify_intersections(const CartanData &cartan, int cutoff)
{
    auto corr = correction_product_counted(cartan, cutoff);
    auto gk = gk_product_counted(cartan, cutoff);
    Product product{corr.series * gk.series, corr.factors + gk.factors};
    return make_report(cartan, cutoff, std::move(product), intersection_sum_counted(cartan, cutoff));
}

QLaurent intersection_polynomial(const CartanData &cartan, const RootVector &gamma)
{
    if (gamma.size() != rank_of(cartan)) {
        throw ValidationError("gamma needs " + std::to_string(cartan.rank()) + " coefficients");
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < 0) {
            throw DomainError("gamma coefficient a" + std::to_string(i) + " is negative");
        }
    }
    const int total = gamma.height();
    const int max_upper = *std::min_element(gamma.coeffs().begin(), gamma.coeffs().end());
    const QLaurent base = one_minus_q_power(-1);
    QLaurent out;
    for (int b = 0; b <= max_upper; ++b) {
        const auto target = gamma - b * cartan.delta();
        const auto lowers = reduced_proper_walls_with_boxes(cartan, total - cartan.rank() * b);
        QLaurent lower_sum;
        for (const auto &lower : lowers) {
            if (weight(lower) == target) {
                lower_sum += base.pow(static_cast<unsigned>(part_statistic(lower)));
            }
        }
        if (lower_sum.is_zero()) {
            continue;
        }
        for (const auto &upper : empty_zero_class_walls_with_boxes(cartan, b)) {
            out += lower_sum * one_minus_q_power(1).pow(static_cast<unsigned>(part_statistic(upper)))
                   * QLaurent::q_power(total - weighted_row_count(upper));
        }
    }
    return out;
}

} // namespace gyw
