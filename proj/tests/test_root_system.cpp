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

#include <algorithm>
#include <set>

#include <gyw/errors.hpp>
#include <gyw/root_system.hpp>

#include "oracles.hpp"

using namespace gyw;

namespace
{

RootVector rv(std::vector<int> v)
{
    return RootVector(std::move(v));
}

} // namespace

TEST_CASE("composite roots")
{
    CHECK(composite_root(CartanData(2), 0, 2) == rv({1, 0, 1}));
    CHECK(composite_root(CartanData(2), 1, 2) == rv({1, 1, 0}));
    CHECK(composite_root(CartanData(2), 2, 2) == rv({0, 1, 1}));
    CHECK(composite_root(CartanData(2), 1, 1) == rv({0, 1, 0}));
    CHECK(composite_root(CartanData(1), 0, 1) == rv({1, 0}));

    for (int n = 1; n <= 4; ++n) {
        const CartanData cartan(n);
        for (int i = 0; i <= n; ++i) {
            for (int ell = 1; ell <= n; ++ell) {
                const auto v = composite_root(cartan, i, ell);
                CHECK(v.height() == ell);
                CHECK(std::all_of(v.coeffs().begin(), v.coeffs().end(), [](int c) { return c == 0 || c == 1; }));
            }
        }
    }

    CHECK_THROWS_AS(composite_root(CartanData(2), 0, 3), ParameterError);
    CHECK_THROWS_AS(composite_root(CartanData(2), 0, 0), ParameterError);
    CHECK_THROWS_AS(CartanData(0), ParameterError);
}

TEST_CASE("delta is the sum of the simple roots")
{
    const CartanData cartan(3);
    auto sum = cartan.zero();
    for (int i = 0; i <= 3; ++i) {
        sum += cartan.simple_root(i);
    }
    CHECK(cartan.delta() == sum);
    CHECK(cartan.delta().height() == 4);
}

TEST_CASE("positive roots, small cases")
{
    auto roots = positive_roots_up_to(CartanData(2), 1);
    REQUIRE(roots.size() == 3);
    for (const auto &r : roots) {
        CHECK(r.root.height() == 1);
        CHECK(r.multiplicity == 1);
    }

    roots = positive_roots_up_to(CartanData(1), 2);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].root == rv({0, 1}));
    CHECK(roots[1].root == rv({1, 0}));
    CHECK(roots[2].root == rv({1, 1}));
    CHECK(roots[2].multiplicity == 1);
    CHECK(roots[2].imaginary);

    roots = positive_roots_up_to(CartanData(2), 3);
    std::set<std::vector<int>> height2;
    for (const auto &r : roots) {
        if (r.root.height() == 2) {
            height2.insert(std::vector<int>(r.root.coeffs().begin(), r.root.coeffs().end()));
        }
    }
    CHECK(height2 == std::set<std::vector<int>>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(roots.back().root == rv({1, 1, 1}));
    CHECK(roots.back().multiplicity == 2);
    CHECK(roots.size() == 7);

    CHECK(positive_roots_up_to(CartanData(3), 0).empty());
}

TEST_CASE("positive roots agree with the enumeration of classical roots plus shifts")
{
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 12; ++d) {
            const auto expected = oracle::positive_roots(n, d);
            std::map<std::vector<int>, int> got;
            for (const auto &r : positive_roots_up_to(CartanData(n), d)) {
                auto key = std::vector<int>(r.root.coeffs().begin(), r.root.coeffs().end());
                CHECK_MESSAGE(!got.contains(key), "duplicate root ", to_string(r.root));
                got[key] = r.multiplicity;
            }
            CHECK(got == expected);
        }
    }
}

TEST_CASE("real roots are closed under adding delta within the bound")
{
    const int d = 11;
    for (int n = 1; n <= 3; ++n) {
        const CartanData cartan(n);
        const auto roots = positive_roots_up_to(cartan, d);
        std::set<RootVector> all;
        for (const auto &r : roots) {
            all.insert(r.root);
        }
        for (const auto &r : roots) {
            if (r.imaginary) {
                continue;
            }
            for (auto shifted = r.root + cartan.delta(); shifted.height() <= d; shifted += cartan.delta()) {
                CHECK(all.contains(shifted));
            }
        }
    }
}

TEST_CASE("graded lexicographic order")
{
    CHECK(rv({0, 0, 2}) < rv({1, 1, 1}));
    CHECK(rv({0, 2, 0}) < rv({1, 0, 1}));
    CHECK(rv({5, 0}) > rv({0, 4}));
}
