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

#ifndef GYW_GK_HPP
#define GYW_GK_HPP

#include <cstddef>
#include <optional>

#include <gyw/root_system.hpp>
#include <gyw/series.hpp>

namespace gyw
{

struct Mismatch
{
    RootVector gamma;
    QLaurent lhs;
    QLaurent rhs;
};

struct VerificationReport
{
    int n = 0;
    int cutoff = 0;
    ZSeries side_a; // product side
    ZSeries side_b; // sum side
    bool equal = false;
    std::optional<Mismatch> first_mismatch;
    // Walls (or wall pairs) summed over, and geometric factors multiplied.
    std::size_t wall_count = 0;
    std::size_t root_count = 0;
};

// First exponent, in graded-lex order, where the two series differ.
std::optional<Mismatch> first_mismatch(const ZSeries &a, const ZSeries &b);

// prod_{alpha > 0} ((1 - q^-1 z^alpha) / (1 - z^alpha))^mult(alpha), truncated at height D.
ZSeries gk_product(const CartanData &cartan, int cutoff);
// sum over reduced proper walls of (1 - q^-1)^N(W) z^weight(W), truncated at height D.
ZSeries gk_sum(const CartanData &cartan, int cutoff);
VerificationReport verify_gk(const CartanData &cartan, int cutoff);

// prod_{i=1}^n prod_{j>=1} (1 - q^-i z^{j delta}) / (1 - q^-(i+1) z^{j delta})
ZSeries correction_product(const CartanData &cartan, int cutoff);
// sum over walls with empty zero class of (1 - q)^N(W) q^-M(W) z^{|W| delta}
ZSeries correction_sum(const CartanData &cartan, int cutoff);
VerificationReport verify_correction(const CartanData &cartan, int cutoff);

// correction_product * gk_product
ZSeries intersection_product(const CartanData &cartan, int cutoff);
// Sum over pairs (W1, W2), W2 with empty zero class.
ZSeries intersection_sum(const CartanData &cartan, int cutoff);
VerificationReport verify_intersections(const CartanData &cartan, int cutoff);

// The point count of the orbit intersection indexed by gamma, as a Laurent
// polynomial in q. Throws DomainError on negative entries.
QLaurent intersection_polynomial(const CartanData &cartan, const RootVector &gamma);

} // namespace gyw

#endif
