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

#ifndef GYW_KOSTANT_HPP
#define GYW_KOSTANT_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include <gyw/root_system.hpp>
#include <gyw/young_wall.hpp>

namespace gyw
{

enum class PartKind
{
    Real,  // (k delta + alpha_i^(ell)), k >= 0
    Imag,  // (k delta_j), k >= 1, 1 <= j <= n
    Delta, // the generator D^(m), m >= 1
};

// One part of a Kostant expression. Ordered Real < Imag < Delta, then by
// (k, index, ell); a Delta part keeps m in `k`.
struct KostantPart
{
    PartKind kind = PartKind::Real;
    int k = 0;
    int index = 0;
    int ell = 0;

    static KostantPart real(int k, int i, int ell) { return {PartKind::Real, k, i, ell}; }
    static KostantPart imag(int k, int j) { return {PartKind::Imag, k, j, 0}; }
    static KostantPart delta(int m) { return {PartKind::Delta, m, 0, 0}; }

    int height(const CartanData &cartan) const;
    RootVector weight(const CartanData &cartan) const;

    friend auto operator<=>(const KostantPart &, const KostantPart &) = default;
};

// "(2d+a1^(2))", "(a0)", "(1d_2)", "D^(3)"
std::string to_string(const KostantPart &part);

// Finite multiset of parts.
class KostantExpr
{
public:
    explicit KostantExpr(CartanData cartan) : cartan_(cartan) {}

    const CartanData &cartan() const noexcept { return cartan_; }
    const std::map<KostantPart, long> &parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    long multiplicity(const KostantPart &part) const;
    // Validates the part against n and adds `count` copies.
    void add(const KostantPart &part, long count = 1);
    // Throws DomainError when fewer than `count` copies are present.
    void remove(const KostantPart &part, long count = 1);

    long total_parts() const noexcept;
    bool has_delta() const noexcept;

    friend bool operator==(const KostantExpr &, const KostantExpr &) = default;

private:
    CartanData cartan_;
    std::map<KostantPart, long> parts_;
};

// Parts joined by " + " in canonical order, multiplicities as prefixes:
// "2(a1) + (1d_2)". The empty expression renders as "0".
std::string to_string(const KostantExpr &e);

RootVector expr_weight(const KostantExpr &e);
int expr_height(const KostantExpr &e);

// Smallest m such that the expression contains all parts of one defining
// relation for D^(m), i.e. a removable delta; nullopt when reduced.
std::optional<int> find_removable_delta(const KostantExpr &e);
inline bool is_reduced_expr(const KostantExpr &e) { return !find_removable_delta(e); }

// Reduction map: for m = 1, 2, ... replaces as many copies of the relation
// for D^(m) as possible by D^(m). The result contains no removable delta.
KostantExpr fold(const KostantExpr &e);

// Unfolding map: repeatedly replaces the largest D^(r) by its relation image.
// The result contains no Delta parts.
KostantExpr unfold(const KostantExpr &e);

// Unfolding of D^((n+1)^p q) in closed form, q = (n+1)r + s with 1 <= s <= n:
//   sum_{j=1}^{n+1} (r delta + alpha_{j-1}^(s)) + sum_{i<p} sum_j ((n+1)^i q delta_j).
KostantExpr unfold_delta_closed_form(const CartanData &cartan, int p, int q);
// Same, for D^(m) with m factored internally.
KostantExpr unfold_delta_closed_form(const CartanData &cartan, int m);

int distinct_parts(const KostantExpr &e);

// Row-to-part bijection from reduced proper walls to reduced expressions.
KostantExpr wall_to_kostant(const Wall &w);
// Its inverse; throws DomainError on an unreduced expression.
Wall kostant_to_wall(const KostantExpr &e);

} // namespace gyw

#endif
