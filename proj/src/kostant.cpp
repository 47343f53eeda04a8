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

#include <gyw/kostant.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

#include <gyw/errors.hpp>

namespace gyw
{

int KostantPart::height(const CartanData &cartan) const
{
    switch (kind) {
    case PartKind::Real:
        return cartan.rank() * k + ell;
    case PartKind::Imag:
    case PartKind::Delta:
        return cartan.rank() * k;
    }
    return 0;
}

RootVector KostantPart::weight(const CartanData &cartan) const
{
    auto w = k * cartan.delta();
    if (kind == PartKind::Real) {
        w += composite_root(cartan, index, ell);
    }
    return w;
}

std::string to_string(const KostantPart &part)
{
    std::ostringstream os;
    switch (part.kind) {
    case PartKind::Real:
        os << '(';
        if (part.k != 0) {
            os << part.k << "d+";
        }
        os << 'a' << part.index;
        if (part.ell != 1) {
            os << "^(" << part.ell << ')';
        }
        os << ')';
        break;
    case PartKind::Imag:
        os << '(' << part.k << "d_" << part.index << ')';
        break;
    case PartKind::Delta:
        os << "D^(" << part.k << ')';
        break;
    }
    return os.str();
}

long KostantExpr::multiplicity(const KostantPart &part) const
{
    auto it = parts_.find(part);
    return it == parts_.end() ? 0 : it->second;
}

void KostantExpr::add(const KostantPart &part, long count)
{
    const int n = cartan_.n();
    switch (part.kind) {
    case PartKind::Real:
        if (part.k < 0 || part.index < 0 || part.index > n || part.ell < 1 || part.ell > n) {
            throw ValidationError("invalid real part " + to_string(part) + " for n=" + std::to_string(n));
        }
        break;
    case PartKind::Imag:
        if (part.k < 1 || part.index < 1 || part.index > n) {
            throw ValidationError("invalid imaginary part " + to_string(part) + " for n=" + std::to_string(n));
        }
        break;
    case PartKind::Delta:
        if (part.k < 1) {
            throw ValidationError("delta generator index must be >= 1");
        }
        break;
    }
    if (count < 0) {
        throw ParameterError("negative multiplicity");
    }
    if (count > 0) {
        parts_[part] += count;
    }
}

void KostantExpr::remove(const KostantPart &part, long count)
{
    auto it = parts_.find(part);
    const long have = it == parts_.end() ? 0 : it->second;
    if (have < count) {
        throw DomainError("cannot remove " + std::to_string(count) + " copies of " + to_string(part));
    }
    if (have == count) {
        if (it != parts_.end()) {
            parts_.erase(it);
        }
    } else {
        it->second -= count;
    }
}

long KostantExpr::total_parts() const noexcept
{
    long total = 0;
    for (const auto &[p, c] : parts_) {
        total += c;
    }
    return total;
}

bool KostantExpr::has_delta() const noexcept
{
    return !parts_.empty() && parts_.rbegin()->first.kind == PartKind::Delta;
}

std::string to_string(const KostantExpr &e)
{
    if (e.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[part, count] : e.parts()) {
        os << (first ? "" : " + ");
        first = false;
        if (count != 1) {
            os << count;
        }
        os << to_string(part);
    }
    return os.str();
}

RootVector expr_weight(const KostantExpr &e)
{
    auto w = e.cartan().zero();
    for (const auto &[part, count] : e.parts()) {
        w += static_cast<int>(count) * part.weight(e.cartan());
    }
    return w;
}

int expr_height(const KostantExpr &e)
{
    return expr_weight(e).height();
}

namespace
{

// How many full copies of the relation for D^(m) the expression contains.
long relation_copies(const KostantExpr &e, int m)
{
    const auto &cartan = e.cartan();
    const int rank = cartan.rank();
    const int k = m / rank;
    const int ell = m % rank;
    long copies = std::numeric_limits<long>::max();
    if (ell != 0) {
        for (int i = 0; i <= cartan.n(); ++i) {
            copies = std::min(copies, e.multiplicity(KostantPart::real(k, i, ell)));
        }
    } else {
        copies = e.multiplicity(KostantPart::delta(k));
        for (int j = 1; j <= cartan.n(); ++j) {
            copies = std::min(copies, e.multiplicity(KostantPart::imag(k, j)));
        }
    }
    return copies;
}

// Replaces `copies` relation images of D^(m) by D^(m) (or the reverse).
void apply_relation(KostantExpr &e, int m, long copies, bool folding)
{
    const auto &cartan = e.cartan();
    const int rank = cartan.rank();
    const int k = m / rank;
    const int ell = m % rank;
    auto move = [&](const KostantPart &part) {
        if (folding) {
            e.remove(part, copies);
        } else {
            e.add(part, copies);
        }
    };
    if (ell != 0) {
        for (int i = 0; i <= cartan.n(); ++i) {
            move(KostantPart::real(k, i, ell));
        }
    } else {
        move(KostantPart::delta(k));
        for (int j = 1; j <= cartan.n(); ++j) {
            move(KostantPart::imag(k, j));
        }
    }
    if (folding) {
        e.add(KostantPart::delta(m), copies);
    } else {
        e.remove(KostantPart::delta(m), copies);
    }
}

} // namespace

std::optional<int> find_removable_delta(const KostantExpr &e)
{
    const int top = expr_height(e);
    for (int m = 1; m <= top; ++m) {
        if (relation_copies(e, m) > 0) {
            return m;
        }
    }
    return std::nullopt;
}

KostantExpr fold(const KostantExpr &e)
{
    KostantExpr out = e;
    // Folding at m only creates D^(m), which is consumed by the relation at
    // (n+1)m > m, so a single ascending pass reaches a fixpoint.
    const int top = expr_height(e);
    for (int m = 1; m <= top; ++m) {
        if (const long copies = relation_copies(out, m); copies > 0) {
            apply_relation(out, m, copies, true);
        }
    }
    return out;
}

KostantExpr unfold(const KostantExpr &e)
{
    KostantExpr out = e;
    while (out.has_delta()) {
        const auto [part, count] = *out.parts().rbegin();
        apply_relation(out, part.k, count, false);
    }
    return out;
}

KostantExpr unfold_delta_closed_form(const CartanData &cartan, int p, int q)
{
    const int rank = cartan.rank();
    if (p < 0 || q < 1) {
        throw ParameterError("closed-form unfolding needs p >= 0 and q >= 1");
    }
    if (q % rank == 0) {
        throw ParameterError("q = " + std::to_string(q) + " must not be divisible by n+1 = " + std::to_string(rank));
    }
    const int r = q / rank;
    const int s = q % rank;
    KostantExpr out(cartan);
    for (int j = 1; j <= rank; ++j) {
        out.add(KostantPart::real(r, j - 1, s));
    }
    int scale = q;
    for (int i = 0; i < p; ++i, scale *= rank) {
        for (int j = 1; j <= cartan.n(); ++j) {
            out.add(KostantPart::imag(scale, j));
        }
    }
    return out;
}

KostantExpr unfold_delta_closed_form(const CartanData &cartan, int m)
{
    if (m < 1) {
        throw ParameterError("delta generator index must be >= 1");
    }
    int p = 0;
    while (m % cartan.rank() == 0) {
        m /= cartan.rank();
        ++p;
    }
    return unfold_delta_closed_form(cartan, p, m);
}

int distinct_parts(const KostantExpr &e)
{
    return static_cast<int>(e.parts().size());
}

KostantExpr wall_to_kostant(const Wall &w)
{
    require_reduced_proper(w);
    const auto &cartan = w.cartan();
    const int rank = cartan.rank();
    KostantExpr out(cartan);
    for (int r = 1; r <= w.num_rows(); ++r) {
        const int len = w.row(r);
        if (len == 0) {
            continue;
        }
        const int j = w.residue_class(r);
        const int k = len / rank;
        const int ell = len % rank;
        if (ell != 0) {
            out.add(KostantPart::real(k, j - 1, ell));
        } else if (j <= cartan.n()) {
            out.add(KostantPart::imag(k, j));
        } else {
            out.add(KostantPart::delta(k));
        }
    }
    return out;
}

Wall kostant_to_wall(const KostantExpr &e)
{
    if (auto m = find_removable_delta(e)) {
        throw DomainError("expression is not reduced: it contains the relation for D^(" + std::to_string(*m) + ")");
    }
    const auto &cartan = e.cartan();
    const int rank = cartan.rank();
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(rank));
    for (const auto &[part, count] : e.parts()) {
        int cls = 0;
        switch (part.kind) {
        case PartKind::Real:
            cls = part.index + 1;
            break;
        case PartKind::Imag:
            cls = part.index;
            break;
        case PartKind::Delta:
            cls = rank;
            break;
        }
        for (long c = 0; c < count; ++c) {
            classes[static_cast<std::size_t>(cls - 1)].push_back(part.height(cartan));
        }
    }
    std::vector<int> rows;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        auto &lens = classes[j];
        std::sort(lens.begin(), lens.end(), std::greater<>());
        for (std::size_t t = 0; t < lens.size(); ++t) {
            const std::size_t r = j + t * static_cast<std::size_t>(rank);
            if (rows.size() <= r) {
                rows.resize(r + 1, 0);
            }
            rows[r] = lens[t];
        }
    }
    return Wall(cartan, std::move(rows));
}

} // namespace gyw
