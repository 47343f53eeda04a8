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

#include <gyw/series.hpp>

#include <sstream>

#include <gyw/errors.hpp>

namespace gyw
{

QLaurent::QLaurent(Integer constant)
{
    add_term(0, constant);
}

QLaurent QLaurent::monomial(const Integer &coeff, int exponent)
{
    QLaurent p;
    p.add_term(exponent, coeff);
    return p;
}

void QLaurent::add_term(int exponent, const Integer &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Integer QLaurent::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int QLaurent::min_exponent() const
{
    if (terms_.empty()) {
        throw DomainError("zero polynomial has no exponents");
    }
    return terms_.begin()->first;
}

int QLaurent::max_exponent() const
{
    if (terms_.empty()) {
        throw DomainError("zero polynomial has no exponents");
    }
    return terms_.rbegin()->first;
}

QLaurent QLaurent::pow(unsigned k) const
{
    QLaurent result(1);
    QLaurent base = *this;
    while (k) {
        if (k & 1u) {
            result *= base;
        }
        k >>= 1u;
        if (k) {
            base *= base;
        }
    }
    return result;
}

Rational QLaurent::evaluate(const Rational &x) const
{
    if (x == 0 && has_negative_exponents()) {
        throw DomainError("cannot evaluate a negative power of q at q = 0");
    }
    Rational total = 0;
    for (const auto &[e, c] : terms_) {
        Rational power = 1;
        const Rational &b = e >= 0 ? x : Rational(1) / x;
        for (int t = 0; t < (e >= 0 ? e : -e); ++t) {
            power *= b;
        }
        total += Rational(c) * power;
    }
    return total;
}

QLaurent QLaurent::operator-() const
{
    QLaurent out = *this;
    for (auto &[e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

QLaurent &QLaurent::operator+=(const QLaurent &other)
{
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

QLaurent &QLaurent::operator-=(const QLaurent &other)
{
    for (const auto &[e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

QLaurent operator*(const QLaurent &a, const QLaurent &b)
{
    QLaurent out;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

QLaurent &QLaurent::operator*=(const QLaurent &other)
{
    return *this = *this * other;
}

std::string QLaurent::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    return os.str();
}

ZSeries::ZSeries(std::size_t rank, int cutoff) : rank_(rank), cutoff_(cutoff)
{
    if (cutoff < 0) {
        throw ParameterError("series cutoff must be >= 0");
    }
}

ZSeries ZSeries::one(std::size_t rank, int cutoff)
{
    ZSeries s(rank, cutoff);
    s.add_term(RootVector::zero(rank), QLaurent(1));
    return s;
}

void ZSeries::add_term(const RootVector &gamma, const QLaurent &c)
{
    if (gamma.size() != rank_ || !gamma.is_nonnegative()) {
        throw ParameterError("series exponent " + to_string(gamma) + " is not a nonnegative vector of rank "
                             + std::to_string(rank_));
    }
    if (gamma.height() > cutoff_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(gamma, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QLaurent ZSeries::coefficient(const RootVector &gamma) const
{
    if (gamma.size() != rank_) {
        throw ParameterError("exponent " + to_string(gamma) + " has the wrong rank");
    }
    if (gamma.height() > cutoff_) {
        throw OutOfRangeError("coefficient of z^" + to_string(gamma) + " lies beyond the cutoff "
                              + std::to_string(cutoff_));
    }
    auto it = terms_.find(gamma);
    return it == terms_.end() ? QLaurent() : it->second;
}

void ZSeries::check_compatible(const ZSeries &other) const
{
    if (other.cutoff_ != cutoff_) {
        throw UsageError("series cutoffs differ: " + std::to_string(cutoff_) + " vs "
                         + std::to_string(other.cutoff_));
    }
    if (other.rank_ != rank_) {
        throw UsageError("series ranks differ");
    }
}

ZSeries &ZSeries::operator+=(const ZSeries &other)
{
    check_compatible(other);
    for (const auto &[g, c] : other.terms_) {
        add_term(g, c);
    }
    return *this;
}

ZSeries operator*(const ZSeries &a, const ZSeries &b)
{
    a.check_compatible(b);
    ZSeries out(a.rank_, a.cutoff_);
    for (const auto &[ga, ca] : a.terms_) {
        const int ha = ga.height();
        for (const auto &[gb, cb] : b.terms_) {
            if (ha + gb.height() > a.cutoff_) {
                // Keys are graded, so every later gb is at least as high.
                break;
            }
            out.add_term(ga + gb, ca * cb);
        }
    }
    return out;
}

ZSeries zs_mul(const ZSeries &a, const ZSeries &b)
{
    return a * b;
}

ZSeries zs_pow(const ZSeries &s, unsigned k)
{
    ZSeries out = ZSeries::one(s.rank(), s.cutoff());
    for (unsigned t = 0; t < k; ++t) {
        out = out * s;
    }
    return out;
}

QLaurent zs_coefficient(const ZSeries &s, const RootVector &gamma)
{
    return s.coefficient(gamma);
}

ZSeries zs_geom_factor(std::size_t rank, int cutoff, const RootVector &gamma, const QLaurent &num,
                       const QLaurent &den)
{
    if (gamma.size() != rank || !gamma.is_nonnegative()) {
        throw ParameterError("factor exponent must be a nonnegative vector of rank " + std::to_string(rank));
    }
    if (gamma.height() == 0) {
        throw ParameterError("geometric factor with z^0 does not converge");
    }
    ZSeries out = ZSeries::one(rank, cutoff);
    QLaurent den_prev(1); // den^{k-1}
    RootVector exponent = gamma;
    while (exponent.height() <= cutoff) {
        QLaurent den_k = den_prev * den;
        out.add_term(exponent, den_k - num * den_prev);
        den_prev = std::move(den_k);
        exponent += gamma;
    }
    return out;
}

} // namespace gyw
