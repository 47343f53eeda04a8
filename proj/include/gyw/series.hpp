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

#ifndef GYW_SERIES_HPP
#define GYW_SERIES_HPP

#include <cstddef>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include <gyw/root_system.hpp>

namespace gyw
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial in q with integer coefficients. Sparse; zero
// coefficients are never stored, so structural equality is ring equality.
class QLaurent
{
public:
    QLaurent() = default;
    QLaurent(Integer constant); // NOLINT: integers embed as constants
    QLaurent(int constant) : QLaurent(Integer(constant)) {} // NOLINT

    static QLaurent monomial(const Integer &coeff, int exponent);
    // q^e
    static QLaurent q_power(int exponent) { return monomial(1, exponent); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<int, Integer> &terms() const noexcept { return terms_; }
    Integer coefficient(int exponent) const;
    // Both throw on the zero polynomial.
    int min_exponent() const;
    int max_exponent() const;
    bool has_negative_exponents() const noexcept { return !terms_.empty() && terms_.begin()->first < 0; }

    QLaurent pow(unsigned k) const;
    // Exact value at q = x; x must be nonzero when negative exponents occur.
    Rational evaluate(const Rational &x) const;

    QLaurent operator-() const;
    QLaurent &operator+=(const QLaurent &other);
    QLaurent &operator-=(const QLaurent &other);
    QLaurent &operator*=(const QLaurent &other);
    friend QLaurent operator+(QLaurent a, const QLaurent &b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent &b) { return a -= b; }
    friend QLaurent operator*(const QLaurent &a, const QLaurent &b);

    friend bool operator==(const QLaurent &, const QLaurent &) = default;

    // Descending exponents with explicit signs, e.g. "2*q^2 - 4*q + 2",
    // "q^-1 - 1"; the zero polynomial renders as "0".
    std::string to_string() const;

private:
    void add_term(int exponent, const Integer &coeff);

    std::map<int, Integer> terms_;
};

// Truncated formal series in monomials z^gamma, gamma a nonnegative root vector.
// Terms with height(gamma) > cutoff are discarded on insertion.
class ZSeries
{
public:
    ZSeries(std::size_t rank, int cutoff);

    static ZSeries one(std::size_t rank, int cutoff);

    std::size_t rank() const noexcept { return rank_; }
    int cutoff() const noexcept { return cutoff_; }
    const std::map<RootVector, QLaurent> &terms() const noexcept { return terms_; }

    // Adds c * z^gamma; silently dropped when height(gamma) exceeds the cutoff.
    void add_term(const RootVector &gamma, const QLaurent &c);

    // Coefficient of z^gamma. Throws OutOfRangeError beyond the cutoff since
    // that coefficient is unknown rather than zero.
    QLaurent coefficient(const RootVector &gamma) const;

    ZSeries &operator+=(const ZSeries &other);
    friend ZSeries operator*(const ZSeries &a, const ZSeries &b);

    friend bool operator==(const ZSeries &, const ZSeries &) = default;

private:
    void check_compatible(const ZSeries &other) const;

    std::size_t rank_;
    int cutoff_;
    std::map<RootVector, QLaurent> terms_;
};

ZSeries zs_mul(const ZSeries &a, const ZSeries &b);
ZSeries zs_pow(const ZSeries &s, unsigned k);
QLaurent zs_coefficient(const ZSeries &s, const RootVector &gamma);

// Truncation of (1 - num z^gamma) / (1 - den z^gamma):
//   1 + sum_{k>=1} (den^k - num den^{k-1}) z^{k gamma}.
ZSeries zs_geom_factor(std::size_t rank, int cutoff, const RootVector &gamma, const QLaurent &num,
                       const QLaurent &den);

} // namespace gyw

#endif
