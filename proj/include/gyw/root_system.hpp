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

#ifndef GYW_ROOT_SYSTEM_HPP
#define GYW_ROOT_SYSTEM_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gyw
{

// Element of the root lattice of A_n^(1), stored by its coefficients over
// the simple roots alpha_0..alpha_n.
class RootVector
{
public:
    RootVector() = default;
    explicit RootVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

    static RootVector zero(std::size_t size) { return RootVector(std::vector<int>(size, 0)); }

    std::size_t size() const noexcept { return coeffs_.size(); }
    int operator[](std::size_t i) const { return coeffs_[i]; }
    int &operator[](std::size_t i) { return coeffs_[i]; }
    std::span<const int> coeffs() const noexcept { return coeffs_; }

    // Sum of the coefficients.
    int height() const noexcept;
    bool is_nonnegative() const noexcept;

    RootVector &operator+=(const RootVector &other);
    RootVector &operator-=(const RootVector &other);
    RootVector &operator*=(int factor);

    friend RootVector operator+(RootVector a, const RootVector &b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector &b) { return a -= b; }
    friend RootVector operator*(int factor, RootVector v) { return v *= factor; }

    friend bool operator==(const RootVector &, const RootVector &) = default;
    // Graded-lexicographic: height first, then coefficients left to right.
    friend std::strong_ordering operator<=>(const RootVector &a, const RootVector &b);

private:
    std::vector<int> coeffs_;
};

// "(1,0,1)"
std::string to_string(const RootVector &v);

// Cartan datum of type A_n^(1); the index set is I = {0, ..., n}.
class CartanData
{
public:
    explicit CartanData(int n);

    int n() const noexcept { return n_; }
    // |I| = n + 1.
    int rank() const noexcept { return n_ + 1; }
    // Representative of i modulo n + 1 in {0, ..., n}.
    int reduce(int i) const noexcept;

    RootVector zero() const { return RootVector::zero(static_cast<std::size_t>(rank())); }
    RootVector simple_root(int i) const;
    // delta = alpha_0 + ... + alpha_n
    RootVector delta() const;

    friend bool operator==(const CartanData &, const CartanData &) = default;

private:
    int n_;
};

// alpha_i + alpha_{i-1} + ... + alpha_{i-ell+1}, indices mod n+1, 1 <= ell <= n.
RootVector composite_root(const CartanData &cartan, int i, int ell);

struct PositiveRoot
{
    RootVector root;
    int multiplicity = 1;
    bool imaginary = false;
};

// Every positive root of height <= max_height exactly once, in graded-lex order.
// Real roots carry multiplicity 1, the imaginary roots m*delta multiplicity n.
std::vector<PositiveRoot> positive_roots_up_to(const CartanData &cartan, int max_height);

} // namespace gyw

#endif
