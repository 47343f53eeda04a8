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

#include <gyw/root_system.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include <gyw/errors.hpp>

namespace gyw
{

int RootVector::height() const noexcept
{
    return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

bool RootVector::is_nonnegative() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

RootVector &RootVector::operator+=(const RootVector &other)
{
    if (other.size() != size()) {
        throw UsageError("root vectors of different rank");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

RootVector &RootVector::operator-=(const RootVector &other)
{
    if (other.size() != size()) {
        throw UsageError("root vectors of different rank");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

RootVector &RootVector::operator*=(int factor)
{
    for (auto &c : coeffs_) {
        c *= factor;
    }
    return *this;
}

std::strong_ordering operator<=>(const RootVector &a, const RootVector &b)
{
    if (auto c = a.height() <=> b.height(); c != 0) {
        return c;
    }
    return a.coeffs_ <=> b.coeffs_;
}

std::string to_string(const RootVector &v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ')';
    return os.str();
}

CartanData::CartanData(int n) : n_(n)
{
    if (n < 1) {
        throw ParameterError("rank parameter n must be >= 1, got " + std::to_string(n));
    }
}

int CartanData::reduce(int i) const noexcept
{
    const int r = rank();
    return ((i % r) + r) % r;
}

RootVector CartanData::simple_root(int i) const
{
    if (i < 0 || i > n_) {
        throw ParameterError("simple root index " + std::to_string(i) + " outside 0.." + std::to_string(n_));
    }
    auto v = zero();
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

RootVector CartanData::delta() const
{
    return RootVector(std::vector<int>(static_cast<std::size_t>(rank()), 1));
}

RootVector composite_root(const CartanData &cartan, int i, int ell)
{
    if (ell < 1 || ell > cartan.n()) {
        throw ParameterError("composite root length " + std::to_string(ell) + " outside 1.."
                             + std::to_string(cartan.n()));
    }
    if (i < 0 || i > cartan.n()) {
        throw ParameterError("composite root index " + std::to_string(i) + " outside 0.."
                             + std::to_string(cartan.n()));
    }
    auto v = cartan.zero();
    for (int t = 0; t < ell; ++t) {
        v[static_cast<std::size_t>(cartan.reduce(i - t))] = 1;
    }
    return v;
}

std::vector<PositiveRoot> positive_roots_up_to(const CartanData &cartan, int max_height)
{
    // The positive real roots are exactly k*delta + alpha_i^(ell) with k >= 0:
    // cyclic runs of simple roots whose length is not a multiple of n+1.
    std::vector<PositiveRoot> out;
    const int r = cartan.rank();
    for (int k = 0; k * r + 1 <= max_height; ++k) {
        for (int ell = 1; ell <= cartan.n() && k * r + ell <= max_height; ++ell) {
            for (int i = 0; i <= cartan.n(); ++i) {
                out.push_back({k * cartan.delta() + composite_root(cartan, i, ell), 1, false});
            }
        }
        if ((k + 1) * r <= max_height) {
            out.push_back({(k + 1) * cartan.delta(), cartan.n(), true});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.root < b.root; });
    return out;
}

} // namespace gyw
