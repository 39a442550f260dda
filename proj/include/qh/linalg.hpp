/*
 * Copyright 2026 The qhurwitz authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <type_traits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qh {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
T ring_one() {
    if constexpr (std::is_constructible_v<T, int>) {
        return T(1);
    } else {
        return T::constant(1);
    }
}

template <typename T>
void check_square(const Matrix<T>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
}

template <typename T>
void check_skew(const Matrix<T>& m) {
    check_square(m);
    T zero{};
    for (size_t i = 0; i < m.size(); ++i) {
        if (!(m[i][i] == zero)) throw std::invalid_argument("skew matrix needs zero diagonal");
        for (size_t j = i + 1; j < m.size(); ++j) {
            T neg = zero;
            neg -= m[j][i];
            if (!(m[i][j] == neg))
                throw std::invalid_argument("matrix is not skew-symmetric");
        }
    }
}

/// Pfaffian of a skew-symmetric matrix of even dimension <= 32, computed by
/// expansion along the first active row, memoized on the index-subset mask.
template <typename T>
T pfaffian(const Matrix<T>& m) {
    check_skew(m);
    size_t n = m.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian needs even dimension");
    if (n == 0) return ring_one<T>();
    if (n > 32) throw std::invalid_argument("pfaffian dimension too large");
    std::unordered_map<uint64_t, T> memo;
    auto rec = [&](auto&& self, uint64_t mask) -> T {
        if (mask == 0) return ring_one<T>();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t first = 0;
        while (!(mask >> first & 1)) ++first;
        T acc{};
        int pos = 0;
        for (size_t j = first + 1; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            uint64_t rest = mask & ~(uint64_t(1) << first) & ~(uint64_t(1) << j);
            T term = m[first][j] * self(self, rest);
            if (pos % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    return rec(rec, full);
}

/// Determinant by Laplace expansion over column subsets, memoized. Exact over
/// any commutative ring; intended for the small matrices used here.
template <typename T>
T determinant(const Matrix<T>& m) {
    check_square(m);
    size_t n = m.size();
    if (n == 0) return ring_one<T>();
    if (n > 32) throw std::invalid_argument("determinant dimension too large");
    std::unordered_map<uint64_t, T> memo;
    // det of the lower-right block: rows (n-k..n-1) against the columns in mask.
    auto rec = [&](auto&& self, uint64_t mask, size_t row) -> T {
        if (row == n) return ring_one<T>();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        T acc{};
        int pos = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            T term = m[row][j] * self(self, mask & ~(uint64_t(1) << j), row + 1);
            if (pos % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    uint64_t full = (uint64_t(1) << n) - 1;
    return rec(rec, full, 0);
}

}  // namespace qh
