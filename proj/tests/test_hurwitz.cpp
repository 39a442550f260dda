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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "qh/hurwitz.hpp"

using namespace qh;

namespace {

struct SymGroup {
    int d;
    std::vector<std::vector<int>> elements;
    std::vector<Partition> types;  // cycle type per element
    std::vector<std::vector<int>> mul_table;

    explicit SymGroup(int d_) : d(d_) {
        std::vector<int> base(d);
        std::iota(base.begin(), base.end(), 0);
        do elements.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        for (const auto& s : elements) types.push_back(cycle_type(s));
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = int(i);
        mul_table.assign(elements.size(), std::vector<int>(elements.size(), 0));
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j = 0; j < elements.size(); ++j) {
                std::vector<int> c(d);
                for (int k = 0; k < d; ++k) c[k] = elements[i][elements[j][k]];
                mul_table[i][j] = index[c];
            }
    }

    static Partition cycle_type(const std::vector<int>& perm) {
        int n = static_cast<int>(perm.size());
        std::vector<bool> seen(n, false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            cycles.push_back(len);
        }
        return Partition::from_unsorted(std::move(cycles));
    }
};

// Tuple-counting oracle: number of (s_1,...,s_k) with prescribed cycle types
// and product the identity, by convolution over the multiplication table.
Rat tuple_oracle(const SymGroup& g, const std::vector<Partition>& profiles) {
    size_t n = g.elements.size();
    std::vector<long> counts(n, 0);
    counts[0] = 1;  // identity is the first lexicographic permutation
    for (const Partition& p : profiles) {
        std::vector<long> next(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (counts[i] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (g.types[j] == p) next[g.mul_table[i][j]] += counts[i];
        }
        counts = std::move(next);
    }
    return frac(Int(counts[0]), factorial(g.d));
}

// Genus oracle: append g commutator pairs by brute force (small d only).
Rat genus_oracle(const SymGroup& grp, int genus, const std::vector<Partition>& profiles) {
    size_t n = grp.elements.size();
    std::vector<long> counts(n, 0);
    counts[0] = 1;
    for (const Partition& p : profiles) {
        std::vector<long> next(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (counts[i] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (grp.types[j] == p) next[grp.mul_table[i][j]] += counts[i];
        }
        counts = std::move(next);
    }
    std::vector<int> inv(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (grp.mul_table[i][j] == 0) inv[i] = int(j);
    for (int gi = 0; gi < genus; ++gi) {
        std::vector<long> next(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (counts[i] == 0) continue;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    int c = grp.mul_table[grp.mul_table[grp.mul_table[i][a]][b]]
                                         [grp.mul_table[inv[a]][inv[b]]];
                    next[c] += counts[i];
                }
        }
        counts = std::move(next);
    }
    return frac(Int(counts[0]), factorial(grp.d));
}

}  // namespace

TEST_CASE("classical hurwitz equals tuple counting, genus 0, d <= 5") {
    for (int d = 1; d <= 5; ++d) {
        SymGroup g(d);
        auto parts = partitions(d);
        // Two profiles: all pairs.
        for (const Partition& p1 : parts)
            for (const Partition& p2 : parts)
                CHECK(classical_hurwitz(0, {p1, p2}) == tuple_oracle(g, {p1, p2}));
        // Three and four profiles: all tuples for d <= 4, a fixed sweep at 5.
        if (d <= 4) {
            for (const Partition& p1 : parts)
                for (const Partition& p2 : parts)
                    for (const Partition& p3 : parts) {
                        CHECK(classical_hurwitz(0, {p1, p2, p3}) ==
                              tuple_oracle(g, {p1, p2, p3}));
                        for (const Partition& p4 : parts)
                            CHECK(classical_hurwitz(0, {p1, p2, p3, p4}) ==
                                  tuple_oracle(g, {p1, p2, p3, p4}));
                    }
        } else {
            for (const Partition& p1 : parts)
                for (const Partition& p2 : parts) {
                    Partition twist({2, 1, 1, 1});
                    CHECK(classical_hurwitz(0, {p1, p2, twist}) ==
                          tuple_oracle(g, {p1, p2, twist}));
                    CHECK(classical_hurwitz(0, {p1, p2, twist, twist}) ==
                          tuple_oracle(g, {p1, p2, twist, twist}));
                }
        }
    }
}

TEST_CASE("classical hurwitz with genus") {
    for (int d = 1; d <= 3; ++d) {
        SymGroup g(d);
        for (const Partition& p1 : partitions(d)) {
            CHECK(classical_hurwitz(1, {p1}) == genus_oracle(g, 1, {p1}));
        }
    }
    SymGroup g3(3);
    CHECK(classical_hurwitz(2, {Partition({1, 1, 1})}) ==
          genus_oracle(g3, 2, {Partition({1, 1, 1})}));
}

TEST_CASE("profile validation") {
    CHECK_THROWS(classical_hurwitz(0, {Partition({2}), Partition({3})}));
    CHECK_THROWS(classical_hurwitz(-1, {Partition({2}), Partition({2})}));
}

TEST_CASE("spin hurwitz degree-one normalization") {
    // d = 1 leaves the single label [1]: 2^{-1} (Q_[1]{delta_1})^2 = 2, and
    // the minus branch flips its odd-length sign.
    CHECK(spin_hurwitz(SpinSign{true}, 1, {}) == 2);
    CHECK(spin_hurwitz(SpinSign{false}, 1, {}) == -2);
}

TEST_CASE("gamma profile") {
    CHECK(gamma_profile(3) == Partition({3}));
    CHECK(gamma_profile(5) == Partition({3, 1, 1}));
    CHECK_THROWS(gamma_profile(2));
}

TEST_CASE("branch series reproduces the character sums") {
    for (bool plus : {true, false}) {
        SpinSign sign{plus};
        for (int d = 0; d <= 6; ++d) {
            PhiSeries phi = phi_series(sign, d, 3);
            for (int r = 0; r <= 3; ++r) {
                if (r > 0 && d < 3) continue;
                for (const Partition& d1 : odd_partitions(d))
                    for (const Partition& d2 : odd_partitions(d))
                        CHECK(phi.hurwitz(r, d1, d2) ==
                              spin_hurwitz_gamma(sign, d, r, d1, d2));
            }
        }
    }
}

TEST_CASE("two-profile spin sums match the series route") {
    SpinSign plus{true};
    for (int d = 1; d <= 5; ++d)
        for (const Partition& d1 : odd_partitions(d))
            for (const Partition& d2 : odd_partitions(d))
                CHECK(spin_hurwitz(plus, d, {d1, d2}) ==
                      spin_hurwitz_gamma(plus, d, 0, d1, d2));
}
