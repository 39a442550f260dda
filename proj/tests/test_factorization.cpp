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
#include "doctest.h"
#include "qh/factorization.hpp"

using namespace qh;

TEST_CASE("residue-class decomposition reconstructs the label") {
    for (int r : {3, 5, 7})
        for (int d = 0; d <= 10; ++d)
            for (const StrictPartition& alpha : strict_partitions(d)) {
                ColorDecomposition dec = decompose(alpha, r);
                std::vector<int> rebuilt;
                for (int m : dec.mu.parts) rebuilt.push_back(r * m);
                for (size_t c = 0; c < dec.a.size(); ++c) {
                    for (int q : dec.a[c]) rebuilt.push_back(r * q + int(c) + 1);
                    for (int q : dec.b[c]) rebuilt.push_back(r * q + r - int(c) - 1);
                }
                std::sort(rebuilt.begin(), rebuilt.end(), std::greater<int>());
                CHECK(rebuilt == alpha.parts);
                if (dec.admissible)
                    for (size_t c = 0; c < dec.a.size(); ++c) {
                        CHECK(dec.a[c].size() == dec.b[c].size());
                        CHECK(int(dec.a[c].size()) == dec.kappa[c]);
                    }
            }
}

TEST_CASE("worked decomposition examples") {
    ColorDecomposition d1 = decompose(StrictPartition({6, 5, 4, 3, 2, 1}), 3);
    CHECK(d1.admissible);
    CHECK(d1.mu == StrictPartition({2, 1}));
    CHECK(d1.a[0] == std::vector<int>{1, 0});
    CHECK(d1.b[0] == std::vector<int>{1, 0});

    ColorDecomposition d2 = decompose(StrictPartition({15, 7, 6, 5, 2, 1}), 3);
    CHECK(d2.admissible);
    CHECK(d2.mu == StrictPartition({5, 2}));
    CHECK(d2.a[0] == std::vector<int>{2, 0});
    CHECK(d2.b[0] == std::vector<int>{1, 0});

    // Unbalanced color classes are inadmissible and contract to zero.
    ColorDecomposition d3 = decompose(StrictPartition({1}), 3);
    CHECK(!d3.admissible);
    CHECK(q_schur_contracted(StrictPartition({1}), 3).is_zero());
}

TEST_CASE("contraction identity on the worked examples") {
    for (const auto& alpha :
         {StrictPartition({6, 5, 4, 3, 2, 1}), StrictPartition({15, 7, 6, 5, 2, 1})}) {
        QsReport rep = verify_qs(alpha, 3);
        CHECK(rep.equal);
        CHECK(!rep.vanishes);
        CHECK(rep.omega_rule_matches);
    }
}

TEST_CASE("contraction identity sweep") {
    for (int r : {3, 5}) {
        int nonvanishing = 0;
        for (int d = 0; d <= 12; ++d)
            for (const StrictPartition& alpha : strict_partitions(d)) {
                QsReport rep = verify_qs(alpha, r);
                CHECK(rep.equal);
                CHECK(rep.omega_rule_matches);
                if (!rep.vanishes) ++nonvanishing;
            }
        CHECK(nonvanishing > 5);
    }
    // r = 1 degenerates to the identity contraction.
    for (int d = 0; d <= 8; ++d)
        for (const StrictPartition& alpha : strict_partitions(d))
            CHECK(verify_qs(alpha, 1).equal);
}

TEST_CASE("wick route matches the structured product") {
    for (int r : {3, 5})
        for (int d = 0; d <= 10; ++d)
            for (const StrictPartition& alpha : strict_partitions(d)) {
                QsFactorization f = factorized_qs(alpha, r);
                CHECK(wick_contracted(alpha, r) == f.value);
            }
}

TEST_CASE("pair polynomial basics") {
    // Vanishes unless x + y is divisible by r.
    CHECK(wick_pair(1, 1, 3).is_zero());
    CHECK(!wick_pair(2, 1, 3).is_zero());
    CHECK(!wick_pair(6, 3, 3).is_zero());
    // Equal arguments cancel between the alternating sum and the half term.
    CHECK(wick_pair(3, 3, 3).is_zero());
    // Antisymmetry under swapping the pair.
    for (int r : {3, 5})
        for (int x = 0; x <= 8; ++x)
            for (int y = 0; y < x; ++y)
                CHECK(wick_pair(x, y, r) + wick_pair(y, x, r) == PowerSumPoly());
}

TEST_CASE("sign exponent") {
    CHECK(rho(2, 3, 1) == 1);   // 2 mod 3 - 1 mod 3
    CHECK(rho(2, 3, 2) == 0);   // residue 2 is not below r/2
    CHECK(rho(2, 3, 3) == 0);   // divisible parts carry no sign
    CHECK_THROWS(rho(3, 3, 1));  // gcd(N, r) must be 1
}

TEST_CASE("evaluation ratio sweeps") {
    for (auto [n_factor, r] : {std::pair{2, 1}, {2, 3}, {4, 3}, {3, 5}}) {
        int equal = 0, skipped = 0;
        for (int d = 0; d <= 10; ++d)
            for (const StrictPartition& alpha : strict_partitions(d)) {
                RatioCheck c = verify_ratio(alpha, n_factor, r);
                CHECK(c != RatioCheck::mismatch);
                if (c == RatioCheck::equal) ++equal;
                if (c == RatioCheck::skipped) ++skipped;
            }
        CHECK(equal > 5);
        // The skipped cases are exactly the vanishing denominators: every
        // size not divisible by r is skipped.
        if (r > 1) CHECK(skipped > 0);
    }
}
