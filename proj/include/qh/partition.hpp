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

#include <compare>
#include <cstdint>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

/// Integer partition with weakly decreasing positive parts.
///
/// The canonical ordering used for map keys and all serialized output is
/// graded reverse-lexicographic: partitions of smaller size come first, and
/// within one size the lexicographically largest part list comes first
/// ([4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    /// Sorts descending and drops zero parts; rejects negatives.
    static Partition from_unsorted(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool all_odd() const;
    int multiplicity(int k) const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const;
};

/// Partition with strictly decreasing positive parts (the DP index set).
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// Completed length: length rounded up to the next even number.
    int padded_length() const { return (length() + 1) / 2 * 2; }
    bool empty() const { return parts.empty(); }

    Partition as_partition() const { return Partition(parts); }

    bool operator==(const StrictPartition& o) const { return parts == o.parts; }
    bool operator<(const StrictPartition& o) const;
};

/// Frobenius (hook) coordinates: arms a_i = R_i - i, legs b_i = R'_i - i.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;
};

struct BoxData {
    int row, col;      // 0-based
    int hook;          // h_x
    int content;       // c_x = col - row
};

Partition conjugate(const Partition& p);
Int z_factor(const Partition& delta);

/// All partitions of d in canonical (reverse-lexicographic) order.
std::vector<Partition> partitions(int d);
/// Partitions of d with all parts odd, canonical order.
std::vector<Partition> odd_partitions(int d);
/// Strict partitions of d, canonical order.
std::vector<StrictPartition> strict_partitions(int d);

std::vector<BoxData> hooks_and_contents(const Partition& r);

FrobeniusCoords frobenius_coords(const Partition& r);
Partition partition_from_frobenius(const FrobeniusCoords& fc);

/// Doubled diagram d(alpha) = (alpha_1-1, alpha_2-1, ... | alpha_1, alpha_2, ...).
Partition doubled_diagram(const StrictPartition& alpha);

/// r-core via the abacus (beta-number) construction.
Partition r_core(const Partition& r_part, int r);

/// Multiplies every part by n, preserving strictness.
StrictPartition scale_parts(const StrictPartition& alpha, int n);

}  // namespace qh
