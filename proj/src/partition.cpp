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

#include "qh/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition part must be >= 1");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> p) {
    std::sort(p.begin(), p.end(), std::greater<int>());
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::all_odd() const {
    return std::all_of(parts.begin(), parts.end(), [](int k) { return k % 2 == 1; });
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

bool Partition::operator<(const Partition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    return parts > o.parts;  // lexicographically larger list first
}

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("strict partition part must be >= 1");
        if (i > 0 && parts[i - 1] <= parts[i])
            throw std::invalid_argument("strict partition parts must strictly decrease");
    }
}

int StrictPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool StrictPartition::operator<(const StrictPartition& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    return parts > o.parts;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (p.empty()) return Partition{};
    out.resize(p.parts[0], 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) out[j] += 1;
    return Partition(std::move(out));
}

Int z_factor(const Partition& delta) {
    std::map<int, int> mult;
    for (int k : delta.parts) mult[k] += 1;
    Int z = 1;
    for (auto [k, m] : mult) z *= int_pow(Int(k), m) * factorial(m);
    return z;
}

namespace {

// Recursive enumeration, largest first part first => reverse-lexicographic.
void enum_partitions(int d, int maxpart, std::vector<int>& acc,
                     std::vector<Partition>& out, bool odd_only) {
    if (d == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int m = std::min(d, maxpart); m >= 1; --m) {
        if (odd_only && m % 2 == 0) continue;
        acc.push_back(m);
        enum_partitions(d - m, m, acc, out, odd_only);
        acc.pop_back();
    }
}

void enum_strict(int d, int maxpart, std::vector<int>& acc,
                 std::vector<StrictPartition>& out) {
    if (d == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int m = std::min(d, maxpart); m >= 1; --m) {
        acc.push_back(m);
        enum_strict(d - m, m - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enum_partitions(d, d, acc, out, false);
    return out;
}

std::vector<Partition> odd_partitions(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enum_partitions(d, d, acc, out, true);
    return out;
}

std::vector<StrictPartition> strict_partitions(int d) {
    if (d < 0) throw std::invalid_argument("d must be >= 0");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    enum_strict(d, d, acc, out);
    return out;
}

std::vector<BoxData> hooks_and_contents(const Partition& r) {
    Partition conj = conjugate(r);
    std::vector<BoxData> out;
    for (int i = 0; i < r.length(); ++i) {
        for (int j = 0; j < r.parts[i]; ++j) {
            int hook = r.parts[i] - (j + 1) + conj.parts[j] - (i + 1) + 1;
            out.push_back(BoxData{i, j, hook, j - i});
        }
    }
    return out;
}

FrobeniusCoords frobenius_coords(const Partition& r) {
    Partition conj = conjugate(r);
    FrobeniusCoords fc;
    for (int i = 0; i < r.length(); ++i) {
        if (r.parts[i] < i + 1) break;  // past the diagonal
        fc.arms.push_back(r.parts[i] - (i + 1));
        fc.legs.push_back(conj.parts[i] - (i + 1));
    }
    return fc;
}

Partition partition_from_frobenius(const FrobeniusCoords& fc) {
    if (fc.arms.size() != fc.legs.size())
        throw std::invalid_argument("frobenius coordinates need equal arm/leg counts");
    int h = static_cast<int>(fc.arms.size());
    int rows = h;
    for (int i = 0; i < h; ++i) rows = std::max(rows, fc.legs[i] + i + 1);
    std::vector<int> row(rows, 0);
    for (int i = 0; i < h; ++i) {
        row[i] = fc.arms[i] + i + 1;
        for (int k = i + 1; k <= fc.legs[i] + i; ++k) row[k] = std::max(row[k], i + 1);
    }
    while (!row.empty() && row.back() == 0) row.pop_back();
    return Partition(std::move(row));
}

Partition doubled_diagram(const StrictPartition& alpha) {
    FrobeniusCoords fc;
    for (int a : alpha.parts) {
        fc.arms.push_back(a - 1);
        fc.legs.push_back(a);
    }
    return partition_from_frobenius(fc);
}

Partition r_core(const Partition& r_part, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (r == 1) return Partition{};
    int l = r_part.length();
    int rows = (l / r + 1) * r;  // beta-set length, multiple of r
    std::vector<long> beta(rows);
    for (int i = 0; i < rows; ++i) {
        int li = i < l ? r_part.parts[i] : 0;
        beta[i] = li + (rows - 1 - i);
    }
    // Push all beads down on each runner.
    std::vector<int> count(r, 0);
    for (long b : beta) count[b % r] += 1;
    std::vector<long> packed;
    for (int c = 0; c < r; ++c)
        for (int q = 0; q < count[c]; ++q) packed.push_back(c + static_cast<long>(r) * q);
    std::sort(packed.rbegin(), packed.rend());
    std::vector<int> out;
    for (int i = 0; i < rows; ++i) {
        long li = packed[i] - (rows - 1 - i);
        if (li > 0) out.push_back(static_cast<int>(li));
    }
    return Partition(std::move(out));
}

StrictPartition scale_parts(const StrictPartition& alpha, int n) {
    std::vector<int> p;
    p.reserve(alpha.parts.size());
    for (int a : alpha.parts) p.push_back(n * a);
    return StrictPartition(std::move(p));
}

}  // namespace qh
