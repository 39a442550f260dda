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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qh/partition.hpp"
#include "qh/qschur.hpp"

namespace qh {

enum class TableKind { symmetric, sergeev };

std::string table_kind_name(TableKind kind);
TableKind table_kind_from_name(const std::string& name);

/// Character values of one degree, both kinds.
///
/// symmetric: labels and classes run over all partitions of d, values are the
/// integer characters of S_d. sergeev: labels are strict partitions, classes
/// are odd partitions, and the value is the coefficient of Q_label in the
/// expansion of p_class (half-integers appear; no rescaling is applied).
struct CharacterTable {
    int d = 0;
    TableKind kind = TableKind::symmetric;
    std::vector<Partition> labels;   // canonical order
    std::vector<Partition> classes;  // canonical order
    std::map<std::pair<Partition, Partition>, Rat> values;

    Rat value(const Partition& label, const Partition& cls) const;
};

/// Memoized table for (kind, d), backed by the on-disk cache when available.
const CharacterTable& character_table(TableKind kind, int d);

/// Irreducible S_d character psi_R(Delta) by the Murnaghan-Nakayama rule.
Int symmetric_character(const Partition& R, const Partition& delta);

/// Coefficient of Q_alpha in the expansion of p_delta over the Q basis.
Rat sergeev_character(const StrictPartition& alpha, const Partition& delta);

/// Normalized character weight entering every Hurwitz-type sum:
/// f_alpha(D) = 2^{l(alpha)+|alpha|} chi_alpha(D) / (z_D Q_alpha{delta_{k,1}}).
/// The power of 2 is calibrated so that f_alpha([1^d]) = 1 and the
/// (3,1^{d-3}) weight equals (1/3) omega_3 - omega_1^2 + (2/3) omega_1; the
/// expansion of Q_alpha over p then reads
/// Q_alpha = Q_alpha{delta_{k,1}} sum_D 2^{l(D)-|D|} f_alpha(D) p_D.
Rat f_weight(const StrictPartition& alpha, const Partition& delta);

/// omega_m(alpha) = sum alpha_i^m.
Int completed_cycle(const StrictPartition& alpha, int m);

/// Disk cache control. The directory comes from set_cache_dir, else the
/// QH_CACHE_DIR environment variable, else ".qhurwitz-cache" under the
/// current directory. Unwritable directories only disable persistence.
void set_cache_dir(const std::string& dir);
std::string cache_dir();
int cache_clear();  // returns number of files removed
struct CacheStats {
    std::vector<std::pair<std::string, int>> cached;  // (kind, d) pairs
};
CacheStats cache_stats();

}  // namespace qh
