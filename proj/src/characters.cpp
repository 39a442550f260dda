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

#include "qh/characters.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace fs = std::filesystem;

namespace qh {

namespace {

constexpr const char* kCacheVersion = "1";

std::string cache_dir_override;

std::vector<int> beta_numbers(const Partition& r, int n) {
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i)
        beta[i] = (i < r.length() ? r.parts[i] : 0) + (n - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int n = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        int p = beta[i] - (n - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Int mn_recursive(const Partition& r, const Partition& delta) {
    if (delta.empty()) return r.empty() ? Int(1) : Int(0);
    static std::map<std::pair<Partition, Partition>, Int> memo;
    auto key = std::make_pair(r, delta);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int t = delta.parts[0];
    Partition rest(std::vector<int>(delta.parts.begin() + 1, delta.parts.end()));
    int n = r.length();
    std::vector<int> beta = beta_numbers(r, n);
    Int total = 0;
    for (int i = 0; i < n; ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // The strip height is the number of occupied positions jumped over.
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++jumped;
        std::vector<int> next = beta;
        next[i] = target;
        Int sub = mn_recursive(partition_from_beta(std::move(next)), rest);
        total += jumped % 2 == 0 ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

Matrix<Rat> invert(Matrix<Rat> a) {
    size_t n = a.size();
    Matrix<Rat> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("singular change-of-basis matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

CharacterTable build_table(TableKind kind, int d) {
    CharacterTable t;
    t.d = d;
    t.kind = kind;
    if (kind == TableKind::symmetric) {
        t.labels = partitions(d);
        t.classes = t.labels;
        for (const Partition& r : t.labels)
            for (const Partition& cls : t.classes)
                t.values[{r, cls}] = Rat(mn_recursive(r, cls));
        return t;
    }
    for (const StrictPartition& a : strict_partitions(d)) t.labels.push_back(a.as_partition());
    t.classes = odd_partitions(d);
    size_t n = t.labels.size();
    if (t.classes.size() != n) throw std::runtime_error("DP/OP count mismatch");
    // a[i][j] = coefficient of p_{class j} in Q_{label i}; the inverse rows
    // give the expansion of each p_{class} back over the Q basis.
    Matrix<Rat> a(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        const PowerSumPoly& q = q_schur(StrictPartition(t.labels[i].parts));
        for (size_t j = 0; j < n; ++j) a[i][j] = q.coefficient(t.classes[j]);
    }
    Matrix<Rat> x = invert(std::move(a));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            t.values[{t.labels[i], t.classes[j]}] = x[j][i];
    return t;
}

nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json(p.parts);
}

fs::path cache_file(TableKind kind, int d) {
    return fs::path(cache_dir()) /
           (table_kind_name(kind) + "-d" + std::to_string(d) + "-v" + kCacheVersion + ".json");
}

bool load_cached(TableKind kind, int d, CharacterTable& out) {
    std::ifstream in(cache_file(kind, d));
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("d").get<int>() != d) return false;
        if (j.at("kind").get<std::string>() != table_kind_name(kind)) return false;
        CharacterTable t;
        t.d = d;
        t.kind = kind;
        for (const auto& row : j.at("rows")) {
            Partition label(row.at("label").get<std::vector<int>>());
            Partition cls(row.at("class").get<std::vector<int>>());
            Rat v(Int(row.at("num").get<std::string>()), Int(row.at("den").get<std::string>()));
            v.canonicalize();
            t.values[{label, cls}] = v;
        }
        if (kind == TableKind::symmetric) {
            t.labels = partitions(d);
            t.classes = t.labels;
        } else {
            for (const StrictPartition& a : strict_partitions(d))
                t.labels.push_back(a.as_partition());
            t.classes = odd_partitions(d);
        }
        if (t.values.size() != t.labels.size() * t.classes.size()) return false;
        out = std::move(t);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_cached(const CharacterTable& t) {
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    if (ec) return;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, v] : t.values)
        rows.push_back({{"label", partition_to_json(key.first)},
                        {"class", partition_to_json(key.second)},
                        {"num", num_str(v)},
                        {"den", den_str(v)}});
    nlohmann::json j{{"d", t.d}, {"kind", table_kind_name(t.kind)}, {"rows", std::move(rows)}};
    fs::path final = cache_file(t.kind, t.d);
    fs::path tmp = final;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << "\n";
        if (!out) return;
    }
    fs::rename(tmp, final, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

std::string table_kind_name(TableKind kind) {
    return kind == TableKind::symmetric ? "symmetric" : "sergeev";
}

TableKind table_kind_from_name(const std::string& name) {
    if (name == "symmetric") return TableKind::symmetric;
    if (name == "sergeev") return TableKind::sergeev;
    throw std::invalid_argument("unknown table kind: " + name);
}

Rat CharacterTable::value(const Partition& label, const Partition& cls) const {
    auto it = values.find({label, cls});
    if (it == values.end()) throw std::invalid_argument("label/class pair not in table");
    return it->second;
}

const CharacterTable& character_table(TableKind kind, int d) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    static std::map<std::pair<int, int>, CharacterTable> memo;
    auto key = std::make_pair(static_cast<int>(kind), d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    CharacterTable t;
    if (!load_cached(kind, d, t)) {
        t = build_table(kind, d);
        store_cached(t);
    }
    return memo.emplace(std::move(key), std::move(t)).first->second;
}

Int symmetric_character(const Partition& r, const Partition& delta) {
    if (r.size() != delta.size())
        throw std::invalid_argument("label and class must partition the same number");
    return mn_recursive(r, delta);
}

Rat sergeev_character(const StrictPartition& alpha, const Partition& delta) {
    if (alpha.size() != delta.size())
        throw std::invalid_argument("label and class must partition the same number");
    if (!delta.all_odd()) throw std::invalid_argument("class must have odd parts");
    return character_table(TableKind::sergeev, delta.size()).value(alpha.as_partition(), delta);
}

Rat f_weight(const StrictPartition& alpha, const Partition& delta) {
    Rat chi = sergeev_character(alpha, delta);
    return rat_pow(Rat(2), alpha.length() + alpha.size()) * chi /
           (Rat(z_factor(delta)) * q_schur_delta1(alpha));
}

Int completed_cycle(const StrictPartition& alpha, int m) {
    if (m < 1) throw std::invalid_argument("power must be >= 1");
    Int total = 0;
    for (int a : alpha.parts) total += int_pow(Int(a), static_cast<unsigned long>(m));
    return total;
}

void set_cache_dir(const std::string& dir) { cache_dir_override = dir; }

std::string cache_dir() {
    if (!cache_dir_override.empty()) return cache_dir_override;
    if (const char* env = std::getenv("QH_CACHE_DIR"); env && *env) return env;
    return ".qhurwitz-cache";
}

int cache_clear() {
    std::error_code ec;
    int removed = 0;
    for (const auto& entry : fs::directory_iterator(cache_dir(), ec)) {
        if (entry.path().extension() == ".json" && fs::remove(entry.path(), ec)) ++removed;
    }
    return removed;
}

CacheStats cache_stats() {
    CacheStats stats;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(cache_dir(), ec)) {
        std::string stem = entry.path().stem().string();
        auto dash = stem.find("-d");
        auto vpos = stem.rfind("-v");
        if (dash == std::string::npos || vpos == std::string::npos || vpos <= dash) continue;
        try {
            stats.cached.emplace_back(stem.substr(0, dash),
                                      std::stoi(stem.substr(dash + 2, vpos - dash - 2)));
        } catch (const std::exception&) {
        }
    }
    std::sort(stats.cached.begin(), stats.cached.end());
    return stats;
}

}  // namespace qh
