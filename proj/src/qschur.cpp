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

#include "qh/qschur.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace qh {

const PowerSumPoly& q_poly(int n) {
    if (n < 0) throw std::invalid_argument("q index must be >= 0");
    // deque: growth must not invalidate references handed out earlier
    static std::deque<PowerSumPoly> memo{PowerSumPoly::constant(1)};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        // m q_m = sum over odd j of 2 p_j q_{m-j}
        PowerSumPoly acc;
        for (int j = 1; j <= m; j += 2)
            acc += Rat(2) * (PowerSumPoly::variable(j) * memo[m - j]);
        memo.push_back(Rat(1, m) * acc);
    }
    return memo[n];
}

const PowerSumPoly& h_poly(int n) {
    if (n < 0) throw std::invalid_argument("h index must be >= 0");
    static std::deque<PowerSumPoly> memo{PowerSumPoly::constant(1)};
    while (static_cast<int>(memo.size()) <= n) {
        int m = static_cast<int>(memo.size());
        // m h_m = sum_j p_j h_{m-j}
        PowerSumPoly acc;
        for (int j = 1; j <= m; ++j)
            acc += PowerSumPoly::variable(j) * memo[m - j];
        memo.push_back(Rat(1, m) * acc);
    }
    return memo[n];
}

PowerSumPoly h_poly_negated(int n) {
    PowerSumPoly out;
    for (const auto& [mono, c] : h_poly(n).terms())
        out.add_term(mono, mono.length() % 2 == 0 ? c : -c);
    return out;
}

const PowerSumPoly& q_matrix_entry(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("matrix indices must be >= 0");
    static std::map<std::pair<int, int>, PowerSumPoly> memo;
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PowerSumPoly out;
    if (i != 0 || j != 0) {
        out = q_poly(i) * q_poly(j);
        for (int k = 1; k <= j; ++k) {
            PowerSumPoly term = Rat(2) * (q_poly(i + k) * q_poly(j - k));
            if (k % 2 == 0)
                out += term;
            else
                out -= term;
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

const PowerSumPoly& q_schur(const StrictPartition& alpha) {
    static std::map<StrictPartition, PowerSumPoly> memo;
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
    std::vector<int> parts = alpha.parts;
    if (parts.size() % 2 != 0) parts.push_back(0);
    size_t n = parts.size();
    Matrix<PowerSumPoly> m(n, std::vector<PowerSumPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            m[i][j] = q_matrix_entry(parts[i], parts[j]);
            m[j][i] = PowerSumPoly{} - m[i][j];
        }
    return memo.emplace(alpha, pfaffian(m)).first->second;
}

const PowerSumPoly& schur(const Partition& lambda) {
    static std::map<Partition, PowerSumPoly> memo;
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
    size_t n = lambda.parts.size();
    Matrix<PowerSumPoly> m(n, std::vector<PowerSumPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int idx = lambda.parts[i] - static_cast<int>(i) + static_cast<int>(j);
            m[i][j] = idx < 0 ? PowerSumPoly{} : h_poly(idx);
        }
    return memo.emplace(lambda, determinant(m)).first->second;
}

PowerSumPoly hook_schur(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("hook coordinates must be >= 0");
    PowerSumPoly acc;
    for (int i = 0; i <= b; ++i)
        acc += h_poly(a + i + 1) * h_poly_negated(b - i);
    return b % 2 == 0 ? acc : PowerSumPoly{} - acc;
}

Rat q_schur_delta1(const StrictPartition& alpha) {
    Rat out = rat_pow(Rat(2), alpha.size());
    for (int a : alpha.parts) out /= Rat(factorial(a));
    for (size_t i = 0; i < alpha.parts.size(); ++i)
        for (size_t j = i + 1; j < alpha.parts.size(); ++j)
            out *= frac(alpha.parts[i] - alpha.parts[j], alpha.parts[i] + alpha.parts[j]);
    return out;
}

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Rat schur_delta_r(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (!r_core(lambda, r).empty()) return Rat(0);
    long sign_exp = lambda.size() / r;
    Rat out(1);
    for (const BoxData& box : hooks_and_contents(lambda)) {
        sign_exp += floor_div(box.content, r) + floor_div(box.hook, r);
        if (box.hook % r == 0) out /= box.hook;
    }
    if (sign_exp % 2 != 0) out = -out;
    return out;
}

Rat q_schur_delta_r_half(const StrictPartition& alpha, int r, const Rat& scale) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("r must be odd and >= 1");
    return evaluate(q_schur(alpha), TimeAssignment::delta(r, scale));
}

std::vector<int> bar_lengths(const StrictPartition& alpha) {
    Partition dbl = doubled_diagram(alpha);
    std::vector<int> out;
    for (const BoxData& box : hooks_and_contents(dbl))
        if (box.row > box.col) out.push_back(box.hook);
    return out;
}

DoubledHookReport doubled_hook_report(const StrictPartition& alpha, int r) {
    DoubledHookReport rep;
    rep.value = q_schur_delta_r_half(alpha, r, Rat(1, 2));
    rep.core_trivial = r_core(doubled_diagram(alpha), r).empty();
    rep.hook_product = Rat(1);
    for (int h : bar_lengths(alpha))
        if (h % r == 0) rep.hook_product /= h;
    if (!rep.core_trivial) rep.hook_product = Rat(0);
    rep.ratio = rep.hook_product == 0 ? Rat(0) : rep.value / rep.hook_product;
    rep.matches_up_to_sign = rep.core_trivial
                                 ? (rep.ratio == 1 || rep.ratio == -1)
                                 : rep.value == 0;
    return rep;
}

Rat QEvaluator::q(int n) {
    if (n < 0) throw std::invalid_argument("q index must be >= 0");
    if (qmemo_.empty()) qmemo_.push_back(Rat(1));
    while (static_cast<int>(qmemo_.size()) <= n) {
        int m = static_cast<int>(qmemo_.size());
        Rat acc(0);
        for (int j = 1; j <= m; j += 2) {
            auto v = times_.value(j);
            if (!v) throw std::invalid_argument("assignment undefined on p_" + std::to_string(j));
            if (*v != 0) acc += Rat(2) * *v * qmemo_[m - j];
        }
        qmemo_.push_back(acc / m);
    }
    return qmemo_[n];
}

Rat QEvaluator::entry(int i, int j) {
    if (i == 0 && j == 0) return Rat(0);
    Rat out = q(i) * q(j);
    for (int k = 1; k <= j; ++k) {
        Rat term = Rat(2) * q(i + k) * q(j - k);
        if (k % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

Rat QEvaluator::q_schur(const StrictPartition& alpha) {
    std::vector<int> parts = alpha.parts;
    if (parts.size() % 2 != 0) parts.push_back(0);
    size_t n = parts.size();
    Matrix<Rat> m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            m[i][j] = entry(parts[i], parts[j]);
            m[j][i] = -m[i][j];
        }
    return pfaffian(m);
}

}  // namespace qh
