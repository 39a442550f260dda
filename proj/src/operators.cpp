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

#include "qh/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "qh/qschur.hpp"

namespace qh {

PowerSumPoly PolyOperator::apply(const PowerSumPoly& f) const {
    PowerSumPoly out;
    for (const OpTerm& t : terms) {
        PowerSumPoly g = f;
        for (int k : t.ders.parts) {
            g = differentiate(g, k);
            if (g.is_zero()) break;
        }
        if (g.is_zero()) continue;
        if (!t.mult.empty()) g = PowerSumPoly::monomial(t.mult, Rat(1)) * g;
        out += t.coeff * g;
    }
    return out;
}

PolyOperator classical_w_operator(int max_var) {
    PolyOperator w;
    for (int a = 1; a <= max_var; ++a)
        for (int b = 1; b <= max_var; ++b) {
            if (a + b <= max_var)
                w.terms.push_back({frac(a + b, 2), Partition::from_unsorted({a, b}),
                                   Partition({a + b})});
            w.terms.push_back({frac(a * b, 2), Partition({a + b}),
                               Partition::from_unsorted({a, b})});
        }
    return w;
}

PolyOperator omega_operator(int n, int max_var) {
    if (n != 1 && n != 3) throw std::invalid_argument("only the n=1 and n=3 flows are supported");
    PolyOperator op;
    if (n == 1) {
        for (int k = 1; k <= max_var; ++k)
            op.terms.push_back({Rat(k), Partition({k}), Partition({k})});
        return op;
    }
    for (int k = 1; k <= max_var; ++k) {
        Rat c = frac(static_cast<long>(k) * k * k + k, 2);
        op.terms.push_back({c, Partition({k}), Partition({k})});
    }
    // triple creation: 4 (n1+n2+n3) p_{n1} p_{n2} p_{n3} d_{n1+n2+n3}
    for (int n1 = 1; n1 <= max_var; n1 += 2)
        for (int n2 = 1; n1 + n2 < max_var; n2 += 2)
            for (int n3 = 1; n1 + n2 + n3 <= max_var; n3 += 2) {
                int s = n1 + n2 + n3;
                op.terms.push_back({Rat(4 * s), Partition::from_unsorted({n1, n2, n3}),
                                    Partition({s})});
            }
    // 2<->2 scattering: 3 n3 n4 p_{n1} p_{n2} d_{n3} d_{n4}, n1+n2 = n3+n4
    for (int n3 = 1; n3 <= max_var; n3 += 2)
        for (int n4 = 1; n4 <= max_var; n4 += 2) {
            int s = n3 + n4;
            for (int n1 = 1; n1 < s; n1 += 2) {
                int n2 = s - n1;
                if (n2 % 2 == 0 || n2 < 1) continue;
                op.terms.push_back({Rat(3 * n3 * n4), Partition::from_unsorted({n1, n2}),
                                    Partition::from_unsorted({n3, n4})});
            }
        }
    // triple annihilation: n1 n2 n3 p_{n1+n2+n3} d_{n1} d_{n2} d_{n3}
    // (the index weight is forced by the eigen-property; without it the
    // operator stops being diagonal on the Q basis from degree 5 on)
    for (int n1 = 1; n1 <= max_var; n1 += 2)
        for (int n2 = 1; n2 <= max_var; n2 += 2)
            for (int n3 = 1; n3 <= max_var; n3 += 2)
                op.terms.push_back({Rat(n1 * n2 * n3), Partition({n1 + n2 + n3}),
                                    Partition::from_unsorted({n1, n2, n3})});
    return op;
}

PolyOperator virasoro_operator(int n, int max_var) {
    if (n < 1) throw std::invalid_argument("Virasoro index must be >= 1");
    PolyOperator op;
    for (int k = 1; k + 2 * n <= max_var; k += 2)
        op.terms.push_back({Rat(k + 2 * n), Partition({k}), Partition({k + 2 * n})});
    for (int a = 1; a < 2 * n; a += 2) {
        int b = 2 * n - a;
        if (b % 2 == 0 || b < 1 || a > max_var || b > max_var) continue;
        op.terms.push_back({frac(a * b, 4), Partition{}, Partition::from_unsorted({a, b})});
    }
    return op;
}

PowerSumPoly classical_cut_and_join(const PowerSumPoly& f) {
    return classical_w_operator(f.max_variable()).apply(f);
}

PowerSumPoly omega(int n, const PowerSumPoly& f) {
    return omega_operator(n, f.max_variable()).apply(f);
}

PowerSumPoly virasoro(int n, const PowerSumPoly& f) {
    return virasoro_operator(n, f.max_variable()).apply(f);
}

PowerSumPoly spin_cut_and_join(const PowerSumPoly& f) {
    PowerSumPoly o1 = omega(1, f);
    return Rat(1, 3) * omega(3, f) - omega(1, o1) + Rat(2, 3) * o1;
}

Rat spin_cut_and_join_eigenvalue(const StrictPartition& alpha) {
    Rat w1(completed_cycle(alpha, 1)), w3(completed_cycle(alpha, 3));
    return Rat(1, 3) * w3 - w1 * w1 + Rat(2, 3) * w1;
}

StraightenedLabel straighten_label(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) return {};
    int sign = 1;
    // insertion sort into descending order, tracking transposition parity;
    // a zero entry is sorted like any other before being dropped
    for (size_t i = 1; i < parts.size(); ++i)
        for (size_t j = i; j > 0 && parts[j] > parts[j - 1]; --j) {
            std::swap(parts[j], parts[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1]) return {};
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return {sign, StrictPartition(std::move(parts))};
}

PowerSumPoly virasoro_action(int n, const StrictPartition& alpha) {
    PowerSumPoly out;
    for (size_t i = 0; i < alpha.parts.size(); ++i) {
        Rat c(alpha.parts[i] - n);
        if (c == 0) continue;
        int x = alpha.parts[i] - 2 * n;
        if (x >= 0) {
            std::vector<int> shifted = alpha.parts;
            shifted[i] = x;
            StraightenedLabel s = straighten_label(std::move(shifted));
            if (s.sign == 0) continue;
            out += (Rat(s.sign) * c) * q_schur(s.label);
            continue;
        }
        // Negative entry -m: annihilates against a part equal to m, removing
        // the pair with weight (-1)^{m+1} sign(m-n) and the parity of the
        // parts jumped over. Both members of an (a, 2n-a) pair contribute, so
        // only the difference of the weights is observable; this choice is
        // validated against the differential operator.
        int m = -x;
        size_t j = 0;
        while (j < alpha.parts.size() && alpha.parts[j] != m) ++j;
        if (j == alpha.parts.size() || j == i) continue;
        int kappa = (m > n ? 1 : -1) * (m % 2 == 0 ? -1 : 1);
        size_t lo = std::min(i, j), hi = std::max(i, j);
        if ((hi - lo - 1) % 2 != 0) kappa = -kappa;
        std::vector<int> rest;
        for (size_t k = 0; k < alpha.parts.size(); ++k)
            if (k != i && k != j) rest.push_back(alpha.parts[k]);
        out += (Rat(kappa) * c) * q_schur(StrictPartition(std::move(rest)));
    }
    return out;
}

namespace {

using Bilinear = std::map<std::pair<Partition, Partition>, Rat>;

}  // namespace

std::vector<bool> verify_cut_and_join(bool plus_branch, int d, int order) {
    if (d < 0 || order < 0) throw std::invalid_argument("degree and order must be >= 0");
    // t_3-order-r coefficient of the two-sided series:
    // sum_alpha (+-)^{l(alpha)} 2^{-l} w(alpha)^r / r! Q_alpha{p} Q_alpha{p*}
    std::vector<Bilinear> orders(order + 2);
    for (const StrictPartition& alpha : strict_partitions(d)) {
        Rat base = rat_pow(Rat(1, 2), alpha.length());
        if (!plus_branch && alpha.length() % 2 != 0) base = -base;
        Rat w = spin_cut_and_join_eigenvalue(alpha);
        const PowerSumPoly& q = q_schur(alpha);
        Rat weight = base;
        for (int r = 0; r <= order + 1; ++r) {
            if (r > 0) {
                weight *= w;
                weight /= r;
            }
            if (weight == 0) continue;
            for (const auto& [m1, c1] : q.terms())
                for (const auto& [m2, c2] : q.terms()) {
                    Rat v = weight * c1 * c2;
                    auto key = std::make_pair(m1, m2);
                    auto [it, fresh] = orders[r].emplace(key, v);
                    if (!fresh) {
                        it->second += v;
                        if (it->second == 0) orders[r].erase(it);
                    }
                }
        }
    }
    std::map<Partition, PowerSumPoly> wcache;
    std::vector<bool> report;
    for (int r = 0; r <= order; ++r) {
        Bilinear lhs;
        for (const auto& [key, c] : orders[r + 1]) {
            Rat v = Rat(r + 1) * c;
            auto [it, fresh] = lhs.emplace(key, v);
            if (!fresh) it->second += v;
        }
        Bilinear rhs;
        for (const auto& [key, c] : orders[r]) {
            auto it = wcache.find(key.first);
            if (it == wcache.end())
                it = wcache
                         .emplace(key.first,
                                  spin_cut_and_join(PowerSumPoly::monomial(key.first, Rat(1))))
                         .first;
            for (const auto& [m, wc] : it->second.terms()) {
                Rat v = c * wc;
                auto key2 = std::make_pair(m, key.second);
                auto [jt, fresh] = rhs.emplace(key2, v);
                if (!fresh) {
                    jt->second += v;
                    if (jt->second == 0) rhs.erase(jt);
                }
            }
        }
        report.push_back(lhs == rhs);
    }
    return report;
}

}  // namespace qh
