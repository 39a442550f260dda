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

#include "qh/hurwitz.hpp"

#include <stdexcept>

#include "qh/operators.hpp"
#include "qh/qschur.hpp"

namespace qh {

Rat classical_hurwitz(int g, const std::vector<Partition>& profiles) {
    if (g < 0) throw std::invalid_argument("genus must be >= 0");
    if (profiles.empty()) throw std::invalid_argument("at least one profile is required");
    int d = profiles[0].size();
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    for (const Partition& p : profiles)
        if (p.size() != d) throw std::invalid_argument("profiles must partition a common degree");
    int k = static_cast<int>(profiles.size());
    Int dfact = factorial(d);
    Rat front(1);
    for (const Partition& p : profiles) front *= frac(dfact, z_factor(p));
    front /= Rat(dfact * dfact);
    Rat sum(0);
    for (const Partition& r : partitions(d)) {
        Int dim = symmetric_character(r, Partition(std::vector<int>(d, 1)));
        Rat term = rat_pow(frac(dfact, dim), 2 * g);
        for (const Partition& p : profiles) term *= Rat(symmetric_character(r, p));
        term /= rat_pow(Rat(dim), k - 2);
        sum += term;
    }
    return front * sum;
}

Partition gamma_profile(int d) {
    if (d < 3) throw std::invalid_argument("the (3,1,...) profile needs degree >= 3");
    std::vector<int> parts{3};
    parts.insert(parts.end(), d - 3, 1);
    return Partition(std::move(parts));
}

Rat spin_hurwitz(SpinSign sign, int d, const std::vector<Partition>& profiles) {
    if (d < 0) throw std::invalid_argument("degree must be >= 0");
    for (const Partition& p : profiles) {
        if (p.size() != d) throw std::invalid_argument("profiles must partition the degree");
        if (!p.all_odd()) throw std::invalid_argument("spin profiles must have odd parts");
    }
    Rat total(0);
    for (const StrictPartition& alpha : strict_partitions(d)) {
        Rat q1 = q_schur_delta1(alpha);
        Rat term = sign.factor(alpha) * rat_pow(Rat(1, 2), alpha.length()) * q1 * q1;
        for (const Partition& p : profiles) term *= f_weight(alpha, p);
        total += term;
    }
    return total;
}

Rat spin_hurwitz_gamma(SpinSign sign, int d, int r, const Partition& delta1,
                       const Partition& delta2) {
    if (r < 0) throw std::invalid_argument("branch point count must be >= 0");
    if (r > 0 && d < 3)
        throw std::invalid_argument("extra (3,1,...) branch points need degree >= 3");
    for (const Partition* p : {&delta1, &delta2}) {
        if (p->size() != d) throw std::invalid_argument("profiles must partition the degree");
        if (!p->all_odd()) throw std::invalid_argument("spin profiles must have odd parts");
    }
    Rat total(0);
    for (const StrictPartition& alpha : strict_partitions(d)) {
        Rat q1 = q_schur_delta1(alpha);
        Rat term = sign.factor(alpha) * rat_pow(Rat(1, 2), alpha.length()) * q1 * q1;
        if (r > 0) term *= rat_pow(f_weight(alpha, gamma_profile(d)), r);
        term *= f_weight(alpha, delta1);
        term *= f_weight(alpha, delta2);
        total += term;
    }
    return total;
}

Rat spin_hurwitz_gamma(SpinSign sign, int d, int r) {
    if (r < 0) throw std::invalid_argument("branch point count must be >= 0");
    if (r > 0 && d < 3)
        throw std::invalid_argument("extra (3,1,...) branch points need degree >= 3");
    Rat total(0);
    for (const StrictPartition& alpha : strict_partitions(d)) {
        Rat q1 = q_schur_delta1(alpha);
        Rat term = sign.factor(alpha) * rat_pow(Rat(1, 2), alpha.length()) * q1 * q1;
        if (r > 0) term *= rat_pow(f_weight(alpha, gamma_profile(d)), r);
        total += term;
    }
    return total;
}

Rat PhiSeries::hurwitz(int r, const Partition& delta1, const Partition& delta2) const {
    if (r < 0 || r >= static_cast<int>(orders.size()))
        throw std::invalid_argument("t_3 order outside the truncation");
    auto it = orders[r].find({delta1, delta2});
    Rat c = it == orders[r].end() ? Rat(0) : it->second;
    // the p_D p*_D' coefficient carries 2^{l(D)-d} 2^{l(D')-d} relative to
    // the normalized character weights; undo it on extraction
    c *= rat_pow(Rat(2), 2 * d - delta1.length() - delta2.length());
    return Rat(factorial(r)) * c;
}

PhiSeries phi_series(SpinSign sign, int d, int t3_order) {
    if (d < 0 || t3_order < 0) throw std::invalid_argument("truncation orders must be >= 0");
    PhiSeries phi;
    phi.sign = sign;
    phi.d = d;
    phi.orders.resize(t3_order + 1);
    for (const StrictPartition& alpha : strict_partitions(d)) {
        Rat base = sign.factor(alpha) * rat_pow(Rat(1, 2), alpha.length());
        Rat w = spin_cut_and_join_eigenvalue(alpha);
        const PowerSumPoly& q = q_schur(alpha);
        Rat weight = base;
        for (int r = 0; r <= t3_order; ++r) {
            if (r > 0) {
                weight *= w;
                weight /= r;
            }
            if (weight == 0) continue;
            for (const auto& [m1, c1] : q.terms())
                for (const auto& [m2, c2] : q.terms()) {
                    Rat v = weight * c1 * c2;
                    auto [it, fresh] = phi.orders[r].emplace(std::make_pair(m1, m2), v);
                    if (!fresh) {
                        it->second += v;
                        if (it->second == 0) phi.orders[r].erase(it);
                    }
                }
        }
    }
    return phi;
}

}  // namespace qh
