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

#include "qh/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

PowerSumPoly PowerSumPoly::constant(const Rat& c) {
    PowerSumPoly f;
    f.add_term(Partition{}, c);
    return f;
}

PowerSumPoly PowerSumPoly::variable(int k) {
    if (k < 1) throw std::invalid_argument("variable index must be >= 1");
    PowerSumPoly f;
    f.add_term(Partition({k}), Rat(1));
    return f;
}

PowerSumPoly PowerSumPoly::monomial(const Partition& mono, const Rat& c) {
    PowerSumPoly f;
    f.add_term(mono, c);
    return f;
}

int PowerSumPoly::degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.size());
    return d;
}

Rat PowerSumPoly::coefficient(const Partition& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool PowerSumPoly::odd_variables_only() const {
    for (const auto& [mono, c] : terms_)
        if (!mono.all_odd()) return false;
    return true;
}

int PowerSumPoly::max_variable() const {
    int m = 0;
    for (const auto& [mono, c] : terms_)
        if (!mono.empty()) m = std::max(m, mono.parts[0]);
    return m;
}

void PowerSumPoly::add_term(const Partition& mono, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

PowerSumPoly& PowerSumPoly::operator-=(const PowerSumPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

namespace {

Partition merge_monomials(const Partition& a, const Partition& b) {
    std::vector<int> out;
    out.reserve(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
}

}  // namespace

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

PowerSumPoly operator*(const Rat& c, PowerSumPoly f) {
    if (c == 0) return PowerSumPoly{};
    for (auto& [mono, coeff] : f.terms_) coeff *= c;
    return f;
}

TimeAssignment TimeAssignment::delta(int r, Rat value) {
    TimeAssignment a;
    a.delta_mode_ = true;
    a.delta_r_ = r;
    a.delta_value_ = std::move(value);
    return a;
}

TimeAssignment TimeAssignment::dense(std::map<int, Rat> values) {
    TimeAssignment a;
    a.values_ = std::move(values);
    return a;
}

TimeAssignment TimeAssignment::dense_with_default_zero(std::map<int, Rat> values) {
    TimeAssignment a;
    a.values_ = std::move(values);
    a.default_zero_ = true;
    return a;
}

std::optional<Rat> TimeAssignment::value(int k) const {
    if (delta_mode_) return k == delta_r_ ? delta_value_ : Rat(0);
    auto it = values_.find(k);
    if (it != values_.end()) return it->second;
    if (default_zero_) return Rat(0);
    return std::nullopt;
}

Rat evaluate(const PowerSumPoly& f, const TimeAssignment& a) {
    Rat total(0);
    for (const auto& [mono, c] : f.terms()) {
        Rat term = c;
        for (int k : mono.parts) {
            auto v = a.value(k);
            if (!v) throw std::invalid_argument("assignment undefined on p_" + std::to_string(k));
            if (*v == 0) {
                term = 0;
                break;
            }
            term *= *v;
        }
        total += term;
    }
    return total;
}

PowerSumPoly differentiate(const PowerSumPoly& f, int k) {
    if (k < 1) throw std::invalid_argument("variable index must be >= 1");
    PowerSumPoly out;
    for (const auto& [mono, c] : f.terms()) {
        int m = mono.multiplicity(k);
        if (m == 0) continue;
        std::vector<int> rest = mono.parts;
        rest.erase(std::find(rest.begin(), rest.end(), k));
        out.add_term(Partition(std::move(rest)), Rat(m) * c);
    }
    return out;
}

PowerSumPoly substitute(const PowerSumPoly& f,
                        const std::function<std::pair<Rat, int>(int)>& rule) {
    PowerSumPoly out;
    for (const auto& [mono, c] : f.terms()) {
        Rat coeff = c;
        std::vector<int> vars;
        for (int k : mono.parts) {
            auto [factor, idx] = rule(k);
            coeff *= factor;
            if (coeff == 0) break;
            if (idx != 0) vars.push_back(idx);
        }
        if (coeff == 0) continue;
        out.add_term(Partition::from_unsorted(std::move(vars)), coeff);
    }
    return out;
}

Rat scalar_product_B(const PowerSumPoly& f, const PowerSumPoly& g) {
    for (const PowerSumPoly* h : {&f, &g})
        if (!h->odd_variables_only())
            throw std::invalid_argument("scalar_product_B requires odd-variable polynomials");
    Rat total(0);
    for (const auto& [mono, c] : f.terms()) {
        Rat cg = g.coefficient(mono);
        if (cg == 0) continue;
        total += c * cg * Rat(z_factor(mono)) / rat_pow(Rat(2), mono.length());
    }
    return total;
}

}  // namespace qh
