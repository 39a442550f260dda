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

#include <functional>
#include <map>
#include <optional>

#include "qh/partition.hpp"
#include "qh/rational.hpp"

namespace qh {

/// Sparse exact polynomial in the power sums p_1, p_2, ...
///
/// A monomial p_{k1} p_{k2} ... is keyed by the partition [k1, k2, ...];
/// the constant monomial is keyed by the empty partition. Zero coefficients
/// are never stored, so equality of maps is equality of polynomials.
class PowerSumPoly {
  public:
    using TermMap = std::map<Partition, Rat>;

    PowerSumPoly() = default;
    static PowerSumPoly constant(const Rat& c);
    static PowerSumPoly variable(int k);            // p_k
    static PowerSumPoly monomial(const Partition& mono, const Rat& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;                             // max |mono|, -1 for zero
    Rat coefficient(const Partition& mono) const;
    /// True when no monomial contains an even-indexed variable.
    bool odd_variables_only() const;
    /// Largest variable index appearing in any monomial (0 for constants).
    int max_variable() const;

    void add_term(const Partition& mono, const Rat& c);

    PowerSumPoly& operator+=(const PowerSumPoly& o);
    PowerSumPoly& operator-=(const PowerSumPoly& o);
    friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
    friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) { return a -= b; }
    friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly operator*(const Rat& c, PowerSumPoly f);
    bool operator==(const PowerSumPoly& o) const { return terms_ == o.terms_; }

  private:
    TermMap terms_;
};

/// Assignment of values to the power-sum variables. Supports the delta loci
/// p_k = c * delta_{k,r} and arbitrary dense assignments.
class TimeAssignment {
  public:
    /// p_k = value * delta_{k,r}.
    static TimeAssignment delta(int r, Rat value = Rat(1));
    /// Explicit values; variables absent from the map are undefined.
    static TimeAssignment dense(std::map<int, Rat> values);
    /// Every variable defined, defaulting to zero outside the map.
    static TimeAssignment dense_with_default_zero(std::map<int, Rat> values);

    std::optional<Rat> value(int k) const;

  private:
    bool delta_mode_ = false;
    bool default_zero_ = false;
    int delta_r_ = 0;
    Rat delta_value_;
    std::map<int, Rat> values_;
};

/// Exact substitution; throws if the assignment is partial on f's support.
Rat evaluate(const PowerSumPoly& f, const TimeAssignment& a);

/// Formal derivative d/dp_k.
PowerSumPoly differentiate(const PowerSumPoly& f, int k);

/// Linear variable substitution p_k -> coeff(k) * p_{index(k)}; index 0 means
/// the variable is replaced by the constant coeff(k).
PowerSumPoly substitute(const PowerSumPoly& f,
                        const std::function<std::pair<Rat, int>(int)>& rule);

/// Deformed scalar product of the B side:
/// <p_Delta, p_Delta'> = 2^{-l(Delta)} z_Delta delta_{Delta,Delta'},
/// extended bilinearly. Both arguments must live in the odd sub-ring.
Rat scalar_product_B(const PowerSumPoly& f, const PowerSumPoly& g);

}  // namespace qh
