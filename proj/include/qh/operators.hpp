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

#include <vector>

#include "qh/characters.hpp"
#include "qh/polynomial.hpp"

namespace qh {

/// One summand (coeff) * p_{mult} * d_{ders} of a differential operator on
/// the power-sum ring; ders lists the variables differentiated, with
/// multiplicity.
struct OpTerm {
    Rat coeff;
    Partition mult;
    Partition ders;
};

/// Finite formal sum of OpTerms. Builders truncate the infinite displays to
/// the terms that can act on polynomials with variables up to max_var.
struct PolyOperator {
    std::vector<OpTerm> terms;

    PowerSumPoly apply(const PowerSumPoly& f) const;
};

/// Classical cut-and-join:
/// W = 1/2 sum_{a,b>=1} ((a+b) p_a p_b d_{a+b} + a b p_{a+b} d_a d_b).
PolyOperator classical_w_operator(int max_var);

/// The diagonal flows on the odd sub-ring. n must be 1 or 3; Omega_1 is the
/// Euler operator, Omega_3 the cubic flow with its two one-derivative sums,
/// triple-creation, 2<->2, and triple-annihilation parts (all tuple sums run
/// over ordered tuples of positive odd integers).
PolyOperator omega_operator(int n, int max_var);

/// Virasoro generator on the odd sub-ring:
/// L_n = sum_{k odd} (k+2n) p_k d_{k+2n}
///       + 1/4 sum_{a+b=2n, a,b odd, ordered} a b d_a d_b.
/// Acts on the Q basis by L_n Q_alpha = sum_i (alpha_i - n) Q_{alpha-2n e_i}.
PolyOperator virasoro_operator(int n, int max_var);

PowerSumPoly classical_cut_and_join(const PowerSumPoly& f);
PowerSumPoly omega(int n, const PowerSumPoly& f);
PowerSumPoly virasoro(int n, const PowerSumPoly& f);

/// Composite 1/3 Omega_3 - Omega_1^2 + 2/3 Omega_1 (the authoritative form).
PowerSumPoly spin_cut_and_join(const PowerSumPoly& f);

/// Eigenvalue of spin_cut_and_join on Q_alpha:
/// (1/3) omega_3 - omega_1^2 + (2/3) omega_1.
Rat spin_cut_and_join_eigenvalue(const StrictPartition& alpha);

/// Straightened Q label for alpha with one part shifted: zero part drops,
/// negative or repeated part kills the term, otherwise sort descending with
/// the transposition sign.
struct StraightenedLabel {
    int sign = 0;  // 0 when the term vanishes
    StrictPartition label;
};
StraightenedLabel straighten_label(std::vector<int> parts);

/// Right-hand side of the Virasoro action: sum_i (alpha_i - n) Q_{alpha-2n e_i}
/// as a polynomial, with straightening.
PowerSumPoly virasoro_action(int n, const StrictPartition& alpha);

/// Order-by-order check that d/dt_3 of the degree-d two-sided generating
/// function equals the spin cut-and-join operator applied to its p-side.
/// Entry r of the result covers t_3-order r, for r = 0..order.
std::vector<bool> verify_cut_and_join(bool plus_branch, int d, int order);

}  // namespace qh
