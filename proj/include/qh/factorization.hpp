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

#include "qh/polynomial.hpp"
#include "qh/qschur.hpp"

namespace qh {

/// Split of a strict partition by residue class mod an odd r: parts
/// divisible by r contribute their quotients to mu; a part r*q + c with
/// 0 < c <= (r-1)/2 contributes q to a[c]; a part r*q + (r-c) contributes q
/// to b[c]. The split is admissible when a[c] and b[c] have equal lengths
/// for every color c; otherwise the contracted Q function vanishes.
struct ColorDecomposition {
    int r = 1;
    StrictPartition mu;
    std::vector<std::vector<int>> a;  // index c-1; strictly decreasing, 0 allowed
    std::vector<std::vector<int>> b;
    std::vector<int> kappa;           // common length per color when admissible
    bool admissible = true;
};

ColorDecomposition decompose(const StrictPartition& alpha, int r);

/// Sign exponent rho_{N,r}(x): (Nx mod r) - (x mod r) when
/// 0 < (x mod r) < r/2, else 0. Requires gcd(N,r) = 1, r odd.
int rho(int N, int r, int x);

/// prod_i (-1)^{rho(alpha_i)} N^{sum frac(alpha_i/r)}
///        floor(N alpha_i / r)! / floor(alpha_i / r)!.
/// The fractional N exponents must sum to an integer; otherwise errors.
Rat ratio_rhs(const StrictPartition& alpha, int N, int r);

/// Both-sides check of the evaluation ratio
/// Q_alpha{(r/2) delta_{k,r}} / Q_{N alpha}{(r/2) delta_{k,r}} = ratio_rhs.
enum class RatioCheck { equal, skipped, mismatch };
RatioCheck verify_ratio(const StrictPartition& alpha, int N, int r);

/// Left side of the factorization: Q_alpha with the contraction
/// p_k -> r * p_{k/r} when r | k, else 0 (all variables odd throughout).
PowerSumPoly q_schur_contracted(const StrictPartition& alpha, int r);

/// Pair-correlation polynomial of the contracted two-point function:
/// E(x,y) = sum over i > 0 with i = y (mod r), i = -x (mod r), i <= y of
/// (-1)^i q_{(x+i)/r} q_{(y-i)/r}, plus (1/2) q_{x/r} q_{y/r} when r divides
/// both; here q_n is the generating polynomial of q_poly.
PowerSumPoly wick_pair(int x, int y, int r);

/// Independent right-side route: 2^{lbar(alpha)/2} Pf(E(alpha_i, alpha_j))
/// over the zero-padded descending parts.
PowerSumPoly wick_contracted(const StrictPartition& alpha, int r);

/// Structured right side of the factorization:
/// (-1)^omega 2^{sum_c kappa_c} Q_mu{p}
///   prod_c [ prod_i (-1)^{a_i^c + b_i^c + c} ] S_{(a^c|b^c)}{2p'},
/// where S_{(a|b)}{2p'} is the Schur function with those Frobenius
/// coordinates under p_k -> 2 p_k (odd k only). omega is fixed by sign
/// comparison against the Pfaffian route; the closed combinatorial rule
/// (residue-block sorting parity plus, per color,
/// kappa(kappa-1)/2 + kappa + sum_i (a_i + b_i)) is evaluated alongside
/// and its agreement reported.
struct QsFactorization {
    ColorDecomposition decomposition;
    PowerSumPoly unsigned_product;  // everything except (-1)^omega
    int omega = 0;                  // 0/1, empirical
    bool omega_rule_matches = true; // candidate rule reproduces omega
    PowerSumPoly value;             // (-1)^omega * unsigned_product
};
QsFactorization factorized_qs(const StrictPartition& alpha, int r);

/// Exact comparison of the contraction route against the factorized form.
struct QsReport {
    bool equal = false;             // substituted LHS == signed RHS
    bool omega_rule_matches = true;
    bool vanishes = false;          // both sides zero (inadmissible split)
};
QsReport verify_qs(const StrictPartition& alpha, int r);

}  // namespace qh
