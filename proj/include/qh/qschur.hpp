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

#include "qh/linalg.hpp"
#include "qh/partition.hpp"
#include "qh/polynomial.hpp"

namespace qh {

/// Coefficient of z^n in exp(sum over odd m of (2/m) p_m z^m): the projective
/// analogue of the complete homogeneous functions, q_0 = 1, q_1 = 2 p_1.
const PowerSumPoly& q_poly(int n);

/// Complete homogeneous function h_n in power sums, from exp(sum p_k z^k / k).
const PowerSumPoly& h_poly(int n);

/// h_n with every variable negated: h_n{-p} = (-1)^n e_n-type companion.
PowerSumPoly h_poly_negated(int n);

/// Entry of the infinite skew matrix over the q_i:
/// q_i q_j + 2 sum_{k=1..j} (-1)^k q_{i+k} q_{j-k}, and 0 at (0,0).
const PowerSumPoly& q_matrix_entry(int i, int j);

/// Projective Schur function Q_alpha as the Pfaffian of the matrix of
/// q_matrix_entry over the parts, zero-padded to even length. Q_empty = 1.
const PowerSumPoly& q_schur(const StrictPartition& alpha);

/// Ordinary Schur function via the Jacobi-Trudi determinant over h_n.
const PowerSumPoly& schur(const Partition& lambda);

/// One-hook Schur function S_(a|b) through the bilinear h expansion:
/// (-1)^b sum_{i=0..b} h_{a+i+1} h_{b-i}{-p}; equals schur((a+1, 1^b)).
PowerSumPoly hook_schur(int a, int b);

/// Closed form of Q_alpha at p_k = delta_{k,1}:
/// 2^{|alpha|} / prod(alpha_i!) * prod_{i<j} (alpha_i - alpha_j)/(alpha_i + alpha_j).
Rat q_schur_delta1(const StrictPartition& alpha);

/// Schur function at p_k = delta_{k,r} via the hook/content product with the
/// r-core sign; vanishes exactly when the r-core of lambda is nontrivial.
Rat schur_delta_r(const Partition& lambda, int r);

/// Q_alpha evaluated at p_k = scale * delta_{k,r}; r must be odd.
Rat q_schur_delta_r_half(const StrictPartition& alpha, int r, const Rat& scale);

/// Comparison of the direct value of Q_alpha at p_k = delta_{k,r}/2 against
/// the product of reciprocal marked hook lengths of the doubled diagram
/// (boxes strictly below the diagonal; their hooks are the bar lengths).
/// The ratio is recorded as-is: the sign, and any magnitude deviation, are
/// determined empirically and never assumed.
struct DoubledHookReport {
    Rat value;             // direct evaluation
    Rat hook_product;      // prod 1/[h]_{0,r} over bar lengths
    bool core_trivial;     // r-core of the doubled diagram
    Rat ratio;             // value / hook_product (0 when hook_product == 0)
    bool matches_up_to_sign;
};
DoubledHookReport doubled_hook_report(const StrictPartition& alpha, int r);

/// Bar lengths of a strict partition: hook lengths of the boxes of the
/// doubled diagram strictly below its main diagonal.
std::vector<int> bar_lengths(const StrictPartition& alpha);

/// Exact evaluation of q_n, the skew matrix entries, and Q_alpha at a fixed
/// time assignment, without building the symbolic polynomials. Used for
/// large-label coefficient computations (Pluecker sweeps, series weights).
class QEvaluator {
  public:
    explicit QEvaluator(TimeAssignment times) : times_(std::move(times)) {}

    Rat q(int n);
    Rat entry(int i, int j);
    Rat q_schur(const StrictPartition& alpha);

  private:
    TimeAssignment times_;
    std::vector<Rat> qmemo_;
};

}  // namespace qh
