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
#include <utility>
#include <vector>

#include "qh/characters.hpp"

namespace qh {

/// Branch selector for the spin sums: minus flips the sign of every term
/// with an odd number of parts in its label.
struct SpinSign {
    bool plus = true;
    Rat factor(const StrictPartition& alpha) const {
        return (!plus && alpha.length() % 2 != 0) ? Rat(-1) : Rat(1);
    }
};

/// Genus-g Hurwitz number with the given branching profiles:
/// prod_i [Delta^i] / (d!)^2 sum_R (d!/psi_R(1))^{2g}
///        prod_i psi_R(Delta^i) / psi_R(1)^{k-2},   [Delta] = d!/z_Delta.
Rat classical_hurwitz(int g, const std::vector<Partition>& profiles);

/// (3, 1^{d-3}); requires d >= 3.
Partition gamma_profile(int d);

/// Spin Hurwitz number
/// R_+- sum_{alpha strict, |alpha|=d} 2^{-l(alpha)} (Q_alpha{delta_{k,1}})^2
///      prod_i f_alpha(Delta^i),
/// normalized as the coefficient of the two-sided generating series.
Rat spin_hurwitz(SpinSign sign, int d, const std::vector<Partition>& profiles);

/// Spin Hurwitz number with r extra (3,1^{d-3}) branch points besides the
/// two given profiles. r > 0 requires d >= 3.
Rat spin_hurwitz_gamma(SpinSign sign, int d, int r, const Partition& delta1,
                       const Partition& delta2);

/// Spin Hurwitz number with r branch points of profile (3,1^{d-3}) only.
Rat spin_hurwitz_gamma(SpinSign sign, int d, int r);

/// Coefficients of a two-sided series in p and p*: value at (Delta, Delta')
/// multiplies p_Delta p*_Delta'.
using BilinearCoeffs = std::map<std::pair<Partition, Partition>, Rat>;

/// Truncated degree-d generating series
/// sum_alpha e^{t_3 w(alpha)} (+-) 2^{-l(alpha)} Q_alpha{p} Q_alpha{p*}
/// with w the spin cut-and-join eigenvalue; orders[r] holds the t_3^r
/// coefficient (the 1/r! included).
struct PhiSeries {
    SpinSign sign;
    int d = 0;
    std::vector<BilinearCoeffs> orders;

    /// r! times the stored coefficient: the spin Hurwitz number
    /// H(Gamma^r_d, Delta, Delta').
    Rat hurwitz(int r, const Partition& delta1, const Partition& delta2) const;
};

PhiSeries phi_series(SpinSign sign, int d, int t3_order);

}  // namespace qh
