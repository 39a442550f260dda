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

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "qh/hurwitz.hpp"
#include "qh/linalg.hpp"
#include "qh/polynomial.hpp"

namespace qh {

/// Diagonal weight of a strict label that factorizes over its parts.
/// Time parameters enter through their exponentials: exp_times stores
/// u_m = e^{t_m/m} (odd m, rational), so the weight of alpha is
/// prod_m u_m^{omega_m(alpha)} with omega_m(alpha) = sum alpha_i^m.
/// The 1/m matches the soliton phase convention sum t_m zeta^m / m.
class HypergeomWeights {
  public:
    static HypergeomWeights trivial();
    static HypergeomWeights exp_times(std::map<int, Rat> u);
    static HypergeomWeights per_part(std::function<Rat(int)> f);

    Rat weight(const StrictPartition& alpha) const;
    Rat part_factor(int part) const;

  private:
    std::map<int, Rat> u_;
    std::function<Rat(int)> f_;
};

/// Single-set truncated series tau = sum c_alpha Q_alpha{p}, |alpha| <= degree.
struct TauSeries {
    bool plus = true;
    int degree = 0;
    std::map<StrictPartition, Rat> coeffs;

    Rat coeff(const StrictPartition& alpha) const;
    PowerSumPoly polynomial() const;
};

/// Bilinear hypergeometric series: term weights[alpha] Q_alpha{p} Q_alpha{p*},
/// where weights[alpha] already contains the branch sign and 2^{-l(alpha)}.
struct BilinearTauSeries {
    bool plus = true;
    int degree = 0;
    std::map<StrictPartition, Rat> weights;

    /// Folds Q_alpha{p*} at the given assignment into the coefficients.
    TauSeries specialize(const TimeAssignment& pstar) const;
    /// Full expansion into p_Delta p*_Delta' monomials.
    BilinearCoeffs expand() const;
};

/// R_+- sum_alpha (weight of alpha) 2^{-l(alpha)} Q_alpha{p} Q_alpha{p*}
/// truncated at |alpha| <= degree.
BilinearTauSeries hyperg_tau(SpinSign sign, const HypergeomWeights& w, int degree);

/// One quadruple relation of the isotropic-Grassmannian family that failed:
/// c_k c_{k b1 b2 b3 b4} - c_{k b1 b2} c_{k b3 b4} + c_{k b1 b3} c_{k b2 b4}
/// - c_{k b1 b4} c_{k b2 b3}, with label concatenation straightened by
/// transposition sign and repeated parts giving coefficient zero.
struct PluckerViolation {
    StrictPartition kappa;
    std::array<int, 4> beta;
    Rat value;
};

/// Evaluates every quadruple relation with |kappa| <= window and
/// window >= b1 > b2 > b3 > b4 >= 1. The coefficient function must be exact
/// on every strict label it is asked for. Empty result means pass.
std::vector<PluckerViolation> bkp_plucker_check(
    const std::function<Rat(const StrictPartition&)>& coeff, int window);

/// One factor Q_alpha{d_{k,r}} / Q_{N alpha}{d_{k,r}} of a character-built
/// weight; inverted swaps numerator and denominator.
struct CharacterRatio {
    int N = 1;
    int r = 1;
    bool inverted = false;
};

/// c_alpha = part_prefactor^{l(alpha)} Q_alpha{d_{k,base_r}} prod(ratios),
/// all evaluations at p_k = delta_{k,r} (unit scale). A label with any zero
/// denominator contributes zero.
TauSeries character_tau(int base_r, const std::vector<CharacterRatio>& ratios, int degree,
                        const Rat& part_prefactor = Rat(1));

/// sum 2^{|alpha|-l(alpha)} Q_alpha{p} Q_{2alpha}{d_{k,1}}
///     prod ((2 alpha_i)! / alpha_i!)^2.
TauSeries bgw_series(int degree);

/// sum 2^{|alpha|-l(alpha)} Q_alpha{p} Q_{2alpha}{d_{k,3}}
///     prod (2 alpha_i)! / alpha_i!.
TauSeries kontsevich_series(int degree);

/// Finite Pfaffian soliton sum over even subsets S of the index set 0..N:
/// sum_S 2^{-|S|/2} Pf(A|_S) prod_{i<j in S} (zeta_i - zeta_j)/(zeta_i + zeta_j)
///       prod_{i in S} eta_exp[i],
/// where eta_exp[i] holds the (rational) value of e^{eta_i}. A must be skew.
Rat pfaffian_soliton_tau(const Matrix<Rat>& a, const std::vector<Rat>& eta_exp,
                         const std::vector<Rat>& zeta);

/// Exact one-sided restriction p* = delta_{k,1} of the branch series with the
/// cut-and-join flow: orders[r] holds the t_3^r/r! coefficient of p_Delta
/// after stripping e^{t_1 d + t_3 (d^2 - 2d/3)}.
struct VnSeries {
    SpinSign sign;
    int degree = 0;
    std::vector<std::map<Partition, Rat>> orders;

    /// r! 2^{|Delta| - l(Delta)} times the stored coefficient: the spin
    /// Hurwitz number H(Gamma^r_d, Delta) of the branch.
    Rat hurwitz(int r, const Partition& delta) const;
};

VnSeries vn_series(SpinSign sign, int degree, int t3_order);

/// Full diagonal restriction p = p* = delta_{k,1}: h[d][r] is the coefficient
/// of c q^d e^{x d + t (d^2 - 2d/3)} t^r / r!, the one-point spin Hurwitz
/// number H(Gamma^r_d). The constant c is fixed by the d = 3, r = 0 match
/// against the character sum and reported, not assumed.
struct KdvCoefficients {
    SpinSign sign;
    int degree = 0;
    int t_order = 0;
    Rat c;
    std::vector<std::vector<Rat>> h;
};

KdvCoefficients kdv_exact_coefficients(SpinSign sign, int degree, int t_order);

/// h[d][r] with range checking; errors on insufficient truncation.
Rat hurwitz_extract(const KdvCoefficients& k, int d, int r);

/// Degree-by-degree check of
/// e^{sum over odd m of (2/m) p_m p*_m} = sum_alpha 2^{-l} Q_alpha{p} Q_alpha{p*}
/// up to total degree on each side.
bool cauchy_identity_check(int degree);

}  // namespace qh
