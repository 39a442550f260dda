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

namespace qh {

/// Finite multi-soliton data. The canonical configuration has momenta
/// zeta_i = i and phases a_i = -log(2 (i!)^2); the minus branch flips the
/// sign of every term with an odd number of active solitons (the real form
/// of the singular-soliton phase shift).
struct SolitonConfig {
    bool plus = true;
    std::vector<double> zeta;
    std::vector<double> phase;

    static SolitonConfig canonical(int n, bool plus = true);
};

/// tau as sign * e^{log_abs}; assembled by signed log-sum-exp over soliton
/// subsets so large phases do not overflow.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;
};

/// Soliton tau at (t_1, t_3), all higher times zero:
/// sum over subsets S of prod_{i<j in S} ((z_i-z_j)/(z_i+z_j))^2
/// e^{sum_{i in S} a_i + t_1 z_i + t_3 z_i^3/3}; the canonical phases carry
/// the 1/2 per soliton.
SignedLog kdv_soliton_log_tau(const SolitonConfig& cfg, double t1, double t3);
double kdv_soliton_tau(const SolitonConfig& cfg, double t1, double t3);

/// u = 2 d^2/dt_1^2 log tau, from exact derivatives of the soliton sum.
/// Errors when tau vanishes at the point (names the point).
double kdv_u(const SolitonConfig& cfg, double t1, double t3);

struct GridSpec {
    double lo = -1.0;
    double hi = 1.0;
    int points = 41;
};

/// One-point residual 3 u_{t3} - u_{t1 t1 t1} - 6 u u_{t1} with central
/// finite differences of step h applied to the exact u. The coefficient 3
/// is forced by the phase convention eta = a + sum t_m zeta^m / m: with a
/// one-soliton profile the three terms obey exactly that balance, verified
/// numerically for every soliton count.
double kdv_residual_at(const SolitonConfig& cfg, double t1, double t3, double h);

/// Max over the grid of the Richardson-extrapolated residual
/// (4 R(h/2) - R(h)) / 3.
double kdv_residual(const SolitonConfig& cfg, const GridSpec& t1_grid, const GridSpec& t3_grid,
                    double h);

}  // namespace qh
