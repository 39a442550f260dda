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

#include "qh/factorization.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace qh {

namespace {

void check_odd_modulus(int r) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("modulus must be odd and >= 1");
}

}  // namespace

ColorDecomposition decompose(const StrictPartition& alpha, int r) {
    check_odd_modulus(r);
    ColorDecomposition dec;
    dec.r = r;
    int nc = (r - 1) / 2;
    dec.a.resize(nc);
    dec.b.resize(nc);
    std::vector<int> mu;
    for (int part : alpha.parts) {
        int c = part % r;
        int q = part / r;
        if (c == 0)
            mu.push_back(q);
        else if (2 * c < r)
            dec.a[c - 1].push_back(q);
        else
            dec.b[r - c - 1].push_back(q);
    }
    dec.mu = StrictPartition(std::move(mu));
    dec.kappa.resize(nc, 0);
    for (int c = 0; c < nc; ++c) {
        if (dec.a[c].size() != dec.b[c].size()) dec.admissible = false;
        dec.kappa[c] = static_cast<int>(dec.a[c].size());
    }
    return dec;
}

int rho(int N, int r, int x) {
    check_odd_modulus(r);
    if (N < 1 || std::gcd(N, r) != 1)
        throw std::invalid_argument("multiplier must be positive and coprime to the modulus");
    if (x < 0) throw std::invalid_argument("argument must be >= 0");
    int xr = x % r;
    if (xr == 0 || 2 * xr > r) return 0;
    return (N * x) % r - xr;
}

Rat ratio_rhs(const StrictPartition& alpha, int N, int r) {
    check_odd_modulus(r);
    if (N < 1 || std::gcd(N, r) != 1)
        throw std::invalid_argument("multiplier must be positive and coprime to the modulus");
    long residue_sum = 0;
    long sign_exp = 0;
    Rat out(1);
    for (int part : alpha.parts) {
        residue_sum += part % r;
        sign_exp += rho(N, r, part);
        out *= frac(factorial(static_cast<long>(N) * part / r), factorial(part / r));
    }
    if (residue_sum % r != 0)
        throw std::invalid_argument("fractional exponents of N do not sum to an integer");
    out *= Rat(int_pow(Int(N), residue_sum / r));
    if (sign_exp % 2 != 0) out = -out;
    return out;
}

RatioCheck verify_ratio(const StrictPartition& alpha, int N, int r) {
    check_odd_modulus(r);
    QEvaluator ev(TimeAssignment::delta(r, Rat(r, 2)));
    Rat den = ev.q_schur(scale_parts(alpha, N));
    if (den == 0) return RatioCheck::skipped;
    Rat num = ev.q_schur(alpha);
    return num / den == ratio_rhs(alpha, N, r) ? RatioCheck::equal : RatioCheck::mismatch;
}

PowerSumPoly q_schur_contracted(const StrictPartition& alpha, int r) {
    check_odd_modulus(r);
    return substitute(q_schur(alpha), [r](int k) {
        return k % r == 0 ? std::make_pair(Rat(r), k / r) : std::make_pair(Rat(0), 0);
    });
}

PowerSumPoly wick_pair(int x, int y, int r) {
    check_odd_modulus(r);
    if (x < 0 || y < 0) throw std::invalid_argument("arguments must be >= 0");
    PowerSumPoly out;
    if ((x + y) % r != 0) return out;
    int start = y % r == 0 ? r : y % r;
    for (int i = start; i <= y; i += r) {
        PowerSumPoly term = q_poly((x + i) / r) * q_poly((y - i) / r);
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    if (x % r == 0 && y % r == 0) out += Rat(1, 2) * (q_poly(x / r) * q_poly(y / r));
    return out;
}

PowerSumPoly wick_contracted(const StrictPartition& alpha, int r) {
    check_odd_modulus(r);
    std::vector<int> parts = alpha.parts;
    if (parts.size() % 2 != 0) parts.push_back(0);
    size_t n = parts.size();
    Matrix<PowerSumPoly> m(n, std::vector<PowerSumPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            m[i][j] = wick_pair(parts[i], parts[j], r);
            m[j][i] = PowerSumPoly{} - m[i][j];
        }
    return rat_pow(Rat(2), static_cast<long>(n) / 2) * pfaffian(m);
}

namespace {

/// Parity of the permutation that regroups the zero-padded descending parts
/// into residue blocks: the class of each padded position is 0 for parts
/// divisible by r, then 2c-1 / 2c for the a- / b-parts of color c; sorting is
/// stable, so the parity is the inversion count of the class sequence.
int block_sort_parity(const std::vector<int>& parts, int r) {
    std::vector<int> cls;
    for (int part : parts) {
        int c = part % r;
        if (c == 0)
            cls.push_back(0);
        else if (2 * c < r)
            cls.push_back(2 * c - 1);
        else
            cls.push_back(2 * (r - c));
    }
    long inv = 0;
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (cls[i] > cls[j]) ++inv;
    return static_cast<int>(inv % 2);
}

PowerSumPoly double_odd_times(const PowerSumPoly& f) {
    return substitute(f, [](int k) {
        return k % 2 != 0 ? std::make_pair(Rat(2), k) : std::make_pair(Rat(0), 0);
    });
}

}  // namespace

QsFactorization factorized_qs(const StrictPartition& alpha, int r) {
    check_odd_modulus(r);
    QsFactorization out;
    out.decomposition = decompose(alpha, r);
    const ColorDecomposition& dec = out.decomposition;
    if (!dec.admissible) return out;
    long kappa_sum = 0;
    PowerSumPoly prod = q_schur(dec.mu);
    int hook_sign = 0;
    for (size_t c = 0; c < dec.a.size(); ++c) {
        if (dec.kappa[c] == 0) continue;
        kappa_sum += dec.kappa[c];
        for (size_t i = 0; i < dec.a[c].size(); ++i)
            hook_sign += dec.a[c][i] + dec.b[c][i] + static_cast<int>(c) + 1;
        FrobeniusCoords fc{dec.a[c], dec.b[c]};
        prod = prod * double_odd_times(schur(partition_from_frobenius(fc)));
    }
    Rat pref = rat_pow(Rat(2), kappa_sum);
    if (hook_sign % 2 != 0) pref = -pref;
    out.unsigned_product = pref * prod;
    PowerSumPoly wick = wick_contracted(alpha, r);
    if (wick == out.unsigned_product) {
        out.omega = 0;
    } else if (wick == Rat(-1) * out.unsigned_product) {
        out.omega = 1;
    } else {
        throw std::logic_error("factorization differs from the pair-correlation route");
    }
    out.value = std::move(wick);
    // Closed sign rule, validated against the empirical omega: the block
    // sorting parity, plus per color kappa(kappa-1)/2 from turning the
    // off-diagonal Pfaffian block into a determinant, plus kappa and the
    // quotient sum a_i + b_i because each determinant entry is
    // (-1)^{c+1} S_{(a_i|b_j)}{2p'} while the product form carries
    // (-1)^{a_i+b_i+c} per pair.
    std::vector<int> padded = alpha.parts;
    if (padded.size() % 2 != 0) padded.push_back(0);
    long candidate = block_sort_parity(padded, r);
    for (size_t c = 0; c < dec.kappa.size(); ++c) {
        long k = dec.kappa[c];
        candidate += k * (k - 1) / 2 + k;
        for (size_t i = 0; i < dec.a[c].size(); ++i)
            candidate += dec.a[c][i] + dec.b[c][i];
    }
    out.omega_rule_matches = static_cast<int>(candidate % 2) == out.omega;
    return out;
}

QsReport verify_qs(const StrictPartition& alpha, int r) {
    QsFactorization fac = factorized_qs(alpha, r);
    PowerSumPoly lhs = q_schur_contracted(alpha, r);
    QsReport rep;
    rep.equal = lhs == fac.value;
    rep.omega_rule_matches = fac.omega_rule_matches;
    rep.vanishes = lhs.is_zero() && fac.value.is_zero();
    return rep;
}

}  // namespace qh
