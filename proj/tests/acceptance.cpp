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

// Release gate: one line per criterion, process exit 0 only when all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <vector>

#include "qh/factorization.hpp"
#include "qh/hurwitz.hpp"
#include "qh/kdv.hpp"
#include "qh/linalg.hpp"
#include "qh/operators.hpp"
#include "qh/qschur.hpp"
#include "qh/tau.hpp"

using namespace qh;

namespace {

// ---- x-space oracle ------------------------------------------------------

std::vector<Rat> q_xspace(const std::vector<Rat>& xs, int deg) {
    std::vector<Rat> series(deg + 1, Rat(0));
    series[0] = 1;
    for (const Rat& x : xs) {
        std::vector<Rat> a(deg + 1, Rat(0));
        for (int n = 0; n <= deg; ++n) {
            a[n] += series[n];
            if (n > 0) a[n] += x * series[n - 1];
        }
        std::vector<Rat> b(deg + 1, Rat(0));
        for (int n = 0; n <= deg; ++n) {
            b[n] = a[n];
            if (n > 0) b[n] += x * b[n - 1];
        }
        series = std::move(b);
    }
    return series;
}

Rat q_schur_xspace(const StrictPartition& alpha, const std::vector<Rat>& xs) {
    int deg = alpha.empty() ? 0 : 2 * alpha.parts.front();
    std::vector<Rat> q = q_xspace(xs, deg);
    auto entry = [&](int i, int j) -> Rat {
        if (i == 0 && j == 0) return Rat(0);
        Rat v = q[i] * q[j];
        for (int k = 1; k <= j; ++k)
            v += Rat(k % 2 ? -2 : 2) * q[i + k] * q[j - k];
        return v;
    };
    std::vector<int> parts = alpha.parts;
    if (parts.size() % 2) parts.push_back(0);
    size_t n = parts.size();
    Matrix<Rat> m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = i < j ? entry(parts[i], parts[j]) : -m[j][i];
    return pfaffian(m);
}

bool criterion_ground_truth() {
    if (!(q_schur(StrictPartition({1})) == PowerSumPoly::monomial(Partition({1}), Rat(2))))
        return false;
    if (!(q_schur(StrictPartition({2})) == PowerSumPoly::monomial(Partition({1, 1}), Rat(2))))
        return false;
    std::vector<Rat> xs{frac(1, 2), frac(-1, 3), frac(2, 5), Rat(1),
                        frac(-3, 4), frac(1, 7),  Rat(2),    frac(-2, 7)};
    for (int d = 0; d <= 8; ++d)
        for (const StrictPartition& alpha : strict_partitions(d)) {
            std::map<int, Rat> values;
            for (int m = 1; m <= std::max(1, d); ++m) {
                Rat s(0);
                for (const Rat& x : xs) s += rat_pow(x, m);
                values[m] = s;
            }
            if (evaluate(q_schur(alpha), TimeAssignment::dense(values)) !=
                q_schur_xspace(alpha, xs))
                return false;
        }
    return true;
}

bool criterion_cauchy_orthogonality() {
    if (!cauchy_identity_check(10)) return false;
    for (int d = 0; d <= 8; ++d)
        for (const StrictPartition& a : strict_partitions(d))
            for (const StrictPartition& b : strict_partitions(d)) {
                Rat expect = a == b ? rat_pow(Rat(2), a.length()) : Rat(0);
                if (scalar_product_B(q_schur(a), q_schur(b)) != expect) return false;
            }
    return true;
}

bool criterion_sergeev() {
    for (int d = 0; d <= 10; ++d) {
        for (const Partition& delta : odd_partitions(d)) {
            PowerSumPoly rhs;
            for (const StrictPartition& a : strict_partitions(d))
                rhs += sergeev_character(a, delta) * q_schur(a);
            if (!(PowerSumPoly::monomial(delta, Rat(1)) == rhs)) return false;
        }
        for (const StrictPartition& a : strict_partitions(d)) {
            PowerSumPoly rhs;
            for (const Partition& delta : odd_partitions(d))
                rhs += rat_pow(Rat(2), a.length() + delta.length()) / Rat(z_factor(delta)) *
                       sergeev_character(a, delta) * PowerSumPoly::monomial(delta, Rat(1));
            if (!(rhs == q_schur(a))) return false;
        }
    }
    for (int d = 3; d <= 10; ++d) {
        std::vector<int> g{3};
        for (int i = 0; i < d - 3; ++i) g.push_back(1);
        Partition gamma(g);
        for (const StrictPartition& a : strict_partitions(d)) {
            Rat w1 = Rat(completed_cycle(a, 1)), w3 = Rat(completed_cycle(a, 3));
            if (f_weight(a, gamma) != frac(1, 3) * w3 - w1 * w1 + frac(2, 3) * w1)
                return false;
        }
    }
    return true;
}

bool criterion_flow_equation() {
    for (bool plus : {true, false})
        for (int d = 0; d <= 8; ++d)
            for (bool ok : verify_cut_and_join(plus, d, 4))
                if (!ok) return false;
    return true;
}

bool criterion_eigen_operators() {
    for (int d = 1; d <= 10; ++d)
        for (const StrictPartition& a : strict_partitions(d)) {
            const PowerSumPoly& q = q_schur(a);
            if (!(omega(1, q) == Rat(completed_cycle(a, 1)) * q)) return false;
            if (!(omega(3, q) == Rat(completed_cycle(a, 3)) * q)) return false;
            if (!(spin_cut_and_join(q) == spin_cut_and_join_eigenvalue(a) * q)) return false;
        }
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 8; ++d)
            for (const StrictPartition& a : strict_partitions(d))
                if (!(virasoro(n, q_schur(a)) == virasoro_action(n, a))) return false;
    return true;
}

bool criterion_factorization() {
    ColorDecomposition d1 = decompose(StrictPartition({6, 5, 4, 3, 2, 1}), 3);
    if (!(d1.mu == StrictPartition({2, 1}) && d1.a[0] == std::vector<int>{1, 0} &&
          d1.b[0] == std::vector<int>{1, 0}))
        return false;
    ColorDecomposition d2 = decompose(StrictPartition({15, 7, 6, 5, 2, 1}), 3);
    if (!(d2.mu == StrictPartition({5, 2}) && d2.a[0] == std::vector<int>{2, 0} &&
          d2.b[0] == std::vector<int>{1, 0}))
        return false;
    for (int r : {3, 5})
        for (int d = 0; d <= 12; ++d)
            for (const StrictPartition& alpha : strict_partitions(d)) {
                QsReport rep = verify_qs(alpha, r);
                if (!rep.equal || !rep.omega_rule_matches) return false;
            }
    return true;
}

bool criterion_ratio() {
    for (auto [n_factor, r] : {std::pair{2, 1}, {2, 3}, {4, 3}, {3, 5}})
        for (int d = 0; d <= 10; ++d)
            for (const StrictPartition& alpha : strict_partitions(d))
                if (verify_ratio(alpha, n_factor, r) == RatioCheck::mismatch) return false;
    return true;
}

bool criterion_plucker() {
    const int window = 9;
    TimeAssignment pstar = TimeAssignment::dense_with_default_zero(
        {{1, frac(3, 7)}, {3, frac(-2, 5)}, {5, frac(1, 3)}, {7, frac(4, 9)}, {9, frac(-5, 2)}});
    auto ev = std::make_shared<QEvaluator>(pstar);
    auto specialized = [ev](const StrictPartition& a) -> Rat {
        return rat_pow(frac(1, 2), a.length()) * ev->q_schur(a);
    };
    if (!bkp_plucker_check(specialized, window).empty()) return false;

    HypergeomWeights hw = HypergeomWeights::exp_times({{1, frac(2, 3)}, {3, frac(5, 4)}});
    auto hyperg = [ev, hw](const StrictPartition& a) -> Rat {
        Rat sgn = a.length() % 2 ? Rat(-1) : Rat(1);
        return sgn * hw.weight(a) * rat_pow(frac(1, 2), a.length()) * ev->q_schur(a);
    };
    if (!bkp_plucker_check(hyperg, window).empty()) return false;

    auto bgw = [](const StrictPartition& a) -> Rat {
        Rat c = rat_pow(Rat(2), a.size() - a.length()) * q_schur_delta1(scale_parts(a, 2));
        for (int p : a.parts) {
            Rat f = frac(factorial(2L * p), factorial(p));
            c *= f * f;
        }
        return c;
    };
    if (!bkp_plucker_check(bgw, window).empty()) return false;

    auto kon = [](const StrictPartition& a) -> Rat {
        Rat c = rat_pow(Rat(2), a.size() - a.length()) *
                q_schur_delta_r_half(scale_parts(a, 2), 3, Rat(1));
        for (int p : a.parts) c *= frac(factorial(2L * p), factorial(p));
        return c;
    };
    if (!bkp_plucker_check(kon, window).empty()) return false;

    auto perturbed = [](const StrictPartition& a) -> Rat {
        Rat c = rat_pow(frac(1, 2), a.length()) * q_schur_delta1(a);
        if (a == StrictPartition({2, 1})) c += frac(1, 1000);
        return c;
    };
    return !bkp_plucker_check(perturbed, window).empty();
}

// ---- permutation tuple oracle --------------------------------------------

struct SymGroup {
    int d;
    std::vector<std::vector<int>> elements;
    std::vector<int> type_index;
    std::vector<Partition> type_list;
    std::vector<std::vector<int>> mul_table;

    explicit SymGroup(int d_) : d(d_) {
        std::vector<int> base(d);
        std::iota(base.begin(), base.end(), 0);
        do elements.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        type_list = partitions(d);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = int(i);
        for (const auto& s : elements) {
            Partition t = cycle_type(s);
            for (size_t k = 0; k < type_list.size(); ++k)
                if (type_list[k] == t) type_index.push_back(int(k));
        }
        mul_table.assign(elements.size(), std::vector<int>(elements.size(), 0));
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j = 0; j < elements.size(); ++j) {
                std::vector<int> c(d);
                for (int k = 0; k < d; ++k) c[k] = elements[i][elements[j][k]];
                mul_table[i][j] = index[c];
            }
    }

    static Partition cycle_type(const std::vector<int>& perm) {
        int n = static_cast<int>(perm.size());
        std::vector<bool> seen(n, false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            cycles.push_back(len);
        }
        return Partition::from_unsorted(std::move(cycles));
    }
};

bool tuple_sweep(const SymGroup& g, int max_profiles) {
    size_t n = g.elements.size();
    size_t ntypes = g.type_list.size();
    std::vector<long> start(n, 0);
    start[0] = 1;
    // Depth-first over profile sequences, convolving as we descend.
    std::function<bool(int, const std::vector<long>&, std::vector<Partition>&)> walk =
        [&](int depth, const std::vector<long>& counts, std::vector<Partition>& chosen) {
            if (depth > 0) {
                Rat got = classical_hurwitz(0, chosen);
                if (got != frac(Int(counts[0]), factorial(g.d))) return false;
            }
            if (depth == max_profiles) return true;
            for (size_t k = 0; k < ntypes; ++k) {
                std::vector<long> next(n, 0);
                for (size_t i = 0; i < n; ++i) {
                    if (counts[i] == 0) continue;
                    for (size_t j = 0; j < n; ++j)
                        if (g.type_index[j] == int(k))
                            next[g.mul_table[i][j]] += counts[i];
                }
                chosen.push_back(g.type_list[k]);
                bool ok = walk(depth + 1, next, chosen);
                chosen.pop_back();
                if (!ok) return false;
            }
            return true;
        };
    std::vector<Partition> chosen;
    return walk(0, start, chosen);
}

bool criterion_classical_oracle() {
    for (int d = 1; d <= 4; ++d) {
        SymGroup g(d);
        if (!tuple_sweep(g, 4)) return false;
    }
    SymGroup g5(5);
    if (!tuple_sweep(g5, 3)) return false;
    // At d = 5 the full four-profile sweep is trimmed to a fixed third and
    // fourth profile to stay inside the time budget.
    size_t n = g5.elements.size();
    for (const Partition& p1 : partitions(5))
        for (const Partition& p2 : partitions(5))
            for (const Partition& extra : {Partition({2, 1, 1, 1}), Partition({3, 2})}) {
                std::vector<Partition> profs{p1, p2, extra, extra};
                std::vector<long> counts(n, 0);
                counts[0] = 1;
                for (const Partition& p : profs) {
                    std::vector<long> next(n, 0);
                    for (size_t i = 0; i < n; ++i) {
                        if (counts[i] == 0) continue;
                        for (size_t j = 0; j < n; ++j)
                            if (g5.type_list[g5.type_index[j]] == p)
                                next[g5.mul_table[i][j]] += counts[i];
                    }
                    counts = std::move(next);
                }
                if (classical_hurwitz(0, profs) != frac(Int(counts[0]), factorial(5)))
                    return false;
            }
    return true;
}

bool criterion_spin_triple() {
    for (bool plus : {true, false}) {
        SpinSign sign{plus};
        for (int d = 0; d <= 6; ++d) {
            PhiSeries phi = phi_series(sign, d, 3);
            VnSeries vn = vn_series(sign, 6, 3);
            for (int r = 0; r <= 3; ++r) {
                if (r > 0 && d < 3) continue;
                Partition ones(std::vector<int>(d, 1));
                for (const Partition& d1 : odd_partitions(d)) {
                    Rat chr = spin_hurwitz_gamma(sign, d, r, d1, ones);
                    if (phi.hurwitz(r, d1, ones) != chr) return false;
                    if (vn.hurwitz(r, d1) != chr) return false;
                    for (const Partition& d2 : odd_partitions(d))
                        if (phi.hurwitz(r, d1, d2) != spin_hurwitz_gamma(sign, d, r, d1, d2))
                            return false;
                }
            }
        }
    }
    return true;
}

bool criterion_kdv_numeric() {
    SolitonConfig cfg = SolitonConfig::canonical(4);
    GridSpec g{-1, 1, 41};
    if (!(kdv_residual(cfg, g, g, 1e-3) < 1e-6)) return false;
    double r1 = kdv_residual_at(cfg, 0.3, -0.2, 0.08);
    double r2 = kdv_residual_at(cfg, 0.3, -0.2, 0.04);
    double r3 = kdv_residual_at(cfg, 0.3, -0.2, 0.02);
    double ratio = (r1 - r2) / (r2 - r3);
    return ratio > 3.0 && ratio < 5.0;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria{
        {"q schur ground truth and 8-variable x-space agreement, |alpha| <= 8",
         criterion_ground_truth},
        {"cauchy identity to degree 10 and orthogonality <Q,Q> = 2^l, |alpha| <= 8",
         criterion_cauchy_orthogonality},
        {"sergeev change-of-basis round trips d <= 10 and cubic weight 3 <= |alpha| <= 10",
         criterion_sergeev},
        {"flow equation through t3-order 4 for d <= 8, both branches",
         criterion_flow_equation},
        {"diagonal flows and composite eigenvalues |alpha| <= 10; virasoro n <= 3, "
         "|alpha| <= 8",
         criterion_eigen_operators},
        {"contraction factorization, all strict |alpha| <= 12, r in {3,5}, worked examples",
         criterion_factorization},
        {"evaluation ratio for (N,r) in {(2,1),(2,3),(4,3),(3,5)}, |alpha| <= 10",
         criterion_ratio},
        {"isotropic plucker relations on window 9 for all families; perturbation rejected",
         criterion_plucker},
        {"classical hurwitz equals permutation tuple counting, d <= 5, up to 4 profiles",
         criterion_classical_oracle},
        {"spin hurwitz triple agreement d <= 6, r <= 3, both branches",
         criterion_spin_triple},
        {"kdv residual below 1e-6 on the 41x41 grid with second-order convergence",
         criterion_kdv_numeric},
    };

    auto t0 = Clock::now();
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto c0 = Clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& e) {
            std::printf("criterion %2zu [FAIL] %s (exception: %s)\n", i + 1,
                        criteria[i].name, e.what());
            ++failures;
            continue;
        }
        double secs = std::chrono::duration<double>(Clock::now() - c0).count();
        std::printf("criterion %2zu [%s] %s (%.1f s)\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].name, secs);
        if (!ok) ++failures;
    }
    double total = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = total < 15 * 60;
    std::printf("criterion 12 [%s] full acceptance wall time %.1f s (budget 900 s)\n",
                in_budget ? "PASS" : "FAIL", total);
    if (!in_budget) ++failures;
    return failures == 0 ? 0 : 1;
}
