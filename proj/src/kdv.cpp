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

#include "qh/kdv.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qh {

namespace {

constexpr double kMaxExponent = 600.0;

void check_config(const SolitonConfig& cfg) {
    size_t n = cfg.zeta.size();
    if (cfg.phase.size() != n)
        throw std::invalid_argument("momentum and phase lists must have equal length");
    if (n > 20) throw std::invalid_argument("too many solitons for subset enumeration");
    for (size_t i = 0; i < n; ++i) {
        if (!(cfg.zeta[i] > 0)) throw std::invalid_argument("momenta must be positive");
        for (size_t j = i + 1; j < n; ++j)
            if (cfg.zeta[i] == cfg.zeta[j])
                throw std::invalid_argument("momenta must be distinct");
    }
}

std::string point_string(double t1, double t3) {
    return "(t1 = " + std::to_string(t1) + ", t3 = " + std::to_string(t3) + ")";
}

/// Signed log-sum-exp of tau and its first two t_1-derivatives: returns the
/// common scale m and the scaled sums T_k = sum_S c_S L_S^k e^{theta_S - m},
/// L_S the total momentum of the subset. Extended precision internally so
/// the finite-difference stencils in kdv_residual_at stay quiet at small h.
struct ScaledSums {
    long double scale = 0.0L;
    long double t0 = 0.0L, t1 = 0.0L, t2 = 0.0L;
};

ScaledSums scaled_sums(const SolitonConfig& cfg, long double t1, long double t3) {
    check_config(cfg);
    size_t n = cfg.zeta.size();
    if (std::abs(double(t1)) > kMaxExponent || std::abs(double(t3)) > kMaxExponent)
        throw std::invalid_argument("times outside the supported range at " +
                                    point_string(double(t1), double(t3)));
    std::vector<long double> theta(uint32_t(1) << n, 0.0L);
    std::vector<long double> speed1(theta.size(), 0.0L);
    std::vector<int> parity(theta.size(), 0);
    long double max_theta = 0.0L;
    for (uint32_t mask = 1; mask < theta.size(); ++mask) {
        uint32_t low = mask & (mask - 1);
        uint32_t bit = mask ^ low;
        int i = 0;
        while (!(bit >> i & 1)) ++i;
        long double z = cfg.zeta[i];
        long double th = (long double)cfg.phase[i] + t1 * z + t3 * z * z * z / 3.0L;
        for (size_t j = 0; j < n; ++j)
            if (low >> j & 1) {
                long double d = (z - cfg.zeta[j]) / (z + cfg.zeta[j]);
                th += 2.0L * std::log(std::abs(d));
            }
        theta[mask] = theta[low] + th;
        speed1[mask] = speed1[low] + z;
        parity[mask] = parity[low] ^ 1;
        if (theta[mask] > max_theta) max_theta = theta[mask];
    }
    ScaledSums out;
    out.scale = max_theta;
    for (uint32_t mask = 0; mask < theta.size(); ++mask) {
        long double w = std::exp(theta[mask] - max_theta);
        if (!cfg.plus && parity[mask]) w = -w;
        out.t0 += w;
        out.t1 += w * speed1[mask];
        out.t2 += w * speed1[mask] * speed1[mask];
    }
    return out;
}

long double u_extended(const SolitonConfig& cfg, long double t1, long double t3) {
    ScaledSums s = scaled_sums(cfg, t1, t3);
    if (std::abs(s.t0) < 1e-12L)
        throw std::runtime_error("tau vanishes at " + point_string(double(t1), double(t3)));
    long double r1 = s.t1 / s.t0, r2 = s.t2 / s.t0;
    return 2.0L * (r2 - r1 * r1);
}

}  // namespace

SolitonConfig SolitonConfig::canonical(int n, bool plus) {
    if (n < 0) throw std::invalid_argument("soliton count must be >= 0");
    SolitonConfig cfg;
    cfg.plus = plus;
    double logfact = 0.0;
    for (int i = 1; i <= n; ++i) {
        logfact += std::log(double(i));
        cfg.zeta.push_back(double(i));
        cfg.phase.push_back(-std::log(2.0) - 2.0 * logfact);
    }
    return cfg;
}

SignedLog kdv_soliton_log_tau(const SolitonConfig& cfg, double t1, double t3) {
    ScaledSums s = scaled_sums(cfg, t1, t3);
    SignedLog out;
    if (s.t0 == 0.0) {
        out.sign = 0;
        out.log_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.sign = s.t0 > 0 ? 1 : -1;
    out.log_abs = s.scale + std::log(std::abs(s.t0));
    return out;
}

double kdv_soliton_tau(const SolitonConfig& cfg, double t1, double t3) {
    SignedLog l = kdv_soliton_log_tau(cfg, t1, t3);
    if (l.log_abs > kMaxExponent)
        throw std::overflow_error("tau overflows at " + point_string(t1, t3));
    return l.sign * std::exp(l.log_abs);
}

double kdv_u(const SolitonConfig& cfg, double t1, double t3) {
    return double(u_extended(cfg, t1, t3));
}

double kdv_residual_at(const SolitonConfig& cfg, double t1, double t3, double h) {
    if (!(h > 0)) throw std::invalid_argument("step must be positive");
    long double hl = h;
    auto u = [&](long double a, long double b) { return u_extended(cfg, a, b); };
    long double u0 = u(t1, t3);
    long double up1 = u(t1 + hl, t3), um1 = u(t1 - hl, t3);
    long double up2 = u(t1 + 2 * hl, t3), um2 = u(t1 - 2 * hl, t3);
    long double u_1 = (up1 - um1) / (2 * hl);
    long double u_111 = (up2 - 2 * up1 + 2 * um1 - um2) / (2 * hl * hl * hl);
    long double u_3 = (u(t1, t3 + hl) - u(t1, t3 - hl)) / (2 * hl);
    return double(3.0L * u_3 - u_111 - 6.0L * u0 * u_1);
}

double kdv_residual(const SolitonConfig& cfg, const GridSpec& t1_grid, const GridSpec& t3_grid,
                    double h) {
    if (t1_grid.points < 1 || t3_grid.points < 1)
        throw std::invalid_argument("grids need at least one point");
    auto coord = [](const GridSpec& g, int i) {
        return g.points == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.points - 1);
    };
    double worst = 0.0;
    for (int i = 0; i < t1_grid.points; ++i)
        for (int j = 0; j < t3_grid.points; ++j) {
            double t1 = coord(t1_grid, i), t3 = coord(t3_grid, j);
            double rh = kdv_residual_at(cfg, t1, t3, h);
            double rh2 = kdv_residual_at(cfg, t1, t3, h / 2);
            double r = (4.0 * rh2 - rh) / 3.0;
            if (std::abs(r) > worst) worst = std::abs(r);
        }
    return worst;
}

}  // namespace qh
