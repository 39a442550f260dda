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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qh/kdv.hpp"
#include "qh/qschur.hpp"

using namespace qh;

TEST_CASE("canonical configuration") {
    SolitonConfig cfg = SolitonConfig::canonical(3);
    CHECK(cfg.zeta == std::vector<double>{1, 2, 3});
    CHECK(cfg.phase[0] == doctest::Approx(-std::log(2.0)));
    CHECK(cfg.phase[2] == doctest::Approx(-std::log(2.0) - 2.0 * std::log(6.0)));
    CHECK_THROWS(SolitonConfig::canonical(-1));
}

TEST_CASE("small soliton sums by hand") {
    SolitonConfig c0 = SolitonConfig::canonical(0);
    CHECK(kdv_soliton_tau(c0, 0.3, -0.7) == doctest::Approx(1.0));

    SolitonConfig c1 = SolitonConfig::canonical(1);
    CHECK(kdv_soliton_tau(c1, 0, 0) == doctest::Approx(1.5));
    CHECK(kdv_soliton_tau(c1, -40, 0) == doctest::Approx(1.0));

    SolitonConfig c2 = SolitonConfig::canonical(2);
    double e1 = std::exp(c2.phase[0]), e2 = std::exp(c2.phase[1]);
    double hand = 1 + e1 + e2 + (1.0 / 9.0) * e1 * e2;
    CHECK(kdv_soliton_tau(c2, 0, 0) == doctest::Approx(hand).epsilon(1e-14));
}

TEST_CASE("soliton tau equals the truncated character sum") {
    // With parts bounded by 4, the diagonal unit-locus series is a finite
    // sum over subsets of {1,2,3,4}; the soliton form differs only by the
    // shift t_1 -> t_1 + log 4.
    for (bool plus : {true, false}) {
        SolitonConfig cfg = SolitonConfig::canonical(4, plus);
        for (double t1 : {-0.7, 0.3})
            for (double t3 : {-0.2, 0.11}) {
                double exact = 0;
                for (int mask = 0; mask < 16; ++mask) {
                    std::vector<int> parts;
                    for (int i = 4; i >= 1; --i)
                        if (mask >> (i - 1) & 1) parts.push_back(i);
                    StrictPartition a(parts);
                    double q1 = q_schur_delta1(a).get_d();
                    double w3 = 0, d = 0;
                    for (int p : a.parts) {
                        w3 += p * p * p / 3.0;
                        d += p;
                    }
                    double term = std::pow(0.5, a.length()) * q1 * q1 *
                                  std::exp(t1 * d + t3 * w3);
                    exact += (!plus && a.length() % 2) ? -term : term;
                }
                double got = kdv_soliton_tau(cfg, t1 + std::log(4.0), t3);
                CHECK(got == doctest::Approx(exact).epsilon(1e-12));
            }
    }
}

TEST_CASE("log form stays finite where the plain value overflows") {
    SolitonConfig cfg = SolitonConfig::canonical(2);
    SignedLog l = kdv_soliton_log_tau(cfg, 150, 0);
    CHECK(l.sign == 1);
    CHECK(std::isfinite(l.log_abs));
    CHECK_THROWS(kdv_soliton_tau(cfg, 500, 0));
}

TEST_CASE("hierarchy residual") {
    GridSpec g{-1, 1, 11};
    SolitonConfig c0 = SolitonConfig::canonical(0);
    CHECK(kdv_residual(c0, g, g, 1e-3) == 0.0);
    SolitonConfig c1 = SolitonConfig::canonical(1);
    CHECK(kdv_residual(c1, g, g, 1e-3) < 1e-6);
    SolitonConfig c4 = SolitonConfig::canonical(4);
    GridSpec g41{-1, 1, 41};
    CHECK(kdv_residual(c4, g41, g41, 1e-3) < 1e-6);
}

TEST_CASE("raw residual converges at second order") {
    SolitonConfig c4 = SolitonConfig::canonical(4);
    double r1 = kdv_residual_at(c4, 0.3, -0.2, 0.08);
    double r2 = kdv_residual_at(c4, 0.3, -0.2, 0.04);
    double r3 = kdv_residual_at(c4, 0.3, -0.2, 0.02);
    double ratio = (r1 - r2) / (r2 - r3);
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("singular branch zero is reported with the point") {
    SolitonConfig cfg = SolitonConfig::canonical(1, false);
    // tau^- = 1 - e^{eta} vanishes at t_1 = log 2.
    CHECK_THROWS_WITH_AS(kdv_u(cfg, std::log(2.0), 0.0),
                         doctest::Contains("tau vanishes"), std::runtime_error);
    // Away from the zero the branch is regular.
    CHECK(std::isfinite(kdv_u(cfg, 2.0, 0.0)));
}

TEST_CASE("input validation") {
    SolitonConfig bad;
    bad.zeta = {1.0, 1.0};
    bad.phase = {0.0, 0.0};
    CHECK_THROWS(kdv_soliton_tau(bad, 0, 0));
    bad.zeta = {1.0};
    CHECK_THROWS(kdv_soliton_tau(bad, 0, 0));
    SolitonConfig cfg = SolitonConfig::canonical(1);
    CHECK_THROWS(kdv_residual_at(cfg, 0, 0, 0.0));
}
