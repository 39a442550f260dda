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

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qh/factorization.hpp"
#include "qh/hurwitz.hpp"
#include "qh/json_io.hpp"
#include "qh/kdv.hpp"
#include "qh/operators.hpp"
#include "qh/qschur.hpp"
#include "qh/tau.hpp"

namespace {

using namespace qh;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> parts;
    if (s.empty()) return parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw Usage("bad part '" + tok + "' in '" + s + "'");
        }
    }
    return parts;
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Usage("bad rational '" + s + "'");
    if (r.get_den() == 0) throw Usage("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// "delta:r" or "delta:r:scale" or a dense list "1=1/2,3=-2" (zero elsewhere).
TimeAssignment parse_at(const std::string& s) {
    if (s.rfind("delta:", 0) == 0) {
        std::string rest = s.substr(6);
        size_t colon = rest.find(':');
        try {
            int r = std::stoi(colon == std::string::npos ? rest : rest.substr(0, colon));
            Rat scale = colon == std::string::npos ? Rat(1) : parse_rat(rest.substr(colon + 1));
            return TimeAssignment::delta(r, scale);
        } catch (const Usage&) {
            throw;
        } catch (const std::exception&) {
            throw Usage("bad locus '" + s + "'");
        }
    }
    std::map<int, Rat> values;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos) throw Usage("expected k=value in '" + s + "'");
        try {
            values[std::stoi(tok.substr(0, eq))] = parse_rat(tok.substr(eq + 1));
        } catch (const Usage&) {
            throw;
        } catch (const std::exception&) {
            throw Usage("bad assignment '" + tok + "'");
        }
    }
    return TimeAssignment::dense_with_default_zero(std::move(values));
}

/// "lo:hi:step" with step > 0 dividing the span into whole cells.
GridSpec parse_grid(const std::string& s) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || !(step > 0) || !(hi > lo))
        throw Usage("bad grid '" + s + "' (want lo:hi:step)");
    GridSpec g;
    g.lo = lo;
    g.hi = hi;
    g.points = int((hi - lo) / step + 1.5);
    return g;
}

SpinSign parse_sign(const std::string& s) {
    if (s == "+") return SpinSign{true};
    if (s == "-") return SpinSign{false};
    throw Usage("sign must be + or -");
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write " + out_file);
    out << text;
}

std::string pretty_rat(const Rat& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : num_str(r) + "/" + den_str(r);
}

std::string pretty_poly(const PowerSumPoly& f) {
    if (f.is_zero()) return "0\n";
    std::string s;
    for (const auto& [mono, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + pretty_rat(c) + ")";
        for (int k : mono.parts) s += " p" + std::to_string(k);
    }
    return s + "\n";
}

std::string format_poly(const PowerSumPoly& f, const std::string& fmt) {
    if (fmt == "csv") return poly_to_csv(f);
    if (fmt == "pretty") return pretty_poly(f);
    return dump_json(poly_to_json(f));
}

std::string format_value(const Rat& v, const std::string& fmt) {
    if (fmt == "json") return dump_json(value_to_json(v));
    return pretty_rat(v) + "\n";
}

std::string num15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// ---- subcommand payloads -------------------------------------------------

int run_partitions(int d, bool strict, bool odd, const std::string& fmt,
                   const std::string& out_file) {
    if (strict && odd) throw Usage("--strict and --odd are exclusive");
    std::vector<std::vector<int>> rows;
    if (strict)
        for (const auto& a : strict_partitions(d)) rows.push_back(a.parts);
    else if (odd)
        for (const auto& p : odd_partitions(d)) rows.push_back(p.parts);
    else
        for (const auto& p : partitions(d)) rows.push_back(p.parts);
    std::string text;
    if (fmt == "json") {
        text = dump_json(Json(rows));
    } else {
        for (const auto& r : rows) {
            std::string line;
            for (size_t i = 0; i < r.size(); ++i)
                line += (i ? " " : "") + std::to_string(r[i]);
            text += line + "\n";
        }
    }
    emit(text, out_file);
    return kExitOk;
}

int run_qschur(const std::string& alpha_s, const std::string& at, const std::string& fmt,
               const std::string& out_file) {
    StrictPartition alpha(parse_parts(alpha_s));
    if (at.empty()) {
        emit(format_poly(q_schur(alpha), fmt), out_file);
    } else {
        emit(format_value(evaluate(q_schur(alpha), parse_at(at)), fmt), out_file);
    }
    return kExitOk;
}

int run_schur(const std::string& lambda_s, const std::string& at, const std::string& fmt,
              const std::string& out_file) {
    Partition lambda(parse_parts(lambda_s));
    if (at.empty()) {
        emit(format_poly(schur(lambda), fmt), out_file);
    } else {
        emit(format_value(evaluate(schur(lambda), parse_at(at)), fmt), out_file);
    }
    return kExitOk;
}

int run_char(const std::string& kind_s, int d, const std::string& fmt,
             const std::string& out_file) {
    TableKind kind;
    try {
        kind = table_kind_from_name(kind_s);
    } catch (const std::exception& e) {
        throw Usage(e.what());
    }
    const CharacterTable& t = character_table(kind, d);
    emit(fmt == "csv" || fmt == "pretty" ? table_to_csv(t) : dump_json(table_to_json(t)),
         out_file);
    return kExitOk;
}

int run_hurwitz(int g, const std::string& profiles_s, const std::string& fmt,
                const std::string& out_file) {
    std::vector<Partition> profiles;
    std::istringstream in(profiles_s);
    std::string tok;
    while (std::getline(in, tok, ';')) profiles.push_back(Partition(parse_parts(tok)));
    if (profiles.empty()) throw Usage("need at least one profile");
    emit(format_value(classical_hurwitz(g, profiles), fmt), out_file);
    return kExitOk;
}

int run_spin_hurwitz(const std::string& sign_s, int d, int r, const std::string& p1,
                     const std::string& p2, const std::string& fmt,
                     const std::string& out_file) {
    SpinSign sign = parse_sign(sign_s);
    Partition d1(parse_parts(p1)), d2(parse_parts(p2));
    emit(format_value(spin_hurwitz_gamma(sign, d, r, d1, d2), fmt), out_file);
    return kExitOk;
}

int run_factorize(const std::string& alpha_s, int r, const std::string& fmt,
                  const std::string& out_file) {
    StrictPartition alpha(parse_parts(alpha_s));
    QsFactorization f = factorized_qs(alpha, r);
    PowerSumPoly lhs = q_schur_contracted(alpha, r);
    Json j{{"alpha", partition_to_json(alpha)},
           {"r", r},
           {"admissible", f.decomposition.admissible},
           {"mu", partition_to_json(f.decomposition.mu)},
           {"a", f.decomposition.a},
           {"b", f.decomposition.b},
           {"kappa", f.decomposition.kappa},
           {"omega", f.omega},
           {"omega_rule_matches", f.omega_rule_matches},
           {"lhs", poly_to_json(lhs)},
           {"rhs", poly_to_json(f.value)},
           {"equal", lhs == f.value}};
    if (fmt == "pretty") {
        std::string text = "alpha = [" + alpha_s + "], r = " + std::to_string(r) + "\n";
        text += std::string("admissible: ") + (f.decomposition.admissible ? "yes" : "no") + "\n";
        text += "lhs: " + pretty_poly(lhs);
        text += "rhs: " + pretty_poly(f.value);
        text += std::string("equal: ") + (lhs == f.value ? "yes" : "no") + "\n";
        emit(text, out_file);
    } else {
        emit(dump_json(j), out_file);
    }
    return lhs == f.value ? kExitOk : kExitVerifyFail;
}

int run_tau_hyperg(const std::string& sign_s, const std::map<int, Rat>& u, int deg,
                   const std::string& at, const std::string& fmt,
                   const std::string& out_file) {
    SpinSign sign = parse_sign(sign_s);
    BilinearTauSeries b = hyperg_tau(sign, HypergeomWeights::exp_times(u), deg);
    TimeAssignment pstar = at.empty() ? TimeAssignment::delta(1) : parse_at(at);
    TauSeries t = b.specialize(pstar);
    emit(fmt == "csv" ? series_to_csv(t) : dump_json(series_to_json(t)), out_file);
    return kExitOk;
}

int run_tau_named(const TauSeries& t, const std::string& fmt, const std::string& out_file) {
    emit(fmt == "csv" ? series_to_csv(t) : dump_json(series_to_json(t)), out_file);
    return kExitOk;
}

int run_tau_kdv(int n, const std::string& sign_s, const std::string& grid_s, bool check_pde,
                double h, const std::string& fmt, const std::string& out_file) {
    SpinSign sign = parse_sign(sign_s);
    SolitonConfig cfg = SolitonConfig::canonical(n, sign.plus);
    GridSpec g = parse_grid(grid_s);
    auto coord = [&](int i) {
        return g.points == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.points - 1);
    };
    std::string text;
    if (fmt == "json") {
        text += "{\n  \"numeric\": true,\n  \"n\": " + std::to_string(n) + ",\n";
        text += "  \"sign\": \"" + sign_s + "\",\n  \"rows\": [\n";
        for (int i = 0; i < g.points; ++i)
            for (int j = 0; j < g.points; ++j) {
                double t1 = coord(i), t3 = coord(j);
                text += "    [" + num15(t1) + ", " + num15(t3) + ", " +
                        num15(kdv_u(cfg, t1, t3)) + "]";
                text += (i == g.points - 1 && j == g.points - 1) ? "\n" : ",\n";
            }
        text += "  ]";
    } else {
        text += "# numeric\nt1,t3,u\n";
        for (int i = 0; i < g.points; ++i)
            for (int j = 0; j < g.points; ++j) {
                double t1 = coord(i), t3 = coord(j);
                text += num15(t1) + "," + num15(t3) + "," + num15(kdv_u(cfg, t1, t3)) + "\n";
            }
    }
    int code = kExitOk;
    if (check_pde) {
        double res = kdv_residual(cfg, g, g, h);
        bool pass = res < 1e-6;
        if (fmt == "json") {
            text += ",\n  \"residual\": " + num15(res) + ",\n  \"pde\": " +
                    (pass ? "true" : "false") + "\n}\n";
        } else {
            text += "residual," + num15(res) + "," + (pass ? "pass" : "fail") + "\n";
        }
        if (!pass) code = kExitVerifyFail;
    } else if (fmt == "json") {
        text += "\n}\n";
    }
    emit(text, out_file);
    return code;
}

int run_verify_cut_and_join(const std::string& sign_s, int d, int order,
                            const std::string& out_file) {
    SpinSign sign = parse_sign(sign_s);
    std::vector<bool> orders = verify_cut_and_join(sign.plus, d, order);
    bool all = true;
    for (bool b : orders) all = all && b;
    Json j{{"order", all}, {"orders", orders}};
    emit(dump_json(j), out_file);
    return all ? kExitOk : kExitVerifyFail;
}

int run_verify_factorization(int max_size, int r, const std::string& out_file) {
    std::string text = "alpha,status\n";
    bool all = true;
    for (int d = 0; d <= max_size; ++d)
        for (const StrictPartition& alpha : strict_partitions(d)) {
            QsReport rep = verify_qs(alpha, r);
            std::string status = rep.vanishes ? "vanishes" : (rep.equal ? "pass" : "FAIL");
            if (!rep.vanishes && !rep.equal) all = false;
            if (!rep.omega_rule_matches) {
                status += ",omega-rule-miss";
                all = false;
            }
            std::string cell;
            for (size_t i = 0; i < alpha.parts.size(); ++i)
                cell += (i ? " " : "") + std::to_string(alpha.parts[i]);
            text += cell + "," + status + "\n";
        }
    emit(text, out_file);
    return all ? kExitOk : kExitVerifyFail;
}

int run_verify_ratio(int n_factor, int r, int max_size, const std::string& out_file) {
    std::string text = "alpha,status\n";
    bool all = true;
    for (int d = 0; d <= max_size; ++d)
        for (const StrictPartition& alpha : strict_partitions(d)) {
            RatioCheck c = verify_ratio(alpha, n_factor, r);
            if (c == RatioCheck::mismatch) all = false;
            std::string cell;
            for (size_t i = 0; i < alpha.parts.size(); ++i)
                cell += (i ? " " : "") + std::to_string(alpha.parts[i]);
            text += cell + "," +
                    (c == RatioCheck::equal ? "pass"
                                            : c == RatioCheck::skipped ? "skipped" : "FAIL") +
                    "\n";
        }
    emit(text, out_file);
    return all ? kExitOk : kExitVerifyFail;
}

int run_verify_all(int max, const std::string& out_file) {
    std::string text;
    bool all = true;
    auto record = [&](const std::string& name, bool ok) {
        text += name + ": " + (ok ? "pass" : "FAIL") + "\n";
        all = all && ok;
    };
    record("cauchy", cauchy_identity_check(max));
    {
        bool ok = true;
        for (int d = 0; d <= max && ok; ++d)
            for (const StrictPartition& a : strict_partitions(d)) {
                for (const StrictPartition& b : strict_partitions(d)) {
                    Rat expect = a == b ? rat_pow(Rat(2), a.length()) : Rat(0);
                    if (scalar_product_B(q_schur(a), q_schur(b)) != expect) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
        record("orthogonality", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= max && ok; ++d)
            for (const StrictPartition& a : strict_partitions(d)) {
                const PowerSumPoly& q = q_schur(a);
                if (spin_cut_and_join(q) != spin_cut_and_join_eigenvalue(a) * q) ok = false;
            }
        record("eigen", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= max && ok; ++d)
            for (const StrictPartition& a : strict_partitions(d)) {
                QsReport rep = verify_qs(a, 3);
                if (!rep.vanishes && !rep.equal) ok = false;
                if (!rep.omega_rule_matches) ok = false;
            }
        record("factorization", ok);
    }
    {
        bool ok = true;
        for (int d = 0; d <= max && ok; ++d)
            for (const StrictPartition& a : strict_partitions(d))
                if (verify_ratio(a, 2, 3) == RatioCheck::mismatch) ok = false;
        record("ratio", ok);
    }
    {
        auto coeff = [](const StrictPartition& a) -> Rat {
            return rat_pow(Rat(1, 2), a.length()) * q_schur_delta1(a);
        };
        record("plucker", bkp_plucker_check(coeff, std::min(max, 6)).empty());
    }
    {
        bool ok = true;
        int d = std::min(max, 5);
        if (d >= 3) {
            std::vector<bool> orders = verify_cut_and_join(true, d, 2);
            for (bool b : orders) ok = ok && b;
        }
        record("cut-and-join", ok);
    }
    emit(text, out_file);
    return all ? kExitOk : kExitVerifyFail;
}

int run_cache(const std::string& action, const std::string& out_file) {
    std::string text;
    if (action == "path") {
        text = cache_dir() + "\n";
    } else if (action == "clear") {
        text = "removed " + std::to_string(cache_clear()) + "\n";
    } else if (action == "stats") {
        for (const auto& [kind, d] : cache_stats().cached)
            text += kind + ":" + std::to_string(d) + "\n";
    } else {
        throw Usage("cache action must be clear, stats, or path");
    }
    emit(text, out_file);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Q Schur / Hurwitz calculator"};
    app.require_subcommand(1);

    std::string fmt = "json", out_file, cache_dir_flag;
    int jobs = 1;
    app.add_option("--format", fmt, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", out_file, "write data to a file instead of stdout");
    app.add_option("--cache-dir", cache_dir_flag, "character table cache directory");
    app.add_option("--jobs", jobs, "worker bound (current build runs single-threaded)");

    // partitions
    auto* p_cmd = app.add_subcommand("partitions", "enumerate partitions of d");
    int p_d = 0;
    bool p_strict = false, p_odd = false;
    p_cmd->add_option("--d", p_d, "size")->required();
    p_cmd->add_flag("--strict", p_strict, "strictly decreasing parts");
    p_cmd->add_flag("--odd", p_odd, "all parts odd");

    // qschur / schur
    auto* q_cmd = app.add_subcommand("qschur", "projective Schur function in power sums");
    std::string q_alpha, q_at;
    q_cmd->add_option("--alpha", q_alpha, "strict partition, comma separated")->required();
    q_cmd->add_option("--at", q_at, "evaluate at delta:r[:scale] or k=v,...");

    auto* s_cmd = app.add_subcommand("schur", "Schur function in power sums");
    std::string s_lambda, s_at;
    s_cmd->add_option("--lambda", s_lambda, "partition, comma separated")->required();
    s_cmd->add_option("--at", s_at, "evaluate at delta:r[:scale] or k=v,...");

    // char
    auto* c_cmd = app.add_subcommand("char", "character table of one degree");
    std::string c_kind = "symmetric";
    int c_d = 0;
    c_cmd->add_option("--kind", c_kind, "symmetric | sergeev");
    c_cmd->add_option("--d", c_d, "degree")->required();

    // hurwitz / spin-hurwitz
    auto* h_cmd = app.add_subcommand("hurwitz", "classical Hurwitz number");
    int h_g = 0;
    std::string h_profiles;
    h_cmd->add_option("--g", h_g, "genus");
    h_cmd->add_option("--profiles", h_profiles, "profiles, ';' separated")->required();

    auto* sh_cmd = app.add_subcommand("spin-hurwitz", "spin Hurwitz number");
    std::string sh_sign = "+", sh_p1, sh_p2;
    int sh_d = 0, sh_r = 0;
    sh_cmd->add_option("--sign", sh_sign, "+ | -");
    sh_cmd->add_option("--d", sh_d, "degree")->required();
    sh_cmd->add_option("--r", sh_r, "extra (3,1^{d-3}) branch points");
    sh_cmd->add_option("--p1", sh_p1, "first profile")->required();
    sh_cmd->add_option("--p2", sh_p2, "second profile")->required();

    // factorize
    auto* f_cmd = app.add_subcommand("factorize", "mod-r contraction of one Q function");
    std::string f_alpha;
    int f_r = 3;
    f_cmd->add_option("--alpha", f_alpha, "strict partition")->required();
    f_cmd->add_option("--r", f_r, "odd modulus");

    // tau
    auto* t_cmd = app.add_subcommand("tau", "tau-series and soliton evaluation");
    t_cmd->require_subcommand(1);
    auto* th_cmd = t_cmd->add_subcommand("hyperg", "hypergeometric series coefficients");
    std::string th_sign = "+", th_at;
    int th_deg = 8;
    std::map<int, Rat> th_u;
    std::string th_t1, th_t3, th_t5;
    th_cmd->add_option("--sign", th_sign, "+ | -");
    th_cmd->add_option("--deg", th_deg, "truncation degree");
    th_cmd->add_option("--t1", th_t1, "exponential time variable e^{t_1}");
    th_cmd->add_option("--t3", th_t3, "exponential time variable e^{t_3/3}");
    th_cmd->add_option("--t5", th_t5, "exponential time variable e^{t_5/5}");
    th_cmd->add_option("--at", th_at, "second-set locus, default delta:1");

    auto* tb_cmd = t_cmd->add_subcommand("bgw", "stretched-label series at the unit locus");
    int tb_deg = 4;
    tb_cmd->add_option("--deg", tb_deg, "truncation degree");
    auto* tk_cmd = t_cmd->add_subcommand("kontsevich", "stretched-label series at the cubic locus");
    int tk_deg = 6;
    tk_cmd->add_option("--deg", tk_deg, "truncation degree");

    auto* tkdv_cmd = t_cmd->add_subcommand("kdv", "numeric soliton profile (labeled numeric)");
    int tkdv_n = 4;
    std::string tkdv_sign = "+", tkdv_grid = "-1:1:0.05";
    bool tkdv_check = false;
    double tkdv_h = 1e-3;
    tkdv_cmd->add_option("--n", tkdv_n, "soliton count");
    tkdv_cmd->add_option("--sign", tkdv_sign, "+ | -");
    tkdv_cmd->add_option("--grid", tkdv_grid, "lo:hi:step for both times");
    tkdv_cmd->add_flag("--check-pde", tkdv_check, "report the hierarchy residual");
    tkdv_cmd->add_option("--step", tkdv_h, "finite-difference step");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "invariant suites");
    v_cmd->require_subcommand(1);
    auto* vcj_cmd = v_cmd->add_subcommand("cut-and-join", "flow equation order by order");
    std::string vcj_sign = "+";
    int vcj_d = 5, vcj_order = 3;
    vcj_cmd->add_option("--sign", vcj_sign, "+ | -");
    vcj_cmd->add_option("--d", vcj_d, "degree");
    vcj_cmd->add_option("--order", vcj_order, "highest t_3 order");
    auto* vf_cmd = v_cmd->add_subcommand("factorization", "contraction identity sweep");
    int vf_max = 12, vf_r = 3;
    vf_cmd->add_option("--max-size", vf_max, "largest |alpha|");
    vf_cmd->add_option("--r", vf_r, "odd modulus");
    auto* vr_cmd = v_cmd->add_subcommand("ratio", "evaluation-ratio sweep");
    int vr_n = 2, vr_r = 3, vr_max = 10;
    vr_cmd->add_option("--N", vr_n, "stretching factor");
    vr_cmd->add_option("--r", vr_r, "odd modulus");
    vr_cmd->add_option("--max-size", vr_max, "largest |alpha|");
    auto* va_cmd = v_cmd->add_subcommand("all", "every invariant suite at bounded size");
    int va_max = 8;
    va_cmd->add_option("--max", va_max, "size bound");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "disk cache admin");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action, "clear | stats | path")->required();

    // Global flags may appear after the subcommand.
    std::function<void(CLI::App*)> allow_extras = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) allow_extras(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) allow_extras(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        CLI::App* scope = &app;
        while (!scope->get_subcommands().empty()) scope = scope->get_subcommands()[0];
        std::cerr << scope->help() << "\n";
        return kExitUsage;
    }

    if (!cache_dir_flag.empty()) set_cache_dir(cache_dir_flag);
    (void)jobs;

    try {
        if (*p_cmd) return run_partitions(p_d, p_strict, p_odd, fmt, out_file);
        if (*q_cmd) return run_qschur(q_alpha, q_at, fmt, out_file);
        if (*s_cmd) return run_schur(s_lambda, s_at, fmt, out_file);
        if (*c_cmd) return run_char(c_kind, c_d, fmt, out_file);
        if (*h_cmd) return run_hurwitz(h_g, h_profiles, fmt, out_file);
        if (*sh_cmd) return run_spin_hurwitz(sh_sign, sh_d, sh_r, sh_p1, sh_p2, fmt, out_file);
        if (*f_cmd) return run_factorize(f_alpha, f_r, fmt, out_file);
        if (*t_cmd) {
            if (*th_cmd) {
                if (!th_t1.empty()) th_u[1] = parse_rat(th_t1);
                if (!th_t3.empty()) th_u[3] = parse_rat(th_t3);
                if (!th_t5.empty()) th_u[5] = parse_rat(th_t5);
                return run_tau_hyperg(th_sign, th_u, th_deg, th_at, fmt, out_file);
            }
            if (*tb_cmd) return run_tau_named(bgw_series(tb_deg), fmt, out_file);
            if (*tk_cmd) return run_tau_named(kontsevich_series(tk_deg), fmt, out_file);
            if (*tkdv_cmd)
                return run_tau_kdv(tkdv_n, tkdv_sign, tkdv_grid, tkdv_check, tkdv_h, fmt,
                                   out_file);
        }
        if (*v_cmd) {
            if (*vcj_cmd) return run_verify_cut_and_join(vcj_sign, vcj_d, vcj_order, out_file);
            if (*vf_cmd) return run_verify_factorization(vf_max, vf_r, out_file);
            if (*vr_cmd) return run_verify_ratio(vr_n, vr_r, vr_max, out_file);
            if (*va_cmd) return run_verify_all(va_max, out_file);
        }
        if (*cache_cmd) return run_cache(cache_action, out_file);
    } catch (const Usage& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
