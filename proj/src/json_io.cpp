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

#include "qh/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

std::string parts_cell(const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

Json partition_to_json(const Partition& p) { return Json(p.parts); }
Json partition_to_json(const StrictPartition& a) { return Json(a.parts); }

Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

StrictPartition strict_partition_from_json(const Json& j) {
    return StrictPartition(j.get<std::vector<int>>());
}

Json rational_to_json(const Rat& r) {
    return Json{{"num", num_str(r)}, {"den", den_str(r)}};
}

Rat rational_from_json(const Json& j) {
    Int num(j.at("num").get<std::string>());
    Int den(j.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator");
    return frac(num, den);
}

Json value_to_json(const Rat& r) { return Json{{"value", rational_to_json(r)}}; }

Rat value_from_json(const Json& j) { return rational_from_json(j.at("value")); }

Json poly_to_json(const PowerSumPoly& f) {
    Json terms = Json::array();
    for (const auto& [mono, c] : f.terms()) {
        Json t = Json{{"mono", partition_to_json(mono)}};
        t.update(rational_to_json(c));
        terms.push_back(std::move(t));
    }
    return Json{{"terms", std::move(terms)}};
}

PowerSumPoly poly_from_json(const Json& j) {
    PowerSumPoly f;
    for (const auto& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("mono")), rational_from_json(t));
    return f;
}

Json series_to_json(const TauSeries& t) {
    Json coeffs = Json::array();
    for (const auto& [alpha, c] : t.coeffs) {
        Json row = Json{{"alpha", partition_to_json(alpha)}};
        row.update(rational_to_json(c));
        coeffs.push_back(std::move(row));
    }
    return Json{{"sign", t.plus ? "+" : "-"}, {"D", t.degree}, {"coeffs", std::move(coeffs)}};
}

TauSeries series_from_json(const Json& j) {
    TauSeries t;
    std::string sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw std::invalid_argument("sign must be + or -");
    t.plus = sign == "+";
    t.degree = j.at("D").get<int>();
    for (const auto& row : j.at("coeffs"))
        t.coeffs[strict_partition_from_json(row.at("alpha"))] = rational_from_json(row);
    return t;
}

Json table_to_json(const CharacterTable& t) {
    Json rows = Json::array();
    for (const auto& [key, v] : t.values) {
        Json row = Json{{"label", partition_to_json(key.first)},
                        {"class", partition_to_json(key.second)}};
        row.update(rational_to_json(v));
        rows.push_back(std::move(row));
    }
    return Json{{"d", t.d}, {"kind", table_kind_name(t.kind)}, {"rows", std::move(rows)}};
}

CharacterTable table_from_json(const Json& j) {
    CharacterTable t;
    t.d = j.at("d").get<int>();
    t.kind = table_kind_from_name(j.at("kind").get<std::string>());
    if (t.kind == TableKind::symmetric) {
        t.labels = partitions(t.d);
        t.classes = t.labels;
    } else {
        for (const StrictPartition& a : strict_partitions(t.d))
            t.labels.push_back(a.as_partition());
        t.classes = odd_partitions(t.d);
    }
    for (const auto& row : j.at("rows"))
        t.values[{partition_from_json(row.at("label")), partition_from_json(row.at("class"))}] =
            rational_from_json(row);
    if (t.values.size() != t.labels.size() * t.classes.size())
        throw std::invalid_argument("character table rows do not cover the grid");
    return t;
}

std::string table_to_csv(const CharacterTable& t) {
    std::ostringstream out;
    out << "label,class,num,den\n";
    for (const auto& [key, v] : t.values)
        out << parts_cell(key.first.parts) << ',' << parts_cell(key.second.parts) << ','
            << num_str(v) << ',' << den_str(v) << '\n';
    return out.str();
}

std::string series_to_csv(const TauSeries& t) {
    std::ostringstream out;
    out << "alpha,num,den\n";
    for (const auto& [alpha, c] : t.coeffs)
        out << parts_cell(alpha.parts) << ',' << num_str(c) << ',' << den_str(c) << '\n';
    return out.str();
}

std::string poly_to_csv(const PowerSumPoly& f) {
    std::ostringstream out;
    out << "mono,num,den\n";
    for (const auto& [mono, c] : f.terms())
        out << parts_cell(mono.parts) << ',' << num_str(c) << ',' << den_str(c) << '\n';
    return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qh
