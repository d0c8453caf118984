// Copyright 2026 The subsys Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "subsys/io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "subsys/error.h"

namespace subsys {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorCode::ParseError, what);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

long parse_int(std::string_view s, const std::string &context) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        parse_fail(context + ": '" + std::string(s) + "' is not an integer");
    }
    return v;
}

bool parse_bool(std::string_view s, const std::string &context) {
    if (s == "true" || s == "1") {
        return true;
    }
    if (s == "false" || s == "0") {
        return false;
    }
    parse_fail(context + ": expected true or false, got '" + std::string(s) + "'");
}

Json rows_json(const std::vector<Vec> &rows) {
    Json out = Json::array();
    for (const auto &r : rows) {
        Json row = Json::array();
        for (Elem e : r) {
            row.push_back(static_cast<int>(e));
        }
        out.push_back(std::move(row));
    }
    return out;
}

template <typename T>
Json optional_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    std::optional<long> q, p, m, n;
    bool symplectic = false;
    std::vector<std::vector<long>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (line.find('=') != std::string_view::npos) {
            if (!rows.empty()) {
                parse_fail(where + ": header after matrix rows");
            }
            for (auto token : split_ws(line)) {
                const auto eq = token.find('=');
                if (eq == std::string_view::npos || eq == 0) {
                    parse_fail(where + ": malformed header '" + std::string(token) + "'");
                }
                const auto key = token.substr(0, eq);
                const auto value = token.substr(eq + 1);
                if (key == "q") {
                    q = parse_int(value, where);
                } else if (key == "p") {
                    p = parse_int(value, where);
                } else if (key == "m") {
                    m = parse_int(value, where);
                } else if (key == "n") {
                    n = parse_int(value, where);
                } else if (key == "symplectic") {
                    symplectic = parse_bool(value, where);
                } else if (key == "additive") {
                    if (parse_bool(value, where)) {
                        throw Error(ErrorCode::NotLinear, "additive (GF(p)-linear only) codes are not supported");
                    }
                } else {
                    parse_fail(where + ": unknown header key '" + std::string(key) + "'");
                }
            }
            continue;
        }
        std::vector<long> row;
        for (auto token : split_ws(line)) {
            row.push_back(parse_int(token, where));
        }
        rows.push_back(std::move(row));
    }

    if (!q && !p) {
        parse_fail("missing field header (q= or p=)");
    }
    if (!n) {
        parse_fail("missing n= header");
    }
    if (*n <= 0) {
        parse_fail("n must be positive");
    }
    Field field = p ? Field::make(static_cast<int>(*p), static_cast<int>(m.value_or(1)))
                    : Field::of_order(static_cast<int>(*q));
    if (q && *q != field.q()) {
        parse_fail("q=" + std::to_string(*q) + " disagrees with p and m");
    }
    if (m && *m != field.m()) {
        parse_fail("m=" + std::to_string(*m) + " disagrees with q");
    }
    const std::size_t len = static_cast<std::size_t>(*n) * (symplectic ? 2 : 1);
    CodeMatrix matrix(field, len);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        if (r.size() != len) {
            parse_fail("row " + std::to_string(i + 1) + " has " + std::to_string(r.size()) + " entries, expected " +
                       std::to_string(len));
        }
        Vec v(len);
        for (std::size_t j = 0; j < len; ++j) {
            if (!field.contains(static_cast<int>(r[j])) || r[j] > 255) {
                parse_fail("row " + std::to_string(i + 1) + ": entry " + std::to_string(r[j]) + " is not in " +
                           field.name());
            }
            v[j] = static_cast<Elem>(r[j]);
        }
        matrix.add_row(std::move(v));
    }
    return CodeFile{.matrix = std::move(matrix), .symplectic = symplectic, .n = static_cast<std::size_t>(*n)};
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        parse_fail("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CodeFile read_code_file(const std::string &path) {
    return parse_code_file(read_text_file(path));
}

std::string format_code_file(const CodeMatrix &m, bool symplectic) {
    const Field &f = m.field();
    std::ostringstream out;
    out << "q=" << f.q() << " p=" << f.p() << " m=" << f.m() << "\n";
    out << "n=" << (symplectic ? m.n() / 2 : m.n()) << "\n";
    if (symplectic) {
        out << "symplectic=true\n";
    }
    for (const auto &row : m.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j ? " " : "") << static_cast<int>(row[j]);
        }
        out << "\n";
    }
    return out.str();
}

std::string record_to_json(const SubsystemCodeRecord &rec) {
    Json j;
    j["label"] = rec.label();
    j["q"] = rec.field.q();
    j["p"] = rec.field.p();
    j["m"] = rec.field.m();
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["r"] = rec.r;
    j["d"] = optional_json(rec.distance);
    j["purity"] = optional_json(rec.purity);
    j["pure"] = optional_json(rec.pure);
    j["gauge"] = rows_json(rec.gauge.rows());
    j["stabilizer"] = rows_json(rec.stabilizer.rows());
    j["normalizer"] = rows_json(rec.normalizer.rows());
    j["centralizer"] = rows_json(rec.centralizer.rows());
    Json pairs = Json::array();
    for (const auto &p : rec.basis.pairs) {
        pairs.push_back(Json{{"z", rows_json({p.z})[0]}, {"x", rows_json({p.x})[0]}});
    }
    j["hyperbolic_basis"] = Json{{"isotropic", rows_json(rec.basis.isotropic)}, {"pairs", std::move(pairs)}};
    return j.dump(2) + "\n";
}

SubsystemCodeRecord record_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception &e) {
        parse_fail(std::string("record JSON: ") + e.what());
    }
    try {
        const Field field = Field::of_order(j.at("q").get<int>());
        if ((j.contains("p") && j["p"].get<int>() != field.p()) || (j.contains("m") && j["m"].get<int>() != field.m())) {
            parse_fail("record JSON: p, m disagree with q");
        }
        const auto n = j.at("n").get<std::size_t>();
        CodeMatrix gauge(field, 2 * n);
        for (const auto &row : j.at("gauge")) {
            Vec v;
            for (const auto &e : row) {
                const int x = e.get<int>();
                if (!field.contains(x)) {
                    parse_fail("record JSON: gauge entry " + std::to_string(x) + " not in " + field.name());
                }
                v.push_back(static_cast<Elem>(x));
            }
            if (v.size() != 2 * n) {
                parse_fail("record JSON: gauge row length " + std::to_string(v.size()) + " is not 2n");
            }
            gauge.add_row(std::move(v));
        }
        auto rec = from_gauge_code(gauge);
        if (rec.k != j.at("k").get<std::size_t>() || rec.r != j.at("r").get<std::size_t>()) {
            parse_fail("record JSON: stored k, r disagree with the gauge generators");
        }
        if (!j.value("d", Json()).is_null()) {
            rec.distance = j["d"].get<int>();
        }
        if (!j.value("purity", Json()).is_null()) {
            rec.purity = j["purity"].get<int>();
        }
        if (!j.value("pure", Json()).is_null()) {
            rec.pure = j["pure"].get<bool>();
        }
        return rec;
    } catch (const Json::exception &e) {
        parse_fail(std::string("record JSON: ") + e.what());
    }
}

SubsystemCodeRecord read_record(const std::string &path) {
    return record_from_json(read_text_file(path));
}

bool same_record(const SubsystemCodeRecord &a, const SubsystemCodeRecord &b) {
    auto same_basis = [](const HyperbolicBasis &x, const HyperbolicBasis &y) {
        if (x.isotropic != y.isotropic || x.pairs.size() != y.pairs.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.pairs.size(); ++i) {
            if (x.pairs[i].z != y.pairs[i].z || x.pairs[i].x != y.pairs[i].x) {
                return false;
            }
        }
        return true;
    };
    return a.field == b.field && a.n == b.n && a.k == b.k && a.r == b.r && a.distance == b.distance &&
           a.purity == b.purity && a.pure == b.pure && a.gauge.rows() == b.gauge.rows() &&
           a.stabilizer.rows() == b.stabilizer.rows() && a.normalizer.rows() == b.normalizer.rows() &&
           a.centralizer.rows() == b.centralizer.rows() && same_basis(a.basis, b.basis);
}

Vec parse_pauli(std::string_view label, const Field &f, std::size_t n) {
    Vec v(2 * n, 0);
    label = trim(label);
    if (label.empty()) {
        parse_fail("empty error label");
    }
    if (label == "I") {
        return v;
    }
    while (!label.empty()) {
        const auto star = label.find('*');
        const auto factor = trim(label.substr(0, star));
        label = star == std::string_view::npos ? std::string_view{} : label.substr(star + 1);
        if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'Z')) {
            parse_fail("error factor '" + std::string(factor) + "' must look like X3 or Z2:4");
        }
        auto body = factor.substr(1);
        long coeff = 1;
        if (const auto colon = body.find(':'); colon != std::string_view::npos) {
            coeff = parse_int(body.substr(colon + 1), "error factor");
            body = body.substr(0, colon);
        }
        const long wire = parse_int(body, "error factor");
        if (wire < 1 || static_cast<std::size_t>(wire) > n) {
            throw Error(ErrorCode::WireOutOfRange, "wire " + std::to_string(wire) + " outside 1.." + std::to_string(n));
        }
        if (!f.contains(static_cast<int>(coeff)) || coeff > 255) {
            parse_fail("coefficient " + std::to_string(coeff) + " not in " + f.name());
        }
        const std::size_t pos = static_cast<std::size_t>(wire - 1) + (factor[0] == 'Z' ? n : 0);
        v[pos] = f.add(v[pos], static_cast<Elem>(coeff));
    }
    return v;
}

std::string format_pauli(const Vec &v) {
    const std::size_t n = v.size() / 2;
    std::string out;
    auto emit = [&](char kind, std::size_t wire, Elem c) {
        if (c == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += kind + std::to_string(wire + 1);
        if (c != 1) {
            out += ":" + std::to_string(c);
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        emit('X', i, v[i]);
        emit('Z', i, v[n + i]);
    }
    return out.empty() ? "I" : out;
}

}  // namespace subsys
