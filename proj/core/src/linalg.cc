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

#include "subsys/linalg.h"

#include <string>
#include <utility>

#include "subsys/error.h"

namespace subsys {

CodeMatrix::CodeMatrix(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
}

CodeMatrix::CodeMatrix(Field field, std::size_t n, std::vector<Vec> rows) : field_(std::move(field)), n_(n) {
    rows_.reserve(rows.size());
    for (auto &row : rows) {
        add_row(std::move(row));
    }
}

CodeMatrix CodeMatrix::identity(Field field, std::size_t n) {
    CodeMatrix m(std::move(field), n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n, 0);
        row[i] = 1;
        m.rows_.push_back(std::move(row));
    }
    return m;
}

void CodeMatrix::add_row(Vec row) {
    if (row.size() != n_) {
        throw Error(ErrorCode::LengthMismatch,
                    "row of length " + std::to_string(row.size()) + " in a code of length " + std::to_string(n_));
    }
    for (Elem e : row) {
        if (!field_.contains(e)) {
            throw Error(ErrorCode::ParseError, "entry " + std::to_string(e) + " is not an element of " + field_.name());
        }
    }
    rows_.push_back(std::move(row));
}

std::size_t hamming_weight(std::span<const Elem> v) {
    std::size_t w = 0;
    for (Elem e : v) {
        w += e != 0 ? 1 : 0;
    }
    return w;
}

Elem dot(const Field &f, std::span<const Elem> x, std::span<const Elem> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch, "dot product of vectors with different lengths");
    }
    Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc = f.add(acc, f.mul(x[i], y[i]));
    }
    return acc;
}

void axpy(const Field &f, std::span<Elem> y, Elem alpha, std::span<const Elem> x) {
    if (alpha == 0) {
        return;
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = f.add(y[i], f.mul(alpha, x[i]));
    }
}

void scale(const Field &f, std::span<Elem> v, Elem alpha) {
    for (auto &e : v) {
        e = f.mul(alpha, e);
    }
}

bool is_zero(std::span<const Elem> v) {
    for (Elem e : v) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

Rref rref(const CodeMatrix &m) {
    const Field &f = m.field();
    std::vector<Vec> rows = m.rows();
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t col = 0; col < m.n() && top < rows.size(); ++col) {
        std::size_t sel = top;
        while (sel < rows.size() && rows[sel][col] == 0) {
            ++sel;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[top], rows[sel]);
        scale(f, rows[top], f.inv(rows[top][col]));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != top && rows[r][col] != 0) {
                axpy(f, rows[r], f.neg(rows[r][col]), rows[top]);
            }
        }
        pivots.push_back(col);
        ++top;
    }
    rows.resize(top);
    return Rref{CodeMatrix(f, m.n(), std::move(rows)), top, std::move(pivots)};
}

std::size_t rank(const CodeMatrix &m) {
    return rref(m).rank;
}

CodeMatrix euclidean_dual(const CodeMatrix &m) {
    const Field &f = m.field();
    auto e = rref(m);
    std::vector<bool> is_pivot(m.n(), false);
    for (auto c : e.pivots) {
        is_pivot[c] = true;
    }
    // One kernel vector per free column: set it to 1 and solve for pivots.
    CodeMatrix dual(f, m.n());
    for (std::size_t free = 0; free < m.n(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(m.n(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rank; ++r) {
            v[e.pivots[r]] = f.neg(e.matrix.row(r)[free]);
        }
        dual.add_row(std::move(v));
    }
    return dual;
}

MembershipTester::MembershipTester(const CodeMatrix &m) : echelon_(rref(m)) {
}

Vec MembershipTester::residual(std::span<const Elem> v) const {
    if (v.size() != echelon_.matrix.n()) {
        throw Error(ErrorCode::LengthMismatch, "membership test of a vector with the wrong length");
    }
    const Field &f = echelon_.matrix.field();
    Vec res(v.begin(), v.end());
    for (std::size_t r = 0; r < echelon_.rank; ++r) {
        Elem c = res[echelon_.pivots[r]];
        if (c != 0) {
            axpy(f, res, f.neg(c), echelon_.matrix.row(r));
        }
    }
    return res;
}

bool MembershipTester::contains(std::span<const Elem> v) const {
    return is_zero(residual(v));
}

bool contains(const CodeMatrix &m, std::span<const Elem> v) {
    return MembershipTester(m).contains(v);
}

namespace {

void check_compatible(const CodeMatrix &a, const CodeMatrix &b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
    }
    if (a.n() != b.n()) {
        throw Error(ErrorCode::LengthMismatch, "lengths " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    }
}

}  // namespace

CodeMatrix sum_code(const CodeMatrix &a, const CodeMatrix &b) {
    check_compatible(a, b);
    CodeMatrix out(a.field(), a.n(), a.rows());
    for (const auto &row : b.rows()) {
        out.add_row(row);
    }
    return rref(out).matrix;
}

CodeMatrix intersect(const CodeMatrix &a, const CodeMatrix &b) {
    check_compatible(a, b);
    return rref(euclidean_dual(sum_code(euclidean_dual(a), euclidean_dual(b)))).matrix;
}

bool is_subspace(const CodeMatrix &inner, const CodeMatrix &outer) {
    check_compatible(inner, outer);
    MembershipTester t(outer);
    for (const auto &row : inner.rows()) {
        if (!t.contains(row)) {
            return false;
        }
    }
    return true;
}

bool same_row_space(const CodeMatrix &a, const CodeMatrix &b) {
    check_compatible(a, b);
    auto ea = rref(a);
    auto eb = rref(b);
    return ea.pivots == eb.pivots && ea.matrix.rows() == eb.matrix.rows();
}

std::vector<Vec> complement_basis(const CodeMatrix &sub, const CodeMatrix &whole) {
    check_compatible(sub, whole);
    // Greedily add rows of rref(whole) that are independent of what we have.
    CodeMatrix acc = rref(sub).matrix;
    std::vector<Vec> out;
    std::size_t r = acc.num_rows();
    const CodeMatrix candidates = rref(whole).matrix;
    for (const auto &row : candidates.rows()) {
        CodeMatrix trial = acc;
        trial.add_row(row);
        std::size_t rt = rank(trial);
        if (rt > r) {
            acc = std::move(trial);
            r = rt;
            out.push_back(row);
        }
    }
    return out;
}

int min_weight(const CodeMatrix &m, const EnumOptions &options) {
    auto e = rref(m);
    if (e.rank == 0) {
        throw Error(ErrorCode::EmptyCode, "minimum weight of the zero code");
    }
    return min_weight_outside(m.field(), m.n(), WeightKind::Hamming, {}, e.matrix.rows(), options);
}

CodeParams code_params(const CodeMatrix &m, const EnumOptions &options) {
    CodeParams p;
    p.n = m.n();
    p.k = rank(m);
    if (p.k > 0) {
        p.d = min_weight(m, options);
    }
    return p;
}

CodeMatrix repetition_code(const Field &f, std::size_t n) {
    return CodeMatrix(f, n, {Vec(n, 1)});
}

CodeMatrix even_weight_code(const Field &f, std::size_t n) {
    return euclidean_dual(repetition_code(f, n));
}

CodeMatrix hamming_7_4() {
    Field f = Field::make(2);
    return CodeMatrix(f, 7,
                      {
                          {1, 0, 0, 0, 1, 1, 0},
                          {0, 1, 0, 0, 1, 0, 1},
                          {0, 0, 1, 0, 0, 1, 1},
                          {0, 0, 0, 1, 1, 1, 1},
                      });
}

}  // namespace subsys
