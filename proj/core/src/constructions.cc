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

#include "subsys/constructions.h"

#include <algorithm>
#include <string>

#include "subsys/error.h"

namespace subsys {

namespace {

void check_same_space(const CodeMatrix &a, const CodeMatrix &b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch, a.field().name() + " vs " + b.field().name());
    }
}

void expect(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::InternalInconsistency, what);
    }
}

// wt(outer \ inner) for inner ⊆ outer; nullopt when they are equal.
std::optional<int> weight_outside(const CodeMatrix &inner, const CodeMatrix &outer, const EnumOptions &options) {
    auto extra = complement_basis(inner, outer);
    if (extra.empty()) {
        return std::nullopt;
    }
    return min_weight_outside(inner.field(), inner.n(), WeightKind::Hamming, rref(inner).matrix.rows(), extra,
                              options);
}

}  // namespace

CodeMatrix kronecker(const CodeMatrix &left, const CodeMatrix &right) {
    check_same_space(left, right);
    const Field &f = left.field();
    CodeMatrix out(f, left.n() * right.n());
    for (const auto &l : left.rows()) {
        for (const auto &r : right.rows()) {
            Vec row(left.n() * right.n());
            for (std::size_t i = 0; i < left.n(); ++i) {
                for (std::size_t j = 0; j < right.n(); ++j) {
                    row[i * right.n() + j] = f.mul(l[i], r[j]);
                }
            }
            out.add_row(std::move(row));
        }
    }
    return out;
}

CodeMatrix symplectic_product_code(const CodeMatrix &a, const CodeMatrix &b) {
    check_same_space(a, b);
    if (a.n() != b.n()) {
        throw Error(ErrorCode::LengthMismatch, "factor lengths " + std::to_string(a.n()) + " and " + std::to_string(b.n()));
    }
    const std::size_t n = a.n();
    CodeMatrix out(a.field(), 2 * n);
    for (const auto &u : a.rows()) {
        Vec row(2 * n, 0);
        std::copy(u.begin(), u.end(), row.begin());
        out.add_row(std::move(row));
    }
    for (const auto &v : b.rows()) {
        Vec row(2 * n, 0);
        std::copy(v.begin(), v.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
        out.add_row(std::move(row));
    }
    return out;
}

EuclideanCode euclidean(const CodeMatrix &x1, const CodeMatrix &x2, const EnumOptions &options) {
    check_same_space(x1, x2);
    if (x1.n() != x2.n()) {
        throw Error(ErrorCode::LengthMismatch, "X1 has length " + std::to_string(x1.n()) + ", X2 has " + std::to_string(x2.n()));
    }
    const std::size_t k1 = rank(x1);
    const std::size_t k2 = rank(x2);
    if (k1 == 0 || k2 == 0) {
        throw Error(ErrorCode::ZeroCode, "both classical factors must be nonzero");
    }
    EuclideanCode out{.record = from_gauge_code(symplectic_product_code(x1, x2)),
                      .k1 = k1,
                      .k2 = k2,
                      .k_prime = 0,
                      .closed_form_distance = std::nullopt};
    const auto x1_dual = euclidean_dual(x1);
    const auto x2_dual = euclidean_dual(x2);
    const auto left = intersect(x1, x2_dual);   // X1 ∩ X2^perp
    const auto right = intersect(x1_dual, x2);  // X1^perp ∩ X2
    out.k_prime = rank(left) + rank(right);

    const std::size_t n = x1.n();
    const std::size_t twice_k = 2 * n - (out.k1 + out.k2 + out.k_prime);
    expect((out.k1 + out.k2 + out.k_prime) % 2 == 0 && twice_k / 2 == out.record.k,
           "closed-form k disagrees with the rank computation");
    expect(out.k1 + out.k2 >= out.k_prime && (out.k1 + out.k2 - out.k_prime) / 2 == out.record.r,
           "closed-form r disagrees with the rank computation");

    auto &rec = out.record;
    analyze(rec, options);

    auto a = weight_outside(x1, euclidean_dual(right), options);
    auto b = weight_outside(x2, euclidean_dual(left), options);
    if (a && b) {
        out.closed_form_distance = std::min(*a, *b);
    } else if (a) {
        out.closed_form_distance = a;
    } else if (b) {
        out.closed_form_distance = b;
    }
    if (out.closed_form_distance) {
        expect(*out.closed_form_distance == *rec.distance, "closed-form distance disagrees with the gauge-code search");
    } else {
        expect(rec.k == 0, "closed-form distance undefined although k > 0");
    }
    return out;
}

LatticeCode lattice(const CodeMatrix &c1, const CodeMatrix &c2, const EnumOptions &options) {
    check_same_space(c1, c2);
    const Field &f = c1.field();
    const auto p1 = code_params(c1, options);
    const auto p2 = code_params(c2, options);
    for (const auto *p : {&p1, &p2}) {
        if (p->k == 0 || p->k == p->n) {
            throw Error(ErrorCode::TrivialFactor, "lattice factors need 0 < k < n, got [" + std::to_string(p->n) + "," +
                                                      std::to_string(p->k) + "]");
        }
    }
    const auto h1 = rref(euclidean_dual(c1)).matrix;
    const auto h2 = rref(euclidean_dual(c2)).matrix;
    const std::size_t n1 = c1.n();
    const std::size_t n2 = c2.n();
    auto gauge = symplectic_product_code(kronecker(CodeMatrix::identity(f, n1), h2),
                                         kronecker(h1, CodeMatrix::identity(f, n2)));
    LatticeCode out{
        .record = from_gauge_code(gauge),
        .c1 = p1,
        .c2 = p2,
        .dual_distance1 = min_weight(h1, options),
        .dual_distance2 = min_weight(h2, options),
    };
    out.purity_floor = std::min(out.dual_distance1, out.dual_distance2);
    out.predicted_distance = std::min(*p1.d, *p2.d);

    const auto &rec = out.record;
    expect(rec.n == n1 * n2, "lattice length is not n1 n2");
    expect(rec.k == out.c1.k * out.c2.k, "lattice dimension is not k1 k2");
    expect(rec.r == (n1 - out.c1.k) * (n2 - out.c2.k), "lattice gauge count is not (n1-k1)(n2-k2)");
    return out;
}

CodeMatrix adjacent_difference_matrix(const Field &f, std::size_t i) {
    CodeMatrix h(f, i);
    for (std::size_t j = 0; j + 1 < i; ++j) {
        Vec row(i, 0);
        row[j] = 1;
        row[j + 1] = f.neg(1);
        h.add_row(std::move(row));
    }
    return h;
}

SubsystemCodeRecord bacon_shor(std::size_t n1, std::size_t n2, const Field &field) {
    if (n1 < 2 || n2 < 2) {
        throw Error(ErrorCode::SizeTooSmall, "Bacon-Shor lattices need n1, n2 >= 2");
    }
    auto gauge = symplectic_product_code(kronecker(CodeMatrix::identity(field, n1), adjacent_difference_matrix(field, n2)),
                                         kronecker(adjacent_difference_matrix(field, n1), CodeMatrix::identity(field, n2)));
    auto rec = from_gauge_code(gauge);
    expect(rec.k == 1 && rec.r == (n1 - 1) * (n2 - 1), "Bacon-Shor parameters off");
    return rec;
}

CodeMatrix five_qubit_stabilizer() {
    const Field f = Field::make(2);
    CodeMatrix out(f, 10);
    const Vec x = {1, 0, 0, 1, 0};
    const Vec z = {0, 1, 1, 0, 0};
    for (std::size_t shift = 0; shift < 4; ++shift) {
        Vec row(10, 0);
        for (std::size_t i = 0; i < 5; ++i) {
            row[(i + shift) % 5] = x[i];
            row[5 + (i + shift) % 5] = z[i];
        }
        out.add_row(std::move(row));
    }
    return out;
}

}  // namespace subsys
