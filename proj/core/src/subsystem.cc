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

#include "subsys/subsystem.h"

#include "subsys/error.h"

namespace subsys {

BigInt big_pow(int base, std::size_t exponent) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

DistanceCase SubsystemCodeRecord::distance_case() const {
    return rank(gauge) == rank(normalizer) ? DistanceCase::Saturated : DistanceCase::Proper;
}

std::string SubsystemCodeRecord::label() const {
    std::string d = distance ? std::to_string(*distance) : "?";
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + "," + d + "]]_" +
           std::to_string(field.q());
}

SubsystemCodeRecord from_gauge_code(const CodeMatrix &gauge, Linearity linearity) {
    if (linearity != Linearity::FqLinear) {
        throw Error(ErrorCode::NotLinear, "only GF(q)-linear gauge codes are analysed");
    }
    if (gauge.n() % 2 != 0) {
        throw Error(ErrorCode::OddLength, "gauge code length " + std::to_string(gauge.n()) + " is odd");
    }
    const std::size_t dim_c = rank(gauge);
    if (dim_c == 0) {
        throw Error(ErrorCode::ZeroCode, "the gauge code is {0}");
    }
    CodeMatrix centralizer = rref(symp_dual(gauge)).matrix;
    CodeMatrix stabilizer = intersect(gauge, centralizer);
    CodeMatrix normalizer = rref(symp_dual(stabilizer)).matrix;
    const std::size_t dim_d = rank(stabilizer);
    const std::size_t n = gauge.n() / 2;
    if ((dim_c + dim_d) % 2 != 0 || dim_c < dim_d || dim_c + dim_d > 2 * n) {
        throw Error(ErrorCode::InternalInconsistency, "dim C + dim D must be even and at most 2n");
    }

    SubsystemCodeRecord rec{
        .field = gauge.field(),
        .n = n,
        .k = n - (dim_c + dim_d) / 2,
        .r = (dim_c - dim_d) / 2,
        .distance = std::nullopt,
        .purity = std::nullopt,
        .pure = std::nullopt,
        .gauge = gauge,
        .stabilizer = std::move(stabilizer),
        .normalizer = std::move(normalizer),
        .centralizer = std::move(centralizer),
        .basis = hyperbolic_basis(gauge),
    };
    if (rec.basis.s() != dim_d || rec.basis.r() != rec.r) {
        throw Error(ErrorCode::InternalInconsistency, "hyperbolic basis shape disagrees with dim C, dim D");
    }
    return rec;
}

int distance(const SubsystemCodeRecord &rec, const EnumOptions &options) {
    const auto &f = rec.field;
    const std::size_t len = 2 * rec.n;
    if (rec.distance_case() == DistanceCase::Saturated) {
        return min_weight_outside(f, len, WeightKind::Symplectic, {}, rref(rec.normalizer).matrix.rows(), options);
    }
    // D^perp_s = C (+) L, so a vector of D^perp_s lies outside C exactly when
    // its L-component is nonzero.
    auto base = rref(rec.gauge).matrix.rows();
    auto extra = complement_basis(rec.gauge, rec.normalizer);
    return min_weight_outside(f, len, WeightKind::Symplectic, base, extra, options);
}

PurityResult purity(const SubsystemCodeRecord &rec, const EnumOptions &options) {
    if (!rec.distance) {
        throw Error(ErrorCode::PreconditionFailed, "purity needs the distance of " + rec.label());
    }
    PurityResult out;
    out.exact = min_weight_outside(rec.field, 2 * rec.n, WeightKind::Symplectic, {}, rref(rec.gauge).matrix.rows(),
                                   options);
    out.pure = out.exact >= *rec.distance;
    return out;
}

void analyze(SubsystemCodeRecord &rec, const EnumOptions &options) {
    rec.distance = distance(rec, options);
    auto p = purity(rec, options);
    rec.purity = p.exact;
    rec.pure = p.pure;
}

bool check_invariants(const SubsystemCodeRecord &rec) {
    const std::size_t dim_c = rank(rec.gauge);
    const std::size_t dim_d = rank(rec.stabilizer);
    if (dim_c != rec.n - rec.k + rec.r || dim_d != rec.n - rec.k - rec.r) {
        return false;
    }
    if (rank(rec.normalizer) + dim_d != 2 * rec.n || rank(rec.centralizer) + dim_c != 2 * rec.n) {
        return false;
    }
    if (!is_isotropic(rec.stabilizer)) {
        return false;
    }
    if (!is_subspace(rec.stabilizer, rec.gauge) || !is_subspace(rec.gauge, rec.normalizer) ||
        !is_subspace(rec.stabilizer, rec.centralizer) || !is_subspace(rec.centralizer, rec.normalizer)) {
        return false;
    }
    if (rec.purity && rec.distance && rec.pure && *rec.pure != (*rec.purity >= *rec.distance)) {
        return false;
    }
    return verify_hyperbolic(rec.field, rec.basis);
}

}  // namespace subsys
