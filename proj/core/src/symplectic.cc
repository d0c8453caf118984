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

#include "subsys/symplectic.h"

#include <string>

#include "subsys/error.h"

namespace subsys {

namespace {

std::size_t half_length(std::span<const Elem> v) {
    if (v.size() % 2 != 0) {
        throw Error(ErrorCode::OddLength, "symplectic vector of odd length " + std::to_string(v.size()));
    }
    return v.size() / 2;
}

}  // namespace

std::size_t swt(std::span<const Elem> v) {
    const std::size_t n = half_length(v);
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w += (v[i] != 0 || v[n + i] != 0) ? 1 : 0;
    }
    return w;
}

Elem symp_product(const Field &f, std::span<const Elem> u, std::span<const Elem> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::LengthMismatch, "symplectic product of vectors with different lengths");
    }
    const std::size_t n = half_length(u);
    // u = (a|b), v = (a'|b'): a'.b - a.b'
    Elem acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = f.add(acc, f.mul(v[i], u[n + i]));
        acc = f.sub(acc, f.mul(u[i], v[n + i]));
    }
    return acc;
}

Elem trace_symp_product(const Field &f, std::span<const Elem> u, std::span<const Elem> v) {
    return f.trace(symp_product(f, u, v));
}

CodeMatrix symp_dual(const CodeMatrix &c) {
    if (c.n() % 2 != 0) {
        throw Error(ErrorCode::OddLength, "symplectic dual of a code of odd length " + std::to_string(c.n()));
    }
    const Field &f = c.field();
    const std::size_t n = c.n() / 2;
    // (a|b) is symplectic-orthogonal to (a'|b') iff (a|b).(-b'|a') = 0.
    CodeMatrix twisted(f, c.n());
    for (const auto &row : c.rows()) {
        Vec t(c.n());
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = f.neg(row[n + i]);
            t[n + i] = row[i];
        }
        twisted.add_row(std::move(t));
    }
    return euclidean_dual(twisted);
}

bool is_isotropic(const CodeMatrix &c) {
    const auto &rows = c.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (symp_product(c.field(), rows[i], rows[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Vec> HyperbolicBasis::vectors() const {
    std::vector<Vec> out = isotropic;
    for (const auto &p : pairs) {
        out.push_back(p.z);
        out.push_back(p.x);
    }
    return out;
}

HyperbolicBasis hyperbolic_basis(const CodeMatrix &c, std::optional<Vec> first) {
    const Field &f = c.field();
    CodeMatrix centre = intersect(c, symp_dual(c));

    HyperbolicBasis basis;
    basis.isotropic = rref(centre).matrix.rows();

    std::vector<Vec> rest;
    if (first) {
        if (!contains(c, *first) || contains(centre, *first)) {
            throw Error(ErrorCode::PreconditionFailed, "seed vector must lie in C but outside C ∩ C^perp_s");
        }
        CodeMatrix seeded = centre;
        seeded.add_row(*first);
        rest.push_back(*first);
        for (auto &v : complement_basis(seeded, c)) {
            rest.push_back(std::move(v));
        }
    } else {
        rest = complement_basis(centre, c);
    }

    while (!rest.empty()) {
        Vec z = rest.front();
        rest.erase(rest.begin());
        std::size_t partner = rest.size();
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (symp_product(f, rest[j], z) != 0) {
                partner = j;
                break;
            }
        }
        if (partner == rest.size()) {
            throw Error(ErrorCode::InternalInconsistency, "no hyperbolic partner: complement meets the radical");
        }
        Vec x = rest[partner];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(partner));
        scale(f, x, f.inv(symp_product(f, x, z)));
        // Remove the (z, x) components so the remaining vectors are
        // orthogonal to the new pair; <z|x>_s = -1.
        for (auto &w : rest) {
            Elem alpha = symp_product(f, w, x);
            Elem beta = f.neg(symp_product(f, w, z));
            axpy(f, w, alpha, z);
            axpy(f, w, beta, x);
        }
        basis.pairs.push_back(HyperbolicPair{std::move(z), std::move(x)});
    }
    return basis;
}

std::vector<Vec> gram_matrix(const Field &f, std::span<const Vec> vectors) {
    std::vector<Vec> g(vectors.size(), Vec(vectors.size(), 0));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            g[i][j] = symp_product(f, vectors[i], vectors[j]);
        }
    }
    return g;
}

bool verify_hyperbolic(const Field &f, const HyperbolicBasis &basis) {
    std::vector<Vec> xs;
    std::vector<Vec> zs = basis.isotropic;
    for (const auto &p : basis.pairs) {
        zs.push_back(p.z);
        xs.push_back(p.x);
    }
    for (std::size_t i = 0; i < zs.size(); ++i) {
        for (std::size_t j = 0; j < zs.size(); ++j) {
            if (symp_product(f, zs[i], zs[j]) != 0) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (symp_product(f, xs[i], xs[j]) != 0) {
                return false;
            }
        }
        // x_{s+i} pairs only with z_{s+i}.
        for (std::size_t j = 0; j < zs.size(); ++j) {
            Elem expect = (j == basis.s() + i) ? 1 : 0;
            if (symp_product(f, xs[i], zs[j]) != expect) {
                return false;
            }
        }
    }
    auto all = basis.vectors();
    if (all.empty()) {
        return true;
    }
    CodeMatrix m(f, all.front().size(), all);
    return rank(m) == all.size();
}

Vec puncture_at(std::span<const Elem> v, std::size_t pos) {
    const std::size_t n = half_length(v);
    if (n < 2) {
        throw Error(ErrorCode::TooShort, "cannot puncture a vector on fewer than two qudits");
    }
    if (pos >= n) {
        throw Error(ErrorCode::LengthMismatch, "puncture position " + std::to_string(pos) + " outside the register");
    }
    Vec out;
    out.reserve(2 * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (i != pos) {
            out.push_back(v[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i != pos) {
            out.push_back(v[n + i]);
        }
    }
    return out;
}

Vec rho(std::span<const Elem> v) {
    return puncture_at(v, 0);
}

}  // namespace subsys
