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

#include <functional>

#include <gtest/gtest.h>

#include "../oracle.h"
#include "subsys/constructions.h"
#include "subsys/error.h"

using namespace subsys;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InternalInconsistency;
}

// Checks every relation of a hyperbolic basis with the oracle product.
void expect_hyperbolic(const Field &f, const HyperbolicBasis &b) {
    const auto vs = b.vectors();
    for (std::size_t i = 0; i < b.s(); ++i) {
        for (const auto &v : vs) {
            ASSERT_EQ(oracle::symp(f, b.isotropic[i], v), 0);
        }
    }
    for (std::size_t i = 0; i < b.r(); ++i) {
        for (std::size_t j = 0; j < b.r(); ++j) {
            ASSERT_EQ(oracle::symp(f, b.pairs[i].z, b.pairs[j].z), 0);
            ASSERT_EQ(oracle::symp(f, b.pairs[i].x, b.pairs[j].x), 0);
            ASSERT_EQ(oracle::symp(f, b.pairs[i].x, b.pairs[j].z), i == j ? 1 : 0);
        }
    }
    if (!vs.empty()) {
        ASSERT_EQ(rank(CodeMatrix(f, vs.front().size(), vs)), vs.size());
    }
}

}  // namespace

TEST(symplectic, swt_examples) {
    EXPECT_EQ(swt(Vec{0, 0, 0, 0}), 0u);
    EXPECT_EQ(swt(Vec{1, 0, 1, 0}), 1u);
    EXPECT_EQ(swt(Vec{1, 0, 0, 1}), 2u);
    EXPECT_EQ(code_of([] { swt(Vec{1, 0, 0}); }), ErrorCode::OddLength);
}

TEST(symplectic, product_examples) {
    auto f2 = Field::make(2);
    EXPECT_EQ(symp_product(f2, Vec{1, 0}, Vec{0, 1}), 1);
    auto f3 = Field::make(3);
    EXPECT_EQ(symp_product(f3, Vec{1, 2, 0, 1}, Vec{2, 0, 1, 1}), 0);
    EXPECT_EQ(oracle::symp(f3, Vec{1, 2, 0, 1}, Vec{2, 0, 1, 1}), 0);
    EXPECT_EQ(code_of([&] { symp_product(f3, Vec{1, 2}, Vec{1, 2, 0, 0}); }), ErrorCode::LengthMismatch);
}

TEST(symplectic, trace_product_examples) {
    auto f4 = Field::make(2, 2);
    EXPECT_EQ(trace_symp_product(f4, Vec{2, 0}, Vec{0, 1}), f4.trace(2));
    EXPECT_EQ(trace_symp_product(f4, Vec{2, 0}, Vec{0, 1}), 1);
    auto f2 = Field::make(2);
    for (const auto &u : oracle::all_vectors(f2, 4)) {
        for (const auto &v : oracle::all_vectors(f2, 4)) {
            ASSERT_EQ(trace_symp_product(f2, u, v), symp_product(f2, u, v));
        }
        ASSERT_EQ(trace_symp_product(f2, u, u), 0);
    }
}

TEST(symplectic, product_is_alternating_bilinear) {
    std::mt19937_64 rng(1);
    const std::vector<Field> fields = {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5)};
    for (const auto &f : fields) {
        std::uniform_int_distribution<int> pick(0, f.q() - 1);
        auto rnd = [&](std::size_t len) {
            Vec v(len);
            for (auto &e : v) {
                e = static_cast<Elem>(pick(rng));
            }
            return v;
        };
        for (int trial = 0; trial < 1000; ++trial) {
            const Vec u = rnd(6), v = rnd(6), w = rnd(6);
            const auto a = static_cast<Elem>(pick(rng));
            ASSERT_EQ(symp_product(f, u, v), oracle::symp(f, u, v));
            ASSERT_EQ(symp_product(f, u, u), 0);
            ASSERT_EQ(symp_product(f, u, v), f.neg(symp_product(f, v, u)));
            Vec au_w = w;
            axpy(f, au_w, a, u);
            ASSERT_EQ(symp_product(f, au_w, v), f.add(f.mul(a, symp_product(f, u, v)), symp_product(f, w, v)));
            ASSERT_EQ(trace_symp_product(f, u, v), f.trace(symp_product(f, u, v)));
            const auto s = swt(u);
            ASSERT_LE(s, hamming_weight(u));
            ASSERT_LE(hamming_weight(u), 2 * s);
        }
    }
}

TEST(symplectic, dual_examples) {
    auto f = Field::make(2);
    CodeMatrix line(f, 2, {{1, 0}});
    EXPECT_TRUE(same_row_space(symp_dual(line), line));
    EXPECT_EQ(oracle::span(symp_dual(line)), oracle::symplectic_dual(line));
    EXPECT_EQ(rank(symp_dual(CodeMatrix::full(f, 4))), 0u);
    EXPECT_EQ(code_of([&] { symp_dual(CodeMatrix(f, 3)); }), ErrorCode::OddLength);
}

TEST(symplectic, dual_equals_trace_symplectic_dual) {
    std::mt19937_64 rng(2024);
    const std::vector<Field> fields = {Field::make(2), Field::make(3), Field::make(2, 2)};
    int count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Field &f = fields[static_cast<std::size_t>(trial) % 3];
        const std::size_t max_n = f.q() == 2 ? 6 : (f.q() == 3 ? 4 : 3);
        const std::size_t n = 1 + rng() % max_n;
        auto c = oracle::random_matrix(f, 1 + rng() % (2 * n), 2 * n, rng);
        auto dual = symp_dual(c);
        ASSERT_EQ(rank(c) + rank(dual), 2 * n);
        ASSERT_TRUE(same_row_space(symp_dual(dual), c));
        ASSERT_EQ(oracle::span(dual), oracle::trace_symplectic_dual(c));
        ++count;
    }
    EXPECT_EQ(count, 100);
}

TEST(symplectic, hyperbolic_basis_examples) {
    auto f = Field::make(2);
    auto plane = hyperbolic_basis(CodeMatrix::full(f, 2));
    EXPECT_EQ(plane.s(), 0u);
    EXPECT_EQ(plane.r(), 1u);
    expect_hyperbolic(f, plane);

    auto line = hyperbolic_basis(CodeMatrix(f, 2, {{1, 0}}));
    EXPECT_EQ(line.s(), 1u);
    EXPECT_EQ(line.r(), 0u);

    auto bs = bacon_shor(3, 3, f);
    EXPECT_EQ(bs.basis.s(), 4u);
    EXPECT_EQ(bs.basis.r(), 4u);
    EXPECT_EQ(oracle::span(bs.gauge).size(), 4096u);
    expect_hyperbolic(f, bs.basis);
    EXPECT_TRUE(verify_hyperbolic(f, bs.basis));
}

TEST(symplectic, hyperbolic_basis_on_random_codes) {
    std::mt19937_64 rng(8);
    const std::vector<Field> fields = {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5)};
    for (int trial = 0; trial < 200; ++trial) {
        const Field &f = fields[static_cast<std::size_t>(trial) % fields.size()];
        const std::size_t n = 1 + rng() % 5;
        auto c = oracle::random_matrix(f, 1 + rng() % (2 * n), 2 * n, rng);
        auto b = hyperbolic_basis(c);
        expect_hyperbolic(f, b);
        auto d = intersect(c, symp_dual(c));
        ASSERT_EQ(b.s(), rank(d));
        ASSERT_EQ(b.s() + 2 * b.r(), rank(c));
        ASSERT_TRUE(same_row_space(CodeMatrix(f, 2 * n, b.vectors()), c) || b.vectors().empty());
        ASSERT_EQ(gram_matrix(f, b.vectors()).size(), b.vectors().size());
    }
}

TEST(symplectic, hyperbolic_basis_with_chosen_first_vector) {
    auto f = Field::make(3);
    auto c = CodeMatrix::full(f, 4);
    Vec w = {0, 1, 2, 0};
    auto b = hyperbolic_basis(c, w);
    ASSERT_GE(b.r(), 1u);
    EXPECT_EQ(b.pairs.front().z, w);
    expect_hyperbolic(f, b);
}

TEST(symplectic, rho_examples) {
    EXPECT_EQ(rho(Vec{1, 0, 0, 0}), (Vec{0, 0}));
    EXPECT_EQ(rho(Vec{0, 1, 0, 1}), (Vec{1, 1}));
    EXPECT_EQ(rho(Vec{1, 1, 1, 0}), (Vec{1, 0}));
    EXPECT_EQ(swt(rho(Vec{1, 1, 1, 0})), 1u);
    EXPECT_EQ(code_of([] { rho(Vec{1, 1}); }), ErrorCode::TooShort);
    auto f = Field::make(3);
    for (const auto &v : oracle::all_vectors(f, 6)) {
        const auto w = swt(rho(v));
        ASSERT_TRUE(w == swt(v) || w + 1 == swt(v));
    }
    EXPECT_EQ(puncture_at(Vec{1, 2, 3, 4, 5, 6}, 1), (Vec{1, 3, 4, 6}));
}

TEST(symplectic, isotropy) {
    auto f = Field::make(2);
    EXPECT_TRUE(is_isotropic(five_qubit_stabilizer()));
    EXPECT_FALSE(is_isotropic(CodeMatrix::full(f, 2)));
}
