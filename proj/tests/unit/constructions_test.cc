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

#include <functional>

#include <gtest/gtest.h>

#include "../oracle.h"
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

}  // namespace

TEST(constructions, kronecker_rows_left_factor_outer) {
    auto f = Field::make(3);
    CodeMatrix a(f, 2, {{1, 2}});
    CodeMatrix b(f, 2, {{1, 0}, {0, 1}});
    auto k = kronecker(a, b);
    ASSERT_EQ(k.num_rows(), 2u);
    EXPECT_EQ(k.row(0), (Vec{1, 0, 2, 0}));
    EXPECT_EQ(k.row(1), (Vec{0, 1, 0, 2}));
}

TEST(constructions, euclidean_repetition_pair) {
    auto f = Field::make(2);
    auto rep = repetition_code(f, 3);
    auto code = euclidean(rep, rep);
    EXPECT_EQ(code.k_prime, 0u);
    EXPECT_EQ(code.record.label(), "[[3,2,1,1]]_2");
    EXPECT_EQ(code.closed_form_distance, 1);
}

TEST(constructions, euclidean_repetition_even_weight) {
    auto f = Field::make(2);
    auto code = euclidean(repetition_code(f, 4), even_weight_code(f, 4));
    const auto &rec = code.record;
    EXPECT_EQ(code.k1, 1u);
    EXPECT_EQ(code.k2, 3u);
    EXPECT_EQ(rec.k, 4 - (code.k1 + code.k2 + code.k_prime) / 2);
    EXPECT_EQ(rec.r, (code.k1 + code.k2 - code.k_prime) / 2);
    EXPECT_EQ(rank(rec.gauge), rec.n - rec.k + rec.r);
}

TEST(constructions, euclidean_errors) {
    auto f = Field::make(2);
    EXPECT_EQ(code_of([&] { euclidean(CodeMatrix::full(f, 3), CodeMatrix(f, 3)); }), ErrorCode::ZeroCode);
    EXPECT_EQ(code_of([&] { euclidean(repetition_code(f, 3), repetition_code(f, 4)); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([&] { euclidean(repetition_code(f, 3), repetition_code(Field::make(3), 3)); }),
              ErrorCode::FieldMismatch);
}

TEST(constructions, euclidean_random_pairs_agree_with_brute_force_distance) {
    std::mt19937_64 rng(4242);
    const std::vector<Field> fields = {Field::make(2), Field::make(3)};
    for (int trial = 0; trial < 60; ++trial) {
        const Field &f = fields[static_cast<std::size_t>(trial) % 2];
        const std::size_t n = 1 + rng() % (f.q() == 2 ? 5 : 3);
        auto x1 = oracle::random_nonzero_matrix(f, 1 + rng() % n, n, rng);
        auto x2 = oracle::random_nonzero_matrix(f, 1 + rng() % n, n, rng);
        auto code = euclidean(x1, x2);
        const auto &rec = code.record;
        // Distance straight from the definition: min swt over D^perp_s minus C.
        const auto c = oracle::span(rec.gauge);
        const auto dperp = oracle::symplectic_dual(rec.stabilizer);
        const int expect = dperp == c ? oracle::min_swt_difference(dperp, {Vec(2 * n, 0)})
                                      : oracle::min_swt_difference(dperp, c);
        ASSERT_EQ(*rec.distance, expect);
        if (rec.k > 0) {
            ASSERT_EQ(code.closed_form_distance, expect);
        }
    }
}

TEST(constructions, lattice_examples) {
    auto f = Field::make(2);
    auto bs9 = lattice(repetition_code(f, 3), repetition_code(f, 3));
    EXPECT_EQ(bs9.record.n, 9u);
    EXPECT_EQ(bs9.record.k, 1u);
    EXPECT_EQ(bs9.record.r, 4u);
    EXPECT_EQ(bs9.predicted_distance, 3);
    EXPECT_EQ(bs9.purity_floor, 2);
    auto rec = bs9.record;
    analyze(rec);
    EXPECT_EQ(rec.distance, 3);

    auto l12 = lattice(repetition_code(f, 3), repetition_code(f, 4));
    auto r12 = l12.record;
    analyze(r12);
    EXPECT_EQ(r12.label(), "[[12,1,6,3]]_2");

    auto f3 = Field::make(3);
    auto t = lattice(repetition_code(f3, 3), repetition_code(f3, 3));
    auto r3 = t.record;
    analyze(r3);
    EXPECT_EQ(r3.label(), "[[9,1,4,3]]_3");
}

TEST(constructions, lattice_trivial_factor) {
    auto f = Field::make(2);
    EXPECT_EQ(code_of([&] { lattice(CodeMatrix::full(f, 3), repetition_code(f, 3)); }), ErrorCode::TrivialFactor);
    EXPECT_EQ(code_of([&] { lattice(CodeMatrix(f, 3), repetition_code(f, 3)); }), ErrorCode::TrivialFactor);
}

TEST(constructions, lattice_closed_forms_over_small_codes) {
    std::mt19937_64 rng(77);
    for (const auto &f : {Field::make(2), Field::make(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n1 = 2 + rng() % 3;
            const std::size_t n2 = 2 + rng() % 3;
            if (n1 * n2 > 16 || (f.q() == 3 && n1 * n2 > 9)) {
                continue;
            }
            auto c1 = oracle::random_nonzero_matrix(f, 1 + rng() % (n1 - 1), n1, rng);
            auto c2 = oracle::random_nonzero_matrix(f, 1 + rng() % (n2 - 1), n2, rng);
            const auto k1 = rank(c1), k2 = rank(c2);
            if (k1 == n1 || k2 == n2) {
                continue;
            }
            auto code = lattice(c1, c2);
            auto rec = code.record;
            EXPECT_EQ(rec.k, k1 * k2);
            EXPECT_EQ(rec.r, (n1 - k1) * (n2 - k2));
            analyze(rec);
            EXPECT_EQ(*rec.distance, code.predicted_distance);
            EXPECT_GE(*rec.purity, code.purity_floor);
        }
    }
}

TEST(constructions, bacon_shor_examples) {
    auto f2 = Field::make(2);
    auto bs16 = bacon_shor(4, 4, f2);
    EXPECT_EQ(bs16.k, 1u);
    EXPECT_EQ(bs16.r, 9u);
    auto small = bacon_shor(2, 2, Field::make(3));
    analyze(small);
    EXPECT_EQ(small.label(), "[[4,1,1,2]]_3");
    EXPECT_EQ(code_of([&] { bacon_shor(1, 3, f2); }), ErrorCode::SizeTooSmall);
}

TEST(constructions, bacon_shor_equals_lattice_of_repetition_codes) {
    for (const auto &f : {Field::make(2), Field::make(3), Field::make(5)}) {
        for (std::size_t n1 = 2; n1 <= 4; ++n1) {
            for (std::size_t n2 = 2; n2 <= 4; ++n2) {
                auto bs = bacon_shor(n1, n2, f);
                auto lat = lattice(repetition_code(f, n1), repetition_code(f, n2));
                EXPECT_TRUE(same_row_space(bs.gauge, lat.record.gauge)) << n1 << "x" << n2 << " over " << f.name();
            }
        }
    }
}

TEST(constructions, adjacent_difference_matrix_shape) {
    auto f = Field::make(3);
    auto h = adjacent_difference_matrix(f, 4);
    EXPECT_EQ(h.num_rows(), 3u);
    EXPECT_EQ(h.row(0), (Vec{1, 2, 0, 0}));
    EXPECT_TRUE(same_row_space(h, euclidean_dual(repetition_code(f, 4))));
}
