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


#include "subsys/quditsim.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.h"
#include "subsys/constructions.h"
#include "subsys/error.h"
#include "subsys/symplectic.h"

using namespace subsys;

namespace {

double max_diff(const QuditState &a, const QuditState &b) {
    double out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out = std::max(out, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return out;
}

Vec random_vec(const Field &f, std::size_t len, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(0, f.q() - 1);
    Vec v(len);
    for (auto &e : v) {
        e = static_cast<Elem>(pick(rng));
    }
    return v;
}

std::vector<Amplitude> dense_apply(const oracle::Matrix &m, const std::vector<Amplitude> &v) {
    std::vector<Amplitude> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

void expect_code(ErrorCode code, auto &&fn) {
    try {
        fn();
        ADD_FAILURE() << "no exception";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(quditsim, apply_pauli_matches_dense_operator) {
    std::mt19937_64 rng(11);
    for (int q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = q <= 3 ? 3 : 2;
            const Vec v = random_vec(f, 2 * n, rng);
            auto s = QuditState::random(f, n, rng());
            auto expected = dense_apply(oracle::pauli_matrix(f, v), s.amplitudes());
            apply_pauli(s, PauliLabel{v, 0});
            for (std::size_t i = 0; i < s.size(); ++i) {
                ASSERT_LT(std::abs(s.amplitudes()[i] - expected[i]), 1e-12);
            }
        }
    }
}

TEST(quditsim, commutation_phase_matches_dense_commutator) {
    std::mt19937_64 rng(12);
    int pairs = 0;
    for (int q : {2, 3, 4, 5, 7}) {
        const Field f = Field::of_order(q);
        const std::size_t n = q <= 3 ? 2 : 1;
        for (int trial = 0; trial < 40; ++trial, ++pairs) {
            const Vec g = random_vec(f, 2 * n, rng);
            const Vec e = random_vec(f, 2 * n, rng);
            const auto a = oracle::pauli_matrix(f, g);
            const auto b = oracle::pauli_matrix(f, e);
            const int t = oracle::commutator_exponent(oracle::matmul(a, b), oracle::matmul(b, a), f.p());
            ASSERT_EQ(t, f.trace(commutation_phase(f, g, e)));
        }
    }
    EXPECT_EQ(pairs, 200);
}

TEST(quditsim, fourier_conjugates_x_to_z) {
    for (int q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (Elem a = 0; a < q; ++a) {
            auto s = QuditState::random(f, 2, 100 + a);
            auto lhs = s;
            lhs.f_dag(1);
            lhs.x(1, a);
            lhs.f(1);
            auto rhs = s;
            rhs.z(1, a);
            EXPECT_LT(max_diff(lhs, rhs), 1e-12) << "q=" << q << " a=" << int(a);
        }
    }
}

TEST(quditsim, fourier_order_four_and_square_negates) {
    for (int q : {2, 3, 5, 9}) {
        const Field f = Field::of_order(q);
        auto s = QuditState::random(f, 2, 7);
        auto t = s;
        t.f(0);
        t.f(0);
        auto neg = s;
        neg.m(0, f.neg(1));
        EXPECT_LT(max_diff(t, neg), 1e-12);
        t.f(0);
        t.f(0);
        EXPECT_LT(max_diff(t, s), 1e-12);
        t.f(1);
        t.f_dag(1);
        EXPECT_LT(max_diff(t, s), 1e-12);
    }
}

TEST(quditsim, add_and_scale_on_basis_states) {
    const Field f = Field::of_order(5);
    // |2>|3> -> |2>|0>
    auto s = QuditState::basis_state(f, 2, 2 * 5 + 3);
    s.add(0, 1);
    EXPECT_NEAR(std::abs(s.amplitudes()[2 * 5 + 0]), 1.0, 1e-12);
    s.m(0, 3);  // 2 * 3 = 6 = 1
    EXPECT_NEAR(std::abs(s.amplitudes()[1 * 5 + 0]), 1.0, 1e-12);
    EXPECT_EQ(s.digit(5, 0), 1);
    EXPECT_EQ(s.digit(5, 1), 0);
}

TEST(quditsim, gates_preserve_norm) {
    std::mt19937_64 rng(13);
    for (int q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        auto s = QuditState::random(f, 3, rng());
        for (int step = 0; step < 200; ++step) {
            const std::size_t w = rng() % 3;
            const Elem c = static_cast<Elem>(1 + rng() % (q - 1));
            switch (rng() % 6) {
                case 0: s.x(w, c); break;
                case 1: s.z(w, c); break;
                case 2: s.m(w, c); break;
                case 3: s.f(w); break;
                case 4: s.f_dag(w); break;
                default: s.add(w, (w + 1) % 3); break;
            }
        }
        EXPECT_NEAR(s.norm(), 1.0, 1e-9);
    }
}

TEST(quditsim, error_paths) {
    const Field f = Field::of_order(3);
    expect_code(ErrorCode::StateTooLarge, [&] { QuditState(f, 14); });
    QuditState s(f, 2);
    expect_code(ErrorCode::WireOutOfRange, [&] { s.x(2, 1); });
    expect_code(ErrorCode::WireOutOfRange, [&] { s.add(1, 1); });
    expect_code(ErrorCode::SingularScale, [&] { s.m(0, 0); });
    expect_code(ErrorCode::LengthMismatch, [&] { apply_pauli(s, PauliLabel{Vec(6, 0), 0}); });
    expect_code(ErrorCode::LengthMismatch, [&] { commutation_phase(f, Vec(4, 0), Vec(6, 0)); });
    expect_code(ErrorCode::LengthMismatch, [&] { syndrome_measure(s, Vec(4, 0)); });
    s.amplitudes().assign(s.size(), 0.0);
    expect_code(ErrorCode::ProjectionVanished, [&] { s.normalize(); });
}

TEST(quditsim, random_states_are_seeded) {
    const Field f = Field::of_order(3);
    auto a = QuditState::random(f, 3, 5);
    auto b = QuditState::random(f, 3, 5);
    auto c = QuditState::random(f, 3, 6);
    EXPECT_EQ(max_diff(a, b), 0.0);
    EXPECT_GT(max_diff(a, c), 1e-3);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
}

TEST(quditsim, identity_error_gives_zero_syndrome) {
    auto rec = from_gauge_code(five_qubit_stabilizer());
    auto s = prepare_codestate(rec, 1);
    for (const auto &g : syndrome_generators(rec)) {
        auto res = syndrome_measure(with_ancilla(s), g);
        EXPECT_EQ(res.t, 0);
        EXPECT_NEAR(res.probability, 1.0, 1e-9);
        EXPECT_NEAR(fidelity(res.post, s), 1.0, 1e-9);
    }
}

TEST(quditsim, five_qubit_code_distinguishes_all_single_errors) {
    const Field f = Field::of_order(2);
    auto rec = from_gauge_code(five_qubit_stabilizer());
    const auto gens = syndrome_generators(rec);
    auto s = prepare_codestate(rec, 2);
    std::set<std::vector<Elem>> seen;
    seen.insert(std::vector<Elem>(gens.size(), 0));
    for (std::size_t w = 0; w < 5; ++w) {
        for (Elem a = 0; a < 2; ++a) {
            for (Elem b = 0; b < 2; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                Vec e(10, 0);
                e[w] = a;
                e[5 + w] = b;
                auto corrupted = s;
                apply_pauli(corrupted, PauliLabel{e, 0});
                std::vector<Elem> syn;
                for (const auto &g : gens) {
                    auto res = syndrome_measure(with_ancilla(corrupted), g);
                    EXPECT_EQ(res.t, oracle::symp(f, g, e));
                    syn.push_back(res.t);
                }
                seen.insert(syn);
            }
        }
    }
    EXPECT_EQ(seen.size(), 16u);
}

TEST(quditsim, syndrome_scales_with_error) {
    const Field f = Field::of_order(5);
    auto rec = bacon_shor(2, 2, f);
    const auto gens = syndrome_generators(rec);
    auto s = prepare_codestate(rec, 3);
    Vec e(8, 0);
    e[1] = 1;
    e[4 + 2] = 3;
    for (Elem alpha = 1; alpha < 5; ++alpha) {
        Vec scaled = e;
        scale(f, scaled, alpha);
        auto corrupted = s;
        apply_pauli(corrupted, PauliLabel{scaled, 0});
        for (const auto &g : gens) {
            auto res = syndrome_measure(with_ancilla(corrupted), g);
            EXPECT_EQ(res.t, f.mul(alpha, commutation_phase(f, g, e)));
        }
    }
}

TEST(quditsim, gauge_equivalent_errors_share_syndromes) {
    const Field f = Field::of_order(3);
    auto rec = bacon_shor(3, 2, f);
    const auto gens = syndrome_generators(rec);
    auto s = prepare_codestate(rec, 4);
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 5; ++trial) {
        const Vec e = random_vec(f, 12, rng);
        Vec e2 = e;
        for (const auto &row : rec.gauge.rows()) {
            axpy(f, e2, static_cast<Elem>(rng() % 3), row);
        }
        auto a = s;
        auto b = s;
        apply_pauli(a, PauliLabel{e, 0});
        apply_pauli(b, PauliLabel{e2, 0});
        for (const auto &g : gens) {
            EXPECT_EQ(syndrome_measure(with_ancilla(a), g).t, syndrome_measure(with_ancilla(b), g).t);
        }
    }
}

TEST(quditsim, fused_and_gate_circuits_agree) {
    std::mt19937_64 rng(15);
    for (int q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        auto rec = bacon_shor(2, 2, f);
        const auto gens = syndrome_generators(rec);
        auto s = prepare_codestate(rec, rng());
        apply_pauli(s, PauliLabel{random_vec(f, 8, rng), 0});
        for (const auto &g : gens) {
            auto gates = syndrome_measure(with_ancilla(s), g);
            auto fused = syndrome_measure(with_ancilla(s), g, SyndromeOptions{.fused = true});
            EXPECT_EQ(gates.t, fused.t);
            EXPECT_LT(max_diff(gates.post, fused.post), 1e-9);
        }
    }
}

TEST(quditsim, unstabilized_state_is_rejected) {
    auto rec = from_gauge_code(five_qubit_stabilizer());
    const auto gens = syndrome_generators(rec);
    auto s = QuditState::basis_state(Field::of_order(2), 5, 0);
    s.f(0);
    bool rejected = false;
    for (const auto &g : gens) {
        try {
            syndrome_measure(with_ancilla(s), g);
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::NotStabilized);
            rejected = true;
        }
    }
    EXPECT_TRUE(rejected);
}

TEST(quditsim, syndrome_generators_span_stabilizer) {
    for (int q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        auto rec = bacon_shor(2, 3, f);
        const auto gens = syndrome_generators(rec);
        CodeMatrix m(f, 2 * rec.n);
        for (const auto &g : gens) {
            EXPECT_EQ(self_phase(f, g), 0);
            m.add_row(g);
        }
        EXPECT_TRUE(same_row_space(m, rec.stabilizer));
    }
}

TEST(quditsim, codestate_is_fixed_by_stabilizer) {
    const Field f = Field::of_order(3);
    auto rec = bacon_shor(2, 2, f);
    auto s = prepare_codestate(rec, 9);
    for (const auto &g : syndrome_generators(rec)) {
        for (Elem a = 1; a < 3; ++a) {
            Vec scaled = g;
            scale(f, scaled, a);
            auto t = s;
            apply_pauli(t, PauliLabel{scaled, 0});
            EXPECT_LT(max_diff(s, t), 1e-9);
        }
    }
    auto big = bacon_shor(5, 5, Field::of_order(2));
    expect_code(ErrorCode::StateTooLarge, [&] { prepare_codestate(big, 1); });
}
