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

#include <cmath>
#include <numbers>
#include <random>

#include "subsys/error.h"

namespace subsys {

namespace {

std::size_t checked_size(const Field &f, std::size_t n) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= static_cast<std::size_t>(f.q());
        if (size > kMaxStateSize) {
            throw Error(ErrorCode::StateTooLarge,
                        std::to_string(f.q()) + "^" + std::to_string(n) + " amplitudes exceed 2^22");
        }
    }
    return size;
}

std::vector<Amplitude> omega_table(int p) {
    std::vector<Amplitude> out(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) {
        out[static_cast<std::size_t>(t)] = omega_power(p, t);
    }
    return out;
}

}  // namespace

Amplitude omega_power(int p, int t) {
    t %= p;
    if (t < 0) {
        t += p;
    }
    if (t == 0) {
        return 1.0;
    }
    const double angle = 2 * std::numbers::pi * t / p;
    return {std::cos(angle), std::sin(angle)};
}

QuditState::QuditState(Field field, std::size_t n)
    : field_(std::move(field)), n_(n), strides_(n), amps_(checked_size(field_, n)) {
    std::size_t s = 1;
    for (std::size_t w = n; w-- > 0;) {
        strides_[w] = s;
        s *= static_cast<std::size_t>(field_.q());
    }
    amps_[0] = 1.0;
}

QuditState QuditState::basis_state(Field field, std::size_t n, std::size_t index) {
    QuditState s(std::move(field), n);
    if (index >= s.size()) {
        throw Error(ErrorCode::PreconditionFailed, "basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

QuditState QuditState::random(Field field, std::size_t n, std::uint64_t seed) {
    QuditState s(std::move(field), n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (auto &a : s.amps_) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
    }
    s.normalize();
    return s;
}

Elem QuditState::digit(std::size_t index, std::size_t wire) const noexcept {
    return static_cast<Elem>((index / strides_[wire]) % static_cast<std::size_t>(field_.q()));
}

double QuditState::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void QuditState::normalize() {
    const double nrm = norm();
    if (nrm < 1e-12) {
        throw Error(ErrorCode::ProjectionVanished, "state has zero norm");
    }
    for (auto &a : amps_) {
        a /= nrm;
    }
}

void QuditState::check_wire(std::size_t wire) const {
    if (wire >= n_) {
        throw Error(ErrorCode::WireOutOfRange, "wire " + std::to_string(wire) + " of " + std::to_string(n_));
    }
}

void QuditState::x(std::size_t wire, Elem a) {
    check_wire(wire);
    if (a == 0) {
        return;
    }
    const std::size_t st = stride(wire);
    std::vector<Amplitude> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const Elem d = digit(i, wire);
        const std::size_t j = i - d * st + field_.add(d, a) * st;
        out[j] = amps_[i];
    }
    amps_ = std::move(out);
}

void QuditState::z(std::size_t wire, Elem b) {
    check_wire(wire);
    if (b == 0) {
        return;
    }
    const auto w = omega_table(field_.p());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] *= w[field_.trace(field_.mul(b, digit(i, wire)))];
    }
}

void QuditState::m(std::size_t wire, Elem c) {
    check_wire(wire);
    if (c == 0) {
        throw Error(ErrorCode::SingularScale, "M(0) is not invertible");
    }
    const std::size_t st = stride(wire);
    std::vector<Amplitude> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const Elem d = digit(i, wire);
        out[i - d * st + field_.mul(c, d) * st] = amps_[i];
    }
    amps_ = std::move(out);
}

void QuditState::f(std::size_t wire) {
    check_wire(wire);
    const std::size_t q = static_cast<std::size_t>(field_.q());
    const std::size_t st = stride(wire);
    const auto w = omega_table(field_.p());
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<Amplitude> in(q);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (digit(i, wire) != 0) {
            continue;
        }
        for (std::size_t x = 0; x < q; ++x) {
            in[x] = amps_[i + x * st];
        }
        for (std::size_t y = 0; y < q; ++y) {
            Amplitude acc = 0;
            for (std::size_t x = 0; x < q; ++x) {
                acc += w[field_.trace(field_.mul(static_cast<Elem>(x), static_cast<Elem>(y)))] * in[x];
            }
            amps_[i + y * st] = acc * scale;
        }
    }
}

void QuditState::f_dag(std::size_t wire) {
    // F is symmetric, so F^dagger is its entrywise conjugate.
    for (auto &a : amps_) {
        a = std::conj(a);
    }
    f(wire);
    for (auto &a : amps_) {
        a = std::conj(a);
    }
}

void QuditState::add(std::size_t control, std::size_t target) {
    check_wire(control);
    check_wire(target);
    if (control == target) {
        throw Error(ErrorCode::WireOutOfRange, "ADD needs two distinct wires");
    }
    const std::size_t st = stride(target);
    std::vector<Amplitude> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const Elem y = digit(i, target);
        out[i - y * st + field_.add(digit(i, control), y) * st] = amps_[i];
    }
    amps_ = std::move(out);
}

void QuditState::phase(Amplitude factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

Amplitude inner_product(const QuditState &a, const QuditState &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "states of different sizes");
    }
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return acc;
}

double fidelity(const QuditState &a, const QuditState &b) {
    return std::abs(inner_product(a, b));
}

void apply_pauli(QuditState &s, const PauliLabel &e, std::size_t offset) {
    const std::size_t n = e.vector.size() / 2;
    if (e.vector.size() % 2 != 0 || offset + n > s.n()) {
        throw Error(ErrorCode::LengthMismatch,
                    "Pauli on " + std::to_string(n) + " qudits does not fit a register of " + std::to_string(s.n()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        s.z(offset + i, e.vector[n + i]);
        s.x(offset + i, e.vector[i]);
    }
    if (e.phase != 0) {
        s.phase(omega_power(s.field().p(), e.phase));
    }
}

Elem commutation_phase(const Field &f, const Vec &g, const Vec &e) {
    if (g.size() != e.size() || g.size() % 2 != 0) {
        throw Error(ErrorCode::LengthMismatch, "g and e must be symplectic vectors of equal length");
    }
    return symp_product(f, g, e);
}

Elem self_phase(const Field &f, const Vec &g) {
    const std::size_t n = g.size() / 2;
    return dot(f, std::span<const Elem>(g).first(n), std::span<const Elem>(g).subspan(n));
}

QuditState with_ancilla(const QuditState &data) {
    QuditState out(data.field(), data.n() + 1);
    out.amplitudes() = std::vector<Amplitude>(out.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out.amplitudes()[i] = data.amplitudes()[i];
    }
    return out;
}

namespace {

// Ancilla-controlled X(y g_x)Z(y g_z) on wires 1..n, built from the gate set:
// controlled X(c y) = M(c) ADD M(c^-1), controlled Z(c y) = F of that F^dag.
void controlled_pauli_circuit(QuditState &s, const Vec &g) {
    const Field &f = s.field();
    const std::size_t n = g.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t wire = i + 1;
        if (const Elem c = g[n + i]; c != 0) {
            s.f_dag(wire);
            s.m(wire, f.inv(c));
            s.add(0, wire);
            s.m(wire, c);
            s.f(wire);
        }
        if (const Elem c = g[i]; c != 0) {
            s.m(wire, f.inv(c));
            s.add(0, wire);
            s.m(wire, c);
        }
    }
}

void controlled_pauli_fused(QuditState &s, const Vec &g) {
    const Field &f = s.field();
    const std::size_t n = g.size() / 2;
    const std::size_t q = static_cast<std::size_t>(f.q());
    const std::size_t block = s.size() / q;
    std::vector<Amplitude> out(s.size());
    for (std::size_t y = 0; y < q; ++y) {
        QuditState data(f, n);
        std::copy_n(s.amplitudes().begin() + static_cast<std::ptrdiff_t>(y * block), block,
                    data.amplitudes().begin());
        Vec scaled = g;
        scale(f, scaled, static_cast<Elem>(y));
        apply_pauli(data, PauliLabel{scaled, 0});
        std::copy_n(data.amplitudes().begin(), block, out.begin() + static_cast<std::ptrdiff_t>(y * block));
    }
    s.amplitudes() = std::move(out);
}

}  // namespace

SyndromeResult syndrome_measure(const QuditState &s, const Vec &g, const SyndromeOptions &options) {
    const std::size_t n = g.size() / 2;
    if (g.size() % 2 != 0 || s.n() != n + 1) {
        throw Error(ErrorCode::LengthMismatch, "register must hold one ancilla plus " + std::to_string(n) + " qudits");
    }
    QuditState work = s;
    work.f(0);
    if (options.fused) {
        controlled_pauli_fused(work, g);
    } else {
        controlled_pauli_circuit(work, g);
    }
    work.f_dag(0);

    const std::size_t q = static_cast<std::size_t>(s.field().q());
    const std::size_t block = work.size() / q;
    std::vector<double> prob(q, 0.0);
    for (std::size_t i = 0; i < work.size(); ++i) {
        prob[i / block] += std::norm(work.amplitudes()[i]);
    }
    std::size_t best = 0;
    for (std::size_t t = 1; t < q; ++t) {
        if (prob[t] > prob[best]) {
            best = t;
        }
    }
    if (prob[best] < 1.0 - options.tolerance) {
        throw Error(ErrorCode::NotStabilized,
                    "ancilla outcome is not deterministic (max probability " + std::to_string(prob[best]) + ")");
    }
    QuditState post(s.field(), n);
    std::copy_n(work.amplitudes().begin() + static_cast<std::ptrdiff_t>(best * block), block,
                post.amplitudes().begin());
    post.normalize();
    return SyndromeResult{.t = static_cast<Elem>(best), .probability = prob[best], .post = std::move(post)};
}

std::vector<Vec> syndrome_generators(const SubsystemCodeRecord &rec) {
    const Field &f = rec.field;
    const auto echelon = rref(rec.stabilizer).matrix.rows();
    if (std::all_of(echelon.begin(), echelon.end(), [&](const Vec &g) { return self_phase(f, g) == 0; })) {
        return echelon;
    }
    const std::size_t s = echelon.size();
    const std::size_t q = static_cast<std::size_t>(f.q());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s; ++i) {
        total *= q;
        if (total > kMaxStateSize) {
            throw Error(ErrorCode::StateTooLarge, "stabilizer too large to search for generators");
        }
    }
    std::vector<Vec> picked;
    CodeMatrix span(f, 2 * rec.n);
    std::vector<Elem> coeff(s, 0);
    for (std::uint64_t idx = 1; idx < total && picked.size() < s; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < s; ++i) {
            coeff[i] = static_cast<Elem>(v % q);
            v /= q;
        }
        Vec g(2 * rec.n, 0);
        for (std::size_t i = 0; i < s; ++i) {
            axpy(f, g, coeff[i], echelon[i]);
        }
        if (self_phase(f, g) != 0 || contains(span, g)) {
            continue;
        }
        span.add_row(g);
        picked.push_back(std::move(g));
    }
    if (picked.size() != s) {
        throw Error(ErrorCode::NotStabilized, "stabilizer of " + rec.label() +
                                                  " has no basis with g_x . g_z = 0; the syndrome circuit cannot "
                                                  "measure it deterministically");
    }
    return picked;
}

void project_onto_stabilizer(QuditState &s, const std::vector<Vec> &generators) {
    const Field &f = s.field();
    const double inv_q = 1.0 / f.q();
    for (const auto &g : generators) {
        std::vector<Amplitude> acc(s.size(), 0.0);
        for (int a = 0; a < f.q(); ++a) {
            QuditState term = s;
            Vec scaled = g;
            scale(f, scaled, static_cast<Elem>(a));
            apply_pauli(term, PauliLabel{scaled, 0});
            for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += term.amplitudes()[i];
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            s.amplitudes()[i] = acc[i] * inv_q;
        }
    }
}

QuditState prepare_codestate(const SubsystemCodeRecord &rec, std::uint64_t seed) {
    checked_size(rec.field, rec.n + 1);
    const auto gens = syndrome_generators(rec);
    QuditState s = QuditState::random(rec.field, rec.n, seed);
    project_onto_stabilizer(s, gens);
    if (s.norm() < 1e-6) {
        throw Error(ErrorCode::ProjectionVanished, "projection of the seeded state vanished; try another seed");
    }
    s.normalize();
    return s;
}

}  // namespace subsys
