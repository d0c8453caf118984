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


#ifndef SUBSYS_QUDITSIM_H
#define SUBSYS_QUDITSIM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "subsys/subsystem.h"

namespace subsys {

using Amplitude = std::complex<double>;

/// Largest register, in amplitudes.
inline constexpr std::size_t kMaxStateSize = std::size_t{1} << 22;

/// Dense state of n qudits of dimension q.
///
/// Basis index is base q with wire 0 as the most significant digit; digit
/// values are field element encodings. Gates act in place.
class QuditState {
  public:
    /// |0...0>. Throws StateTooLarge when q^n > 2^22.
    QuditState(Field field, std::size_t n);

    static QuditState basis_state(Field field, std::size_t n, std::size_t index);
    /// Normalised Gaussian random amplitudes drawn from mt19937_64(seed).
    static QuditState random(Field field, std::size_t n, std::uint64_t seed);

    const Field &field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::vector<Amplitude> &amplitudes() noexcept { return amps_; }
    const std::vector<Amplitude> &amplitudes() const noexcept { return amps_; }
    Elem digit(std::size_t index, std::size_t wire) const noexcept;

    double norm() const;
    /// Throws ProjectionVanished if the norm is below 1e-12.
    void normalize();

    /// |x> -> |x + a>.
    void x(std::size_t wire, Elem a);
    /// |x> -> omega^tr(b x) |x>.
    void z(std::size_t wire, Elem b);
    /// |x> -> |c x>. SingularScale for c = 0.
    void m(std::size_t wire, Elem c);
    /// |x> -> q^(-1/2) sum_y omega^tr(x y) |y>.
    void f(std::size_t wire);
    void f_dag(std::size_t wire);
    /// |x>|y> -> |x>|x + y>.
    void add(std::size_t control, std::size_t target);
    void phase(Amplitude factor);

  private:
    void check_wire(std::size_t wire) const;
    std::size_t stride(std::size_t wire) const noexcept { return strides_[wire]; }

    Field field_;
    std::size_t n_;
    std::vector<std::size_t> strides_;
    std::vector<Amplitude> amps_;
};

/// exp(2 pi i t / p) for t in GF(p).
Amplitude omega_power(int p, int t);

/// <a|b>.
Amplitude inner_product(const QuditState &a, const QuditState &b);
/// |<a|b>|, insensitive to global phase.
double fidelity(const QuditState &a, const QuditState &b);

/// omega^phase * X(a_1)Z(b_1) (x) ... (x) X(a_n)Z(b_n).
struct PauliLabel {
    Vec vector;
    Elem phase = 0;
};

/// Applies the label to wires offset..offset+n-1. LengthMismatch if it does
/// not fit.
void apply_pauli(QuditState &s, const PauliLabel &e, std::size_t offset = 0);

/// t with X(g_x)Z(g_z) E = omega^tr(t) E X(g_x)Z(g_z) for E = X(e_x)Z(e_z):
/// t = g_z . e_x - g_x . e_z, which is <g|e>_s.
Elem commutation_phase(const Field &f, const Vec &g, const Vec &e);

/// g_x . g_z. The circuit below is deterministic on stabilized states only for
/// generators where this vanishes.
Elem self_phase(const Field &f, const Vec &g);

/// Prepends an ancilla in |0> as wire 0.
QuditState with_ancilla(const QuditState &data);

struct SyndromeOptions {
    /// Apply the controlled Pauli directly instead of the gate-level circuit.
    bool fused = false;
    double tolerance = 1e-9;
};

struct SyndromeResult {
    Elem t = 0;
    double probability = 0;
    /// Data register after the measurement (ancilla removed).
    QuditState post;
};

/// Ancilla Fourier, ancilla-controlled X(y g_x)Z(y g_z) on the data wires,
/// inverse Fourier, then exact readout of wire 0. Throws NotStabilized when no
/// outcome has probability within tolerance of 1.
SyndromeResult syndrome_measure(const QuditState &s, const Vec &g, const SyndromeOptions &options = {});

/// A basis of the stabilizer whose members all have g_x . g_z = 0, so that
/// each X(a g_x)Z(a g_z) is a representation of (GF(q), +). Tries the reduced
/// echelon basis first, then a greedy pick over all of D. NotStabilized when
/// such vectors do not span D.
std::vector<Vec> syndrome_generators(const SubsystemCodeRecord &rec);

/// Projects a seeded random state onto the joint +1 eigenspace of
/// X(a g_x)Z(a g_z) for all a and all syndrome generators g.
/// StateTooLarge unless q^(n+1) fits; ProjectionVanished if nothing survives.
QuditState prepare_codestate(const SubsystemCodeRecord &rec, std::uint64_t seed);

/// prod_g (1/q) sum_a X(a g_x)Z(a g_z), applied in place.
void project_onto_stabilizer(QuditState &s, const std::vector<Vec> &generators);

}  // namespace subsys

#endif
