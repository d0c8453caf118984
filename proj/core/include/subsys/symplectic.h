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

#ifndef SUBSYS_SYMPLECTIC_H
#define SUBSYS_SYMPLECTIC_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subsys/linalg.h"

namespace subsys {

// Vectors of GF(q)^(2n) are plain Vecs of length 2n read as (a|b): a is the
// X-part (indices 0..n-1), b the Z-part (indices n..2n-1).

/// Number of qudits i with (a_i, b_i) != (0, 0).
std::size_t swt(std::span<const Elem> v);

/// <(a|b)|(a'|b')>_s = a'.b - a.b'. Alternating and bilinear.
Elem symp_product(const Field &f, std::span<const Elem> u, std::span<const Elem> v);
/// tr_{q/p} of the symplectic product; a value of the prime subfield.
Elem trace_symp_product(const Field &f, std::span<const Elem> u, std::span<const Elem> v);

/// Generators of C^{perp_s}. Throws OddLength for odd code length.
CodeMatrix symp_dual(const CodeMatrix &c);

/// True iff <u|v>_s = 0 for every pair of rows.
bool is_isotropic(const CodeMatrix &c);

struct HyperbolicPair {
    Vec z;
    Vec x;
};

/// Basis {z_1..z_s; (z_{s+1}, x_{s+1}) .. (z_{s+r}, x_{s+r})} of a linear code
/// with <x_i|x_j>_s = <z_i|z_j>_s = 0 and <x_i|z_j>_s = delta_ij.
struct HyperbolicBasis {
    std::vector<Vec> isotropic;
    std::vector<HyperbolicPair> pairs;

    std::size_t s() const noexcept { return isotropic.size(); }
    std::size_t r() const noexcept { return pairs.size(); }
    /// All s + 2r vectors: isotropic ones first, then z, x of each pair.
    std::vector<Vec> vectors() const;
};

/// Extracts a hyperbolic basis; the isotropic part spans C ∩ C^{perp_s}.
///
/// When `first` is given it must lie in C but not in C^{perp_s}; it becomes
/// z_{s+1}.
HyperbolicBasis hyperbolic_basis(const CodeMatrix &c, std::optional<Vec> first = std::nullopt);

/// Checks every defining relation and linear independence exactly.
bool verify_hyperbolic(const Field &f, const HyperbolicBasis &basis);

/// Gram matrix G_ij = <v_i|v_j>_s of a list of vectors.
std::vector<Vec> gram_matrix(const Field &f, std::span<const Vec> vectors);

/// Deletes qudit `pos` (coordinates pos and n+pos). rho() is pos = 0.
Vec puncture_at(std::span<const Elem> v, std::size_t pos);
/// Throws TooShort when n < 2.
Vec rho(std::span<const Elem> v);

}  // namespace subsys

#endif
