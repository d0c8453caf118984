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

#ifndef SUBSYS_CONSTRUCTIONS_H
#define SUBSYS_CONSTRUCTIONS_H

#include <cstddef>
#include <optional>

#include "subsys/subsystem.h"

namespace subsys {

/// Kronecker product of generator matrices, rows ordered left factor outer.
CodeMatrix kronecker(const CodeMatrix &left, const CodeMatrix &right);

/// C = a x b in GF(q)^(2n): rows (u|0) for u in a, then (0|v) for v in b.
CodeMatrix symplectic_product_code(const CodeMatrix &a, const CodeMatrix &b);

struct EuclideanCode {
    SubsystemCodeRecord record;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    /// dim(X1 ∩ X2^perp) + dim(X1^perp ∩ X2).
    std::size_t k_prime = 0;
    /// min{wt((X1^perp ∩ X2)^perp \ X1), wt((X2^perp ∩ X1)^perp \ X2)}; absent
    /// when both sets are empty (k = 0).
    std::optional<int> closed_form_distance;
};

/// Subsystem code from two classical codes of the same length, C = X1 x X2.
///
/// Computes k, r from ranks and checks them against
///   k = n - (k1 + k2 + k')/2,  r = (k1 + k2 - k')/2,
/// then computes the distance both by the generic gauge-code search and by the
/// classical closed form; any disagreement throws InternalInconsistency.
/// Purity is filled as well. Either factor being {0} throws ZeroCode.
EuclideanCode euclidean(const CodeMatrix &x1, const CodeMatrix &x2, const EnumOptions &options = {});

struct LatticeCode {
    SubsystemCodeRecord record;
    CodeParams c1;
    CodeParams c2;
    int dual_distance1 = 0;
    int dual_distance2 = 0;
    /// min{d1^perp, d2^perp}: no nonzero gauge vector is lighter than this.
    int purity_floor = 0;
    /// min{d1, d2}.
    int predicted_distance = 0;
};

/// C = (F^n1 (x) C2^perp) x (C1^perp (x) F^n2). Needs 0 < k_i < n_i
/// (TrivialFactor). The record's n, k, r are checked against
/// n1 n2, k1 k2, (n1 - k1)(n2 - k2); distance is left unknown.
LatticeCode lattice(const CodeMatrix &c1, const CodeMatrix &c2, const EnumOptions &options = {});

/// (i-1) x i matrix with rows e_j - e_{j+1} (all ones-and-minus-ones).
CodeMatrix adjacent_difference_matrix(const Field &f, std::size_t i);

/// Rectangular Bacon-Shor gauge code
///   G = diag(I_n1 (x) H_n2, H_n1 (x) I_n2)
/// giving [[n1 n2, 1, (n1-1)(n2-1), min{n1, n2}]]_q. SizeTooSmall below 2.
/// Distance is left unknown.
SubsystemCodeRecord bacon_shor(std::size_t n1, std::size_t n2, const Field &field);

/// Cyclic shifts of XZZXI, the [[5,1,3]]_2 stabilizer generators.
CodeMatrix five_qubit_stabilizer();

}  // namespace subsys

#endif
