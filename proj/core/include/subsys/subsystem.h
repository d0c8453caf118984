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

#ifndef SUBSYS_SUBSYSTEM_H
#define SUBSYS_SUBSYSTEM_H

#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "subsys/linalg.h"
#include "subsys/symplectic.h"

namespace subsys {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(int base, std::size_t exponent);

/// How the gauge generators span the code. Only GF(q)-linear spans are
/// analysed; additive (GF(p)-linear only) input is rejected with NotLinear.
enum class Linearity { FqLinear, Additive };

/// Which distance formula applies: C strictly inside D^perp_s, or equal.
enum class DistanceCase { Proper, Saturated };

/// [[n, k, r, d]]_q subsystem code derived from a gauge code C in GF(q)^(2n).
///
/// stabilizer D = C ∩ C^perp_s, normalizer D^perp_s, centralizer C^perp_s.
/// Distance and purity start out unknown and are filled by analyze() (or by
/// distance()/purity() individually), since both need exhaustive search.
struct SubsystemCodeRecord {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::optional<int> distance;
    /// Exact purity d' = swt(C \ {0}).
    std::optional<int> purity;
    std::optional<bool> pure;
    CodeMatrix gauge;
    CodeMatrix stabilizer;
    CodeMatrix normalizer;
    CodeMatrix centralizer;
    HyperbolicBasis basis;

    BigInt K() const { return big_pow(field.q(), k); }
    BigInt R() const { return big_pow(field.q(), r); }
    DistanceCase distance_case() const;
    /// "[[9,1,4,3]]_2"; unknown distance prints as '?'.
    std::string label() const;
};

/// Throws ZeroCode for C = {0}, NotLinear for additive input, OddLength.
SubsystemCodeRecord from_gauge_code(const CodeMatrix &gauge, Linearity linearity = Linearity::FqLinear);

/// Exact distance by enumerating D^perp_s (minus C when C != D^perp_s).
int distance(const SubsystemCodeRecord &rec, const EnumOptions &options = {});

struct PurityResult {
    int exact = 0;
    bool pure = false;
};

/// d' = swt(C \ {0}) and pure iff d' >= d. Needs the distance.
PurityResult purity(const SubsystemCodeRecord &rec, const EnumOptions &options = {});

/// Fills distance, purity and pure_flag in place.
void analyze(SubsystemCodeRecord &rec, const EnumOptions &options = {});

/// D ⊆ C ⊆ D^perp_s, D ⊆ C^perp_s ⊆ D^perp_s, D isotropic, dimension counts,
/// and the purity flag agree with each other.
bool check_invariants(const SubsystemCodeRecord &rec);

}  // namespace subsys

#endif
