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

#ifndef SUBSYS_ENUMERATE_H
#define SUBSYS_ENUMERATE_H

#include <cstdint>
#include <span>
#include <vector>

#include "subsys/field.h"

namespace subsys {

/// Default cap on the number of codewords an exhaustive search may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 28;

/// Reads SUBSYS_ENUM_CAP from the environment, falling back to 2^28.
std::uint64_t default_enumeration_cap();

struct EnumOptions {
    std::uint64_t cap = default_enumeration_cap();
    /// Worker threads for the enumeration kernels. 0 means hardware concurrency.
    unsigned jobs = 1;
};

enum class WeightKind {
    Hamming,
    /// Rows of length 2n read as (a|b); counts positions with (a_i, b_i) != 0.
    Symplectic,
};

/// Minimum weight over span(base + extra) \ span(base).
///
/// `base` and `extra` together must be linearly independent; `extra` must be
/// nonempty. With an empty base this is the minimum weight of a nonzero
/// codeword. The search visits q^(|base|+|extra|) - q^|base| codewords using an
/// odometer over GF(p) coefficients, adding exactly one generator per step
/// (amortised). Throws EnumerationTooLarge if q^(|base|+|extra|) > cap. The
/// result does not depend on options.jobs.
int min_weight_outside(const Field &field, std::size_t length, WeightKind kind,
                       std::span<const std::vector<Elem>> base,
                       std::span<const std::vector<Elem>> extra, const EnumOptions &options);

}  // namespace subsys

#endif
