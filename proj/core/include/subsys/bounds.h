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


#ifndef SUBSYS_BOUNDS_H
#define SUBSYS_BOUNDS_H

#include <cstddef>
#include <string>

#include "subsys/subsystem.h"

namespace subsys {

/// lhs <= rhs, in exact integers. slack = rhs - lhs.
struct BoundReport {
    std::string name;
    BigInt lhs;
    BigInt rhs;
    bool satisfied = false;
    BigInt slack;
};

/// k + r <= n - 2d + 2. Needs d >= 1.
BoundReport singleton_check(std::size_t n, std::size_t k, std::size_t r, int d, int q);

/// sum_{j <= (d-1)/2} C(n, j) (q^2 - 1)^j <= q^n / (K R).
/// Throws NonIntegerRHS when K R does not divide q^n.
BoundReport hamming_check(std::size_t n, const BigInt &K, const BigInt &R, int d, int q);

BigInt binomial(std::size_t n, std::size_t j);

enum class MdsClass { StrictlyBelow, MeetsSingleton, Violates };

MdsClass mds_classify(std::size_t n, std::size_t k, std::size_t r, int d, int q);
std::string to_string(MdsClass c);

/// n - k - r generators of the stabilizer are measured.
std::size_t syndrome_count(std::size_t n, std::size_t k, std::size_t r);

/// 2d - 2 <= n - k - r: never fewer measurements than an MDS stabilizer code
/// [[k + 2d - 2, k, d]] of the same k and d.
BoundReport compare_with_mds(std::size_t n, std::size_t k, std::size_t r, int d);

}  // namespace subsys

#endif
