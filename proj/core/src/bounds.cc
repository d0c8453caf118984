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


#include "subsys/bounds.h"

#include "subsys/error.h"

namespace subsys {

namespace {

BoundReport report(std::string name, BigInt lhs, BigInt rhs) {
    BoundReport out{.name = std::move(name), .lhs = std::move(lhs), .rhs = std::move(rhs)};
    out.satisfied = out.lhs <= out.rhs;
    out.slack = out.rhs - out.lhs;
    return out;
}

BigInt big(std::size_t v) {
    return BigInt(v);
}

}  // namespace

BoundReport singleton_check(std::size_t n, std::size_t k, std::size_t r, int d, int q) {
    (void)q;
    if (d < 1) {
        throw Error(ErrorCode::PreconditionFailed, "distance must be at least 1");
    }
    return report("singleton", big(k) + big(r), big(n) - 2 * BigInt(d) + 2);
}

BigInt binomial(std::size_t n, std::size_t j) {
    if (j > n) {
        return 0;
    }
    BigInt out = 1;
    for (std::size_t i = 1; i <= j; ++i) {
        out = out * big(n - j + i) / big(i);
    }
    return out;
}

BoundReport hamming_check(std::size_t n, const BigInt &K, const BigInt &R, int d, int q) {
    if (d < 1) {
        throw Error(ErrorCode::PreconditionFailed, "distance must be at least 1");
    }
    if (K <= 0 || R <= 0) {
        throw Error(ErrorCode::PreconditionFailed, "K and R must be positive");
    }
    const BigInt volume = big_pow(q, n);
    const BigInt kr = K * R;
    if (volume % kr != 0) {
        throw Error(ErrorCode::NonIntegerRHS, "q^n = " + volume.str() + " is not divisible by K R = " + kr.str());
    }
    const std::size_t t = static_cast<std::size_t>(d - 1) / 2;
    const BigInt errors = BigInt(q) * q - 1;
    BigInt lhs = 0;
    BigInt power = 1;
    for (std::size_t j = 0; j <= t && j <= n; ++j) {
        lhs += binomial(n, j) * power;
        power *= errors;
    }
    return report("hamming", std::move(lhs), volume / kr);
}

MdsClass mds_classify(std::size_t n, std::size_t k, std::size_t r, int d, int q) {
    auto rep = singleton_check(n, k, r, d, q);
    if (rep.slack < 0) {
        return MdsClass::Violates;
    }
    return rep.slack == 0 ? MdsClass::MeetsSingleton : MdsClass::StrictlyBelow;
}

std::string to_string(MdsClass c) {
    switch (c) {
        case MdsClass::StrictlyBelow: return "strictly-below";
        case MdsClass::MeetsSingleton: return "meets-singleton";
        case MdsClass::Violates: return "violates";
    }
    return "?";
}

std::size_t syndrome_count(std::size_t n, std::size_t k, std::size_t r) {
    if (k + r > n) {
        throw Error(ErrorCode::PreconditionFailed, "k + r exceeds n");
    }
    return n - k - r;
}

BoundReport compare_with_mds(std::size_t n, std::size_t k, std::size_t r, int d) {
    if (d < 1) {
        throw Error(ErrorCode::PreconditionFailed, "distance must be at least 1");
    }
    return report("syndrome-vs-mds", 2 * BigInt(d) - 2, BigInt(syndrome_count(n, k, r)));
}

}  // namespace subsys
