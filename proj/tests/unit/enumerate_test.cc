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


#include "subsys/enumerate.h"

#include <cstdlib>
#include <functional>

#include <gtest/gtest.h>

#include "../oracle.h"
#include "subsys/error.h"
#include "subsys/linalg.h"

using namespace subsys;

namespace {

int brute(const Field &f, std::size_t len, WeightKind kind, const std::vector<Vec> &base, const std::vector<Vec> &extra) {
    auto all = base;
    all.insert(all.end(), extra.begin(), extra.end());
    auto outer = oracle::span(f, all, len);
    auto inner = oracle::span(f, base, len);
    int best = -1;
    for (const auto &v : outer) {
        if (inner.count(v) != 0) {
            continue;
        }
        const int w = kind == WeightKind::Hamming ? oracle::hamming(v) : oracle::swt(v);
        if (best < 0 || w < best) {
            best = w;
        }
    }
    return best;
}

}  // namespace

TEST(enumerate, matches_brute_force_on_random_splits) {
    std::mt19937_64 rng(99);
    const std::vector<Field> fields = {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5)};
    for (int trial = 0; trial < 160; ++trial) {
        const Field &f = fields[static_cast<std::size_t>(trial) % fields.size()];
        const std::size_t len = 2 * (1 + rng() % 3);
        auto m = rref(oracle::random_matrix(f, 1 + rng() % len, len, rng)).matrix;
        if (m.num_rows() == 0) {
            continue;
        }
        const std::size_t split = rng() % m.num_rows();
        std::vector<Vec> base(m.rows().begin(), m.rows().begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<Vec> extra(m.rows().begin() + static_cast<std::ptrdiff_t>(split), m.rows().end());
        for (auto kind : {WeightKind::Hamming, WeightKind::Symplectic}) {
            const int expect = brute(f, len, kind, base, extra);
            EnumOptions serial;
            EnumOptions parallel;
            parallel.jobs = 4;
            ASSERT_EQ(min_weight_outside(f, len, kind, base, extra, serial), expect);
            ASSERT_EQ(min_weight_outside(f, len, kind, base, extra, parallel), expect);
        }
    }
}

TEST(enumerate, packed_binary_path_on_long_vectors) {
    std::mt19937_64 rng(3);
    auto f = Field::make(2);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t len = 2 * (20 + rng() % 40);
        auto m = rref(oracle::random_matrix(f, 8, len, rng)).matrix;
        std::vector<Vec> base(m.rows().begin(), m.rows().begin() + 3);
        std::vector<Vec> extra(m.rows().begin() + 3, m.rows().end());
        for (auto kind : {WeightKind::Hamming, WeightKind::Symplectic}) {
            EnumOptions serial;
            EnumOptions parallel;
            parallel.jobs = 3;
            const int expect = brute(f, len, kind, base, extra);
            ASSERT_EQ(min_weight_outside(f, len, kind, base, extra, serial), expect);
            ASSERT_EQ(min_weight_outside(f, len, kind, base, extra, parallel), expect);
        }
    }
}

TEST(enumerate, empty_extra_is_an_error) {
    auto f = Field::make(2);
    std::vector<Vec> none;
    try {
        min_weight_outside(f, 2, WeightKind::Hamming, none, none, EnumOptions{});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyCode);
    }
}

TEST(enumerate, cap_is_enforced) {
    auto f = Field::make(3);
    std::vector<Vec> base;
    std::vector<Vec> extra = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
    EnumOptions opt;
    opt.cap = 26;
    EXPECT_THROW(min_weight_outside(f, 4, WeightKind::Hamming, base, extra, opt), Error);
    opt.cap = 27;
    EXPECT_EQ(min_weight_outside(f, 4, WeightKind::Hamming, base, extra, opt), 1);
}

TEST(enumerate, environment_overrides_default_cap) {
    ::setenv("SUBSYS_ENUM_CAP", "1000", 1);
    EXPECT_EQ(default_enumeration_cap(), 1000u);
    ::unsetenv("SUBSYS_ENUM_CAP");
    EXPECT_EQ(default_enumeration_cap(), kDefaultEnumerationCap);
}

TEST(enumerate, zero_jobs_means_all_cores) {
    auto f = Field::make(2);
    auto m = hamming_7_4();
    EnumOptions opt;
    opt.jobs = 0;
    EXPECT_EQ(min_weight_outside(f, 7, WeightKind::Hamming, {}, rref(m).matrix.rows(), opt), 3);
}
