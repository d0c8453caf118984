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


#ifndef SUBSYS_TEST_CODES_H
#define SUBSYS_TEST_CODES_H

#include <vector>

#include "subsys/linalg.h"

namespace subsys::testing {

// Gauge code of A on the first qudits and B on the rest.
inline CodeMatrix direct_sum(const CodeMatrix &a, const CodeMatrix &b) {
    const std::size_t na = a.n() / 2, nb = b.n() / 2, n = na + nb;
    CodeMatrix out(a.field(), 2 * n);
    for (const auto &r : a.rows()) {
        Vec v(2 * n, 0);
        for (std::size_t i = 0; i < na; ++i) {
            v[i] = r[i];
            v[n + i] = r[na + i];
        }
        out.add_row(v);
    }
    for (const auto &r : b.rows()) {
        Vec v(2 * n, 0);
        for (std::size_t i = 0; i < nb; ++i) {
            v[na + i] = r[i];
            v[n + na + i] = r[nb + i];
        }
        out.add_row(v);
    }
    return out;
}

// Moves qudit i to position perm[i] in every row.
inline CodeMatrix permute(const CodeMatrix &c, const std::vector<std::size_t> &perm) {
    const std::size_t n = c.n() / 2;
    CodeMatrix out(c.field(), c.n());
    for (const auto &r : c.rows()) {
        Vec v(c.n(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            v[perm[i]] = r[i];
            v[n + perm[i]] = r[n + i];
        }
        out.add_row(v);
    }
    return out;
}

}  // namespace subsys::testing

#endif
