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

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "subsys/error.h"

namespace subsys {

std::uint64_t default_enumeration_cap() {
    if (const char *env = std::getenv("SUBSYS_ENUM_CAP"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && value > 0) {
            return value;
        }
    }
    return kDefaultEnumerationCap;
}

namespace {

constexpr int kNoWeight = std::numeric_limits<int>::max();
// No nonzero vector has weight below one, so reaching it ends the search.
constexpr int kWeightFloor = 1;

struct Packed {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Generators of the search space over the prime subfield: alpha^j * row for
// j < m, base rows first so the low digits sweep span(base).
struct PrimeExpansion {
    int p = 2;
    std::size_t digits = 0;
    std::size_t base_digits = 0;
    std::vector<std::vector<Elem>> rows;
};

PrimeExpansion expand(const Field &f, std::span<const std::vector<Elem>> base,
                      std::span<const std::vector<Elem>> extra) {
    PrimeExpansion out;
    out.p = f.p();
    auto push = [&](const std::vector<Elem> &row) {
        int alpha_power = 1;
        for (int j = 0; j < f.m(); ++j) {
            std::vector<Elem> scaled(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) {
                scaled[i] = f.mul(static_cast<Elem>(alpha_power), row[i]);
            }
            out.rows.push_back(std::move(scaled));
            alpha_power *= f.p();
        }
    };
    for (const auto &row : base) {
        push(row);
    }
    out.base_digits = out.rows.size();
    for (const auto &row : extra) {
        push(row);
    }
    out.digits = out.rows.size();
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

std::vector<int> decode_digits(std::uint64_t index, int p, std::size_t count) {
    std::vector<int> d(count);
    for (std::size_t i = 0; i < count; ++i) {
        d[i] = static_cast<int>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
    }
    return d;
}

// Shared state of one search: best weight so far and the chunk dispenser.
struct Search {
    std::atomic<int> best{kNoWeight};
    std::atomic<std::uint64_t> next{0};
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::uint64_t chunk = 0;

    void offer(int w) {
        int cur = best.load(std::memory_order_relaxed);
        while (w < cur && !best.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
    }
    bool done() const { return best.load(std::memory_order_relaxed) <= kWeightFloor; }
};

// Odometer scan of indices [lo, hi). `State` holds the running codeword.
template <typename State, typename Add, typename Weight>
void scan_range(const PrimeExpansion &ex, std::uint64_t lo, std::uint64_t hi, State cur,
                std::vector<int> digit, Add add, Weight weight, Search &search) {
    int local = search.best.load(std::memory_order_relaxed);
    std::uint64_t since_sync = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        int w = weight(cur);
        if (w < local) {
            local = w;
            search.offer(w);
            if (local <= kWeightFloor) {
                return;
            }
        }
        if (++since_sync == 4096) {
            since_sync = 0;
            if (search.done()) {
                return;
            }
            local = std::min(local, search.best.load(std::memory_order_relaxed));
        }
        if (idx + 1 == hi) {
            break;
        }
        std::size_t i = 0;
        while (true) {
            add(cur, i);
            if (++digit[i] == ex.p) {
                digit[i] = 0;
                ++i;
                continue;
            }
            break;
        }
    }
}

template <typename MakeState, typename Add, typename Weight>
int run_search(const PrimeExpansion &ex, const EnumOptions &options, MakeState make_state, Add add,
               Weight weight) {
    Search search;
    search.begin = ipow(static_cast<std::uint64_t>(ex.p), ex.base_digits);
    search.end = ipow(static_cast<std::uint64_t>(ex.p), ex.digits);
    unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
    const std::uint64_t total = search.end - search.begin;
    search.chunk = std::max<std::uint64_t>(std::uint64_t{1} << 14, total / (std::uint64_t{jobs} * 16) + 1);
    search.next.store(search.begin);

    auto worker = [&]() {
        while (!search.done()) {
            std::uint64_t lo = search.next.fetch_add(search.chunk);
            if (lo >= search.end) {
                return;
            }
            std::uint64_t hi = std::min(search.end, lo + search.chunk);
            auto digit = decode_digits(lo, ex.p, ex.digits);
            auto state = make_state(digit);
            scan_range(ex, lo, hi, std::move(state), std::move(digit), add, weight, search);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            threads.emplace_back(worker);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    return search.best.load();
}

int search_packed(const PrimeExpansion &ex, std::size_t length, WeightKind kind, const EnumOptions &options) {
    const std::size_t n = length / 2;
    std::vector<Packed> rows;
    rows.reserve(ex.rows.size());
    for (const auto &row : ex.rows) {
        Packed w;
        for (std::size_t i = 0; i < length; ++i) {
            if (row[i] == 0) {
                continue;
            }
            if (kind == WeightKind::Symplectic) {
                if (i < n) {
                    w.lo |= std::uint64_t{1} << i;
                } else {
                    w.hi |= std::uint64_t{1} << (i - n);
                }
            } else if (i < 64) {
                w.lo |= std::uint64_t{1} << i;
            } else {
                w.hi |= std::uint64_t{1} << (i - 64);
            }
        }
        rows.push_back(w);
    }
    auto make_state = [&](const std::vector<int> &digit) {
        Packed cur;
        for (std::size_t i = 0; i < digit.size(); ++i) {
            if (digit[i] != 0) {
                cur.lo ^= rows[i].lo;
                cur.hi ^= rows[i].hi;
            }
        }
        return cur;
    };
    auto add = [&](Packed &cur, std::size_t i) {
        cur.lo ^= rows[i].lo;
        cur.hi ^= rows[i].hi;
    };
    if (kind == WeightKind::Symplectic) {
        return run_search(ex, options, make_state, add,
                          [](const Packed &c) { return std::popcount(c.lo | c.hi); });
    }
    return run_search(ex, options, make_state, add,
                      [](const Packed &c) { return std::popcount(c.lo) + std::popcount(c.hi); });
}

int search_generic(const Field &f, const PrimeExpansion &ex, std::size_t length, WeightKind kind,
                   const EnumOptions &options) {
    const Elem *add_table = f.add_table();
    const auto q = static_cast<std::size_t>(f.q());
    auto make_state = [&](const std::vector<int> &digit) {
        std::vector<Elem> cur(length, 0);
        for (std::size_t i = 0; i < digit.size(); ++i) {
            for (int t = 0; t < digit[i]; ++t) {
                for (std::size_t c = 0; c < length; ++c) {
                    cur[c] = add_table[cur[c] * q + ex.rows[i][c]];
                }
            }
        }
        return cur;
    };
    auto add = [&](std::vector<Elem> &cur, std::size_t i) {
        const auto &row = ex.rows[i];
        for (std::size_t c = 0; c < length; ++c) {
            cur[c] = add_table[cur[c] * q + row[c]];
        }
    };
    if (kind == WeightKind::Symplectic) {
        const std::size_t n = length / 2;
        return run_search(ex, options, make_state, add, [n](const std::vector<Elem> &c) {
            int w = 0;
            for (std::size_t i = 0; i < n; ++i) {
                w += (c[i] | c[i + n]) != 0 ? 1 : 0;
            }
            return w;
        });
    }
    return run_search(ex, options, make_state, add, [](const std::vector<Elem> &c) {
        int w = 0;
        for (Elem e : c) {
            w += e != 0 ? 1 : 0;
        }
        return w;
    });
}

}  // namespace

int min_weight_outside(const Field &field, std::size_t length, WeightKind kind,
                       std::span<const std::vector<Elem>> base,
                       std::span<const std::vector<Elem>> extra, const EnumOptions &options) {
    if (extra.empty()) {
        throw Error(ErrorCode::EmptyCode, "nothing to enumerate outside the base code");
    }
    if (kind == WeightKind::Symplectic && length % 2 != 0) {
        throw Error(ErrorCode::OddLength, "symplectic weight needs even length");
    }
    for (const auto &row : base) {
        if (row.size() != length) {
            throw Error(ErrorCode::LengthMismatch, "generator length differs from " + std::to_string(length));
        }
    }
    for (const auto &row : extra) {
        if (row.size() != length) {
            throw Error(ErrorCode::LengthMismatch, "generator length differs from " + std::to_string(length));
        }
    }

    const std::size_t dim = base.size() + extra.size();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (size > options.cap / static_cast<std::uint64_t>(field.q())) {
            throw Error(ErrorCode::EnumerationTooLarge,
                        field.name() + " space of dimension " + std::to_string(dim) + " exceeds the enumeration cap of " +
                            std::to_string(options.cap));
        }
        size *= static_cast<std::uint64_t>(field.q());
    }

    auto ex = expand(field, base, extra);
    const bool packable = field.q() == 2 &&
                          (kind == WeightKind::Symplectic ? length / 2 <= 64 : length <= 128);
    int best = packable ? search_packed(ex, length, kind, options)
                        : search_generic(field, ex, length, kind, options);
    if (best == kNoWeight) {
        throw Error(ErrorCode::InternalInconsistency, "enumeration visited no codeword");
    }
    return best;
}

}  // namespace subsys
