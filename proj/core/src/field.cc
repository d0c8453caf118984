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

#include "subsys/field.h"

#include <map>
#include <mutex>
#include <utility>

#include "subsys/error.h"

namespace subsys {

struct Field::Tables {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
    std::vector<Elem> trace;
};

namespace {

// Fixed moduli, coefficients low to high. Primitive where a primitive choice
// was convenient; only irreducibility is relied upon.
const std::map<std::pair<int, int>, std::vector<int>> &modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 2}, {2, 1, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{5, 2}, {2, 1, 1}},
        {{5, 3}, {2, 3, 0, 1}},
        {{7, 2}, {3, 1, 1}},
        {{11, 2}, {7, 1, 1}},
        {{13, 2}, {2, 1, 1}},
    };
    return table;
}

std::vector<int> digits(int value, int p, int m) {
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return out;
}

int undigits(const std::vector<int> &d, int p) {
    int value = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        value = value * p + *it;
    }
    return value;
}

// Remainder of a modulo monic b over GF(p). Coefficients low to high.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back() % p;
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

std::shared_ptr<const Field::Tables> build_tables(int p, int m, std::vector<int> modulus) {
    auto t = std::make_shared<Field::Tables>();
    int q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
    }
    t->p = p;
    t->m = m;
    t->q = q;
    t->modulus = std::move(modulus);
    const auto qq = static_cast<std::size_t>(q);
    t->add.resize(qq * qq);
    t->mul.resize(qq * qq);
    t->neg.resize(qq);
    t->inv.resize(qq);
    t->trace.resize(qq);

    for (int x = 0; x < q; ++x) {
        auto dx = digits(x, p, m);
        std::vector<int> dn(dx.size());
        for (std::size_t i = 0; i < dx.size(); ++i) {
            dn[i] = (p - dx[i]) % p;
        }
        t->neg[static_cast<std::size_t>(x)] = static_cast<Elem>(undigits(dn, p));
        for (int y = 0; y < q; ++y) {
            auto dy = digits(y, p, m);
            std::vector<int> sum(dx.size());
            for (std::size_t i = 0; i < dx.size(); ++i) {
                sum[i] = (dx[i] + dy[i]) % p;
            }
            std::vector<int> prod(static_cast<std::size_t>(2 * m - 1), 0);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    prod[static_cast<std::size_t>(i + j)] += dx[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(j)];
                }
            }
            for (auto &c : prod) {
                c %= p;
            }
            auto red = poly_mod(prod, t->modulus, p);
            red.resize(static_cast<std::size_t>(m), 0);
            const auto idx = static_cast<std::size_t>(x) * qq + static_cast<std::size_t>(y);
            t->add[idx] = static_cast<Elem>(undigits(sum, p));
            t->mul[idx] = static_cast<Elem>(undigits(red, p));
        }
    }

    auto mul = [&](int a, int b) { return t->mul[static_cast<std::size_t>(a) * qq + static_cast<std::size_t>(b)]; };
    auto pow = [&](int x, long long e) {
        int acc = 1;
        int base = x;
        while (e > 0) {
            if (e & 1) {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    };
    for (int x = 0; x < q; ++x) {
        t->inv[static_cast<std::size_t>(x)] = x == 0 ? 0 : static_cast<Elem>(pow(x, q - 2));
        int acc = 0;
        int term = x;
        for (int i = 0; i < m; ++i) {
            acc = t->add[static_cast<std::size_t>(acc) * qq + static_cast<std::size_t>(term)];
            term = pow(term, p);
        }
        t->trace[static_cast<std::size_t>(x)] = static_cast<Elem>(acc);
    }
    return t;
}

}  // namespace

bool is_prime(int value) {
    if (value < 2) {
        return false;
    }
    for (int d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) {
        return false;
    }
    for (int d = 1; d <= deg / 2; ++d) {
        // Every monic polynomial of degree d: enumerate the d lower coefficients.
        int count = 1;
        for (int i = 0; i < d; ++i) {
            count *= p;
        }
        for (int code = 0; code < count; ++code) {
            std::vector<int> divisor = digits(code, p, d);
            divisor.push_back(1);
            auto rem = poly_mod(std::vector<int>(poly.begin(), poly.end()), divisor, p);
            bool zero = true;
            for (int c : rem) {
                zero = zero && c == 0;
            }
            if (zero) {
                return false;
            }
        }
    }
    return true;
}

Field Field::make(int p, int m) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::NonPrime, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1 || m > kMaxDegree) {
        throw Error(ErrorCode::DegreeOutOfRange, "extension degree " + std::to_string(m) + " outside [1, 4]");
    }
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
    }
    if (q > kMaxFieldSize) {
        throw Error(ErrorCode::NoModulusAvailable, "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 256 elements");
    }

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Tables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    if (auto it = cache.find(key); it != cache.end()) {
        return Field(it->second);
    }

    std::vector<int> modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        auto it = modulus_table().find(key);
        if (it == modulus_table().end()) {
            throw Error(ErrorCode::NoModulusAvailable, "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
        }
        modulus = it->second;
        if (!is_irreducible(p, modulus)) {
            throw Error(ErrorCode::InternalInconsistency, "built-in modulus is reducible");
        }
    }
    auto tables = build_tables(p, m, std::move(modulus));
    cache.emplace(key, tables);
    return Field(std::move(tables));
}

Field Field::of_order(int q) {
    if (q < 2) {
        throw Error(ErrorCode::NonPrime, "field order " + std::to_string(q) + " is not a prime power");
    }
    int p = 2;
    while (q % p != 0) {
        ++p;
    }
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) {
        throw Error(ErrorCode::NonPrime, "field order " + std::to_string(q) + " is not a prime power");
    }
    return make(p, m);
}

Field::Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {
    q_ = tables_->q;
    add_ = tables_->add.data();
    mul_ = tables_->mul.data();
    neg_ = tables_->neg.data();
    inv_ = tables_->inv.data();
    trace_ = tables_->trace.data();
}

int Field::p() const noexcept { return tables_->p; }
int Field::m() const noexcept { return tables_->m; }
int Field::q() const noexcept { return q_; }
std::span<const int> Field::modulus() const noexcept { return tables_->modulus; }

std::string Field::name() const {
    if (m() == 1) {
        return "GF(" + std::to_string(p()) + ")";
    }
    return "GF(" + std::to_string(p()) + "^" + std::to_string(m()) + ")";
}

Elem Field::inv(Elem x) const {
    if (x == 0) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    }
    return inv_[x];
}

Elem Field::div(Elem x, Elem y) const {
    return mul(x, inv(y));
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
    Elem acc = 1;
    Elem base = x;
    while (e > 0) {
        if (e & 1U) {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1U;
    }
    return acc;
}

}  // namespace subsys
