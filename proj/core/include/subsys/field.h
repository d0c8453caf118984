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

#ifndef SUBSYS_FIELD_H
#define SUBSYS_FIELD_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace subsys {

/// A field element of GF(p^m), stored as the base-p integer
/// sum_i c_i p^i for the polynomial sum_i c_i alpha^i. The prime subfield is
/// exactly the values 0..p-1.
using Elem = std::uint8_t;

/// Largest supported field size and extension degree.
inline constexpr int kMaxFieldSize = 256;
inline constexpr int kMaxDegree = 4;

/// GF(p^m) with a fixed, built-in modulus per (p, m).
///
/// Arithmetic is table driven (two q x q tables shared between copies), so a
/// Field is a cheap handle. Two handles compare equal iff they have the same
/// characteristic and degree; since the modulus is a function of (p, m), equal
/// fields always have identical element encodings.
class Field {
  public:
    /// Throws NonPrime, DegreeOutOfRange or NoModulusAvailable.
    static Field make(int p, int m = 1);
    /// The unique field with q elements, if q is a supported prime power.
    static Field of_order(int q);

    int p() const noexcept;
    int m() const noexcept;
    int q() const noexcept;
    /// Monic modulus, coefficients from degree 0 to degree m.
    std::span<const int> modulus() const noexcept;
    std::string name() const;

    bool contains(int value) const noexcept { return value >= 0 && value < q(); }

    Elem add(Elem x, Elem y) const noexcept { return add_[index(x, y)]; }
    Elem sub(Elem x, Elem y) const noexcept { return add_[index(x, neg_[y])]; }
    Elem mul(Elem x, Elem y) const noexcept { return mul_[index(x, y)]; }
    Elem neg(Elem x) const noexcept { return neg_[x]; }
    /// Throws DivisionByZero for x = 0.
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const;
    Elem pow(Elem x, std::uint64_t e) const noexcept;
    /// Absolute trace to GF(p): x + x^p + ... + x^(p^(m-1)).
    Elem trace(Elem x) const noexcept { return trace_[x]; }
    /// Frobenius automorphism x -> x^p.
    Elem frobenius(Elem x) const noexcept { return pow(x, static_cast<std::uint64_t>(p())); }

    /// Row-major q*q addition table, exposed for vectorised kernels.
    const Elem *add_table() const noexcept { return add_; }
    const Elem *mul_table() const noexcept { return mul_; }

    friend bool operator==(const Field &a, const Field &b) noexcept {
        return a.p() == b.p() && a.m() == b.m();
    }

    struct Tables;

  private:
    explicit Field(std::shared_ptr<const Tables> tables);
    std::size_t index(Elem x, Elem y) const noexcept {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) + y;
    }

    std::shared_ptr<const Tables> tables_;
    int q_ = 0;
    const Elem *add_ = nullptr;
    const Elem *mul_ = nullptr;
    const Elem *neg_ = nullptr;
    const Elem *inv_ = nullptr;
    const Elem *trace_ = nullptr;
};

/// True iff the monic polynomial (coefficients low to high) over GF(p) has no
/// monic factor of degree 1..deg/2.
bool is_irreducible(int p, std::span<const int> poly);

bool is_prime(int value);

}  // namespace subsys

#endif
