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

#ifndef SUBSYS_LINALG_H
#define SUBSYS_LINALG_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subsys/enumerate.h"
#include "subsys/field.h"

namespace subsys {

using Vec = std::vector<Elem>;

/// Generator matrix of a linear code in GF(q)^n. Rows need not be independent.
class CodeMatrix {
  public:
    CodeMatrix(Field field, std::size_t n);
    /// Validates row lengths (LengthMismatch) and entries (ParseError).
    CodeMatrix(Field field, std::size_t n, std::vector<Vec> rows);

    static CodeMatrix identity(Field field, std::size_t n);
    /// The whole space GF(q)^n.
    static CodeMatrix full(Field field, std::size_t n) { return identity(std::move(field), n); }

    const Field &field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<Vec> &rows() const noexcept { return rows_; }
    std::size_t num_rows() const noexcept { return rows_.size(); }
    const Vec &row(std::size_t i) const { return rows_.at(i); }

    void add_row(Vec row);

  private:
    Field field_;
    std::size_t n_;
    std::vector<Vec> rows_;
};

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<int> d;
};

struct Rref {
    CodeMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Vector helpers.
std::size_t hamming_weight(std::span<const Elem> v);
Elem dot(const Field &f, std::span<const Elem> x, std::span<const Elem> y);
/// y += alpha * x
void axpy(const Field &f, std::span<Elem> y, Elem alpha, std::span<const Elem> x);
void scale(const Field &f, std::span<Elem> v, Elem alpha);
bool is_zero(std::span<const Elem> v);

/// Reduced row echelon form; zero rows are dropped.
Rref rref(const CodeMatrix &m);
std::size_t rank(const CodeMatrix &m);
/// Kernel of m under the dot product; dim m + dim dual = n.
CodeMatrix euclidean_dual(const CodeMatrix &m);
bool contains(const CodeMatrix &m, std::span<const Elem> v);
CodeMatrix intersect(const CodeMatrix &a, const CodeMatrix &b);
CodeMatrix sum_code(const CodeMatrix &a, const CodeMatrix &b);
bool same_row_space(const CodeMatrix &a, const CodeMatrix &b);
/// Every row of `inner` lies in the row space of `outer`.
bool is_subspace(const CodeMatrix &inner, const CodeMatrix &outer);
/// Rows extending a basis of `sub` to a basis of `whole` (sub must be a
/// subspace of whole). The result has rank(whole) - rank(sub) rows.
std::vector<Vec> complement_basis(const CodeMatrix &sub, const CodeMatrix &whole);

/// Exact minimum nonzero Hamming weight. Throws EmptyCode / EnumerationTooLarge.
int min_weight(const CodeMatrix &m, const EnumOptions &options = {});
/// [n, k, d] with d by enumeration (absent for the zero code).
CodeParams code_params(const CodeMatrix &m, const EnumOptions &options = {});

/// Row-space membership against a precomputed reduced echelon basis.
class MembershipTester {
  public:
    explicit MembershipTester(const CodeMatrix &m);
    bool contains(std::span<const Elem> v) const;
    /// v minus its projection along the pivot columns; zero iff v is a member.
    Vec residual(std::span<const Elem> v) const;
    std::size_t rank() const noexcept { return echelon_.rank; }
    const Rref &echelon() const noexcept { return echelon_; }

  private:
    Rref echelon_;
};

// Standard classical codes used throughout the tests and constructions.
CodeMatrix repetition_code(const Field &f, std::size_t n);
CodeMatrix even_weight_code(const Field &f, std::size_t n);
/// The binary [7,4,3] Hamming code.
CodeMatrix hamming_7_4();

}  // namespace subsys

#endif
