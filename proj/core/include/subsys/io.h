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


#ifndef SUBSYS_IO_H
#define SUBSYS_IO_H

#include <string>
#include <string_view>

#include "subsys/subsystem.h"

namespace subsys {

/// Matrix text format:
///
///     # comment
///     q=4 p=2 m=2
///     n=3
///     symplectic=true
///     1 0 2 0 0 3
///
/// Any of q, p, m may be given as long as they agree. With symplectic=true, n
/// counts qudits and rows have 2n entries. additive=true is rejected with
/// NotLinear. Malformed input throws ParseError.
struct CodeFile {
    CodeMatrix matrix;
    bool symplectic = false;
    /// Qudits when symplectic, otherwise the row length.
    std::size_t n = 0;
};

CodeFile parse_code_file(std::string_view text);
CodeFile read_code_file(const std::string &path);
std::string format_code_file(const CodeMatrix &m, bool symplectic);

/// Pretty-printed JSON, fixed key order, trailing newline.
std::string record_to_json(const SubsystemCodeRecord &rec);
/// Rebuilds the record from its gauge generators and checks the stored n, k, r
/// against it; distance and purity are taken as stored. ParseError on any
/// mismatch or malformed document.
SubsystemCodeRecord record_from_json(std::string_view text);
SubsystemCodeRecord read_record(const std::string &path);

/// Same field, parameters, analysis results and generator matrices.
bool same_record(const SubsystemCodeRecord &a, const SubsystemCodeRecord &b);

/// Error labels such as "X1*Z3", "X1:2*Z1:3", "I". Wires are 1-based;
/// repeated factors on a wire add up. Returns a (e_x|e_z) vector of length 2n.
Vec parse_pauli(std::string_view label, const Field &f, std::size_t n);
std::string format_pauli(const Vec &v);

std::string read_text_file(const std::string &path);

}  // namespace subsys

#endif
