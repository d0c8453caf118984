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

#ifndef SUBSYS_TRANSFORMS_H
#define SUBSYS_TRANSFORMS_H

#include <optional>
#include <string>
#include <vector>

#include "subsys/subsystem.h"

namespace subsys {

/// One normalization or puncturing move, kept for auditing.
struct TraceStep {
    std::string action;
    std::string detail;
};

struct PunctureResult {
    /// Output code with distance and purity recomputed exactly.
    SubsystemCodeRecord record;
    /// The transformed basis carried through the procedure; it spans the
    /// output gauge code and satisfies the hyperbolic relations.
    HyperbolicBasis basis;
    /// The [[n, k, r-1]] code on the original qudits when a gauge pair had to
    /// be demoted first, or the [[n-1, k, r]] code before a pair was dropped.
    std::optional<SubsystemCodeRecord> intermediate;
    std::vector<TraceStep> trace;
};

/// [[n, k, r > 0, d >= 2]] exactly pure to 1  ->  [[n-1, k, r-1, >= d]].
///
/// With a weight-one stabilizer the code is normalised so that the stabilizer
/// is (1,0..|a,0..), the other generators are cleared on qudit 1, and qudit 1
/// is deleted; one gauge pair is then reduced to its z-vector. Without one, a
/// weight-one gauge vector w is demoted first (C -> C ∩ w^perp_s) and the
/// deletion alone finishes the job. Throws PreconditionFailed otherwise.
PunctureResult puncture_pure1(const SubsystemCodeRecord &rec, const EnumOptions &options = {});

/// [[n, k, r, d >= 3]] exactly pure to d' >= 2  ->  [[n-1, k, r+1, >= d-1]].
///
/// Picks z1 = (1,..|0,..) and z2 = (0,..|1,..) in D, clears every other
/// generator on qudit 1 and deletes it; rho(z1), rho(z2) become a new gauge
/// pair.
PunctureResult puncture_impure(const SubsystemCodeRecord &rec, const EnumOptions &options = {});

enum class ChainStep { Start, PurePuncture, ImpurePuncture };
enum class ChainStop { Pure, DistanceTwo, Stabilizer };

struct ChainLink {
    ChainStep step = ChainStep::Start;
    SubsystemCodeRecord record;
    /// Number of pure-to-1 and impure punctures applied so far.
    std::size_t pure_punctures = 0;
    std::size_t impure_punctures = 0;
    std::vector<TraceStep> trace;
};

struct SingletonChain {
    std::vector<ChainLink> links;
    ChainStop stop = ChainStop::Pure;
};

/// Punctures until the code is pure, has distance 2, or is an exactly
/// pure-to-1 stabilizer code (r = 0) where no further move applies.
/// Needs distance and purity on the input.
SingletonChain singleton_chain(const SubsystemCodeRecord &rec, const EnumOptions &options = {});

std::string to_string(ChainStep step);
std::string to_string(ChainStop stop);

}  // namespace subsys

#endif
