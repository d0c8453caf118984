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

#include "subsys/transforms.h"

#include <algorithm>
#include <array>
#include <functional>

#include "subsys/error.h"

namespace subsys {

namespace {

void expect(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::InternalInconsistency, what);
    }
}

std::string show(const Vec &v) {
    const std::size_t n = v.size() / 2;
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == n) {
            s += " |";
        }
        if (i != 0) {
            s += ' ';
        }
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string params(const SubsystemCodeRecord &rec) {
    return rec.label();
}

// Weight-one vectors (a e_i | b e_i) of a code, ordered by qudit, then by
// (a, b) read as the base-q number a*q + b.
std::vector<Vec> weight_one_members(const CodeMatrix &code, std::size_t n) {
    const Field &f = code.field();
    MembershipTester t(code);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (int a = 0; a < f.q(); ++a) {
            for (int b = 0; b < f.q(); ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                Vec v(2 * n, 0);
                v[i] = static_cast<Elem>(a);
                v[n + i] = static_cast<Elem>(b);
                if (t.contains(v)) {
                    out.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

std::size_t support_qudit(const Vec &v) {
    const std::size_t n = v.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] != 0 || v[n + i] != 0) {
            return i;
        }
    }
    return n;
}

void for_each_vector(HyperbolicBasis &b, const std::function<void(Vec &)> &fn) {
    for (auto &v : b.isotropic) {
        fn(v);
    }
    for (auto &p : b.pairs) {
        fn(p.z);
        fn(p.x);
    }
}

void swap_qudits(Vec &v, std::size_t i, std::size_t j) {
    const std::size_t n = v.size() / 2;
    std::swap(v[i], v[j]);
    std::swap(v[n + i], v[n + j]);
}

// (a, b) -> (t00 a + t01 b, t10 a + t11 b) on one qudit. With det = 1 this
// preserves both the symplectic form and the symplectic weight.
void local_transform(const Field &f, Vec &v, std::size_t pos, const std::array<Elem, 4> &t) {
    const std::size_t n = v.size() / 2;
    Elem a = v[pos];
    Elem b = v[n + pos];
    v[pos] = f.add(f.mul(t[0], a), f.mul(t[1], b));
    v[n + pos] = f.add(f.mul(t[2], a), f.mul(t[3], b));
}

CodeMatrix span_of(const Field &f, std::size_t len, const HyperbolicBasis &b) {
    CodeMatrix m(f, len);
    for (auto &v : b.vectors()) {
        m.add_row(v);
    }
    return m;
}

// Deletes qudit 1 of every basis vector. Vectors that become zero must not be
// present any more.
HyperbolicBasis puncture_basis(const HyperbolicBasis &b) {
    HyperbolicBasis out;
    for (const auto &v : b.isotropic) {
        out.isotropic.push_back(rho(v));
    }
    for (const auto &p : b.pairs) {
        out.pairs.push_back(HyperbolicPair{rho(p.z), rho(p.x)});
    }
    return out;
}

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::PreconditionFailed, what);
    }
}

void require_analyzed(const SubsystemCodeRecord &rec) {
    require(rec.distance.has_value() && rec.purity.has_value(), "distance and purity of " + params(rec) + " are unknown");
}

// Case (a): `basis.isotropic[0]` has symplectic weight one.
// Normalises it to (1,0..|c,0..), clears qudit 1 of every other vector and
// deletes qudit 1. Returns the punctured basis (without the vanished z1).
HyperbolicBasis delete_weight_one_stabilizer(const Field &f, HyperbolicBasis basis, std::vector<TraceStep> &trace) {
    const auto before = gram_matrix(f, basis.vectors());
    const std::size_t n = basis.isotropic.front().size() / 2;
    const std::size_t j = support_qudit(basis.isotropic.front());
    if (j != 0) {
        for_each_vector(basis, [&](Vec &v) { swap_qudits(v, 0, j); });
        trace.push_back({"swap-qudits", "qudits 1 and " + std::to_string(j + 1)});
    }
    Vec &z1 = basis.isotropic.front();
    if (z1[0] == 0) {
        // (a, b) -> (b, -a): determinant 1.
        const std::array<Elem, 4> t = {0, 1, f.neg(1), 0};
        for_each_vector(basis, [&](Vec &v) { local_transform(f, v, 0, t); });
        trace.push_back({"local-transform", "qudit 1: (a,b) -> (b,-a)"});
    }
    scale(f, z1, f.inv(z1[0]));
    trace.push_back({"normalize-stabilizer", "z1 = " + show(z1)});

    const Vec pivot = z1;
    auto clear = [&](Vec &v) {
        axpy(f, v, f.neg(v[0]), pivot);
        expect(v[0] == 0 && v[n] == 0, "generator does not vanish on qudit 1 after clearing");
    };
    for (std::size_t i = 1; i < basis.isotropic.size(); ++i) {
        clear(basis.isotropic[i]);
    }
    for (auto &p : basis.pairs) {
        clear(p.z);
        clear(p.x);
    }
    trace.push_back({"clear-qudit", "all other generators vanish on qudit 1"});
    expect(gram_matrix(f, basis.vectors()) == before, "normalization changed the symplectic Gram matrix");
    trace.push_back({"gram-check", "symplectic Gram matrix preserved"});

    basis.isotropic.erase(basis.isotropic.begin());
    auto out = puncture_basis(basis);
    trace.push_back({"puncture", "delete qudit 1; z1 maps to 0"});
    return out;
}

SubsystemCodeRecord rebuild(const Field &f, const HyperbolicBasis &basis, std::size_t len) {
    return from_gauge_code(span_of(f, len, basis));
}

}  // namespace

PunctureResult puncture_pure1(const SubsystemCodeRecord &rec, const EnumOptions &options) {
    require_analyzed(rec);
    require(rec.r > 0, params(rec) + " has no gauge qudit");
    require(*rec.distance >= 2, params(rec) + " has distance below 2");
    require(*rec.purity == 1, params(rec) + " is not exactly pure to 1 (d' = " + std::to_string(*rec.purity) + ")");
    require(rec.n >= 2, "cannot puncture a single-qudit code");

    const Field &f = rec.field;
    const std::size_t n = rec.n;
    std::vector<TraceStep> trace;
    std::optional<SubsystemCodeRecord> intermediate;

    HyperbolicBasis basis;
    bool demoted = false;
    auto light_stabilizers = weight_one_members(rec.stabilizer, n);
    if (!light_stabilizers.empty()) {
        const Vec &w = light_stabilizers.front();
        trace.push_back({"case", "weight-one stabilizer " + show(w)});
        basis = hyperbolic_basis(rec.gauge);
        CodeMatrix line(f, 2 * n, {w});
        basis.isotropic = {w};
        for (auto &v : complement_basis(line, rec.stabilizer)) {
            basis.isotropic.push_back(std::move(v));
        }
    } else {
        auto light_gauge = weight_one_members(rec.gauge, n);
        expect(!light_gauge.empty(), "exactly pure to 1 but no weight-one gauge vector");
        const Vec &w = light_gauge.front();
        trace.push_back({"case", "weight-one gauge vector " + show(w) + " outside the stabilizer"});
        // Pair w with a partner and drop the partner: C' = C ∩ w^perp_s.
        auto seeded = hyperbolic_basis(rec.gauge, w);
        HyperbolicBasis demote;
        demote.isotropic = {w};
        for (auto &v : seeded.isotropic) {
            demote.isotropic.push_back(v);
        }
        for (std::size_t i = 1; i < seeded.pairs.size(); ++i) {
            demote.pairs.push_back(seeded.pairs[i]);
        }
        trace.push_back({"demote", "drop x partner of " + show(w) + "; w joins the stabilizer"});
        auto mid = rebuild(f, demote, 2 * n);
        expect(mid.k == rec.k && mid.r + 1 == rec.r, "demotion did not give [[n,k,r-1]]");
        analyze(mid, options);
        trace.push_back({"intermediate", params(mid)});
        intermediate = std::move(mid);
        basis = std::move(demote);
        demoted = true;
    }

    auto punctured = delete_weight_one_stabilizer(f, std::move(basis), trace);
    if (!demoted) {
        auto mid = rebuild(f, punctured, 2 * (n - 1));
        expect(mid.k == rec.k && mid.r == rec.r, "deleting qudit 1 did not give [[n-1,k,r]]");
        analyze(mid, options);
        trace.push_back({"intermediate", params(mid)});
        intermediate = std::move(mid);
        // Keep z'_{s+1} but drop x'_{s+1}: z'_{s+1} becomes a stabilizer.
        auto pair = punctured.pairs.front();
        punctured.pairs.erase(punctured.pairs.begin());
        punctured.isotropic.push_back(pair.z);
        trace.push_back({"drop-gauge", "remove x' = " + show(pair.x)});
    }

    PunctureResult out{.record = rebuild(f, punctured, 2 * (n - 1)), .basis = std::move(punctured)};
    auto &res = out.record;
    expect(res.n + 1 == rec.n && res.k == rec.k && res.r + 1 == rec.r, "output is not [[n-1,k,r-1]]");
    expect(verify_hyperbolic(f, out.basis), "punctured basis lost the hyperbolic relations");
    analyze(res, options);
    expect(*res.distance >= *rec.distance, "punctured distance dropped below d");
    trace.push_back({"result", params(res)});
    out.intermediate = std::move(intermediate);
    out.trace = std::move(trace);
    return out;
}

PunctureResult puncture_impure(const SubsystemCodeRecord &rec, const EnumOptions &options) {
    require_analyzed(rec);
    require(*rec.distance >= 3, params(rec) + " has distance below 3");
    require(*rec.purity >= 2, params(rec) + " is exactly pure to 1");
    require(rec.n >= 2, "cannot puncture a single-qudit code");

    const Field &f = rec.field;
    const std::size_t n = rec.n;
    std::vector<TraceStep> trace;
    HyperbolicBasis basis = hyperbolic_basis(rec.gauge);
    const auto before = gram_matrix(f, basis.vectors());
    auto &zs = basis.isotropic;

    // z1 = (1,..|b1,..): some stabilizer has a nonzero X-part on qudit 1, or
    // (0..|1,0..) would be a weight-one vector of D^perp_s.
    auto it = std::find_if(zs.begin(), zs.end(), [](const Vec &v) { return v[0] != 0; });
    expect(it != zs.end(), "no stabilizer with X-part on qudit 1 although swt(D^perp_s) >= 2");
    std::iter_swap(zs.begin(), it);
    scale(f, zs[0], f.inv(zs[0][0]));
    for (std::size_t i = 1; i < zs.size(); ++i) {
        axpy(f, zs[i], f.neg(zs[i][0]), zs[0]);
    }
    auto it2 = std::find_if(zs.begin() + 1, zs.end(), [n](const Vec &v) { return v[n] != 0; });
    expect(it2 != zs.end(), "no second stabilizer with Z-part on qudit 1 although swt(D^perp_s) >= 2");
    std::iter_swap(zs.begin() + 1, it2);
    scale(f, zs[1], f.inv(zs[1][n]));
    for (std::size_t i = 2; i < zs.size(); ++i) {
        axpy(f, zs[i], f.neg(zs[i][n]), zs[1]);
    }
    trace.push_back({"select", "z1 = " + show(zs[0]) + ", z2 = " + show(zs[1])});
    if (zs[0][n] != 0) {
        const Elem b1 = zs[0][n];
        axpy(f, zs[0], f.neg(b1), zs[1]);
        trace.push_back({"normalize-b1", "z1 <- z1 - " + std::to_string(b1) + " z2 = " + show(zs[0])});
    }
    const Vec z1 = zs[0];
    const Vec z2 = zs[1];
    auto clear = [&](Vec &v) {
        axpy(f, v, f.neg(v[0]), z1);
        axpy(f, v, f.neg(v[n]), z2);
    };
    for (auto &p : basis.pairs) {
        clear(p.z);
        clear(p.x);
    }
    trace.push_back({"clear-qudit", "all other generators vanish on qudit 1"});
    expect(gram_matrix(f, basis.vectors()) == before, "normalization changed the symplectic Gram matrix");
    trace.push_back({"gram-check", "symplectic Gram matrix preserved"});

    HyperbolicBasis punctured;
    for (std::size_t i = 2; i < zs.size(); ++i) {
        punctured.isotropic.push_back(rho(zs[i]));
    }
    for (const auto &p : basis.pairs) {
        punctured.pairs.push_back(HyperbolicPair{rho(p.z), rho(p.x)});
    }
    Vec z1p = rho(z1);
    Vec z2p = rho(z2);
    const Elem product = symp_product(f, z1p, z2p);
    expect(product != 0, "punctured z1', z2' are orthogonal");
    // Rescale so that <x|z>_s = 1 with z = z1', x = c z2'.
    scale(f, z2p, f.inv(symp_product(f, z2p, z1p)));
    trace.push_back({"puncture", "delete qudit 1; <z1'|z2'>_s = " + std::to_string(product) + ", rescaled to a pair"});
    punctured.pairs.push_back(HyperbolicPair{std::move(z1p), std::move(z2p)});

    PunctureResult out{.record = rebuild(f, punctured, 2 * (n - 1)), .basis = std::move(punctured)};
    auto &res = out.record;
    expect(res.n + 1 == rec.n && res.k == rec.k && res.r == rec.r + 1, "output is not [[n-1,k,r+1]]");
    expect(verify_hyperbolic(f, out.basis), "punctured basis lost the hyperbolic relations");
    analyze(res, options);
    expect(*res.distance + 1 >= *rec.distance, "punctured distance dropped below d-1");
    trace.push_back({"result", params(res)});
    out.trace = std::move(trace);
    return out;
}

SingletonChain singleton_chain(const SubsystemCodeRecord &rec, const EnumOptions &options) {
    require_analyzed(rec);
    SingletonChain chain;
    chain.links.push_back(ChainLink{.step = ChainStep::Start, .record = rec});
    while (true) {
        const ChainLink &last = chain.links.back();
        const auto &cur = last.record;
        if (*cur.pure) {
            chain.stop = ChainStop::Pure;
            break;
        }
        if (*cur.distance <= 2) {
            chain.stop = ChainStop::DistanceTwo;
            break;
        }
        ChainLink next{.record = cur, .pure_punctures = last.pure_punctures,
                       .impure_punctures = last.impure_punctures};
        if (*cur.purity == 1) {
            if (cur.r == 0) {
                chain.stop = ChainStop::Stabilizer;
                break;
            }
            auto res = puncture_pure1(cur, options);
            next.step = ChainStep::PurePuncture;
            next.record = std::move(res.record);
            next.trace = std::move(res.trace);
            ++next.pure_punctures;
        } else {
            auto res = puncture_impure(cur, options);
            next.step = ChainStep::ImpurePuncture;
            next.record = std::move(res.record);
            next.trace = std::move(res.trace);
            ++next.impure_punctures;
        }
        chain.links.push_back(std::move(next));
    }
    return chain;
}

std::string to_string(ChainStep step) {
    switch (step) {
        case ChainStep::Start: return "start";
        case ChainStep::PurePuncture: return "puncture-pure1";
        case ChainStep::ImpurePuncture: return "puncture-impure";
    }
    return "?";
}

std::string to_string(ChainStop stop) {
    switch (stop) {
        case ChainStop::Pure: return "pure";
        case ChainStop::DistanceTwo: return "distance-two";
        case ChainStop::Stabilizer: return "stabilizer";
    }
    return "?";
}

}  // namespace subsys
