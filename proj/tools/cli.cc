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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subsys/bounds.h"
#include "subsys/constructions.h"
#include "subsys/io.h"
#include "subsys/quditsim.h"
#include "subsys/transforms.h"

namespace subsys::cli {

namespace {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt &v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(v));
    }
    return Json(v.str());
}

Json report_json(const BoundReport &r) {
    return Json{{"bound", r.name},
                {"lhs", big_json(r.lhs)},
                {"rhs", big_json(r.rhs)},
                {"satisfied", r.satisfied},
                {"slack", big_json(r.slack)}};
}

Json record_json(const SubsystemCodeRecord &rec) {
    return Json::parse(record_to_json(rec));
}

Json trace_json(const std::vector<TraceStep> &trace) {
    Json out = Json::array();
    for (const auto &t : trace) {
        out.push_back(Json{{"action", t.action}, {"detail", t.detail}});
    }
    return out;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

void require_distance(SubsystemCodeRecord &rec, const EnumOptions &options) {
    if (!rec.distance || !rec.purity || !rec.pure) {
        analyze(rec, options);
    }
}

Json bounds_json(const SubsystemCodeRecord &rec) {
    const int d = *rec.distance;
    const int q = rec.field.q();
    Json j;
    j["label"] = rec.label();
    j["pure"] = *rec.pure;
    j["purity"] = *rec.purity;
    j["singleton"] = report_json(singleton_check(rec.n, rec.k, rec.r, d, q));
    j["mds_class"] = to_string(mds_classify(rec.n, rec.k, rec.r, d, q));
    j["hamming"] = report_json(hamming_check(rec.n, rec.K(), rec.R(), d, q));
    j["syndrome_count"] = syndrome_count(rec.n, rec.k, rec.r);
    j["syndrome_vs_mds"] = report_json(compare_with_mds(rec.n, rec.k, rec.r, d));
    return j;
}

std::string status(const BoundReport &r) {
    return r.satisfied ? "ok" : "VIOLATED";
}

std::string bounds_text(const SubsystemCodeRecord &rec) {
    const int d = *rec.distance;
    const int q = rec.field.q();
    const auto rows = {singleton_check(rec.n, rec.k, rec.r, d, q), hamming_check(rec.n, rec.K(), rec.R(), d, q),
                       compare_with_mds(rec.n, rec.k, rec.r, d)};
    std::ostringstream out;
    out << rec.label() << "  purity " << *rec.purity << (*rec.pure ? " (pure)" : " (impure)") << "  "
        << to_string(mds_classify(rec.n, rec.k, rec.r, d, q)) << "  syndromes "
        << syndrome_count(rec.n, rec.k, rec.r) << "\n";
    out << std::left << std::setw(18) << "bound" << std::right << std::setw(14) << "lhs" << std::setw(14) << "rhs"
        << std::setw(10) << "slack" << "  status\n";
    for (const auto &r : rows) {
        out << std::left << std::setw(18) << r.name << std::right << std::setw(14) << r.lhs.str() << std::setw(14)
            << r.rhs.str() << std::setw(10) << r.slack.str() << "  " << status(r) << "\n";
    }
    return out.str();
}

CodeMatrix classical_matrix(const std::string &path) {
    auto file = read_code_file(path);
    if (file.symplectic) {
        throw Error(ErrorCode::ParseError, path + ": expected a classical code, found symplectic=true");
    }
    return std::move(file.matrix);
}

struct PaperRow {
    std::string name;
    SubsystemCodeRecord record;
    /// What the reference numbers say about the Hamming bound.
    bool claimed_violation;
};

SubsystemCodeRecord lattice_record(std::size_t n1, std::size_t n2, const EnumOptions &options) {
    const Field f = Field::make(2);
    auto rec = lattice(repetition_code(f, n1), repetition_code(f, n2), options).record;
    analyze(rec, options);
    return rec;
}

}  // namespace

int exit_code_for(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Parse: return kExitParse;
        case ErrorCategory::Precondition: return kExitPrecondition;
        case ErrorCategory::Resource: return kExitResource;
        case ErrorCategory::Internal: return kExitInternal;
    }
    return kExitInternal;
}

std::string paper_table(unsigned jobs) {
    EnumOptions options;
    options.jobs = jobs;
    std::vector<PaperRow> rows;
    {
        auto rec = bacon_shor(3, 3, Field::make(2));
        analyze(rec, options);
        rows.push_back({"bacon-shor 3x3", std::move(rec), true});
    }
    rows.push_back({"lattice rep3 x rep4", lattice_record(3, 4, options), true});
    {
        auto rec = bacon_shor(4, 4, Field::make(2));
        analyze(rec, options);
        rows.push_back({"bacon-shor 4x4", std::move(rec), true});
    }
    {
        auto rec = from_gauge_code(five_qubit_stabilizer());
        analyze(rec, options);
        rows.push_back({"five-qubit", std::move(rec), false});
    }

    std::ostringstream out;
    out << std::left << std::setw(22) << "construction" << std::setw(16) << "code" << std::right << std::setw(4)
        << "n" << std::setw(4) << "k" << std::setw(4) << "r" << std::setw(4) << "d" << std::setw(4) << "d'"
        << "  " << std::left << std::setw(7) << "pure" << std::setw(11) << "singleton" << std::setw(17) << "mds"
        << std::setw(20) << "hamming" << std::setw(10) << "syndromes" << "flag\n";
    std::vector<std::string> notes;
    for (const auto &row : rows) {
        const auto &rec = row.record;
        const int d = *rec.distance;
        const auto s = singleton_check(rec.n, rec.k, rec.r, d, rec.field.q());
        const auto h = hamming_check(rec.n, rec.K(), rec.R(), d, rec.field.q());
        const bool discrepancy = row.claimed_violation == h.satisfied;
        out << std::left << std::setw(22) << row.name << std::setw(16) << rec.label() << std::right << std::setw(4)
            << rec.n << std::setw(4) << rec.k << std::setw(4) << rec.r << std::setw(4) << d << std::setw(4)
            << *rec.purity << "  " << std::left << std::setw(7) << (*rec.pure ? "yes" : "no") << std::setw(11)
            << (s.lhs.str() + "/" + s.rhs.str())
            << std::setw(17) << to_string(mds_classify(rec.n, rec.k, rec.r, d, rec.field.q()))
            << std::setw(20) << (h.lhs.str() + "/" + h.rhs.str() + (h.satisfied ? " ok" : " VIOLATED"))
            << std::setw(10) << syndrome_count(rec.n, rec.k, rec.r) << (discrepancy ? "DISCREPANCY" : "-") << "\n";
        if (discrepancy) {
            notes.push_back(rec.label() + ": claimed to violate the Hamming bound, but sum_{j<=" +
                            std::to_string((d - 1) / 2) + "} C(n,j)(q^2-1)^j = " + h.lhs.str() +
                            " <= q^n/(KR) = " + h.rhs.str());
        }
    }
    for (const auto &note : notes) {
        out << "DISCREPANCY " << note << "\n";
    }
    return out.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Subsystem code workbench: constructions, exact parameters, puncturing, bounds, simulation"};
    app.require_subcommand(1);
    unsigned jobs = 1;
    app.add_option("--jobs,-j", jobs, "Worker threads for exhaustive searches (0 = all cores)");

    bool no_distance = false;
    auto *construct = app.add_subcommand("construct", "Build a subsystem code and print its record");
    construct->require_subcommand(1);
    construct->add_flag("--no-distance", no_distance, "Skip distance and purity enumeration");

    std::string x1_path, x2_path;
    auto *euc = construct->add_subcommand("euclidean", "C = X1 x X2 from two classical codes");
    euc->add_option("--x1", x1_path, "Code file of X1")->required();
    euc->add_option("--x2", x2_path, "Code file of X2")->required();
    euc->add_flag("--no-distance", no_distance, "Skip distance and purity enumeration");

    std::string c1_path, c2_path;
    auto *lat = construct->add_subcommand("lattice", "Lattice code from two classical codes");
    lat->add_option("--c1", c1_path, "Code file of C1")->required();
    lat->add_option("--c2", c2_path, "Code file of C2")->required();
    lat->add_flag("--no-distance", no_distance, "Skip distance and purity enumeration");

    std::size_t n1 = 0, n2 = 0;
    int q = 2;
    std::vector<std::string> bs_positional;
    auto *bs = construct->add_subcommand("bacon-shor", "Rectangular Bacon-Shor code");
    bs->add_option("--n1", n1, "Rows");
    bs->add_option("--n2", n2, "Columns");
    bs->add_option("--q", q, "Field size");
    bs->add_option("args", bs_positional, "n1 n2 [q=Q]");
    bs->add_flag("--no-distance", no_distance, "Skip distance and purity enumeration");

    std::string gauge_path;
    auto *raw = construct->add_subcommand("raw", "Gauge code given by symplectic generators");
    raw->add_option("--gauge", gauge_path, "Code file with symplectic=true")->required();
    raw->add_flag("--no-distance", no_distance, "Skip distance and purity enumeration");

    std::string record_path;
    auto *an = app.add_subcommand("analyze", "Recompute distance and purity of a record");
    an->add_option("record", record_path, "Record JSON")->required();

    bool text = false;
    auto *bd = app.add_subcommand("bounds", "Singleton, Hamming and syndrome-count checks");
    bd->add_option("record", record_path, "Record JSON")->required();
    bd->add_flag("--text", text, "Aligned text table instead of JSON");

    std::string mode = "auto";
    auto *pu = app.add_subcommand("puncture", "Delete one qudit following the puncturing procedures");
    pu->add_option("record", record_path, "Record JSON")->required();
    pu->add_option("--mode", mode, "auto, pure1, impure or chain")
        ->check(CLI::IsMember({"auto", "pure1", "impure", "chain"}));

    std::string error_label = "I";
    std::uint64_t seed = 1;
    bool fused = false;
    auto *sim = app.add_subcommand("simulate", "Measure syndromes of an error on a simulated code state");
    sim->add_option("record", record_path, "Record JSON")->required();
    sim->add_option("--error", error_label, "Error such as X1*Z3 or X2:2");
    sim->add_option("--seed", seed, "Seed of the random code state");
    sim->add_flag("--fused", fused, "Apply each controlled Pauli directly instead of gate by gate");

    auto *pt = app.add_subcommand("paper-table", "Reproduce the reference table of Bacon-Shor and lattice codes");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("subsys");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitParse;
    }

    EnumOptions options;
    options.jobs = jobs;
    try {
        auto finish = [&](SubsystemCodeRecord &rec) {
            if (!no_distance) {
                analyze(rec, options);
            }
            out << record_to_json(rec);
        };
        if (euc->parsed()) {
            auto x1 = classical_matrix(x1_path);
            auto x2 = classical_matrix(x2_path);
            if (no_distance) {
                if (rank(x1) == 0 || rank(x2) == 0) {
                    throw Error(ErrorCode::ZeroCode, "both classical factors must be nonzero");
                }
                auto rec = from_gauge_code(symplectic_product_code(x1, x2));
                finish(rec);
            } else {
                out << record_to_json(euclidean(x1, x2, options).record);
            }
        } else if (lat->parsed()) {
            auto rec = lattice(classical_matrix(c1_path), classical_matrix(c2_path), options).record;
            finish(rec);
        } else if (bs->parsed()) {
            std::vector<std::size_t> sizes;
            for (const auto &tok : bs_positional) {
                if (tok.rfind("q=", 0) == 0) {
                    q = std::stoi(tok.substr(2));
                } else {
                    sizes.push_back(static_cast<std::size_t>(std::stoul(tok)));
                }
            }
            if (sizes.size() == 2) {
                n1 = sizes[0];
                n2 = sizes[1];
            } else if (!sizes.empty()) {
                throw Error(ErrorCode::ParseError, "bacon-shor takes exactly two sizes");
            }
            if (n1 == 0 || n2 == 0) {
                throw Error(ErrorCode::ParseError, "bacon-shor needs n1 and n2");
            }
            auto rec = bacon_shor(n1, n2, Field::of_order(q));
            finish(rec);
        } else if (raw->parsed()) {
            auto file = read_code_file(gauge_path);
            if (!file.symplectic) {
                throw Error(ErrorCode::ParseError, gauge_path + ": gauge generators need symplectic=true");
            }
            auto rec = from_gauge_code(file.matrix);
            finish(rec);
        } else if (an->parsed()) {
            auto rec = read_record(record_path);
            analyze(rec, options);
            out << record_to_json(rec);
        } else if (bd->parsed()) {
            auto rec = read_record(record_path);
            require_distance(rec, options);
            out << (text ? bounds_text(rec) : dump(bounds_json(rec)));
        } else if (pu->parsed()) {
            auto rec = read_record(record_path);
            require_distance(rec, options);
            Json j;
            j["mode"] = mode;
            if (mode == "chain") {
                auto chain = singleton_chain(rec, options);
                j["stop"] = to_string(chain.stop);
                Json links = Json::array();
                for (const auto &link : chain.links) {
                    const auto &r = link.record;
                    links.push_back(Json{{"step", to_string(link.step)},
                                         {"pure_punctures", link.pure_punctures},
                                         {"impure_punctures", link.impure_punctures},
                                         {"singleton", report_json(singleton_check(r.n, r.k, r.r, *r.distance,
                                                                                   r.field.q()))},
                                         {"trace", trace_json(link.trace)},
                                         {"record", record_json(r)}});
                }
                j["links"] = std::move(links);
            } else {
                if (mode == "auto") {
                    if (*rec.pure) {
                        throw Error(ErrorCode::PreconditionFailed, rec.label() + " is pure; nothing to puncture");
                    }
                    mode = *rec.purity == 1 ? "pure1" : "impure";
                    j["mode"] = mode;
                }
                auto res = mode == "pure1" ? puncture_pure1(rec, options) : puncture_impure(rec, options);
                j["before"] = record_json(rec);
                j["intermediate"] = res.intermediate ? record_json(*res.intermediate) : Json(nullptr);
                j["after"] = record_json(res.record);
                j["trace"] = trace_json(res.trace);
            }
            out << dump(j);
        } else if (sim->parsed()) {
            auto rec = read_record(record_path);
            const Vec e = parse_pauli(error_label, rec.field, rec.n);
            const auto gens = syndrome_generators(rec);
            const auto psi = prepare_codestate(rec, seed);
            QuditState corrupted = psi;
            apply_pauli(corrupted, PauliLabel{e, 0});
            Json syndrome = Json::array();
            Json predicted = Json::array();
            Json generators = Json::array();
            double min_fid = 1.0;
            bool agree = true;
            for (const auto &g : gens) {
                auto res = syndrome_measure(with_ancilla(corrupted), g, SyndromeOptions{.fused = fused});
                const Elem t = commutation_phase(rec.field, g, e);
                syndrome.push_back(static_cast<int>(res.t));
                predicted.push_back(static_cast<int>(t));
                generators.push_back(format_pauli(g));
                agree = agree && res.t == t;
                min_fid = std::min(min_fid, fidelity(res.post, corrupted));
            }
            Json j;
            j["label"] = rec.label();
            j["error"] = format_pauli(e);
            j["seed"] = seed;
            j["circuit"] = fused ? "fused" : "gates";
            j["generators"] = std::move(generators);
            j["syndrome"] = std::move(syndrome);
            j["predicted"] = std::move(predicted);
            j["agrees"] = agree;
            std::ostringstream fid;
            fid << std::fixed << std::setprecision(12) << min_fid;
            j["min_fidelity"] = fid.str();
            out << dump(j);
        } else if (pt->parsed()) {
            out << paper_table(jobs);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace subsys::cli
