/*
 * Copyright 2026 The coadinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// coadinv: evaluate, verify and normalize coadjoint invariants exactly.
//
//   coadinv eval   --input point.json [--which all|f|F|psi|Phi] [--k K]
//   coadinv verify (--suite NAME | --all) [--algebra A] [--n N | --n-min A --n-max B]
//   coadinv orbit  --input point.json
//   coadinv index  --algebra A --n N
//   coadinv slice  --algebra isl|io|iso --n N --input params.json
//
// JSON goes to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 pass, 1 mathematical failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "coadinv/invariants.hpp"
#include "coadinv/json_io.hpp"
#include "coadinv/verify.hpp"

namespace {

using namespace coadinv;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Usage problems: bad flags, malformed or mismatched input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematical failures, such as a point outside the open orbit.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string algebra;
    std::size_t n = 0;
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    std::int64_t bound = kDefaultBound;
    std::string input;
    std::string output;
    std::string suite;
    bool all = false;
    std::string which = "all";
    std::optional<std::size_t> k;
};

json read_input(const std::string& path) {
    if (path.empty()) throw UsageError("--input is required");
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const CliConfig& cfg, const json& j) {
    if (cfg.output.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw UsageError("cannot write output file '" + cfg.output + "'");
    out << j.dump(2) << '\n';
}

AlgebraKind require_kind(const CliConfig& cfg) {
    if (cfg.algebra.empty()) throw UsageError("--algebra is required");
    if (cfg.n == 0) throw UsageError("--n is required");
    return {parse_family(cfg.algebra), cfg.n};
}

/// Reads the input point and checks it against --algebra and --n if given.
AlgebraKind input_kind(const CliConfig& cfg, const json& j) {
    const AlgebraKind kind = kind_from_json(j);
    if (!cfg.algebra.empty() && parse_family(cfg.algebra) != kind.family) {
        throw UsageError("--algebra " + cfg.algebra + " does not match input algebra '" +
                         std::string(family_name(kind.family)) + "'");
    }
    if (cfg.n != 0 && cfg.n != kind.n) throw UsageError("--n does not match input 'n'");
    return kind;
}

json value_entry(const char* name, std::optional<std::size_t> k, const Rat& v) {
    json e = {{"invariant", name}};
    if (k) e["k"] = *k;
    e["value"] = v.str();
    return e;
}

bool wants(const CliConfig& cfg, const char* name) { return cfg.which == "all" || cfg.which == name; }

bool wants_k(const CliConfig& cfg, std::size_t k) { return !cfg.k || *cfg.k == k; }

int cmd_eval(const CliConfig& cfg) {
    static const std::vector<std::string> known = {"all", "f", "F", "psi", "Phi"};
    if (std::find(known.begin(), known.end(), cfg.which) == known.end()) {
        throw UsageError("unknown invariant '" + cfg.which + "'");
    }
    const json in = read_input(cfg.input);
    const AlgebraKind kind = input_kind(cfg, in);
    json values = json::array();
    switch (kind.family) {
        case Family::Aff:
        case Family::Isl: {
            if (!wants(cfg, "f")) throw UsageError("algebra " + kind.name() + " has only the invariant f");
            const DualPointA l = dual_a_from_json(in);
            values.push_back(value_entry("f", std::nullopt, kind.family == Family::Isl ? f_bar(l) : f_invariant(l)));
            break;
        }
        case Family::Glvv: {
            if (!wants(cfg, "F")) throw UsageError("algebra " + kind.name() + " has only the invariants F_k");
            const DualPointB l = dual_b_from_json(in);
            if (cfg.k && *cfg.k >= kind.n) throw UsageError("--k must be below n");
            for (std::size_t k = 0; k < kind.n; ++k) {
                if (wants_k(cfg, k)) values.push_back(value_entry("F", k, F_invariant(k, l)));
            }
            break;
        }
        case Family::Io:
        case Family::Iso: {
            const DualPointC l = dual_c_from_json(in);
            const std::size_t count = psi_count(kind.n);
            // Iso with odd n trades the top psi for Phi; "all" follows the generators.
            const bool exotic_top = kind.family == Family::Iso && kind.odd();
            if (cfg.which == "Phi" && !kind.odd()) throw UsageError("exotic invariant only for odd n");
            if (cfg.which == "f" || cfg.which == "F") throw UsageError("algebra " + kind.name() + " has psi_k and Phi");
            if (cfg.k && *cfg.k >= count) throw UsageError("--k out of range for psi");
            if (cfg.which == "psi" || cfg.which == "all") {
                const std::size_t top = cfg.which == "all" && exotic_top ? count - 1 : count;
                for (std::size_t k = 0; k < top; ++k) {
                    if (wants_k(cfg, k)) values.push_back(value_entry("psi", k, psi_invariant(k, l)));
                }
            }
            if ((cfg.which == "Phi" || (cfg.which == "all" && exotic_top)) && !cfg.k) {
                values.push_back(value_entry("Phi", std::nullopt, exotic_phi(l)));
            }
            break;
        }
    }
    emit(cfg, {{"algebra", family_name(kind.family)}, {"n", kind.n}, {"values", std::move(values)}});
    return kExitPass;
}

int cmd_verify(const CliConfig& cfg) {
    std::vector<std::string> suites;
    if (cfg.all) {
        if (!cfg.suite.empty()) throw UsageError("--suite and --all are exclusive");
        suites = verify::suite_names();
    } else {
        if (cfg.suite.empty()) throw UsageError("--suite or --all is required");
        suites.push_back(cfg.suite);
    }
    json reports = json::array();
    bool pass = true;
    for (const auto& suite : suites) {
        std::vector<Family> families;
        try {
            families = cfg.algebra.empty() ? verify::suite_default_families(suite)
                                           : std::vector<Family>{parse_family(cfg.algebra)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        for (const Family fam : families) {
            // --all skips pairs the suite does not cover; a single suite reports them.
            if (cfg.all && !verify::suite_supports(suite, fam)) continue;
            verify::SuiteConfig sc;
            sc.algebra = fam;
            auto [lo, hi] = verify::suite_default_range(suite);
            if (cfg.n != 0) lo = hi = cfg.n;
            if (cfg.n_min) lo = *cfg.n_min;
            if (cfg.n_max) hi = *cfg.n_max;
            // exotic-sign needs an odd n; widen a lone even n downwards for --all.
            if (cfg.all && suite == "exotic-sign" && lo == hi && lo % 2 == 0) lo = 1;
            sc.n_min = lo;
            sc.n_max = hi;
            sc.samples = cfg.samples;
            sc.bound = cfg.bound;
            sc.seed = cfg.seed;
            verify::VerifyReport report;
            try {
                report = verify::run_suite(suite, sc);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (!report.pass()) {
                pass = false;
                std::cerr << "FAIL " << suite << " " << report.algebra << ": " << report.failures_total
                          << " failing check(s)\n";
            }
            reports.push_back(report.to_json());
        }
    }
    emit(cfg, {{"pass", pass}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"reports", std::move(reports)}});
    return pass ? kExitPass : kExitFail;
}

int cmd_orbit(const CliConfig& cfg) {
    const json in = read_input(cfg.input);
    const AlgebraKind kind = input_kind(cfg, in);
    if (kind.family != Family::Glvv) throw UsageError("orbit needs a glvv point");
    const DualPointB l = dual_b_from_json(in);
    OrbitNormalForm nf;
    try {
        nf = orbit_normalize(l);
    } catch (const std::domain_error& e) {
        throw MathError(e.what());
    }
    emit(cfg, {{"algebra", "glvv"},
               {"n", kind.n},
               {"g", to_json(nf.a.g)},
               {"u", to_json(nf.a.u)},
               {"normal_form", to_json(kind, nf.normal)}});
    return kExitPass;
}

int cmd_index(const CliConfig& cfg) {
    const AlgebraKind kind = require_kind(cfg);
    Rng rng(cfg.seed);
    const std::size_t idx = index_of(kind, cfg.samples, rng, cfg.bound);
    emit(cfg, {{"algebra", family_name(kind.family)}, {"n", kind.n}, {"dim", kind.dim()}, {"index", idx}});
    return kExitPass;
}

std::vector<Rat> rat_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw UsageError(std::string("slice input needs an array '") + key + "'");
    }
    std::vector<Rat> out;
    for (const auto& e : j.at(key)) out.push_back(rat_from_json(e));
    return out;
}

// Slice parameters: isl {"a": [a_1..a_{n-1}], "b": b}; io/iso {"a": [a_1..a_ell], "a0": a0}.
int cmd_slice(const CliConfig& cfg) {
    const AlgebraKind kind = require_kind(cfg);
    const json in = read_input(cfg.input);
    json values = json::array();
    json point;
    if (kind.family == Family::Isl) {
        SlicePointISL s;
        s.a = rat_list(in, "a");
        if (!in.contains("b")) throw UsageError("slice input needs 'b'");
        s.b = rat_from_json(in.at("b"));
        if (s.n() != kind.n) throw UsageError("isl slice needs n-1 parameters 'a'");
        const DualPointA l = slice_isl(s);
        point = to_json(kind, l);
        values.push_back(value_entry("f", std::nullopt, f_bar(l)));
        values.push_back(value_entry("t", std::nullopt, t_slice(s)));
    } else if (kind.family == Family::Io || kind.family == Family::Iso) {
        SlicePointSO s;
        s.a = rat_list(in, "a");
        if (!in.contains("a0")) throw UsageError("slice input needs 'a0'");
        s.a0 = rat_from_json(in.at("a0"));
        if (s.a.size() != kind.ell()) throw UsageError("so slice needs ell = (n-1)/2 parameters 'a'");
        const DualPointC l = slice_so(s, kind);
        point = to_json(kind, l);
        for (std::size_t k = 0; k < psi_count(kind.n); ++k) {
            values.push_back(value_entry("psi", k, psi_invariant(k, l)));
            values.push_back(value_entry("phi", k, phi_slice(k, s, kind)));
        }
        if (kind.odd()) values.push_back(value_entry("Phi", std::nullopt, exotic_phi(l)));
    } else {
        throw UsageError("slices exist for isl, io and iso");
    }
    emit(cfg, {{"algebra", family_name(kind.family)}, {"n", kind.n}, {"point", point}, {"values", values}});
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coadjoint invariants of inhomogeneous linear groups"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra, "aff, isl, glvv, io or iso");
        sub->add_option("--n", cfg.n, "matrix size");
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "samples per n")->capture_default_str();
        sub->add_option("--bound", cfg.bound, "entries drawn from [-bound, bound]")->capture_default_str();
        sub->add_option("--input", cfg.input, "input JSON file, '-' for stdin");
        sub->add_option("--output", cfg.output, "write JSON here instead of stdout");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate invariants at a point");
    add_common(eval);
    eval->add_option("--which", cfg.which, "all, f, F, psi or Phi")->capture_default_str();
    eval->add_option("--k", cfg.k, "single generator index");

    CLI::App* ver = app.add_subcommand("verify", "run property suites");
    add_common(ver);
    ver->add_option("--suite", cfg.suite, "suite name");
    ver->add_flag("--all", cfg.all, "run every suite");
    ver->add_option("--n-min", cfg.n_min, "smallest n");
    ver->add_option("--n-max", cfg.n_max, "largest n");

    CLI::App* orbit = app.add_subcommand("orbit", "normalize a glvv point to (J, e_n*, pi)");
    add_common(orbit);
    CLI::App* index = app.add_subcommand("index", "index of the algebra by the rank oracle");
    add_common(index);
    CLI::App* slice = app.add_subcommand("slice", "invariants on the slice");
    add_common(slice);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*orbit) return cmd_orbit(cfg);
        if (*index) return cmd_index(cfg);
        if (*slice) return cmd_slice(cfg);
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
