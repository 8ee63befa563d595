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

#include <doctest.h>

#include <stdexcept>

#include "coadinv/invariants.hpp"
#include "coadinv/verify.hpp"

using namespace coadinv;
using namespace coadinv::verify;

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 16);
    for (const auto& s : suite_names()) {
        CHECK_FALSE(suite_anchor(s).empty());
        CHECK_FALSE(suite_default_families(s).empty());
        for (const Family f : suite_default_families(s)) CHECK(suite_supports(s, f));
    }
    CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), std::invalid_argument);
    SuiteConfig cfg;
    cfg.algebra = Family::Aff;
    CHECK_THROWS_AS(run_suite("invariance-F", cfg), std::invalid_argument);
    cfg.algebra = Family::Glvv;
    cfg.samples = 0;
    CHECK_THROWS_AS(run_suite("invariance-F", cfg), std::invalid_argument);
    cfg.samples = 1;
    cfg.n_max = 9;
    CHECK_THROWS_AS(run_suite("invariance-F", cfg), std::invalid_argument);
}

TEST_CASE("every suite passes on its default families") {
    for (const auto& s : suite_names()) {
        for (const Family f : suite_default_families(s)) {
            SuiteConfig cfg;
            cfg.algebra = f;
            cfg.n_min = 1;
            cfg.n_max = 3;
            cfg.samples = 4;
            cfg.seed = 99;
            const VerifyReport r = run_suite(s, cfg);
            INFO(s << " " << family_name(f) << " " << r.to_json(false).dump());
            CHECK(r.pass());
            CHECK(r.checks_run > 0);
            CHECK(r.failures.empty());
        }
    }
}

TEST_CASE("determinism: identical configs give identical reports") {
    SuiteConfig cfg;
    cfg.algebra = Family::Glvv;
    cfg.n_max = 3;
    cfg.samples = 10;
    cfg.seed = 7;
    const json a = run_suite("invariance-F", cfg).to_json(false);
    const json b = run_suite("invariance-F", cfg).to_json(false);
    CHECK(a.dump() == b.dump());
    CHECK(a["anchor"] == std::string(suite_anchor("invariance-F")));
}

TEST_CASE("index suite reports the index") {
    SuiteConfig cfg;
    cfg.algebra = Family::Glvv;
    cfg.n_min = cfg.n_max = 3;
    cfg.samples = 5;
    const VerifyReport r = run_suite("index", cfg);
    CHECK(r.pass());
    CHECK(r.details["index"]["3"] == 3);
}

TEST_CASE("exotic-sign observes the reflection flip") {
    SuiteConfig cfg;
    cfg.algebra = Family::Iso;
    cfg.n_min = cfg.n_max = 3;
    cfg.samples = 20;
    const VerifyReport r = run_suite("exotic-sign", cfg);
    CHECK(r.pass());
    CHECK(r.details["sign_flips_observed"]["3"].get<int>() > 0);
    cfg.n_min = cfg.n_max = 4;
    CHECK_THROWS_AS(run_suite("exotic-sign", cfg), std::invalid_argument);
}

TEST_CASE("independence on io(4)") {
    SuiteConfig cfg;
    cfg.algebra = Family::Io;
    cfg.n_min = cfg.n_max = 4;
    cfg.samples = 3;
    const VerifyReport r = run_suite("independence", cfg);
    CHECK(r.pass());
    CHECK(r.details["jacobian_rank"]["4"] == 2);
}

TEST_CASE("resolve_sign matches the frozen constants") {
    CHECK(resolve_sign(SignPair::PsiVsPhi, AlgebraKind(Family::Io, 3), 0) == -1);
    CHECK(resolve_sign(SignPair::FVsT, AlgebraKind(Family::Isl, 2)) == kSignFVsT);
    for (std::size_t n = 2; n <= 6; ++n) {
        const AlgebraKind kind(Family::Io, n);
        for (std::size_t k = 0; k <= kind.ell(); ++k) CHECK(resolve_sign(SignPair::PsiVsPhi, kind, k) == kSignPsiVsPhi);
        if (kind.odd()) CHECK(resolve_sign(SignPair::ExoticVsSlice, kind) == kSignExoticVsSlice);
    }
    CHECK_THROWS_AS(resolve_sign(SignPair::ExoticVsSlice, AlgebraKind(Family::Io, 4)), std::invalid_argument);
    CHECK_THROWS_AS(resolve_sign(SignPair::FVsT, AlgebraKind(Family::Io, 3)), std::invalid_argument);
}

TEST_CASE("failures carry replayable witnesses") {
    // A deliberately wrong expectation routed through the report format.
    VerifyReport r;
    r.suite = "x";
    r.failures_total = 1;
    r.failures.push_back({"check", json{{"n", 1}}, "1", "2"});
    const json j = r.to_json(false);
    CHECK_FALSE(j["pass"].get<bool>());
    CHECK(j["failures"][0]["input"]["n"] == 1);
    CHECK_FALSE(j.contains("elapsed_ms"));
}
