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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coadinv/json_io.hpp"
#include "coadinv/liealg.hpp"

namespace coadinv::verify {

struct SuiteConfig {
    Family algebra = Family::Glvv;
    std::size_t n_min = 1;
    std::size_t n_max = 5;
    std::size_t samples = 100;
    std::int64_t bound = kDefaultBound;
    std::uint64_t seed = 0;
};

/// One failed check. `input` holds everything needed to replay it.
struct Failure {
    std::string check;
    json input;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string suite;
    std::string anchor;
    std::string algebra;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t checks_run = 0;
    std::size_t failures_total = 0;
    std::vector<Failure> failures;  // first kMaxStoredFailures
    json details = json::object();  // per-suite observations (indices, signs, ranks)
    double elapsed_ms = 0;

    [[nodiscard]] bool pass() const { return failures_total == 0; }
    /// Everything but elapsed_ms is a function of the SuiteConfig.
    [[nodiscard]] json to_json(bool with_elapsed = true) const;
};

inline constexpr std::size_t kMaxStoredFailures = 16;

/// Suite identifiers in canonical order.
const std::vector<std::string>& suite_names();
/// The identity a suite checks, as emitted in report headers. Throws
/// std::invalid_argument for an unknown suite.
std::string_view suite_anchor(std::string_view suite);
bool suite_supports(std::string_view suite, Family family);
/// Families exercised by `verify --all`.
std::vector<Family> suite_default_families(std::string_view suite);
/// Default inclusive n-range: 1..5 for degree-heavy suites, 1..6 elsewhere.
std::pair<std::size_t, std::size_t> suite_default_range(std::string_view suite);

/// Runs a suite. Exact comparisons only. Throws std::invalid_argument for an
/// unknown suite, an unsupported (suite, algebra) pair or a bad config.
VerifyReport run_suite(std::string_view suite, const SuiteConfig& cfg);

enum class SignPair {
    FVsT,          // f on the ISL slice vs t
    PsiVsPhi,      // psi_k on the SO slice vs phi_k (phi_ell^2 for the odd top k)
    ExoticVsSlice  // Pf(Y) on the SO slice vs phi_ell, odd n
};

/// Evaluates both sides of `pair` over every integer slice parameter in
/// [-radius, radius] and returns the unique eps in {+1, -1} with
/// lhs = eps * rhs everywhere. Throws std::runtime_error("not proportional -
/// investigate") otherwise.
int resolve_sign(SignPair pair, const AlgebraKind& kind, std::size_t k = 0, int radius = 2);

}  // namespace coadinv::verify
