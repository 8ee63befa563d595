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

#include "coadinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "coadinv/charpoly.hpp"
#include "coadinv/invariants.hpp"

namespace coadinv::verify {

namespace {

struct SuiteInfo {
    const char* name;
    const char* anchor;
    std::vector<Family> supported;
    std::vector<Family> defaults;
    std::size_t n_max;
};

const std::vector<SuiteInfo>& suite_table() {
    using F = Family;
    static const std::vector<SuiteInfo> table = {
        {"semi-invariance-f", "f(Ad*(g,u) l) = det(g)^-1 f(l); f_bar is ISL-invariant",
         {F::Aff, F::Isl}, {F::Aff, F::Isl}, 5},
        {"covariance-phi", "Phi_k(Ad*(g,u) l) = Phi_k(l) g^-1, Phi_k(y,v*) = v* B_k(y)",
         {F::Aff}, {F::Aff}, 5},
        {"invariance-F", "F_k(Ad*_B(b) l) = F_k(l), F_k = w* B_k(y) xi; v* B_k(y + u v*) = v* B_k(y)",
         {F::Glvv}, {F::Glvv}, 5},
        {"invariance-psi", "psi_k(Ad*(C) l) = psi_k(l), psi_k = -w* B_2k(y) w*^T",
         {F::Io, F::Iso}, {F::Io, F::Iso}, 6},
        {"exotic-sign", "Pf(Y)(Ad*(g,u) l) = det(g) Pf(Y)(l); Pf(Y)^2 = det Y; pf(g y g^-1) = det(g) g pf(y)",
         {F::Io, F::Iso}, {F::Io, F::Iso}, 5},
        {"dual-path", "f via B-rows = f via Krylov rows; F_k = p_{k+2}([[y,xi],[w*,0]]) - p_{k+2}(y); "
                      "psi_k = p_{2k+2}(Y) - p_{2k+2}(y)",
         {F::Aff, F::Isl, F::Glvv, F::Io, F::Iso}, {F::Aff, F::Glvv, F::Io}, 5},
        {"independence", "Jacobian of the generators has full rank at a generic point",
         {F::Glvv, F::Io, F::Iso}, {F::Glvv, F::Io, F::Iso}, 5},
        {"index", "index(aff) = 0, index(glvv(n)) = n, index(so(n) x| V) = ell + 1; "
                  "rank on Omega~ = dim b - n",
         {F::Aff, F::Isl, F::Glvv, F::Io, F::Iso}, {F::Aff, F::Isl, F::Glvv, F::Io}, 5},
        {"slices", "f|h = eps t; psi_k|h = eps_k phi_k; Pf(Y)|h = eps phi_ell",
         {F::Isl, F::Io, F::Iso}, {F::Isl, F::Io}, 6},
        {"orbit-fibration", "g rows = w* B_{n-k}(y); Ad*(g,u) l = (J, e_n*, pi(l)); "
                            "pi(l1) = pi(l2) iff A-conjugate",
         {F::Glvv}, {F::Glvv}, 5},
        {"theta", "theta(x,u,v*) = -(x^T, v*^T, u^T) is an order-2 automorphism fixing gamma(c)",
         {F::Glvv}, {F::Glvv}, 6},
        {"embed-M", "M[X,Y]_b = [MX,MY]_k, image an ideal of codimension 1; Jacobi for [.,.]_b",
         {F::Glvv}, {F::Glvv}, 6},
        {"cayley-hamilton", "x B_{n-1}(x) = p_n(x) I; B_k = x^k - p_1 x^{k-1} - ... - p_k I",
         {F::Aff, F::Isl, F::Glvv, F::Io, F::Iso}, {F::Glvv}, 6},
        {"gradient-Bk", "tr(B_k(x) y) = (d/dt)_0 p_{k+1}(x + t y)",
         {F::Aff, F::Isl, F::Glvv, F::Io, F::Iso}, {F::Glvv}, 5},
        {"skew-parity", "y skew: p_k(y) = 0 and B_k(y) skew for odd k; F_k(y, w*, -w*^T) = 0 for odd k",
         {F::Io, F::Iso}, {F::Io}, 6},
        {"sbg-generators", "p_i(y) and w* y^j xi are GL(n)-invariant; F_k = w* y^k xi - sum p_i w* y^{k-i} xi",
         {F::Glvv}, {F::Glvv}, 6},
    };
    return table;
}

const SuiteInfo& info(std::string_view suite) {
    for (const auto& s : suite_table())
        if (suite == s.name) return s;
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

// ---------------------------------------------------------------------------

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : report_(r) {}

    template <class L, class R>
    bool eq(const std::string& check, const L& lhs, const R& rhs, const std::function<json()>& input) {
        ++report_.checks_run;
        if (lhs == rhs) return true;
        record(check, input(), str(lhs), str(rhs));
        return false;
    }

    bool truth(const std::string& check, bool ok, const std::function<json()>& input) {
        ++report_.checks_run;
        if (ok) return true;
        record(check, input(), "false", "true");
        return false;
    }

private:
    static std::string str(const Rat& r) { return r.str(); }
    static std::string str(const Mat& m) { return to_json(m).dump(); }
    static std::string str(std::size_t v) { return std::to_string(v); }
    static std::string str(int v) { return std::to_string(v); }
    static std::string str(bool v) { return v ? "true" : "false"; }
    static std::string str(const DualPointB& l) {
        return json{{"y", to_json(l.y)}, {"wstar", to_json(l.wstar)}, {"xi", to_json(l.xi)}}.dump();
    }

    void record(const std::string& check, json input, std::string lhs, std::string rhs) {
        ++report_.failures_total;
        if (report_.failures.size() < kMaxStoredFailures) {
            report_.failures.push_back({check, std::move(input), std::move(lhs), std::move(rhs)});
        }
    }

    VerifyReport& report_;
};

struct Ctx {
    const SuiteConfig& cfg;
    Recorder& rec;
    VerifyReport& report;
    Rng rng;
    AlgebraKind kind;
};

std::string kth(const char* what, std::size_t k) { return std::string(what) + "[" + std::to_string(k) + "]"; }

// Random dual point of b* with f(y, w*) != 0.
DualPointB sample_open_orbit(std::size_t n, Rng& rng, std::int64_t bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        DualPointB l = sample_dual_b(n, rng, bound);
        if (!f_invariant(DualPointA(l.y, l.wstar)).is_zero()) return l;
    }
    throw std::runtime_error("degenerate rng");
}

// ---------------------------------------------------------------------------
// Coordinates of b* and c*, as 1 x N rows, for Jacobians.

Mat pack_b(const DualPointB& l) {
    const std::size_t n = l.n();
    Mat c(1, n * n + 2 * n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(0, p++) = l.y(i, j);
    for (std::size_t j = 0; j < n; ++j) c(0, p++) = l.wstar(0, j);
    for (std::size_t i = 0; i < n; ++i) c(0, p++) = l.xi(i, 0);
    return c;
}

DualPointB unpack_b(const Mat& c, std::size_t n) {
    Mat y(n, n), w(1, n), xi(n, 1);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = c(0, p++);
    for (std::size_t j = 0; j < n; ++j) w(0, j) = c(0, p++);
    for (std::size_t i = 0; i < n; ++i) xi(i, 0) = c(0, p++);
    return {std::move(y), std::move(w), std::move(xi)};
}

Mat pack_c(const DualPointC& l) {
    const std::size_t n = l.n();
    Mat c(1, n * (n - 1) / 2 + n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c(0, p++) = l.y(i, j);
    for (std::size_t j = 0; j < n; ++j) c(0, p++) = l.wstar(0, j);
    return c;
}

DualPointC unpack_c(const Mat& c, std::size_t n) {
    Mat y(n, n), w(1, n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            y(i, j) = c(0, p);
            y(j, i) = -c(0, p);
            ++p;
        }
    }
    for (std::size_t j = 0; j < n; ++j) w(0, j) = c(0, p++);
    return {std::move(y), std::move(w)};
}

// Rows: generators; columns: coordinate directions.
Mat jacobian(const std::vector<std::pair<PolyMap, std::size_t>>& gens, const Mat& base) {
    const std::size_t N = base.cols();
    Mat jac(gens.size(), N);
    for (std::size_t j = 0; j < N; ++j) {
        const Mat dir = Mat::unit_row(N, j);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            jac(i, j) = directional_coeff(gens[i].first, base, dir, 1, gens[i].second);
        }
    }
    return jac;
}

// ---------------------------------------------------------------------------
// Suites. Each runs for a single n held in ctx.kind.

void semi_invariance_f(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        if (c.kind.family == Family::Aff) {
            const DualPointA l = sample_dual_a(n, c.rng, c.cfg.bound);
            const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
            c.rec.eq("f(Ad* l) det g = f(l)", f_invariant(coad_A(a, l)) * det(a.g), f_invariant(l),
                     [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}}; });
        } else {
            const DualPointA l = sample_dual_isl(n, c.rng, c.cfg.bound);
            const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
            c.rec.eq("f_bar(Ad* l) = f_bar(l)", f_bar(coad_isl(a, l)), f_bar(l),
                     [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}}; });
        }
    }
}

void covariance_phi(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointA l = sample_dual_a(n, c.rng, c.cfg.bound);
        const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
        const DualPointA moved = coad_A(a, l);
        const Mat gi = inverse(a.g);
        for (std::size_t k = 0; k < n; ++k) {
            c.rec.eq(kth("Phi_k(Ad* l) = Phi_k(l) g^-1", k), phi_covariant(k, moved), phi_covariant(k, l) * gi,
                     [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}, {"k", k}}; });
        }
    }
}

void invariance_F(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointB l = sample_dual_b(n, c.rng, c.cfg.bound);
        const GroupElemB b = sample_group_b(n, c.rng, c.cfg.bound);
        const auto before = F_all(l);
        const auto after = F_all(coad_B(b, l));
        const GroupElemB vpart(Mat::identity(n), Mat(n, 1), b.vstar);
        const auto after_v = F_all(coad_B(vpart, l));
        auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(b)}}; };
        for (std::size_t k = 0; k < n; ++k) {
            c.rec.eq(kth("F_k(Ad*_B(b) l) = F_k(l)", k), after[k], before[k], input);
            c.rec.eq(kth("F_k(y - xi v*, w*, xi) = F_k(l)", k), after_v[k], before[k], input);
        }
        // v* B_k(y + u v*) = v* B_k(y).
        const CharData shifted = char_data(l.y + b.u * b.vstar);
        const CharData plain = char_data(l.y);
        for (std::size_t k = 0; k < n; ++k) {
            c.rec.eq(kth("v* B_k(y + u v*) = v* B_k(y)", k), b.vstar * shifted.B[k], b.vstar * plain.B[k], input);
        }
        c.rec.eq("pi(Ad*_B(b) l) = pi(l)", pi_projection(coad_B(b, l)), pi_projection(l), input);
    }
}

void invariance_psi(Ctx& c) {
    const std::size_t n = c.kind.n;
    const std::size_t count = psi_count(n);
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointC l = sample_dual_c(n, c.rng, c.cfg.bound);
        const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
        auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}}; };
        const DualPointC moved = coad_C(a, l);
        c.rec.truth("Ad*(C) l stays skew", moved.y.is_skew(), input);
        for (std::size_t k = 0; k < count; ++k) {
            c.rec.eq(kth("psi_k(Ad* l) = psi_k(l)", k), psi_invariant(k, moved), psi_invariant(k, l), input);
        }
        const auto gens_before = generators_c(c.kind.family, l);
        const auto gens_after = generators_c(c.kind.family, moved);
        for (std::size_t k = 0; k < gens_before.size(); ++k) {
            c.rec.eq(kth("generator_k(Ad* l) = generator_k(l)", k), gens_after[k], gens_before[k], input);
        }
    }
}

void exotic_sign(Ctx& c) {
    const std::size_t n = c.kind.n;
    if (!c.kind.odd()) return;
    const std::size_t ell = c.kind.ell();
    Mat reflection = Mat::identity(n);
    reflection(n - 1, n - 1) = -1;
    std::size_t flips = 0;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointC l = sample_dual_c(n, c.rng, c.cfg.bound);
        const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
        auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}}; };
        const Rat phi = exotic_phi(l);
        c.rec.eq("Phi(Ad*(g,u) l) = det(g) Phi(l)", exotic_phi(coad_C(a, l)), det(a.g) * phi, input);
        {
            // The reflection lies in O(n) but not SO(n); Phi picks up det = -1.
            const Rat flipped = exotic_phi(coad_C(GroupElemA(reflection, Mat(n, 1)), l));
            c.rec.eq("Phi(Ad*(reflection, 0) l) = -Phi(l)", flipped, -phi, input);
            if (!phi.is_zero() && flipped == -phi) ++flips;
            const GroupElemA r(reflection * a.g, a.u);
            c.rec.eq("Phi(Ad*(r g, u) l) = -det(g) Phi(l)", exotic_phi(coad_C(r, l)), -(det(a.g) * phi), input);
        }
        const Mat Y = exotic_border(l);
        c.rec.eq("Pf(Y)^2 = det(Y)", phi * phi, det(Y), input);
        c.rec.eq("Phi^2 = eps psi_ell", phi * phi, Rat(kSignExoticSquareVsPsiTop) * psi_invariant(ell, l), input);
        const Mat pf = pfaff_vector(l.y);
        c.rec.eq("w* pf(y) = Phi", scalar(l.wstar * pf), phi, input);
        c.rec.eq("pf(g y g^-1) = det(g) g pf(y)", pfaff_vector(a.g * l.y * inverse(a.g)), det(a.g) * (a.g * pf),
                 input);
    }
    c.report.details["sign_flips_observed"][std::to_string(n)] = flips;
}

void dual_path(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        switch (c.kind.family) {
            case Family::Aff:
            case Family::Isl: {
                const DualPointA l = c.kind.family == Family::Aff ? sample_dual_a(n, c.rng, c.cfg.bound)
                                                                  : sample_dual_isl(n, c.rng, c.cfg.bound);
                const Rat shift = Rat(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
                auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"c", shift.str()}}; };
                const Rat f = f_invariant(l);
                c.rec.eq("f via B-rows = f via Krylov rows", f, f_invariant_krylov(l), input);
                c.rec.eq("f(y + cI, v*) = f(y, v*)", f_invariant(DualPointA(l.y + shift * Mat::identity(n), l.vstar)),
                         f, input);
                break;
            }
            case Family::Glvv: {
                const DualPointB l = sample_dual_b(n, c.rng, c.cfg.bound);
                const Rat a = Rat(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
                auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"a", a.str()}}; };
                const auto F = F_all(l);
                for (std::size_t k = 0; k < n; ++k) {
                    c.rec.eq(kth("F_k via B_k = F_k via bordered charpoly", k), F[k], F_invariant_bordered(k, l), input);
                }
                const BorderedCheck bc = bordered_char_identities(l.y, l.xi, l.wstar, a);
                c.rec.truth(bc.ok ? "bordered identities" : "bordered identities (" + bc.witness->family + ")",
                            bc.ok, input);
                break;
            }
            case Family::Io:
            case Family::Iso: {
                const DualPointC l = sample_dual_c(n, c.rng, c.cfg.bound);
                auto input = [&] { return json{{"point", to_json(c.kind, l)}}; };
                for (std::size_t k = 0; k < psi_count(n); ++k) {
                    c.rec.eq(kth("psi_k via B_2k = psi_k via bordered charpoly", k), psi_invariant(k, l),
                             psi_invariant_bordered(k, l), input);
                }
                break;
            }
        }
    }
}

void independence(Ctx& c) {
    const std::size_t n = c.kind.n;
    std::vector<std::pair<PolyMap, std::size_t>> gens;
    std::size_t expected = 0;
    if (c.kind.family == Family::Glvv) {
        for (std::size_t k = 0; k < n; ++k) {
            gens.emplace_back([k, n](const Mat& p) { return F_invariant(k, unpack_b(p, n)); }, degree_F(k));
        }
        expected = n;
    } else {
        const std::size_t count = psi_count(n);
        const bool exotic = c.kind.family == Family::Iso && c.kind.odd();
        for (std::size_t k = 0; k < count; ++k) {
            if (exotic && k + 1 == count) {
                gens.emplace_back([n](const Mat& p) { return exotic_phi(unpack_c(p, n)); }, degree_exotic(n));
            } else {
                gens.emplace_back([k, n](const Mat& p) { return psi_invariant(k, unpack_c(p, n)); }, degree_psi(k));
            }
        }
        expected = count;
    }
    std::size_t best = 0;
    std::size_t degenerate = 0;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        Mat base;
        json point;
        if (c.kind.family == Family::Glvv) {
            const DualPointB l = sample_dual_b(n, c.rng, c.cfg.bound);
            base = pack_b(l);
            point = to_json(c.kind, l);
        } else {
            const DualPointC l = sample_dual_c(n, c.rng, c.cfg.bound);
            base = pack_c(l);
            point = to_json(c.kind, l);
        }
        const std::size_t r = rank(jacobian(gens, base));
        best = std::max(best, r);
        if (r < expected) ++degenerate;
        c.rec.truth("Jacobian rank <= number of generators", r <= expected, [&] { return json{{"point", point}}; });
    }
    // Independence is a statement about the generic rank: one full-rank point
    // proves it, while a special point (w* = 0, say) may drop rank.
    c.rec.eq("generic Jacobian rank = number of generators", best, expected, [&] { return json{{"n", n}}; });
    c.report.details["jacobian_rank"][std::to_string(n)] = best;
    c.report.details["rank_deficient_points"][std::to_string(n)] = degenerate;
}

std::size_t expected_index(const AlgebraKind& kind) {
    switch (kind.family) {
        case Family::Aff: return 0;
        case Family::Isl: return 1;
        case Family::Glvv: return kind.n;
        case Family::Io:
        case Family::Iso: return kind.ell() + 1;
    }
    return 0;
}

void index_suite(Ctx& c) {
    const std::size_t idx = index_of(c.kind, c.cfg.samples, c.rng, c.cfg.bound);
    c.report.details["index"][std::to_string(c.kind.n)] = idx;
    c.rec.eq("index", idx, expected_index(c.kind), [&] { return json{{"n", c.kind.n}}; });
    if (c.kind.family != Family::Glvv) return;
    // Points of Omega~ are regular.
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointB l = sample_open_orbit(c.kind.n, c.rng, c.cfg.bound);
        c.rec.eq("rank at a point of Omega~ = dim b - n", rank(commutator_form(c.kind, l)), c.kind.dim() - c.kind.n,
                 [&] { return json{{"point", to_json(c.kind, l)}}; });
    }
}

void slices(Ctx& c) {
    const std::size_t n = c.kind.n;
    auto record_sign = [&](const std::string& key, int resolved, int frozen) {
        c.report.details["signs"][std::to_string(n)][key] = resolved;
        c.rec.eq("resolved sign " + key + " = frozen constant", resolved, frozen,
                 [&] { return json{{"n", n}, {"pair", key}}; });
    };
    if (c.kind.family == Family::Isl) {
        record_sign("f-vs-t", resolve_sign(SignPair::FVsT, c.kind), kSignFVsT);
    } else {
        for (std::size_t k = 0; k < psi_count(n); ++k) {
            record_sign("psi-vs-phi(" + std::to_string(k) + ")", resolve_sign(SignPair::PsiVsPhi, c.kind, k),
                        kSignPsiVsPhi);
        }
        if (c.kind.odd()) {
            record_sign("exotic-vs-slice", resolve_sign(SignPair::ExoticVsSlice, c.kind), kSignExoticVsSlice);
        }
    }
    // Random off-grid slice points with the frozen signs.
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        if (c.kind.family == Family::Isl) {
            SlicePointISL sp;
            for (std::size_t k = 0; k + 1 < n; ++k) sp.a.emplace_back(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
            sp.b = Rat(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
            const DualPointA l = slice_isl(sp);
            c.rec.eq("f_bar on slice = eps t", f_bar(l), Rat(kSignFVsT) * t_slice(sp),
                     [&] { return json{{"point", to_json(c.kind, l)}}; });
        } else {
            SlicePointSO sp;
            for (std::size_t i = 0; i < c.kind.ell(); ++i) sp.a.emplace_back(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
            sp.a0 = Rat(static_cast<long>(c.rng.uniform(-c.cfg.bound, c.cfg.bound)));
            const DualPointC l = slice_so(sp, c.kind);
            auto input = [&] { return json{{"point", to_json(c.kind, l)}}; };
            for (std::size_t k = 0; k < psi_count(n); ++k) {
                Rat target = phi_slice(k, sp, c.kind);
                if (c.kind.odd() && k == c.kind.ell()) target *= target;
                c.rec.eq(kth("psi_k on slice = eps phi_k", k), psi_invariant(k, l), Rat(kSignPsiVsPhi) * target, input);
            }
            if (c.kind.odd()) {
                c.rec.eq("Pf(Y) on slice = eps phi_ell", exotic_phi(l),
                         Rat(kSignExoticVsSlice) * phi_slice(c.kind.ell(), sp, c.kind), input);
            }
        }
    }
}

void orbit_fibration(Ctx& c) {
    const std::size_t n = c.kind.n;
    const CanonicalPair cp = canonical_pair(n);
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointB l = sample_open_orbit(n, c.rng, c.cfg.bound);
        const GroupElemA a = sample_group_a(c.kind, c.rng, c.cfg.bound);
        auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"group", to_json(a)}}; };

        const OrbitNormalForm nf = orbit_normalize(l);
        const CharData cd = char_data(l.y);
        bool rows_ok = true;
        for (std::size_t i = 0; i < n; ++i) rows_ok = rows_ok && nf.a.g.row(i) == l.wstar * cd.B[n - 1 - i];
        c.rec.truth("rows of g are w* B_{n-1}(y), ..., w*", rows_ok, input);
        c.rec.eq("normal form y = J", nf.normal.y, cp.J, input);
        c.rec.eq("normal form w* = e_n*", nf.normal.wstar, cp.enstar, input);
        c.rec.eq("normal form xi = pi(l)", nf.normal.xi, pi_projection(l), input);
        c.rec.eq("F_k at the normal form = F_k(l)", pi_projection(nf.normal), pi_projection(l), input);

        // Same A-orbit: same pi, same normal form.
        const DualPointB moved = coad_B(GroupElemB(a), l);
        c.rec.eq("pi(Ad*(a) l) = pi(l)", pi_projection(moved), pi_projection(l), input);
        c.rec.eq("normal form of Ad*(a) l = normal form of l", orbit_normalize(moved).normal, nf.normal, input);

        // Same pi: A-conjugate, through the two normalizing elements.
        DualPointB other = sample_open_orbit(n, c.rng, c.cfg.bound);
        const OrbitNormalForm other_nf = orbit_normalize(other);
        other.xi = inverse(other_nf.a.g) * pi_projection(l);
        c.rec.eq("pi(l2) = pi(l1) by construction", pi_projection(other), pi_projection(l), input);
        const GroupElemA link = compose(inverse(orbit_normalize(other).a), nf.a);
        c.rec.eq("equal pi => A-conjugate", coad_B(GroupElemB(link), l), other, input);
    }
}

BElem sample_belem(std::size_t n, Rng& rng, std::int64_t bound) {
    return {sample_matrix(rng, n, n, bound), sample_matrix(rng, n, 1, bound), sample_matrix(rng, 1, n, bound)};
}

void theta_suite(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const BElem X = sample_belem(n, c.rng, c.cfg.bound);
        const BElem Y = sample_belem(n, c.rng, c.cfg.bound);
        auto input = [&] {
            return json{{"X", {to_json(X.x), to_json(X.u), to_json(X.vstar)}},
                        {"Y", {to_json(Y.x), to_json(Y.u), to_json(Y.vstar)}}};
        };
        c.rec.truth("theta^2 = id", theta(theta(X)) == X, input);
        c.rec.truth("theta[X,Y] = [theta X, theta Y]", theta(bracket_b(X, Y)) == bracket_b(theta(X), theta(Y)), input);
        // gamma(c) = {(x, u, -u^T) : x skew} is fixed; a non-skew x is not.
        const Mat skew = sample_skew(c.rng, n, c.cfg.bound);
        const BElem G(skew, X.u, -X.u.transpose());
        c.rec.truth("theta fixes gamma(c)", theta(G) == G, input);
        const bool fixed = theta(X) == X;
        const bool in_gamma = X.x.is_skew() && X.vstar == -X.u.transpose();
        c.rec.eq("theta X = X iff X in gamma(c)", fixed, in_gamma, input);
    }
}

void embed_M_suite(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const BElem X = sample_belem(n, c.rng, c.cfg.bound);
        const BElem Y = sample_belem(n, c.rng, c.cfg.bound);
        const BElem Z = sample_belem(n, c.rng, c.cfg.bound);
        auto input = [&] {
            return json{{"X", {to_json(X.x), to_json(X.u), to_json(X.vstar)}},
                        {"Y", {to_json(Y.x), to_json(Y.u), to_json(Y.vstar)}},
                        {"Z", {to_json(Z.x), to_json(Z.u), to_json(Z.vstar)}}};
        };
        c.rec.eq("M[X,Y]_b = [MX,MY]_k", embed_M(bracket_b(X, Y)), bracket_k(embed_M(X), embed_M(Y)), input);
        c.rec.truth("[X,Y] = -[Y,X]", bracket_b(X, Y) == Rat(-1) * bracket_b(Y, X), input);
        const BElem jac = bracket_b(X, bracket_b(Y, Z)) + bracket_b(Y, bracket_b(Z, X)) + bracket_b(Z, bracket_b(X, Y));
        c.rec.truth("Jacobi identity", jac == BElem::zero(n), input);
    }
    // Image of M: injective, codimension 1, ideal of k.
    const auto e = basis(c.kind);
    std::vector<Mat> rows;
    for (const auto& b : e) {
        const Mat m = embed_M(b);
        rows.emplace_back(1, m.entries().size(), std::vector<Rat>(m.entries().begin(), m.entries().end()));
    }
    const Mat image = vstack(rows);
    const std::size_t image_rank = rank(image);
    const std::size_t dim_k = (n + 1) * (n + 1);
    auto input = [&] { return json{{"n", n}}; };
    c.rec.eq("M is injective", image_rank, e.size(), input);
    c.rec.eq("codim of M(b) in k", dim_k - image_rank, std::size_t{1}, input);
    c.report.details["codimension"][std::to_string(n)] = dim_k - image_rank;
    // Ideal: adding every [E_ij, M(e)]_k to the image does not raise its rank.
    std::vector<Mat> ext = rows;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Mat kb = Mat::elementary(n + 1, i, j);
            for (const auto& b : e) {
                const Mat br = bracket_k(kb, embed_M(b));
                ext.emplace_back(1, br.entries().size(), std::vector<Rat>(br.entries().begin(), br.entries().end()));
            }
        }
    }
    const bool ideal = rank(vstack(ext)) == image_rank;
    c.rec.truth("M(b) is an ideal of k", ideal, input);
}

Mat sample_gl_matrix(Ctx& c) {
    const std::size_t n = c.kind.n;
    switch (c.kind.family) {
        case Family::Io:
        case Family::Iso: return sample_skew(c.rng, n, c.cfg.bound);
        case Family::Isl: {
            Mat x = sample_matrix(c.rng, n, n, c.cfg.bound);
            x(n - 1, n - 1) -= trace(x);
            return x;
        }
        default: return sample_matrix(c.rng, n, n, c.cfg.bound);
    }
}

void cayley_hamilton(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const Mat x = sample_gl_matrix(c);
        auto input = [&] { return json{{"x", to_json(x)}}; };
        const CharData cd = char_data(x);
        c.rec.eq("x B_{n-1}(x) = p_n(x) I", x * cd.B[n - 1], cd.p[n - 1] * Mat::identity(n), input);
        for (std::size_t k = 0; k < n; ++k) {
            Mat closed = mat_pow(x, static_cast<unsigned>(k));
            for (std::size_t i = 1; i <= k; ++i) closed -= cd.p[i - 1] * mat_pow(x, static_cast<unsigned>(k - i));
            c.rec.eq(kth("B_k recursion = closed form", k), cd.B[k], closed, input);
        }
    }
}

void gradient_Bk(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const Mat x = sample_gl_matrix(c);
        const Mat y = sample_gl_matrix(c);
        auto input = [&] { return json{{"x", to_json(x)}, {"y", to_json(y)}}; };
        const CharData cd = char_data(x);
        for (std::size_t k = 0; k < n; ++k) {
            const PolyMap p = [k](const Mat& m) { return char_coeff(m, k + 1); };
            c.rec.eq(kth("tr(B_k(x) y) = d/dt p_{k+1}(x + t y)", k), trace(cd.B[k] * y),
                     directional_coeff(p, x, y, 1, k + 1), input);
        }
    }
}

void skew_parity(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointC l = sample_dual_c(n, c.rng, c.cfg.bound);
        auto input = [&] { return json{{"point", to_json(c.kind, l)}}; };
        const CharData cd = char_data(l.y);
        const DualPointB lb = l.embed();
        for (std::size_t k = 1; k <= n; k += 2) c.rec.eq(kth("p_k(y) = 0, k odd", k), cd.p[k - 1], Rat(0), input);
        for (std::size_t k = 1; k < n; k += 2) {
            c.rec.truth(kth("B_k(y) skew, k odd", k), cd.B[k].is_skew(), input);
            c.rec.eq(kth("F_k(y, w*, -w*^T) = 0, k odd", k), F_invariant(k, lb), Rat(0), input);
        }
    }
}

void sbg_generators(Ctx& c) {
    const std::size_t n = c.kind.n;
    for (std::size_t s = 0; s < c.cfg.samples; ++s) {
        const DualPointB l = sample_dual_b(n, c.rng, c.cfg.bound);
        const Mat g = sample_gl(c.rng, n, c.cfg.bound);
        auto input = [&] { return json{{"point", to_json(c.kind, l)}, {"g", to_json(g)}}; };
        const DualPointB moved = coad_B(GroupElemB(g, Mat(n, 1), Mat(1, n)), l);
        const CharData before = char_data(l.y);
        const CharData after = char_data(moved.y);
        for (std::size_t i = 0; i < n; ++i) c.rec.eq(kth("p_i(g y g^-1) = p_i(y)", i + 1), after.p[i], before.p[i], input);
        std::vector<Rat> krylov;
        Mat r = l.wstar, rm = moved.wstar;
        for (std::size_t j = 0; j < n; ++j) {
            krylov.push_back(scalar(r * l.xi));
            c.rec.eq(kth("w* y^j xi invariant", j), scalar(rm * moved.xi), krylov.back(), input);
            r = r * l.y;
            rm = rm * moved.y;
        }
        const auto F = F_all(l);
        for (std::size_t k = 0; k < n; ++k) {
            Rat expect = krylov[k];
            for (std::size_t i = 1; i <= k; ++i) expect -= before.p[i - 1] * krylov[k - i];
            c.rec.eq(kth("F_k = w* y^k xi - sum p_i w* y^{k-i} xi", k), F[k], expect, input);
        }
    }
}

using SuiteFn = void (*)(Ctx&);

SuiteFn suite_fn(std::string_view name) {
    static const std::map<std::string, SuiteFn, std::less<>> fns = {
        {"semi-invariance-f", semi_invariance_f}, {"covariance-phi", covariance_phi},
        {"invariance-F", invariance_F},           {"invariance-psi", invariance_psi},
        {"exotic-sign", exotic_sign},             {"dual-path", dual_path},
        {"independence", independence},           {"index", index_suite},
        {"slices", slices},                       {"orbit-fibration", orbit_fibration},
        {"theta", theta_suite},                   {"embed-M", embed_M_suite},
        {"cayley-hamilton", cayley_hamilton},     {"gradient-Bk", gradient_Bk},
        {"skew-parity", skew_parity},             {"sbg-generators", sbg_generators},
    };
    return fns.find(name)->second;
}

// Odometer over [-radius, radius]^count.
template <class Fn>
void for_each_grid_point(std::size_t count, int radius, Fn&& fn) {
    std::vector<long> v(count, -radius);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < count && v[i] == radius) v[i++] = -radius;
        if (i == count) return;
        ++v[i];
    }
}

}  // namespace

json VerifyReport::to_json(bool with_elapsed) const {
    json fs = json::array();
    for (const auto& f : failures) {
        fs.push_back({{"check", f.check}, {"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    json j = {{"suite", suite},
              {"anchor", anchor},
              {"algebra", algebra},
              {"n_range", {n_min, n_max}},
              {"pass", pass()},
              {"checks_run", checks_run},
              {"failures_total", failures_total},
              {"failures", std::move(fs)},
              {"details", details}};
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suite_table()) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

std::string_view suite_anchor(std::string_view suite) { return info(suite).anchor; }

bool suite_supports(std::string_view suite, Family family) {
    const auto& s = info(suite).supported;
    return std::find(s.begin(), s.end(), family) != s.end();
}

std::vector<Family> suite_default_families(std::string_view suite) { return info(suite).defaults; }

std::pair<std::size_t, std::size_t> suite_default_range(std::string_view suite) {
    return {1, info(suite).n_max};
}

VerifyReport run_suite(std::string_view suite, const SuiteConfig& cfg) {
    const SuiteInfo& si = info(suite);
    if (!suite_supports(suite, cfg.algebra)) {
        throw std::invalid_argument("suite '" + std::string(suite) + "' does not support algebra '" +
                                    std::string(family_name(cfg.algebra)) + "'");
    }
    if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (cfg.n_min < 1 || cfg.n_max > 8 || cfg.n_min > cfg.n_max) {
        throw std::invalid_argument("n-range must lie within 1..8");
    }
    if (cfg.bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
    if (std::string_view(si.name) == "exotic-sign") {
        bool any_odd = false;
        for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) any_odd = any_odd || n % 2 == 1;
        if (!any_odd) throw std::invalid_argument("exotic-sign needs an odd n in the range");
    }

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = si.name;
    report.anchor = si.anchor;
    report.algebra = std::string(family_name(cfg.algebra));
    report.n_min = cfg.n_min;
    report.n_max = cfg.n_max;
    Recorder rec(report);
    Rng master(cfg.seed);
    const SuiteFn fn = suite_fn(suite);
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        Ctx ctx{cfg, rec, report, master.split(), AlgebraKind(cfg.algebra, n)};
        fn(ctx);
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int resolve_sign(SignPair pair, const AlgebraKind& kind, std::size_t k, int radius) {
    bool plus = true;
    bool minus = true;
    bool nonzero = false;
    auto observe = [&](const Rat& lhs, const Rat& rhs) {
        if (!rhs.is_zero() || !lhs.is_zero()) nonzero = true;
        if (lhs != rhs) plus = false;
        if (lhs != -rhs) minus = false;
    };
    switch (pair) {
        case SignPair::FVsT: {
            if (kind.family != Family::Isl) throw std::invalid_argument("f-vs-t needs the isl algebra");
            for_each_grid_point(kind.n, radius, [&](const std::vector<long>& v) {
                SlicePointISL s;
                for (std::size_t i = 0; i + 1 < kind.n; ++i) s.a.emplace_back(v[i]);
                s.b = Rat(v[kind.n - 1]);
                observe(f_bar(slice_isl(s)), t_slice(s));
            });
            break;
        }
        case SignPair::PsiVsPhi:
        case SignPair::ExoticVsSlice: {
            if (kind.family != Family::Io && kind.family != Family::Iso) {
                throw std::invalid_argument("slice signs need the io or iso algebra");
            }
            const std::size_t ell = kind.ell();
            if (pair == SignPair::PsiVsPhi && k > ell) throw std::invalid_argument("psi index out of range");
            if (pair == SignPair::ExoticVsSlice && !kind.odd()) {
                throw std::invalid_argument("exotic invariant only for odd n");
            }
            for_each_grid_point(ell + 1, radius, [&](const std::vector<long>& v) {
                SlicePointSO s;
                for (std::size_t i = 0; i < ell; ++i) s.a.emplace_back(v[i]);
                s.a0 = Rat(v[ell]);
                const DualPointC l = slice_so(s, kind);
                if (pair == SignPair::ExoticVsSlice) {
                    observe(exotic_phi(l), phi_slice(ell, s, kind));
                } else {
                    Rat target = phi_slice(k, s, kind);
                    if (kind.odd() && k == ell) target *= target;
                    observe(psi_invariant(k, l), target);
                }
            });
            break;
        }
    }
    if (!nonzero) throw std::runtime_error("sign undetermined: both sides vanish on the grid");
    if (plus == minus) throw std::runtime_error("not proportional - investigate");
    return plus ? +1 : -1;
}

}  // namespace coadinv::verify
