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

#include "coadinv/liealg.hpp"
#include "oracles.hpp"

using namespace coadinv;

namespace {

BElem random_belem(Rng& rng, std::size_t n) {
    return {sample_matrix(rng, n, n, 3), sample_matrix(rng, n, 1, 3), sample_matrix(rng, 1, n, 3)};
}

bool orthogonal(const Mat& g) { return g.transpose() * g == Mat::identity(g.rows()); }

}  // namespace

TEST_CASE("family names round-trip") {
    for (const Family f : {Family::Aff, Family::Isl, Family::Glvv, Family::Io, Family::Iso}) {
        CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_THROWS_AS(parse_family("gl"), std::invalid_argument);
    CHECK(AlgebraKind(Family::Glvv, 3).dim() == 15);
    CHECK(AlgebraKind(Family::Io, 4).dim() == 10);
    CHECK(AlgebraKind(Family::Isl, 3).dim() == 11);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(DualPointA(Mat(2, 2), Mat(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(DualPointC(Mat{{0, 1}, {1, 0}}, Mat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(DualPointA::traceless(Mat::identity(2), Mat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(GroupElemA(Mat(2, 2), Mat(3, 1)), std::invalid_argument);
}

TEST_CASE("group laws match the matrix model") {
    Rng rng(1);
    for (int s = 0; s < 60; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const GroupElemB b1 = sample_group_b(n, rng);
        const GroupElemB b2 = sample_group_b(n, rng);
        CHECK(oracle::equal_mod_centre(oracle::group_matrix(compose(b1, b2)),
                                       oracle::group_matrix(b1) * oracle::group_matrix(b2)));
        const GroupElemB e = compose(b1, inverse(b1));
        CHECK(e.g == Mat::identity(n));
        CHECK(e.u.is_zero());
        CHECK(e.vstar.is_zero());

        const GroupElemA a1(sample_gl(rng, n, 3), sample_matrix(rng, n, 1, 3));
        const GroupElemA a2(sample_gl(rng, n, 3), sample_matrix(rng, n, 1, 3));
        const GroupElemA a12 = compose(a1, a2);
        CHECK(a12.g == a1.g * a2.g);
        CHECK(a12.u == a1.u + a1.g * a2.u);
        CHECK(compose(a12, inverse(a12)).u.is_zero());
    }
}

TEST_CASE("bracket_b is the matrix commutator in the model") {
    Rng rng(2);
    for (int s = 0; s < 60; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const BElem x = random_belem(rng, n);
        const BElem y = random_belem(rng, n);
        const Mat c = commutator(oracle::algebra_matrix(x), oracle::algebra_matrix(y));
        CHECK(bracket_b(x, y) == oracle::from_algebra_matrix(c));
    }
    const Mat x{{1, 2}, {3, 4}};
    const Mat u{{5}, {6}};
    CHECK(bracket_b(BElem(x, Mat(2, 1), Mat(1, 2)), BElem(Mat(2, 2), u, Mat(1, 2))) ==
          BElem(Mat(2, 2), x * u, Mat(1, 2)));
    CHECK(bracket_b(BElem(Mat(2, 2), u, Mat{{1, 1}}), BElem(Mat(2, 2), Mat{{2}, {0}}, Mat{{3, 1}})) ==
          BElem::zero(2));
}

TEST_CASE("coadjoint actions preserve the pairing") {
    Rng rng(3);
    for (int s = 0; s < 80; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const DualPointB l = sample_dual_b(n, rng);
        const GroupElemB b = sample_group_b(n, rng);
        const BElem x = random_belem(rng, n);
        CHECK(pairing(coad_B(b, l), oracle::Ad(b, x)) == pairing(l, x));

        // coad_A is coad_B restricted to (y, v*) with v-part 0; pair against a.
        const GroupElemA a(sample_gl(rng, n, 3), sample_matrix(rng, n, 1, 3));
        const DualPointA la = sample_dual_a(n, rng);
        const DualPointA moved = coad_A(a, la);
        const BElem xa(sample_matrix(rng, n, n, 3), sample_matrix(rng, n, 1, 3), Mat(1, n));
        const BElem ad = oracle::Ad(GroupElemB(a), xa);
        CHECK(ad.vstar.is_zero());
        CHECK(trace(moved.y * ad.x) + scalar(moved.vstar * ad.u) == trace(la.y * xa.x) + scalar(la.vstar * xa.u));
    }
}

TEST_CASE("coad trivial elements") {
    Rng rng(4);
    const std::size_t n = 3;
    const DualPointB l = sample_dual_b(n, rng);
    CHECK(coad_B(GroupElemB(Mat::identity(n), Mat(n, 1), Mat(1, n)), l) == l);
    const DualPointA la = sample_dual_a(n, rng);
    CHECK(coad_A(GroupElemA(Mat::identity(n), Mat(n, 1)), la) == la);
    const Mat u = sample_matrix(rng, n, 1, 3);
    const DualPointA shifted = coad_A(GroupElemA(Mat::identity(n), u), la);
    CHECK(shifted.y == la.y + u * la.vstar);
    CHECK(shifted.vstar == la.vstar);
    const DualPointC lc = sample_dual_c(n, rng);
    CHECK(coad_C(GroupElemA(Mat::identity(n), Mat(n, 1)), lc) == lc);
}

TEST_CASE("coad_C stays inside c* and needs orthogonal g") {
    Rng rng(5);
    for (int s = 0; s < 100; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        const AlgebraKind kind(s % 2 == 0 ? Family::Io : Family::Iso, n);
        const GroupElemA a = sample_group_a(kind, rng);
        CHECK(orthogonal(a.g));
        if (kind.family == Family::Iso) CHECK(det(a.g) == Rat(1));
        const DualPointC l = sample_dual_c(n, rng);
        const DualPointC moved = coad_C(a, l);
        CHECK(moved.y.is_skew());
        CHECK(coad_B(GroupElemB(a.g, a.u, -a.u.transpose()), l.embed()) == moved.embed());
    }
    CHECK_THROWS_AS(coad_C(GroupElemA(Mat{{2}}, Mat{{0}}), DualPointC(Mat(1, 1), Mat{{1}})), std::invalid_argument);
}

TEST_CASE("coad_isl keeps the trace zero and needs det 1") {
    Rng rng(6);
    for (int s = 0; s < 40; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const AlgebraKind kind(Family::Isl, n);
        const GroupElemA a = sample_group_a(kind, rng);
        CHECK(det(a.g) == Rat(1));
        const DualPointA l = sample_dual_isl(n, rng);
        CHECK(trace(coad_isl(a, l).y) == Rat(0));
    }
    CHECK_THROWS_AS(coad_isl(GroupElemA(Mat{{2}}, Mat{{0}}), DualPointA(Mat(1, 1), Mat{{1}})),
                    std::invalid_argument);
}

TEST_CASE("samplers") {
    Rng rng(7);
    CHECK(cayley(Mat(3, 3)) == Mat::identity(3));
    const Mat q = cayley(Mat{{0, 1}, {-1, 0}});
    CHECK(orthogonal(q));
    CHECK(det(q) == Rat(1));
    for (int s = 0; s < 30; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        CHECK(det(sample_sl(rng, n, 3)) == Rat(1));
        CHECK_FALSE(det(sample_gl(rng, n, 3)).is_zero());
        const Mat o = sample_o_minus(rng, n, 3);
        CHECK(orthogonal(o));
        CHECK(det(o) == Rat(-1));
        CHECK(sample_skew(rng, n, 3).is_skew());
    }
    // Same seed, same stream; split streams differ from the parent.
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.uniform(-100, 100) == b.uniform(-100, 100));
    Rng c(42);
    Rng child = c.split();
    CHECK(child.seed() != c.seed());
}

TEST_CASE("theta and embed_M") {
    Rng rng(8);
    for (int s = 0; s < 50; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const BElem x = random_belem(rng, n);
        const BElem y = random_belem(rng, n);
        CHECK(theta(theta(x)) == x);
        CHECK(theta(bracket_b(x, y)) == bracket_b(theta(x), theta(y)));
        CHECK(embed_M(bracket_b(x, y)) == bracket_k(embed_M(x), embed_M(y)));
        const Mat sk = sample_skew(rng, n, 3);
        const BElem g(sk, x.u, -x.u.transpose());
        CHECK(theta(g) == g);
    }
    CHECK(embed_M(BElem::zero(2)).is_zero());
    // A non-skew x is not fixed.
    const BElem ns(Mat{{1, 0}, {0, 0}}, Mat(2, 1), Mat(1, 2));
    CHECK_FALSE(theta(ns) == ns);
}

TEST_CASE("commutator_form matches pairings of brackets") {
    Rng rng(9);
    for (const Family f : {Family::Aff, Family::Isl, Family::Glvv, Family::Io}) {
        const AlgebraKind kind(f, 3);
        const auto e = basis(kind);
        CHECK(e.size() == kind.dim());
        const DualPointB l = sample_dual_b(3, rng);
        const Mat form = commutator_form(kind, l);
        CHECK(form.is_skew());
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j) CHECK(form(i, j) == pairing(l, bracket_b(e[i], e[j])));
        // The basis spans a subalgebra of the right dimension.
        std::vector<Mat> rows;
        for (const auto& b : e) {
            const Mat m = embed_M(b);
            rows.emplace_back(1, m.entries().size(), std::vector<Rat>(m.entries().begin(), m.entries().end()));
        }
        CHECK(rank(vstack(rows)) == kind.dim());
    }
}

TEST_CASE("index: small cases") {
    Rng rng(10);
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(index_of(AlgebraKind(Family::Aff, n), 5, rng) == 0);
        CHECK(index_of(AlgebraKind(Family::Glvv, n), 5, rng) == n);
        CHECK(index_of(AlgebraKind(Family::Io, n), 5, rng) == (n - 1) / 2 + 1);
    }
}
