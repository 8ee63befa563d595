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
#include "coadinv/matrix.hpp"
#include "coadinv/rational.hpp"
#include "oracles.hpp"

using namespace coadinv;

TEST_CASE("Rat is canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2).str() == "-1/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(0, 5).den() == 1);
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK_THROWS_AS(Rat::parse("6/-4"), std::invalid_argument);
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat(1LL << 62).str() == "4611686018427387904");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("matrix products") {
    CHECK(Mat::identity(2) * Mat::identity(2) == Mat::identity(2));
    const Mat nil{{0, 1}, {0, 0}};
    CHECK((nil * nil).is_zero());
    // e_2* J = e_1* with J the lower shift.
    const Mat J{{0, 0}, {1, 0}};
    CHECK(Mat::unit_row(2, 1) * J == Mat::unit_row(2, 0));
    CHECK_THROWS_AS(mat_mul(Mat(2, 3), Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("det: fixed values") {
    CHECK(det(Mat::identity(3)) == Rat(1));
    CHECK(det(Mat{{0, 1}, {1, 0}}) == Rat(-1));
    CHECK(det(Mat{{2, 0}, {0, Rat(1, 2)}}) == Rat(1));
}

TEST_CASE("det, rank and inverse against brute force") {
    Rng rng(11);
    for (int s = 0; s < 150; ++s) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        Mat a = sample_matrix(rng, n, n, 3);
        // Rational entries exercise the integer scaling.
        a(0, 0) = a(0, 0) / Rat(static_cast<long>(rng.uniform(1, 5)));
        if (s % 3 == 0 && n > 1) a.set_block(n - 1, 0, a.row(0));  // force singular
        CHECK(det(a) == oracle::det(a));
        CHECK(rank(a) == oracle::rank(a));
        if (!det(a).is_zero()) {
            CHECK(a * inverse(a) == Mat::identity(n));
        } else {
            CHECK_THROWS_AS(inverse(a), std::domain_error);
        }
    }
    for (int s = 0; s < 50; ++s) {
        const Mat a = sample_matrix(rng, 3, 5, 2);
        CHECK(rank(a) == oracle::rank(a));
    }
}

TEST_CASE("rank and inverse: fixed values") {
    CHECK(rank(Mat(3, 3)) == 0);
    CHECK(rank(Mat::identity(4)) == 4);
    const Mat rows[] = {Mat::unit_row(3, 0), Mat::unit_row(3, 0)};
    CHECK(rank(vstack(rows)) == 1);
    CHECK(inverse(Mat::identity(3)) == Mat::identity(3));
    CHECK(inverse(Mat{{2, 0}, {0, 3}}) == Mat{{Rat(1, 2), 0}, {0, Rat(1, 3)}});
    CHECK(inverse(Mat{{1, 1}, {0, 1}}) == Mat{{1, -1}, {0, 1}});
}

TEST_CASE("pfaffian") {
    CHECK(pfaffian(Mat{{0, 5}, {-5, 0}}) == Rat(5));
    CHECK(pfaffian(Mat(4, 4)) == Rat(0));
    Mat blocks(4, 4);
    blocks(0, 1) = 3;
    blocks(1, 0) = -3;
    blocks(2, 3) = -7;
    blocks(3, 2) = 7;
    CHECK(pfaffian(blocks) == Rat(-21));
    CHECK(oracle::pfaffian(blocks) == Rat(-21));
    CHECK_THROWS_AS(pfaffian(Mat(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(Mat{{0, 1}, {1, 0}}), std::invalid_argument);

    Rng rng(5);
    for (int s = 0; s < 100; ++s) {
        const std::size_t n = 2 * (1 + static_cast<std::size_t>(rng.uniform(0, 2)));
        Mat a = sample_skew(rng, n, 3);
        a(0, 1) = a(0, 1) / Rat(2);
        a(1, 0) = -a(0, 1);
        const Rat pf = pfaffian(a);
        CHECK(pf == oracle::pfaffian(a));
        CHECK(pf * pf == oracle::det(a));
    }
}

TEST_CASE("vstack and blocks") {
    const Mat a{{1, 2, 3}, {4, 5, 6}};
    CHECK(a.block(0, 1, 2, 2) == Mat{{2, 3}, {5, 6}});
    CHECK(a.transpose().transpose() == a);
    const Mat parts[] = {a.row(1), a.row(0)};
    CHECK(vstack(parts) == Mat{{4, 5, 6}, {1, 2, 3}});
}
