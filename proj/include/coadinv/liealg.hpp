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
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coadinv/matrix.hpp"

namespace coadinv {

// ---------------------------------------------------------------------------
// Algebras

enum class Family {
    Aff,   // gl(n) x| V
    Isl,   // sl(n) x| V
    Glvv,  // gl(n) x| (V + V*)
    Io,    // so(n) x| V, acted on by O(n)
    Iso,   // so(n) x| V, acted on by SO(n)
};

std::string_view family_name(Family f);
/// Inverse of family_name; throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);

struct AlgebraKind {
    Family family = Family::Glvv;
    std::size_t n = 1;

    AlgebraKind() = default;
    AlgebraKind(Family f, std::size_t size);

    /// For so(n) x| V: n = 2 ell + 1 or n = 2 ell + 2.
    [[nodiscard]] std::size_t ell() const { return (n - 1) / 2; }
    [[nodiscard]] bool odd() const { return n % 2 == 1; }
    [[nodiscard]] std::size_t dim() const;
    [[nodiscard]] std::string name() const;
};

// ---------------------------------------------------------------------------
// Points of the duals. Constructors validate shapes and throw
// std::invalid_argument.

/// (y, v*) in gl(n) x V*, paired with (x, u) by tr(yx) + v* u.
struct DualPointA {
    Mat y;
    Mat vstar;

    DualPointA() = default;
    DualPointA(Mat y_, Mat vstar_);
    /// Point of sl(n) x V*; rejects tr(y) != 0.
    static DualPointA traceless(Mat y_, Mat vstar_);
    [[nodiscard]] std::size_t n() const { return y.rows(); }
    friend bool operator==(const DualPointA&, const DualPointA&) = default;
};

/// (y, w*, xi), paired with (x, u, v*) by tr(yx) + w* u + v* xi.
struct DualPointB {
    Mat y;
    Mat wstar;
    Mat xi;

    DualPointB() = default;
    DualPointB(Mat y_, Mat wstar_, Mat xi_);
    [[nodiscard]] std::size_t n() const { return y.rows(); }
    friend bool operator==(const DualPointB&, const DualPointB&) = default;
};

/// (y, w*) with y skew, sitting inside b* as (y, w*, -w*^T).
struct DualPointC {
    Mat y;
    Mat wstar;

    DualPointC() = default;
    DualPointC(Mat y_, Mat wstar_);
    [[nodiscard]] std::size_t n() const { return y.rows(); }
    [[nodiscard]] DualPointB embed() const;
    friend bool operator==(const DualPointC&, const DualPointC&) = default;
};

// ---------------------------------------------------------------------------
// Group elements

/// (g, u) in GL(n) x| C^n with (g1,u1)(g2,u2) = (g1 g2, u1 + g1 u2).
struct GroupElemA {
    Mat g;
    Mat u;

    GroupElemA() = default;
    GroupElemA(Mat g_, Mat u_);
    [[nodiscard]] std::size_t n() const { return g.rows(); }
};

/// (g, u, v*) in GL(n) x| (V + V*), factored as (e,u,0)(e,0,v*)(g,0,0), so
///   (g1,u1,v1*)(g2,u2,v2*) = (g1 g2, u1 + g1 u2, v1* + v2* g1^{-1}).
struct GroupElemB {
    Mat g;
    Mat u;
    Mat vstar;

    GroupElemB() = default;
    GroupElemB(Mat g_, Mat u_, Mat vstar_);
    explicit GroupElemB(const GroupElemA& a);
    [[nodiscard]] std::size_t n() const { return g.rows(); }
};

using GroupElem = std::variant<GroupElemA, GroupElemB>;

GroupElemA compose(const GroupElemA& a1, const GroupElemA& a2);
GroupElemB compose(const GroupElemB& b1, const GroupElemB& b2);
GroupElemA inverse(const GroupElemA& a);
GroupElemB inverse(const GroupElemB& b);

/// Ad*(g,u)(y, v*) = (g y g^-1 + u v* g^-1, v* g^-1).
DualPointA coad_A(const GroupElemA& a, const DualPointA& l);

/// Coadjoint action of ISL(n) on sl(n) x V*: coad_A followed by removing the
/// trace of y. Throws std::invalid_argument unless det g = 1.
DualPointA coad_isl(const GroupElemA& a, const DualPointA& l);

/// Ad*(e,u,0) o Ad*(e,0,v*) o Ad*(g,0,0) where
///   Ad*(g,0,0)(y,w*,xi) = (g y g^-1, w* g^-1, g xi)
///   Ad*(e,0,v*)(y,w*,xi) = (y - xi v*, w*, xi)
///   Ad*(e,u,0)(y,w*,xi)  = (y + u w*, w*, xi)
DualPointB coad_B(const GroupElemB& b, const DualPointB& l);

/// Coadjoint action of IO(n): coad_B((g, u, -u^T), .) restricted to c*.
/// Throws std::invalid_argument unless g^T g = I.
DualPointC coad_C(const GroupElemA& a, const DualPointC& l);

// ---------------------------------------------------------------------------
// Lie algebra b = gl(n) x| (V + V*) and friends

/// Element (x, u, v*) of b. a embeds as v* = 0, c = so(n) x| V as
/// (x, u, -u^T) with x skew.
struct BElem {
    Mat x;
    Mat u;
    Mat vstar;

    BElem() = default;
    BElem(Mat x_, Mat u_, Mat vstar_);
    static BElem zero(std::size_t n);
    [[nodiscard]] std::size_t n() const { return x.rows(); }
    friend bool operator==(const BElem&, const BElem&) = default;
};

BElem operator+(const BElem& a, const BElem& b);
BElem operator-(const BElem& a, const BElem& b);
BElem operator*(const Rat& s, const BElem& a);

/// ([x1,x2], x1 u2 - x2 u1, -v2* x1 + v1* x2).
BElem bracket_b(const BElem& a, const BElem& b);
/// theta(x, u, v*) = -(x^T, v*^T, u^T): minus the transpose of embed_M.
BElem theta(const BElem& a);
/// [[x, u], [v*, 0]] in gl(n+1).
Mat embed_M(const BElem& a);
/// Bracket of the contraction k = g0 x| g1 of gl(n+1) = g0 + g1 where g0 is
/// block diagonal (n, 1) and g1 the off-diagonal border; [g1, g1] = 0.
Mat bracket_k(const Mat& a, const Mat& b);

/// Pairing <l, X> = tr(yx) + w* u + v* xi.
Rat pairing(const DualPointB& l, const BElem& x);

/// Basis of the algebra as a subalgebra of b, in the fixed order
/// E_ij row-major, then e_1..e_n, then e_1*..e_n*. so(n) uses E_ij - E_ji
/// (i < j, lexicographic); sl(n) uses E_ij (i != j) then E_ii - E_{i+1,i+1}.
std::vector<BElem> basis(const AlgebraKind& kind);

/// Skew matrix l([e_i, e_j]) over basis(kind).
Mat commutator_form(const AlgebraKind& kind, const DualPointB& l);

// ---------------------------------------------------------------------------
// Sampling

/// Deterministic random stream: mt19937_64 with bounded integers drawn by
/// rejection, so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    /// Independent child stream; advances this stream by one draw.
    Rng split();
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

constexpr std::int64_t kDefaultBound = 3;

Mat sample_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound);
Mat sample_skew(Rng& rng, std::size_t n, std::int64_t bound);
/// Integer matrix with entries in [-bound, bound], rejecting det = 0.
Mat sample_gl(Rng& rng, std::size_t n, std::int64_t bound);
/// Product of 2n transvections I + c E_ij; det is exactly 1.
Mat sample_sl(Rng& rng, std::size_t n, std::int64_t bound);
/// Cayley transform (I - S)(I + S)^-1 of a random integer skew S.
Mat cayley(const Mat& skew);
Mat sample_so(Rng& rng, std::size_t n, std::int64_t bound);
/// SO(n) sample times diag(1, ..., 1, -1).
Mat sample_o_minus(Rng& rng, std::size_t n, std::int64_t bound);

/// Group element of the group attached to `kind`: GroupElemB for Glvv,
/// GroupElemA otherwise, with g drawn from GL, SL, O or SO accordingly.
GroupElem sample_group(const AlgebraKind& kind, Rng& rng, std::int64_t bound = kDefaultBound);
GroupElemA sample_group_a(const AlgebraKind& kind, Rng& rng, std::int64_t bound = kDefaultBound);
GroupElemB sample_group_b(std::size_t n, Rng& rng, std::int64_t bound = kDefaultBound);

DualPointA sample_dual_a(std::size_t n, Rng& rng, std::int64_t bound = kDefaultBound);
DualPointA sample_dual_isl(std::size_t n, Rng& rng, std::int64_t bound = kDefaultBound);
DualPointB sample_dual_b(std::size_t n, Rng& rng, std::int64_t bound = kDefaultBound);
DualPointC sample_dual_c(std::size_t n, Rng& rng, std::int64_t bound = kDefaultBound);

/// dim - max rank of commutator_form over `samples` random points.
std::size_t index_of(const AlgebraKind& kind, std::size_t samples, Rng& rng,
                     std::int64_t bound = kDefaultBound);

}  // namespace coadinv
