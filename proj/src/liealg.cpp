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

#include "coadinv/liealg.hpp"

#include "coadinv/charpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace coadinv {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool is_row(const Mat& m, std::size_t n) { return m.rows() == 1 && m.cols() == n; }
bool is_col(const Mat& m, std::size_t n) { return m.rows() == n && m.cols() == 1; }

bool is_orthogonal(const Mat& g) { return g.transpose() * g == Mat::identity(g.rows()); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

constexpr int kMaxRetries = 64;

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Aff: return "aff";
        case Family::Isl: return "isl";
        case Family::Glvv: return "glvv";
        case Family::Io: return "io";
        case Family::Iso: return "iso";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Aff, Family::Isl, Family::Glvv, Family::Io, Family::Iso}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

AlgebraKind::AlgebraKind(Family f, std::size_t size) : family(f), n(size) {
    require(size >= 1, "algebra size must be at least 1");
}

std::size_t AlgebraKind::dim() const {
    switch (family) {
        case Family::Aff: return n * n + n;
        case Family::Isl: return n * n - 1 + n;
        case Family::Glvv: return n * n + 2 * n;
        case Family::Io:
        case Family::Iso: return n * (n - 1) / 2 + n;
    }
    return 0;
}

std::string AlgebraKind::name() const {
    return std::string(family_name(family)) + "(" + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------

DualPointA::DualPointA(Mat y_, Mat vstar_) : y(std::move(y_)), vstar(std::move(vstar_)) {
    require(y.is_square() && y.rows() >= 1, "dual point: y must be square");
    require(is_row(vstar, y.rows()), "dual point: v* must be a 1 x n row");
}

DualPointA DualPointA::traceless(Mat y_, Mat vstar_) {
    DualPointA l(std::move(y_), std::move(vstar_));
    require(trace(l.y).is_zero(), "dual point of sl(n) x V*: y must have zero trace");
    return l;
}

DualPointB::DualPointB(Mat y_, Mat wstar_, Mat xi_)
    : y(std::move(y_)), wstar(std::move(wstar_)), xi(std::move(xi_)) {
    require(y.is_square() && y.rows() >= 1, "dual point: y must be square");
    require(is_row(wstar, y.rows()), "dual point: w* must be a 1 x n row");
    require(is_col(xi, y.rows()), "dual point: xi must be an n x 1 column");
}

DualPointC::DualPointC(Mat y_, Mat wstar_) : y(std::move(y_)), wstar(std::move(wstar_)) {
    require(y.is_square() && y.rows() >= 1, "dual point: y must be square");
    require(y.is_skew(), "dual point of so(n) x V*: y must be skew-symmetric");
    require(is_row(wstar, y.rows()), "dual point: w* must be a 1 x n row");
}

DualPointB DualPointC::embed() const { return {y, wstar, -wstar.transpose()}; }

GroupElemA::GroupElemA(Mat g_, Mat u_) : g(std::move(g_)), u(std::move(u_)) {
    require(g.is_square() && g.rows() >= 1, "group element: g must be square");
    require(is_col(u, g.rows()), "group element: u must be an n x 1 column");
}

GroupElemB::GroupElemB(Mat g_, Mat u_, Mat vstar_)
    : g(std::move(g_)), u(std::move(u_)), vstar(std::move(vstar_)) {
    require(g.is_square() && g.rows() >= 1, "group element: g must be square");
    require(is_col(u, g.rows()), "group element: u must be an n x 1 column");
    require(is_row(vstar, g.rows()), "group element: v* must be a 1 x n row");
}

GroupElemB::GroupElemB(const GroupElemA& a) : g(a.g), u(a.u), vstar(Mat(1, a.n())) {}

GroupElemA compose(const GroupElemA& a1, const GroupElemA& a2) {
    return {a1.g * a2.g, a1.u + a1.g * a2.u};
}

GroupElemB compose(const GroupElemB& b1, const GroupElemB& b2) {
    return {b1.g * b2.g, b1.u + b1.g * b2.u, b1.vstar + b2.vstar * inverse(b1.g)};
}

GroupElemA inverse(const GroupElemA& a) {
    Mat gi = inverse(a.g);
    Mat u = -(gi * a.u);
    return {std::move(gi), std::move(u)};
}

GroupElemB inverse(const GroupElemB& b) {
    Mat gi = inverse(b.g);
    Mat u = -(gi * b.u);
    return {std::move(gi), std::move(u), -(b.vstar * b.g)};
}

DualPointA coad_A(const GroupElemA& a, const DualPointA& l) {
    require(a.n() == l.n(), "coad_A: size mismatch");
    const Mat gi = inverse(a.g);
    Mat v = l.vstar * gi;
    Mat y = a.g * l.y * gi + a.u * v;
    return {std::move(y), std::move(v)};
}

DualPointA coad_isl(const GroupElemA& a, const DualPointA& l) {
    require(det(a.g) == Rat(1), "coad_isl: det g must be 1");
    DualPointA r = coad_A(a, l);
    const Rat shift = trace(r.y) / Rat(static_cast<long>(r.n()));
    for (std::size_t i = 0; i < r.n(); ++i) r.y(i, i) -= shift;
    return r;
}

DualPointB coad_B(const GroupElemB& b, const DualPointB& l) {
    require(b.n() == l.n(), "coad_B: size mismatch");
    const Mat gi = inverse(b.g);
    Mat w = l.wstar * gi;
    Mat xi = b.g * l.xi;
    Mat y = b.g * l.y * gi;
    y -= xi * b.vstar;
    y += b.u * w;
    return {std::move(y), std::move(w), std::move(xi)};
}

DualPointC coad_C(const GroupElemA& a, const DualPointC& l) {
    require(a.n() == l.n(), "coad_C: size mismatch");
    require(is_orthogonal(a.g), "coad_C: g is not orthogonal");
    const GroupElemB b(a.g, a.u, -a.u.transpose());
    DualPointB r = coad_B(b, l.embed());
    return {std::move(r.y), std::move(r.wstar)};
}

// ---------------------------------------------------------------------------

BElem::BElem(Mat x_, Mat u_, Mat vstar_) : x(std::move(x_)), u(std::move(u_)), vstar(std::move(vstar_)) {
    require(x.is_square() && x.rows() >= 1, "b element: x must be square");
    require(is_col(u, x.rows()), "b element: u must be an n x 1 column");
    require(is_row(vstar, x.rows()), "b element: v* must be a 1 x n row");
}

BElem BElem::zero(std::size_t n) { return {Mat(n, n), Mat(n, 1), Mat(1, n)}; }

BElem operator+(const BElem& a, const BElem& b) { return {a.x + b.x, a.u + b.u, a.vstar + b.vstar}; }
BElem operator-(const BElem& a, const BElem& b) { return {a.x - b.x, a.u - b.u, a.vstar - b.vstar}; }
BElem operator*(const Rat& s, const BElem& a) { return {s * a.x, s * a.u, s * a.vstar}; }

BElem bracket_b(const BElem& a, const BElem& b) {
    require(a.n() == b.n(), "bracket_b: dimension mismatch");
    return {commutator(a.x, b.x), a.x * b.u - b.x * a.u, a.vstar * b.x - b.vstar * a.x};
}

BElem theta(const BElem& a) { return {-a.x.transpose(), -a.vstar.transpose(), -a.u.transpose()}; }

Mat embed_M(const BElem& a) { return bordered(a.x, a.u, a.vstar, 0); }

Mat bracket_k(const Mat& a, const Mat& b) {
    require(a.is_square() && a.rows() == b.rows() && b.is_square() && a.rows() >= 2,
            "bracket_k: shape mismatch");
    const std::size_t n = a.rows() - 1;
    auto border = [n](const Mat& m) {
        Mat r(n + 1, n + 1);
        r.set_block(0, n, m.block(0, n, n, 1));
        r.set_block(n, 0, m.block(n, 0, 1, n));
        return r;
    };
    return commutator(a, b) - commutator(border(a), border(b));
}

Rat pairing(const DualPointB& l, const BElem& x) {
    require(l.n() == x.n(), "pairing: size mismatch");
    return trace(l.y * x.x) + scalar(l.wstar * x.u) + scalar(x.vstar * l.xi);
}

std::vector<BElem> basis(const AlgebraKind& kind) {
    const std::size_t n = kind.n;
    std::vector<BElem> out;
    out.reserve(kind.dim());
    auto push_x = [&](Mat x) { out.emplace_back(std::move(x), Mat(n, 1), Mat(1, n)); };

    switch (kind.family) {
        case Family::Aff:
        case Family::Glvv:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) push_x(Mat::elementary(n, i, j));
            break;
        case Family::Isl:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) push_x(Mat::elementary(n, i, j));
            for (std::size_t i = 0; i + 1 < n; ++i)
                push_x(Mat::elementary(n, i, i) - Mat::elementary(n, i + 1, i + 1));
            break;
        case Family::Io:
        case Family::Iso:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    push_x(Mat::elementary(n, i, j) - Mat::elementary(n, j, i));
            break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Mat v(1, n);
        if (kind.family == Family::Io || kind.family == Family::Iso) v(0, i) = -1;
        out.emplace_back(Mat(n, n), Mat::unit_col(n, i), std::move(v));
    }
    if (kind.family == Family::Glvv) {
        for (std::size_t i = 0; i < n; ++i) out.emplace_back(Mat(n, n), Mat(n, 1), Mat::unit_row(n, i));
    }
    return out;
}

Mat commutator_form(const AlgebraKind& kind, const DualPointB& l) {
    require(kind.n == l.n(), "commutator_form: size mismatch");
    const auto e = basis(kind);
    Mat m(e.size(), e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const Rat v = pairing(l, bracket_b(e[i], e[j]));
            m(i, j) = v;
            m(j, i) = -v;
        }
    }
    return m;
}

// ---------------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split() { return Rng(splitmix64(engine_() ^ 0xd1b54a32d192ed03ULL)); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

Mat sample_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(static_cast<long>(rng.uniform(-bound, bound)));
    return m;
}

Mat sample_skew(Rng& rng, std::size_t n, std::int64_t bound) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Rat(static_cast<long>(rng.uniform(-bound, bound)));
            m(j, i) = -m(i, j);
        }
    }
    return m;
}

Mat sample_gl(Rng& rng, std::size_t n, std::int64_t bound) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Mat g = sample_matrix(rng, n, n, bound);
        if (!det(g).is_zero()) return g;
    }
    throw std::runtime_error("degenerate rng");
}

Mat sample_sl(Rng& rng, std::size_t n, std::int64_t bound) {
    Mat g = Mat::identity(n);
    if (n < 2) return g;
    for (std::size_t t = 0; t < 2 * n; ++t) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
        if (j >= i) ++j;
        Mat tv = Mat::identity(n);
        tv(i, j) = Rat(static_cast<long>(rng.uniform(-bound, bound)));
        g = g * tv;
    }
    return g;
}

Mat cayley(const Mat& skew) {
    require(skew.is_skew(), "cayley: argument must be skew-symmetric");
    const Mat id = Mat::identity(skew.rows());
    return (id - skew) * inverse(id + skew);
}

Mat sample_so(Rng& rng, std::size_t n, std::int64_t bound) { return cayley(sample_skew(rng, n, bound)); }

Mat sample_o_minus(Rng& rng, std::size_t n, std::int64_t bound) {
    Mat g = sample_so(rng, n, bound);
    for (std::size_t i = 0; i < n; ++i) g(i, n - 1) = -g(i, n - 1);
    return g;
}

GroupElemA sample_group_a(const AlgebraKind& kind, Rng& rng, std::int64_t bound) {
    require(bound >= 1, "sample bound must be at least 1");
    const std::size_t n = kind.n;
    Mat g;
    switch (kind.family) {
        case Family::Aff:
        case Family::Glvv: g = sample_gl(rng, n, bound); break;
        case Family::Isl: g = sample_sl(rng, n, bound); break;
        case Family::Io: g = rng.coin() ? sample_o_minus(rng, n, bound) : sample_so(rng, n, bound); break;
        case Family::Iso: g = sample_so(rng, n, bound); break;
    }
    return {std::move(g), sample_matrix(rng, n, 1, bound)};
}

GroupElemB sample_group_b(std::size_t n, Rng& rng, std::int64_t bound) {
    require(bound >= 1, "sample bound must be at least 1");
    Mat g = sample_gl(rng, n, bound);
    Mat u = sample_matrix(rng, n, 1, bound);
    Mat v = sample_matrix(rng, 1, n, bound);
    return {std::move(g), std::move(u), std::move(v)};
}

GroupElem sample_group(const AlgebraKind& kind, Rng& rng, std::int64_t bound) {
    if (kind.family == Family::Glvv) return sample_group_b(kind.n, rng, bound);
    return sample_group_a(kind, rng, bound);
}

DualPointA sample_dual_a(std::size_t n, Rng& rng, std::int64_t bound) {
    Mat y = sample_matrix(rng, n, n, bound);
    Mat v = sample_matrix(rng, 1, n, bound);
    return {std::move(y), std::move(v)};
}

DualPointA sample_dual_isl(std::size_t n, Rng& rng, std::int64_t bound) {
    Mat y = sample_matrix(rng, n, n, bound);
    const Rat t = trace(y);
    y(n - 1, n - 1) -= t;
    return DualPointA::traceless(std::move(y), sample_matrix(rng, 1, n, bound));
}

DualPointB sample_dual_b(std::size_t n, Rng& rng, std::int64_t bound) {
    Mat y = sample_matrix(rng, n, n, bound);
    Mat w = sample_matrix(rng, 1, n, bound);
    Mat xi = sample_matrix(rng, n, 1, bound);
    return {std::move(y), std::move(w), std::move(xi)};
}

DualPointC sample_dual_c(std::size_t n, Rng& rng, std::int64_t bound) {
    Mat y = sample_skew(rng, n, bound);
    return {std::move(y), sample_matrix(rng, 1, n, bound)};
}

std::size_t index_of(const AlgebraKind& kind, std::size_t samples, Rng& rng, std::int64_t bound) {
    require(samples >= 1, "index_of: need at least one sample");
    std::size_t best = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        // Restriction b* -> s* is onto, so a random point of b* restricts to a
        // random point of the subalgebra's dual.
        const DualPointB l = sample_dual_b(kind.n, rng, bound);
        best = std::max(best, rank(commutator_form(kind, l)));
    }
    return kind.dim() - best;
}

}  // namespace coadinv
