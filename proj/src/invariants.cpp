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

#include "coadinv/invariants.hpp"

#include <stdexcept>
#include <string>

#include "coadinv/charpoly.hpp"

namespace coadinv {

namespace {

void check_k(std::size_t k, std::size_t n, const char* what) {
    if (k >= n) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(k) +
                                    " out of range for n = " + std::to_string(n));
    }
}

// Elementary symmetric polynomial sigma_k of the given values.
Rat elementary_symmetric(std::size_t k, const std::vector<Rat>& xs) {
    std::vector<Rat> e(k + 1);
    e[0] = 1;
    for (const auto& x : xs)
        for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * x;
    return e[k];
}

}  // namespace

Rat f_invariant(const DualPointA& l) {
    const CharData cd = char_data(l.y);
    const std::size_t n = l.n();
    std::vector<Mat> rows;
    rows.reserve(n);
    for (std::size_t k = n; k-- > 0;) rows.push_back(l.vstar * cd.B[k]);
    return det(vstack(rows));
}

Rat f_invariant_krylov(const DualPointA& l) {
    const std::size_t n = l.n();
    std::vector<Mat> rows(n);
    Mat r = l.vstar;
    for (std::size_t k = 0; k < n; ++k) {
        rows[n - 1 - k] = r;
        r = r * l.y;
    }
    return det(vstack(rows));
}

Rat f_bar(const DualPointA& l) {
    if (!trace(l.y).is_zero()) throw std::invalid_argument("f_bar: y must have zero trace");
    return f_invariant(l);
}

Mat phi_covariant(std::size_t k, const DualPointA& l) {
    check_k(k, l.n(), "phi_covariant");
    return l.vstar * char_data(l.y).B[k];
}

Rat F_invariant(std::size_t k, const DualPointB& l) {
    check_k(k, l.n(), "F_invariant");
    return scalar(l.wstar * char_data(l.y).B[k] * l.xi);
}

Rat F_invariant_bordered(std::size_t k, const DualPointB& l) {
    check_k(k, l.n(), "F_invariant_bordered");
    const Mat X = bordered(l.y, l.xi, l.wstar, 0);
    return char_coeff(X, k + 2) - char_coeff(l.y, k + 2);
}

std::vector<Rat> F_all(const DualPointB& l) {
    const CharData cd = char_data(l.y);
    std::vector<Rat> out;
    out.reserve(l.n());
    for (const auto& b : cd.B) out.push_back(scalar(l.wstar * b * l.xi));
    return out;
}

Rat psi_invariant(std::size_t k, const DualPointC& l) {
    check_k(2 * k, l.n(), "psi_invariant");
    return -scalar(l.wstar * char_data(l.y).B[2 * k] * l.wstar.transpose());
}

Mat exotic_border(const DualPointC& l) { return bordered(l.y, -l.wstar.transpose(), l.wstar, 0); }

Rat psi_invariant_bordered(std::size_t k, const DualPointC& l) {
    check_k(2 * k, l.n(), "psi_invariant_bordered");
    return char_coeff(exotic_border(l), 2 * k + 2) - char_coeff(l.y, 2 * k + 2);
}

Rat exotic_phi(const DualPointC& l) {
    if (l.n() % 2 == 0) throw std::invalid_argument("exotic invariant only for odd n");
    return pfaffian(exotic_border(l));
}

Mat pfaff_vector(const Mat& y) {
    if (!y.is_square() || y.rows() % 2 == 0) throw std::invalid_argument("pfaff_vector: n must be odd");
    if (!y.is_skew()) throw std::invalid_argument("pfaff_vector: y must be skew-symmetric");
    const std::size_t n = y.rows();
    Mat out(n, 1);
    for (std::size_t i = 0; i < n; ++i) out(i, 0) = exotic_phi(DualPointC(y, Mat::unit_row(n, i)));
    return out;
}

std::vector<Rat> generators_b(const DualPointB& l) { return F_all(l); }

std::vector<Rat> generators_c(Family family, const DualPointC& l) {
    if (family != Family::Io && family != Family::Iso) {
        throw std::invalid_argument("generators_c: algebra must be io or iso");
    }
    const std::size_t n = l.n();
    const std::size_t count = psi_count(n);
    const bool exotic = family == Family::Iso && n % 2 == 1;
    std::vector<Rat> out;
    for (std::size_t k = 0; k < count; ++k) {
        if (exotic && k + 1 == count) {
            out.push_back(exotic_phi(l));
        } else {
            out.push_back(psi_invariant(k, l));
        }
    }
    return out;
}

DualPointA slice_isl(const SlicePointISL& s) {
    const std::size_t n = s.n();
    Mat y(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) y(k + 1, k) = s.a[k];
    return DualPointA::traceless(std::move(y), s.b * Mat::unit_row(n, n - 1));
}

Rat t_slice(const SlicePointISL& s) {
    Rat t = pow(s.b, static_cast<unsigned>(s.n()));
    for (std::size_t k = 0; k < s.a.size(); ++k) t *= pow(s.a[k], static_cast<unsigned>(k + 1));
    return t;
}

DualPointC slice_so(const SlicePointSO& s, const AlgebraKind& kind) {
    if (kind.family != Family::Io && kind.family != Family::Iso) {
        throw std::invalid_argument("slice_so: algebra must be io or iso");
    }
    const std::size_t n = kind.n;
    if (s.a.size() != kind.ell()) {
        throw std::invalid_argument("slice_so: expected " + std::to_string(kind.ell()) +
                                    " block parameters for n = " + std::to_string(n));
    }
    Mat z(n, n);
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        z(2 * i, 2 * i + 1) = s.a[i];
        z(2 * i + 1, 2 * i) = -s.a[i];
    }
    return {std::move(z), s.a0 * Mat::unit_row(n, n - 1)};
}

Rat phi_slice(std::size_t k, const SlicePointSO& s, const AlgebraKind& kind) {
    const std::size_t ell = kind.ell();
    if (s.a.size() != ell) throw std::invalid_argument("phi_slice: parity mismatch");
    if (k > ell) throw std::invalid_argument("phi_slice: index out of range");
    if (k == ell && kind.odd()) {
        Rat r = s.a0;
        for (const auto& ai : s.a) r *= ai;
        return r;
    }
    std::vector<Rat> squares;
    squares.reserve(ell);
    for (const auto& ai : s.a) squares.push_back(ai * ai);
    return s.a0 * s.a0 * elementary_symmetric(k, squares);
}

CanonicalPair canonical_pair(std::size_t n) {
    Mat J(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) J(i + 1, i) = 1;
    return {std::move(J), Mat::unit_row(n, n - 1)};
}

OrbitNormalForm orbit_normalize(const DualPointB& l) {
    const std::size_t n = l.n();
    const CharData cd = char_data(l.y);
    std::vector<Mat> rows;
    rows.reserve(n);
    for (std::size_t k = n; k-- > 0;) rows.push_back(l.wstar * cd.B[k]);
    Mat g = vstack(rows);
    if (det(g).is_zero()) throw std::domain_error("not in open orbit");

    const CanonicalPair cp = canonical_pair(n);
    const Mat residual = cp.J - g * l.y * inverse(g);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (!residual(i, j).is_zero()) {
                throw std::logic_error("orbit_normalize: J - g y g^-1 is not supported on the last column");
            }
        }
    }
    GroupElemA a(std::move(g), residual.col(n - 1));
    DualPointB normal = coad_B(GroupElemB(a), l);
    return {std::move(a), std::move(normal)};
}

Mat pi_projection(const DualPointB& l) {
    const std::size_t n = l.n();
    const auto F = F_all(l);
    Mat out(n, 1);
    for (std::size_t k = 0; k < n; ++k) out(n - 1 - k, 0) = F[k];
    return out;
}

}  // namespace coadinv
