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

#include "coadinv/charpoly.hpp"

#include <stdexcept>

namespace coadinv {

Rat CharData::coeff(std::size_t k) const {
    if (k == 0) return -1;
    if (k > n) return 0;
    return p[k - 1];
}

CharData char_data(const Mat& x) {
    if (!x.is_square() || x.rows() == 0) {
        throw std::invalid_argument("char_data: expected a non-empty square matrix");
    }
    CharData cd;
    cd.n = x.rows();
    cd.p.reserve(cd.n);
    cd.B.reserve(cd.n);
    cd.B.push_back(Mat::identity(cd.n));
    for (std::size_t k = 1; k <= cd.n; ++k) {
        const Mat xb = x * cd.B[k - 1];
        const Rat pk = trace(xb) / Rat(static_cast<long>(k));
        cd.p.push_back(pk);
        if (k < cd.n) {
            Mat next = xb;
            for (std::size_t i = 0; i < cd.n; ++i) next(i, i) -= pk;
            cd.B.push_back(std::move(next));
        }
    }
    return cd;
}

Rat char_coeff(const Mat& x, std::size_t k) { return char_data(x).coeff(k); }

std::vector<Rat> directional_coeffs(const PolyMap& F, const Mat& base, const Mat& dir,
                                    std::size_t degree_bound) {
    if (base.rows() != dir.rows() || base.cols() != dir.cols()) {
        throw std::invalid_argument("directional_coeffs: base and direction shapes differ");
    }
    const std::size_t m = degree_bound + 1;
    // Divided differences at integer nodes 0..D.
    std::vector<Rat> dd(m);
    for (std::size_t i = 0; i < m; ++i) {
        dd[i] = F(base + dir * Rat(static_cast<long>(i)));
    }
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(level));
        }
    }
    // Horner-style expansion of the Newton form
    //   dd[0] + dd[1] t + dd[2] t (t-1) + ... into monomial coefficients.
    std::vector<Rat> c(m);
    for (std::size_t i = m; i-- > 0;) {
        // c <- c * (t - i) + dd[i]
        const Rat node = Rat(static_cast<long>(i));
        for (std::size_t j = m - 1; j > 0; --j) c[j] = c[j - 1] - node * c[j];
        c[0] = dd[i] - node * c[0];
    }
    return c;
}

Rat directional_coeff(const PolyMap& F, const Mat& base, const Mat& dir, std::size_t order,
                      std::size_t degree_bound) {
    if (order > degree_bound) return 0;
    return directional_coeffs(F, base, dir, degree_bound)[order];
}

Mat bordered(const Mat& y, const Mat& v, const Mat& wstar, const Rat& a) {
    const std::size_t n = y.rows();
    if (!y.is_square() || v.rows() != n || v.cols() != 1 || wstar.rows() != 1 || wstar.cols() != n) {
        throw std::invalid_argument("bordered: dimension mismatch");
    }
    Mat X(n + 1, n + 1);
    X.set_block(0, 0, y);
    X.set_block(0, n, v);
    X.set_block(n, 0, wstar);
    X(n, n) = a;
    return X;
}

BorderedCheck bordered_char_identities(const Mat& y, const Mat& v, const Mat& wstar, const Rat& a) {
    const Mat X = bordered(y, v, wstar, a);
    const std::size_t n = y.rows();
    const CharData cy = char_data(y);
    const CharData cx = char_data(X);
    BorderedCheck out;
    auto fail = [&](std::string family, std::size_t k, Rat lhs, Rat rhs) {
        out.ok = false;
        out.witness = BorderedWitness{std::move(family), k, std::move(lhs), std::move(rhs)};
    };

    if (cx.coeff(1) != cy.coeff(1) + a) {
        fail("p1", 0, cx.coeff(1), cy.coeff(1) + a);
        return out;
    }
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        const Rat rhs = cy.coeff(k + 2) - a * cy.coeff(k + 1) + scalar(wstar * cy.B[k] * v);
        if (cx.coeff(k + 2) != rhs) {
            fail("p_k+2", k, cx.coeff(k + 2), rhs);
            return out;
        }
    }
    const Rat top = -a * cy.coeff(n) + scalar(wstar * cy.B[n - 1] * v);
    if (cx.coeff(n + 1) != top) fail("p_n+1", n - 1, cx.coeff(n + 1), top);
    return out;
}

}  // namespace coadinv
