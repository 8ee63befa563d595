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

#include "coadinv/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace coadinv {

namespace {

std::string shape(const Mat& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const Mat& a, const char* what) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(what) + ": matrix is not square (" + shape(a) + ")");
    }
}

// Integer matrix obtained by scaling each row by the lcm of its denominators.
// The product of the scales is returned in `scale`.
std::vector<std::vector<mpz_class>> integer_rows(const Mat& a, mpz_class& scale) {
    std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
    scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_class d = a(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m[i][j] = a(i, j).num() * (l / a(i, j).den());
        }
        scale *= l;
    }
    return m;
}

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps and
// `last_pivot` is the final leading minor when the matrix has full row rank.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& m, std::size_t cols, int& sign,
                    mpz_class& last_pivot) {
    const std::size_t rows = m.size();
    sign = 1;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix entry count does not match shape");
    }
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::diag(std::span<const Rat> d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::unit_row(std::size_t n, std::size_t i) {
    Mat m(1, n);
    m(0, i) = 1;
    return m;
}

Mat Mat::unit_col(std::size_t n, std::size_t i) {
    Mat m(n, 1);
    m(i, 0) = 1;
    return m;
}

Mat Mat::elementary(std::size_t n, std::size_t i, std::size_t j) {
    Mat m(n, n);
    m(i, j) = 1;
    return m;
}

Mat Mat::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block outside matrix");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Mat::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Mat::is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix sum: shape mismatch " + shape(*this) + " vs " + shape(o));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("matrix difference: shape mismatch " + shape(*this) + " vs " + shape(o));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

Mat& Mat::operator*=(const Rat& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Mat operator-(const Mat& a) {
    Mat r = a;
    r *= Rat(-1);
    return r;
}

Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch " + shape(a) + " * " + shape(b));
    }
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Rat trace(const Mat& a) {
    require_square(a, "trace");
    Rat t;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Rat scalar(const Mat& a) {
    if (a.rows() != 1 || a.cols() != 1) throw std::invalid_argument("scalar: expected 1x1, got " + shape(a));
    return a(0, 0);
}

Mat mat_pow(const Mat& a, unsigned k) {
    require_square(a, "mat_pow");
    Mat r = Mat::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

Rat det(const Mat& a) {
    require_square(a, "det");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    mpz_class scale;
    auto m = integer_rows(a, scale);
    int sign = 1;
    mpz_class pivot;
    if (bareiss(m, n, sign, pivot) < n) return 0;
    return Rat(pivot * sign, scale);
}

std::size_t rank(const Mat& a) {
    if (a.empty()) return 0;
    mpz_class scale;
    auto m = integer_rows(a, scale);
    int sign = 1;
    mpz_class pivot;
    return bareiss(m, a.cols(), sign, pivot);
}

Mat inverse(const Mat& a) {
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    Mat m = a;
    Mat inv = Mat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw std::domain_error("singular");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        const Rat pinv = Rat(1) / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= pinv;
            inv(c, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            const Rat f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rat pfaffian(const Mat& a) {
    require_square(a, "pfaffian");
    if (a.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd size " + shape(a));
    if (!a.is_skew()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
    const std::size_t n = a.rows();
    Mat m = a;
    Rat result = 1;
    // Skew congruence elimination: each step splits off a 2x2 block
    // [[0, p], [-p, 0]] using unimodular congruences, so Pf scales by p.
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && m(k, piv).is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != k + 1) {
            // Simultaneous row/column swap is a congruence by a transposition.
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
            result = -result;
        }
        const Rat p = m(k, k + 1);
        result *= p;
        for (std::size_t i = k + 2; i < n; ++i) {
            // row_i += c * row_{k+1}, col_i += c * col_{k+1} kills m(k, i).
            const Rat c = -m(k, i) / p;
            if (!c.is_zero()) {
                for (std::size_t j = 0; j < n; ++j) m(i, j) += c * m(k + 1, j);
                for (std::size_t j = 0; j < n; ++j) m(j, i) += c * m(j, k + 1);
            }
            // row_i += d * row_k, col_i += d * col_k kills m(k+1, i).
            const Rat d = m(k + 1, i) / p;
            if (!d.is_zero()) {
                for (std::size_t j = 0; j < n; ++j) m(i, j) += d * m(k, j);
                for (std::size_t j = 0; j < n; ++j) m(j, i) += d * m(j, k);
            }
        }
    }
    return result;
}

Mat vstack(std::span<const Mat> parts) {
    if (parts.empty()) return {};
    const std::size_t cols = parts.front().cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += p.rows();
    }
    Mat out(rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows();
    }
    return out;
}

}  // namespace coadinv
