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
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "coadinv/rational.hpp"

namespace coadinv {

/// Dense row-major matrix of exact rationals. Row vectors are 1 x n and
/// column vectors n x 1; there is no separate vector type.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
    /// Row-by-row literal, e.g. Mat{{1, 2}, {3, 4}}. Rows must be equal length.
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat identity(std::size_t n);
    static Mat diag(std::span<const Rat> d);
    /// Row vector e_i* (1 x n), 0-based i.
    static Mat unit_row(std::size_t n, std::size_t i);
    /// Column vector e_i (n x 1), 0-based i.
    static Mat unit_col(std::size_t n, std::size_t i);
    /// E_ij with a single 1 at (i, j), 0-based.
    static Mat elementary(std::size_t n, std::size_t i, std::size_t j);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool empty() const { return entries_.empty(); }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Rat> entries() const { return entries_; }
    [[nodiscard]] Mat row(std::size_t i) const;
    [[nodiscard]] Mat col(std::size_t j) const;
    [[nodiscard]] Mat transpose() const;
    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_skew() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Rat& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator-(const Mat& a);
    friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
    friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
    friend Mat operator*(const Mat& a, const Mat& b);

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Exact product; throws std::invalid_argument when a.cols() != b.rows().
Mat mat_mul(const Mat& a, const Mat& b);
/// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);
Rat trace(const Mat& a);
/// Scalar of a 1 x 1 matrix.
Rat scalar(const Mat& a);
Mat mat_pow(const Mat& a, unsigned k);

/// Fraction-free (Bareiss) determinant. Rows are scaled to integers first,
/// so every intermediate division is an exact integer division.
Rat det(const Mat& a);
/// Rank over Q, by the same fraction-free elimination.
std::size_t rank(const Mat& a);
/// Gauss-Jordan inverse over Q; throws std::domain_error("singular").
Mat inverse(const Mat& a);
/// Pfaffian of an even skew-symmetric matrix with Pf([[0,a],[-a,0]]) = a.
/// Throws std::invalid_argument on odd size or a non-skew argument.
Rat pfaffian(const Mat& a);

/// Stacks 1 x n rows (or any equal-width matrices) vertically.
Mat vstack(std::span<const Mat> parts);

}  // namespace coadinv
