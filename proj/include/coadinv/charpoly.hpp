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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coadinv/matrix.hpp"

namespace coadinv {

/// Characteristic data of a square matrix x of size n, with
///   det(tI - x) = t^n - p_1 t^{n-1} - ... - p_n
/// and B_k the trace-form gradient of p_{k+1}:
///   B_0 = I,  B_k = x B_{k-1} - p_k I  (1 <= k <= n-1).
struct CharData {
    std::size_t n = 0;
    std::vector<Rat> p;  // p[k-1] = p_k, k = 1..n
    std::vector<Mat> B;  // B[k], k = 0..n-1

    /// p_k with the conventions p_0 = -1 and p_k = 0 for k > n. The p_0 value
    /// makes det(tI - x) = -sum_k p_k t^{n-k} hold uniformly.
    [[nodiscard]] Rat coeff(std::size_t k) const;
};

/// Faddeev-LeVerrier recursion p_k = tr(x B_{k-1}) / k. Throws
/// std::invalid_argument for a non-square or empty x.
CharData char_data(const Mat& x);

/// p_k(x) alone, with the same conventions as CharData::coeff.
Rat char_coeff(const Mat& x, std::size_t k);

/// A polynomial map evaluated exactly at rational points. Points of any
/// space are carried as matrices of a fixed shape.
using PolyMap = std::function<Rat(const Mat&)>;

/// Coefficients c_0..c_D of t -> F(base + t dir), assuming the true degree in
/// t is at most `degree_bound`. Built from the values at t = 0, 1, ..., D by
/// Newton divided differences, then expanded to the monomial basis.
std::vector<Rat> directional_coeffs(const PolyMap& F, const Mat& base, const Mat& dir,
                                    std::size_t degree_bound);

/// Coefficient of t^order in F(base + t dir). An order above the bound is 0.
Rat directional_coeff(const PolyMap& F, const Mat& base, const Mat& dir, std::size_t order,
                      std::size_t degree_bound);

struct BorderedWitness {
    std::string family;  // "p1", "p_k+2" or "p_n+1"
    std::size_t k = 0;
    Rat lhs;
    Rat rhs;
};

struct BorderedCheck {
    bool ok = true;
    std::optional<BorderedWitness> witness;  // first failure
};

/// Builds X = [[y, v], [wstar, a]] of size n+1.
Mat bordered(const Mat& y, const Mat& v, const Mat& wstar, const Rat& a);

/// Checks the characteristic coefficients of X = [[y, v], [wstar, a]] against
///   p_1(X)     = p_1(y) + a
///   p_{k+2}(X) = p_{k+2}(y) - a p_{k+1}(y) + wstar B_k(y) v   (0 <= k <= n-2)
///   p_{n+1}(X) = -a p_n(y) + wstar B_{n-1}(y) v
BorderedCheck bordered_char_identities(const Mat& y, const Mat& v, const Mat& wstar, const Rat& a);

}  // namespace coadinv
