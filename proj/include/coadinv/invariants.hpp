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
#include <vector>

#include "coadinv/liealg.hpp"
#include "coadinv/matrix.hpp"

namespace coadinv {

// ---------------------------------------------------------------------------
// Frozen slice signs. Each was resolved by evaluating both sides over a dense
// integer grid (see verify::resolve_sign) and is re-checked by the slices
// suite; none is taken on faith.

/// f restricted to the ISL slice equals +t for every n.
inline constexpr int kSignFVsT = +1;
/// psi_k restricted to the SO slice equals -phi_k for every (n, k), including
/// the top generator when n is even. For odd n the top psi_ell restricts to
/// -phi_ell^2.
inline constexpr int kSignPsiVsPhi = -1;
/// Pf([[y, -w*^T], [w*, 0]]) restricted to the SO slice equals -phi_ell
/// (odd n).
inline constexpr int kSignExoticVsSlice = -1;
/// Pf(Y)^2 = det(Y) = -psi_ell for odd n.
inline constexpr int kSignExoticSquareVsPsiTop = -1;

// ---------------------------------------------------------------------------
// Degree bounds in the coordinates of the dual, used by directional_coeff.

constexpr std::size_t degree_f(std::size_t n) { return n * (n + 1) / 2; }
constexpr std::size_t degree_F(std::size_t k) { return k + 2; }
constexpr std::size_t degree_psi(std::size_t k) { return 2 * k + 2; }
constexpr std::size_t degree_exotic(std::size_t n) { return (n + 1) / 2; }

// ---------------------------------------------------------------------------
// gl(n) x| V

/// f(y, v*) = det(v* B_{n-1}(y), v* B_{n-2}(y), ..., v*).
Rat f_invariant(const DualPointA& l);
/// Same value from the Krylov rows det(v* y^{n-1}, ..., v* y, v*).
Rat f_invariant_krylov(const DualPointA& l);
/// Restriction of f to sl(n) x V*; throws std::invalid_argument when
/// tr(y) != 0.
Rat f_bar(const DualPointA& l);
/// Covariant Phi_k(y, v*) = v* B_k(y), 0 <= k <= n-1.
Mat phi_covariant(std::size_t k, const DualPointA& l);

// ---------------------------------------------------------------------------
// gl(n) x| (V + V*)

/// F_k(y, w*, xi) = w* B_k(y) xi, 0 <= k <= n-1.
Rat F_invariant(std::size_t k, const DualPointB& l);
/// F_k from the bordered matrix X = [[y, xi], [w*, 0]]:
/// p_{k+2}(X) - p_{k+2}(y), where p_{n+1}(y) = 0.
Rat F_invariant_bordered(std::size_t k, const DualPointB& l);
/// (F_0, ..., F_{n-1}).
std::vector<Rat> F_all(const DualPointB& l);

// ---------------------------------------------------------------------------
// so(n) x| V

/// Number of psi generators kept by the invariant algebra: ell + 1.
inline std::size_t psi_count(std::size_t n) { return (n - 1) / 2 + 1; }

/// psi_k(y, w*) = -w* B_{2k}(y) w*^T, requires 2k <= n-1.
Rat psi_invariant(std::size_t k, const DualPointC& l);
/// p_{2k+2}(Y) - p_{2k+2}(y) with Y = [[y, -w*^T], [w*, 0]].
Rat psi_invariant_bordered(std::size_t k, const DualPointC& l);
/// Y = [[y, -w*^T], [w*, 0]], of size n+1.
Mat exotic_border(const DualPointC& l);
/// Pf(Y) for odd n; throws std::invalid_argument("exotic invariant only for
/// odd n") otherwise.
Rat exotic_phi(const DualPointC& l);
/// Column pf(y) with w* pf(y) = exotic_phi(y, w*) for every w*.
Mat pfaff_vector(const Mat& y);

/// Generators of the invariant algebra of the given algebra at a point,
/// in the order used by the CLI:
///   Aff: f; Isl: f; Glvv: F_0..F_{n-1};
///   Io: psi_0..psi_ell; Iso: psi_0..psi_{ell-1}, Phi (odd n) or psi_0..psi_ell.
std::vector<Rat> generators_b(const DualPointB& l);
std::vector<Rat> generators_c(Family family, const DualPointC& l);

// ---------------------------------------------------------------------------
// Slices

struct SlicePointISL {
    std::vector<Rat> a;  // a_1 .. a_{n-1}
    Rat b;
    [[nodiscard]] std::size_t n() const { return a.size() + 1; }
};

/// y = a_1 E_21 + ... + a_{n-1} E_{n,n-1}, v* = b e_n*.
DualPointA slice_isl(const SlicePointISL& s);
/// (prod_k a_k^k) b^n.
Rat t_slice(const SlicePointISL& s);

struct SlicePointSO {
    std::vector<Rat> a;  // block parameters a_1 .. a_ell
    Rat a0;              // coefficient of e_n*
};

/// Block-diagonal z with blocks [[0, a_i], [-a_i, 0]] in the top-left, zero
/// trailing rows (one for n = 2 ell + 1, two for n = 2 ell + 2), and
/// w* = a0 e_n*. Throws on a parity mismatch between n and s.a.size().
DualPointC slice_so(const SlicePointSO& s, const AlgebraKind& kind);
/// a0^2 sigma_k(a_1^2, ..., a_ell^2) for k < ell or even n; a0 a_1 ... a_ell
/// for k = ell with odd n.
Rat phi_slice(std::size_t k, const SlicePointSO& s, const AlgebraKind& kind);

// ---------------------------------------------------------------------------
// Orbits of b* under A

/// Lower shift J (J_{i+1,i} = 1) and e_n*.
struct CanonicalPair {
    Mat J;
    Mat enstar;
};
CanonicalPair canonical_pair(std::size_t n);

struct OrbitNormalForm {
    GroupElemA a;       // Ad*_B(g, u, 0) l = normal
    DualPointB normal;  // (J, e_n*, g xi)
};

/// The unique (g, u) taking l to (J, e_n*, .). Rows of g are
/// w* B_{n-1}(y), ..., w* B_0(y); u solves u e_n* = J - g y g^-1.
/// Throws std::domain_error("not in open orbit") when f(y, w*) = 0 and
/// std::logic_error if J - g y g^-1 is not supported on the last column.
OrbitNormalForm orbit_normalize(const DualPointB& l);

/// pi(l) = sum_k F_k(l) e_{n-k}.
Mat pi_projection(const DualPointB& l);

}  // namespace coadinv
