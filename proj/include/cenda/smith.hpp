/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CENDA_SMITH_HPP
#define CENDA_SMITH_HPP

#include <optional>
#include <string>
#include <vector>

#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

/**
 * Smith normal form over a univariate polynomial ring: U * A * V = S with
 * U, V unimodular (constant nonzero determinant) and S diagonal, the nonzero
 * diagonal entries monic and forming a divisibility chain f1 | f2 | ... | fr,
 * zeros (if any) last. The invariant factors are uniquely determined.
 */
struct SNFResult {
    Matrix<Poly1> U;
    Matrix<Poly1> S;
    Matrix<Poly1> V;
    std::vector<Poly1> invariant_factors;  // the nonzero diagonal entries, in order
};

/**
 * Classical elimination: pivots chosen by minimal degree, ties broken by
 * lowest (row, col); after diagonalization a gcd-absorption pass repairs the
 * divisibility chain to a fixpoint. Naive elimination over k[t] is prone to
 * intermediate degree swell, so any entry exceeding `degree_cap` aborts with
 * a limit error.
 */
SNFResult smith_normal_form(const Matrix<Poly1>& A, unsigned degree_cap = 256);

/// True iff det(A) is a nonzero constant.
bool is_unimodular(const Matrix<Poly1>& A);

/// Result of a right-module membership test: either a factor M with
/// M * Q == E exactly, or a human-readable refusal naming the failing
/// divisibility.
template <class MatT>
struct MembershipResult {
    bool member = false;
    std::optional<MatT> factor;
    std::string refusal;
};

/**
 * Decides E in M * Q (left factor M over the same polynomial ring), for
 * square E, Q of equal size with det Q != 0. Reduction through the Smith
 * form of Q: with U*Q*V = S, the equation E = M*Q transposes to
 * (E*V) = (M*U^-1)*S, so membership holds iff column j of E*V is divisible
 * by the j-th diagonal entry of S; then M = (E*V / S) * U.
 */
MembershipResult<Matrix<Poly1>> right_module_membership(const Matrix<Poly1>& E, const Matrix<Poly1>& Q);

/**
 * Same reduction with the entries of E drawn from k[D][y] (packed as
 * bivariate polynomials whose second slot is the y-exponent) and Q over k[y].
 * The coefficient ring k[D] rides along as scalars: the divisibility tests
 * divide by monic-normalized univariate polynomials only.
 */
MembershipResult<Matrix<Poly2>> right_module_membership_ext(const Matrix<Poly2>& E, const Matrix<Poly1>& Q);

}  // namespace cenda

#endif
