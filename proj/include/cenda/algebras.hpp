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

#ifndef CENDA_ALGEBRAS_HPP
#define CENDA_ALGEBRAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cenda/conformal.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

/**
 * One of the named algebras: the full endomorphism algebra of size N, its
 * current subalgebra (x-degree zero), or the right-multiple subalgebra cut
 * out by a nonsingular univariate matrix Q (members are exactly the left
 * polynomial-matrix multiples of Q(x - D)).
 */
struct AlgebraSpec {
    enum class Kind { CendN, CurrN, CendNQ };

    Kind kind;
    std::size_t n;
    std::optional<Matrix<Poly1>> q;  // in y; present iff kind == CendNQ

    static AlgebraSpec cend(std::size_t n);
    static AlgebraSpec curr(std::size_t n);
    static AlgebraSpec cendq(std::size_t n, Matrix<Poly1> q);  // validates: square, size n, det != 0

    std::string str() const;
};

/// Q(x - D): the subalgebra's defining matrix carried into the bivariate model.
Matrix<Poly2> q_embedded(const AlgebraSpec& spec);

struct MemberVerdict {
    bool member = false;
    /// For the Q-cut subalgebra: a factor W over k[D, x] with e = W * Q(x - D).
    std::optional<Matrix<Poly2>> witness;
    std::string detail;
};

/**
 * Membership test. Full algebra: always true. Current subalgebra: true iff
 * every entry has x-degree zero. Q-cut subalgebra: rewrite entries in the
 * variables (D, y) with y = x - D and decide divisibility by Q(y) through
 * the Smith-form reduction, with k[D] riding along as scalar coefficients;
 * the returned witness is mapped back to (D, x) and re-verified exactly.
 */
MemberVerdict membership(const AlgebraSpec& spec, const ConformalElement& e);

/**
 * Generator-level unit certificate: e (0) p == p for every probe p, and
 * e (n) e == 0 for 1 <= n below the locality bound. The probe list stands in
 * for "all elements": passing a generating set certifies the unit property
 * on the whole algebra, because left 0-multiplication is a homomorphism of
 * right modules. Callers choose the probes; this is a certificate relative
 * to them, not a quantifier over the infinite algebra.
 */
bool is_unit(const ConformalElement& e, const std::vector<ConformalElement>& probes);

/// e (n) e == delta_{n,0} e for all n.
bool is_idempotent(const ConformalElement& e);

/**
 * Default generator sets: full algebra {x*Id} + matrix units; current
 * subalgebra the matrix units; Q-cut subalgebra {x^k E_ij Q(x-D) : k in 0,1}.
 * Every returned element is a member. For the Q-cut case the set is a
 * working choice validated by span-growth tests up to a degree cap, not a
 * proven minimal generating set.
 */
std::vector<ConformalElement> default_generators(const AlgebraSpec& spec);

}  // namespace cenda

#endif
