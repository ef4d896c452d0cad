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

#ifndef CENDA_CONFORMAL_HPP
#define CENDA_CONFORMAL_HPP

#include <string>
#include <vector>

#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

/**
 * An element of the conformal endomorphism algebra of the free N-generated
 * k[D]-module, modeled concretely as an N x N matrix over k[D, x].
 *
 * Values are immutable in spirit: all operations return fresh elements, and
 * equality is structural on the canonical (zero-free) entry form. The D-action
 * multiplies every entry by D.
 */
class ConformalElement {
   public:
    explicit ConformalElement(Matrix<Poly2> mat);

    static ConformalElement zero(std::size_t n);
    static ConformalElement identity(std::size_t n);
    static ConformalElement x_identity(std::size_t n);                       // x * Id
    static ConformalElement matrix_unit(std::size_t n, std::size_t i, std::size_t j);
    static ConformalElement scalar(std::size_t n, const Poly2& p);           // p * Id

    std::size_t size() const { return n_; }
    const Matrix<Poly2>& mat() const { return m_; }
    const Poly2& entry(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    bool is_zero() const;
    int deg_D() const;  // max over entries, -1 for the zero element
    int deg_x() const;

    ConformalElement operator-() const;
    ConformalElement& operator+=(const ConformalElement& o);
    ConformalElement& operator-=(const ConformalElement& o);
    friend ConformalElement operator+(ConformalElement a, const ConformalElement& b) { return a += b; }
    friend ConformalElement operator-(ConformalElement a, const ConformalElement& b) { return a -= b; }
    friend bool operator==(const ConformalElement& a, const ConformalElement& b);
    friend bool operator!=(const ConformalElement& a, const ConformalElement& b) { return !(a == b); }

    ConformalElement scaled(const Rat& s) const;
    ConformalElement mul_D_power(unsigned k) const;
    ConformalElement mul_poly1_D(const Poly1& f) const;  // H-action by f(D)
    ConformalElement mul_x_power(unsigned k) const;

    /// Multi-line canonical form: "N=<size>" then "[i,j]: <poly>" per nonzero
    /// entry, row-major, 1-based indices, trailing newline.
    std::string str() const;
    /// Same statements joined by "; " on a single line (for key-value output).
    std::string str_inline() const;

   private:
    std::size_t n_;
    Matrix<Poly2> m_;
};

/// The n-th bilinear product. On D-free elements it is A(x) * d^n/dx^n B(x);
/// the general case extends that by the two structure rules for the D-action
/// (left argument: index-lowering with a sign; right argument: Leibniz-style
/// expansion). Works entirely through the closed monomial formula; the
/// operator realization in weyl.hpp provides the independent cross-check.
ConformalElement n_product(const ConformalElement& a, const ConformalElement& b, unsigned n);

/// D-action: every entry multiplied by D.
ConformalElement d_action(const ConformalElement& a);

/// Least bound n0 such that a (n) b == 0 for all n >= n0. Starts from the
/// a-priori bound deg_D(a) + deg_D(b) + deg_x(b) + 1 and tightens downward by
/// direct evaluation.
unsigned locality_bound(const ConformalElement& a, const ConformalElement& b);

/// Right-justified product {a (n) b} = sum_{s>=0} (-1)^(n+s) D^s/s! (a (n+s) b);
/// the sum terminates at the locality bound.
ConformalElement curly_product(const ConformalElement& a, const ConformalElement& b, unsigned n);

/// (a _alpha b) = sum_n alpha^n/n! (a (n) b); with curly=true the summands are
/// the curly products instead.
ConformalElement alpha_product(const ConformalElement& a, const ConformalElement& b, const Rat& alpha, bool curly);

/// Scalar building blocks for size-1 elements (handy in tests and the CLI).
ConformalElement element_1x1(const Poly2& p);

}  // namespace cenda

#endif
