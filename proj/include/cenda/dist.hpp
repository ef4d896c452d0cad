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

#ifndef CENDA_DIST_HPP
#define CENDA_DIST_HPP

#include <map>
#include <string>
#include <vector>

#include "cenda/conformal.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

/**
 * A symbolic formal distribution with polynomial weight: the triple
 * (weight w(n), constant coefficient matrix A, integer shift s) denotes the
 * doubly-infinite series
 *
 *     sum_{m in Z} w(m) * A * t^(m+s) * z^(-m-1)
 *
 * over the loop algebra of N x N matrices. Canonical form: the zero
 * distribution is (0, 0, 0); otherwise the weight is monic (its leading
 * coefficient is pushed into the matrix), which makes equality structural.
 * These symbols realize the current subalgebra and carry the residue-formula
 * products in closed form.
 */
class DistSymbol {
   public:
    DistSymbol(Poly1 weight, Matrix<Rat> coeff, int shift);

    static DistSymbol zero(std::size_t n);
    static DistSymbol constant(const Matrix<Rat>& coeff) { return DistSymbol(Poly1::constant(Var::N, 1), coeff, 0); }

    std::size_t size() const { return coeff_.rows(); }
    const Poly1& weight() const { return weight_; }
    const Matrix<Rat>& coeff() const { return coeff_; }
    int shift() const { return shift_; }
    bool is_zero() const { return weight_.is_zero(); }

    friend bool operator==(const DistSymbol& a, const DistSymbol& b);
    friend bool operator!=(const DistSymbol& a, const DistSymbol& b) { return !(a == b); }

    std::string str() const;

   private:
    Poly1 weight_;       // in the variable n
    Matrix<Rat> coeff_;  // constant N x N matrix
    int shift_;
};

/**
 * A finite formal sum of weighted distributions, canonically collected by
 * shift: each block (shift s, P(n)) with P an N x N matrix of weight
 * polynomials denotes sum_m P(m) t^(m+s) z^(-m-1). Sums arise naturally:
 * d/dz changes the shift, so the image of a general k[D]-coefficient mixes
 * shifts.
 */
class DistSum {
   public:
    explicit DistSum(std::size_t n);
    explicit DistSum(const DistSymbol& s);

    std::size_t size() const { return n_; }
    const std::map<int, Matrix<Poly1>>& blocks() const { return blocks_; }
    bool is_zero() const { return blocks_.empty(); }

    DistSum& add_block(int shift, const Matrix<Poly1>& weights);
    friend DistSum operator+(DistSum a, const DistSum& b);
    friend bool operator==(const DistSum& a, const DistSum& b) { return a.n_ == b.n_ && a.blocks_ == b.blocks_; }
    friend bool operator!=(const DistSum& a, const DistSum& b) { return !(a == b); }

    std::string str() const;

   private:
    std::size_t n_;
    std::map<int, Matrix<Poly1>> blocks_;
};

/**
 * Closed form of the m-th residue product on single symbols:
 *   weight'(j) = sum_{i=0}^{m} (-1)^(m-i) C(m,i) a.weight(i) b.weight(j+m-i),
 *   coeff' = a.coeff * b.coeff,  shift' = a.shift + b.shift + m.
 * verify_residue_product below certifies this against a windowed series
 * expansion that extracts the residue directly.
 */
DistSymbol residue_n_product(const DistSymbol& a, const DistSymbol& b, unsigned m);

/// Bilinear extension of the residue product to sums.
DistSum residue_n_product(const DistSum& a, const DistSum& b, unsigned m);

/// The derivation d/dz on symbols: block (s, P(n)) |-> (s-1, -n P(n-1)).
DistSum dz_action(const DistSum& a);

/// Least m0 with all residue products of index >= m0 vanishing.
unsigned symbol_locality_bound(const DistSum& a, const DistSum& b);

/// Embedding of a current-algebra generator f(D) * A as a formal
/// distribution: f(d/dz) applied to the constant symbol of A.
DistSum curr_embed(const Poly1& f, const Matrix<Rat>& A);

/// Embedding of a full current-algebra element (entries in k[D], x-degree 0).
DistSum curr_embed_element(const ConformalElement& e);

/**
 * Brute-force confirmation of the closed product formula: expands both
 * series over the exponent window [-W, W], multiplies against the binomial
 * kernel, extracts the residue coefficient, and compares with the closed
 * form on the interior of the window. The window must exceed every degree
 * and shift involved; violations raise invalid_argument.
 */
bool verify_residue_product(const DistSum& a, const DistSum& b, unsigned m, int window, std::string* detail = nullptr);

}  // namespace cenda

#endif
