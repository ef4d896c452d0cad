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

#ifndef CENDA_WEYL_HPP
#define CENDA_WEYL_HPP

#include <functional>
#include <string>
#include <vector>

#include "cenda/conformal.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

/**
 * Element of the first Weyl algebra k<D, del | del D - D del = 1>, kept in
 * normal order (all D's to the left of all del's). Multiplication
 * renormal-orders eagerly through del^j D^k = sum_s C(j,s) [k]_s D^(k-s) del^(j-s).
 *
 * These operators act exactly on polynomial vectors and provide the
 * realization that cross-checks the closed product formula in conformal.hpp.
 */
class WeylOperator {
   public:
    WeylOperator() = default;

    static WeylOperator term(unsigned dpow, unsigned delpow, const Rat& c);
    static WeylOperator one() { return term(0, 0, 1); }

    const std::map<std::pair<unsigned, unsigned>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    WeylOperator operator-() const;
    WeylOperator& operator+=(const WeylOperator& o);
    WeylOperator& operator-=(const WeylOperator& o);
    friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
    friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
    friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
    friend WeylOperator operator*(const Rat& s, const WeylOperator& p);
    friend bool operator==(const WeylOperator& a, const WeylOperator& b) { return a.t_ == b.t_; }
    friend bool operator!=(const WeylOperator& a, const WeylOperator& b) { return !(a == b); }

    /// Exact action on a polynomial in D: differentiate, then multiply.
    Poly1 apply(const Poly1& p) const;

    std::string str() const;

   private:
    void add(unsigned dpow, unsigned delpow, const Rat& c);
    std::map<std::pair<unsigned, unsigned>, Rat> t_;
};

/// A vector in the free N-generated module over k[D].
class VNElement {
   public:
    explicit VNElement(std::size_t n) : coords_(n, Poly1(Var::D)) {}
    explicit VNElement(std::vector<Poly1> coords);

    static VNElement basis(std::size_t n, std::size_t i, const Poly1& f);  // f at slot i

    std::size_t size() const { return coords_.size(); }
    const Poly1& coord(std::size_t i) const { return coords_.at(i); }
    Poly1& coord(std::size_t i) { return coords_.at(i); }

    bool is_zero() const;
    int degree() const;  // max coordinate degree, -1 for zero

    friend VNElement operator+(VNElement a, const VNElement& b);
    friend VNElement operator-(VNElement a, const VNElement& b);
    friend bool operator==(const VNElement& a, const VNElement& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const VNElement& a, const VNElement& b) { return !(a == b); }

    VNElement scaled(const Rat& s) const;
    VNElement mul_D_power(unsigned k) const;

    std::string str() const;

   private:
    std::vector<Poly1> coords_;
};

using WeylMatrix = Matrix<WeylOperator>;

/**
 * Operator realization of an element at action index m: the monomial
 * D^p x^q (entrywise) becomes (-1)^p [m]_p D^q del^(m-p), acting on the free
 * module. Linear in the element; the x variable turns into multiplication
 * by D, the D factor lowers the action index with a sign.
 */
WeylMatrix realize(const ConformalElement& a, unsigned m);

/// Exact application of an operator matrix to a module vector.
VNElement apply(const WeylMatrix& op, const VNElement& v);

struct OracleReport {
    bool ok = true;
    std::string detail;
};

/**
 * The binding cross-check between the closed product formula and the
 * operator realization: evaluates realize(a (n) b, m) on each probe and
 * compares against sum_{s=0}^{n} (-1)^s C(n,s) realize(a, n-s) applied to
 * realize(b, m+s) applied to the probe. The right-hand side never calls
 * n_product, so agreement certifies the formula.
 */
OracleReport oracle_check_product(const ConformalElement& a, const ConformalElement& b, unsigned n, unsigned m,
                                  const std::vector<VNElement>& probes);

/// The 0-multiplication operator x |-> a (0) x, as a reusable evaluator.
std::function<ConformalElement(const ConformalElement&)> zero_mult_operator(const ConformalElement& a);

/**
 * Checks the anti-isomorphism between the left and right endomorphism
 * realizations at the level of module actions: for all action indices p (up
 * to the vanishing threshold) and all probes v,
 *   v (p) (tilde(a) (n) tilde(b))  ==  v (p) tilde({b (n) a}),
 * where the right conformal product is expanded through
 * v (p) (y (n) z) = sum_s C(p,s) (v (p-s) y) (n+s) z and the tilde action is
 * v (p) tilde(c) = sum_s (-1)^(p+s) D^s/s! (realize(c, p+s) v).
 */
OracleReport check_anti_iso(const ConformalElement& a, const ConformalElement& b, unsigned n,
                            const std::vector<VNElement>& probes);

/// Default probe family for a size-N module: D^k at each slot, k <= max_deg.
std::vector<VNElement> standard_probes(std::size_t n, unsigned max_deg);

}  // namespace cenda

#endif
