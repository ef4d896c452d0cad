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

#ifndef CENDA_POLY_HPP
#define CENDA_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cenda/rat.hpp"

namespace cenda {

/// Variable tags for univariate polynomials. D generates the coefficient
/// Hopf algebra, x is the endomorphism-symbol variable, y abbreviates x - D,
/// and n is the integer parameter of distribution weights.
enum class Var : std::uint8_t { D, X, Y, N };

char var_letter(Var v);

/**
 * Sparse univariate polynomial with exact rational coefficients.
 *
 * Zero coefficients are never stored, so equality is structural. The zero
 * polynomial is variable-agnostic in arithmetic: it combines with any tag.
 * degree() returns -1 for the zero polynomial (the "minus infinity" sentinel).
 */
class Poly1 {
   public:
    explicit Poly1(Var v = Var::D) : var_(v) {}

    static Poly1 constant(Var v, const Rat& c);
    static Poly1 monomial(Var v, unsigned exp, const Rat& c);
    static Poly1 variable(Var v) { return monomial(v, 1, 1); }

    Var var() const { return var_; }
    const std::map<unsigned, Rat>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || c_.rbegin()->first == 0; }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }

    Rat coeff(unsigned exp) const;
    Rat leading() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Rat& s, const Poly1& p);
    friend bool operator==(const Poly1& a, const Poly1& b);
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 derivative(unsigned order = 1) const;
    Rat eval(const Rat& t) const;

    /// p(t + alpha), expanded exactly.
    Poly1 shifted(const Rat& alpha) const;

    Poly1 retagged(Var v) const;
    Poly1 monic() const;

    /// Euclidean division over the rational coefficient field. b must be nonzero.
    static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
    static bool divides(const Poly1& b, const Poly1& a);  // b | a
    static Poly1 gcd(Poly1 a, Poly1 b);                   // monic, gcd(0,0) = 0

    std::string str() const;

   private:
    void set(unsigned exp, const Rat& v);
    static Var join_var(const Poly1& a, const Poly1& b);

    Var var_;
    std::map<unsigned, Rat> c_;
};

/**
 * Sparse bivariate polynomial in the commuting pair (D, x), exact rational
 * coefficients, canonical zero-free form. The same container carries
 * polynomials in (D, y) during the change of variables y = x - D; functions
 * that reinterpret the second slot say so explicitly.
 */
class Poly2 {
   public:
    Poly2() = default;

    static Poly2 constant(const Rat& c);
    static Poly2 monomial(unsigned dexp, unsigned xexp, const Rat& c);
    static Poly2 var_D() { return monomial(1, 0, 1); }
    static Poly2 var_x() { return monomial(0, 1, 1); }
    static Poly2 from_poly1_D(const Poly1& f);  // f(D), f tagged D (or zero)

    const std::map<std::pair<unsigned, unsigned>, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;
    int deg_D() const;
    int deg_x() const;
    Rat coeff(unsigned dexp, unsigned xexp) const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rat& s, const Poly2& p);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    /// Iterated exact partial derivative in D or x.
    Poly2 partial(Var v, unsigned order) const;

    /// Multiply by D^k (exponent shift).
    Poly2 mul_D_power(unsigned k) const;

    /// Coefficient of (second variable)^k, as a polynomial in D.
    Poly1 coeff_of_second(unsigned k) const;

    /// Accumulate c * D^dexp * x^xexp without building a temporary.
    void add_term(unsigned dexp, unsigned xexp, const Rat& c);

    std::string str(char second_letter = 'x') const;

   private:
    void set(unsigned dexp, unsigned xexp, const Rat& v);
    std::map<std::pair<unsigned, unsigned>, Rat> c_;
};

/// Substitute the second variable by an arbitrary bivariate value (Horner).
Poly2 subst_second(const Poly2& p, const Poly2& replacement);

/// q(y) with y := x - D, i.e. the canonical embedding of univariate data
/// into the bivariate model.
Poly2 embed_y_to_x_minus_D(const Poly1& q);

/// Rewrite p(D, x) in the variables (D, y) with x = D + y. The result's
/// second slot is the y-exponent.
Poly2 rewrite_x_as_D_plus_y(const Poly2& p);

/// Inverse change of variables: second slot read as y, substituted by x - D.
Poly2 rewrite_y_as_x_minus_D(const Poly2& p);

/// Exact division of p (bivariate, second slot matching s's variable role)
/// by a nonzero univariate s in the second variable. Returns nothing if the
/// division leaves a remainder.
std::optional<Poly2> div_exact_second(const Poly2& p, const Poly1& s);

}  // namespace cenda

#endif
