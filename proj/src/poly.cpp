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

#include "cenda/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cenda {

char var_letter(Var v) {
    switch (v) {
        case Var::D: return 'D';
        case Var::X: return 'x';
        case Var::Y: return 'y';
        case Var::N: return 'n';
    }
    return '?';
}

// ---------------------------------------------------------------- Poly1

Poly1 Poly1::constant(Var v, const Rat& c) {
    Poly1 p(v);
    p.set(0, c);
    return p;
}

Poly1 Poly1::monomial(Var v, unsigned exp, const Rat& c) {
    Poly1 p(v);
    p.set(exp, c);
    return p;
}

void Poly1::set(unsigned exp, const Rat& v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_[exp] = v;
}

Var Poly1::join_var(const Poly1& a, const Poly1& b) {
    if (a.is_zero()) return b.var_;
    if (b.is_zero()) return a.var_;
    if (a.var_ != b.var_)
        throw std::invalid_argument(std::string("Poly1: variable mismatch (") + var_letter(a.var_) + " vs " +
                                    var_letter(b.var_) + ")");
    return a.var_;
}

Rat Poly1::coeff(unsigned exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

Rat Poly1::leading() const {
    if (is_zero()) throw std::invalid_argument("Poly1: leading coefficient of zero");
    return c_.rbegin()->second;
}

Poly1 Poly1::operator-() const {
    Poly1 r(var_);
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    var_ = join_var(*this, o);
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) { return *this += -o; }

Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 r(Poly1::join_var(a, b));
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            auto it = r.c_.find(ea + eb);
            if (it == r.c_.end()) {
                Rat v = va * vb;
                if (!v.is_zero()) r.c_.emplace(ea + eb, v);
            } else {
                it->second += va * vb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

Poly1 operator*(const Rat& s, const Poly1& p) {
    Poly1 r(p.var_);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : p.c_) r.c_.emplace(e, s * v);
    return r;
}

bool operator==(const Poly1& a, const Poly1& b) {
    if (a.c_.empty() && b.c_.empty()) return true;  // zero compares equal across tags
    return a.var_ == b.var_ && a.c_ == b.c_;
}

Poly1 Poly1::derivative(unsigned order) const {
    Poly1 r = *this;
    for (unsigned k = 0; k < order; ++k) {
        Poly1 d(r.var_);
        for (const auto& [e, v] : r.c_)
            if (e > 0) d.set(e - 1, Rat(static_cast<long>(e)) * v);
        r = d;
    }
    return r;
}

Rat Poly1::eval(const Rat& t) const {
    // Horner, jumping over sparse gaps with explicit powers.
    Rat acc = 0;
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) acc = acc * pow_rat(t, static_cast<unsigned long>(prev - static_cast<int>(it->first)));
        acc += it->second;
        prev = static_cast<int>(it->first);
    }
    if (prev > 0) acc = acc * pow_rat(t, static_cast<unsigned long>(prev));
    return acc;
}

Poly1 Poly1::shifted(const Rat& alpha) const {
    // Horner in (t + alpha).
    Poly1 lin(var_);
    lin.set(1, 1);
    lin.set(0, alpha);
    Poly1 acc(var_);
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0)
            for (int k = 0; k < prev - static_cast<int>(it->first); ++k) acc = acc * lin;
        acc += constant(var_, it->second);
        prev = static_cast<int>(it->first);
    }
    if (prev > 0)
        for (int k = 0; k < prev; ++k) acc = acc * lin;
    return acc;
}

Poly1 Poly1::retagged(Var v) const {
    Poly1 r(v);
    r.c_ = c_;
    return r;
}

Poly1 Poly1::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw std::invalid_argument("Poly1: division by zero polynomial");
    Var v = join_var(a, b);
    Poly1 q(v), r = a.is_zero() ? Poly1(v) : a;
    const Rat blead = b.leading();
    const int bdeg = b.degree();
    while (!r.is_zero() && r.degree() >= bdeg) {
        unsigned shift = static_cast<unsigned>(r.degree() - bdeg);
        Rat c = r.leading() / blead;
        Poly1 t = monomial(v, shift, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

bool Poly1::divides(const Poly1& b, const Poly1& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return divmod(a, b).second.is_zero();
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

namespace {

void append_coefficient(std::ostringstream& os, const Rat& c, bool leading_term, bool has_vars) {
    Rat a = c;
    if (a.sign() < 0) {
        os << (leading_term ? "-" : " - ");
        a = -a;
    } else if (!leading_term) {
        os << " + ";
    }
    if (!a.is_one() || !has_vars) {
        os << a.str();
        if (has_vars) os << "*";
    }
}

void append_power(std::ostringstream& os, char letter, unsigned e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << "*";
    os << letter;
    if (e > 1) os << "^" << e;
    first_factor = false;
}

}  // namespace

std::string Poly1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool leading_term = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        append_coefficient(os, it->second, leading_term, it->first > 0);
        bool first_factor = true;
        append_power(os, var_letter(var_), it->first, first_factor);
        leading_term = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rat& c) {
    Poly2 p;
    p.set(0, 0, c);
    return p;
}

Poly2 Poly2::monomial(unsigned dexp, unsigned xexp, const Rat& c) {
    Poly2 p;
    p.set(dexp, xexp, c);
    return p;
}

Poly2 Poly2::from_poly1_D(const Poly1& f) {
    if (!f.is_zero() && f.var() != Var::D)
        throw std::invalid_argument("Poly2::from_poly1_D: expected a polynomial in D");
    Poly2 p;
    for (const auto& [e, v] : f.terms()) p.set(e, 0, v);
    return p;
}

void Poly2::set(unsigned dexp, unsigned xexp, const Rat& v) {
    if (v.is_zero())
        c_.erase({dexp, xexp});
    else
        c_[{dexp, xexp}] = v;
}

bool Poly2::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == std::make_pair(0u, 0u));
}

int Poly2::deg_D() const {
    int d = -1;
    for (const auto& [e, v] : c_) d = std::max(d, static_cast<int>(e.first));
    return d;
}

int Poly2::deg_x() const {
    int d = -1;
    for (const auto& [e, v] : c_) d = std::max(d, static_cast<int>(e.second));
    return d;
}

Rat Poly2::coeff(unsigned dexp, unsigned xexp) const {
    auto it = c_.find({dexp, xexp});
    return it == c_.end() ? Rat(0) : it->second;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            std::pair<unsigned, unsigned> e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                Rat v = va * vb;
                if (!v.is_zero()) r.c_.emplace(e, v);
            } else {
                it->second += va * vb;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

Poly2 operator*(const Rat& s, const Poly2& p) {
    Poly2 r;
    if (s.is_zero()) return r;
    for (const auto& [e, v] : p.c_) r.c_.emplace(e, s * v);
    return r;
}

Poly2 Poly2::partial(Var v, unsigned order) const {
    if (v != Var::D && v != Var::X) throw std::invalid_argument("Poly2::partial: variable must be D or x");
    Poly2 r;
    for (const auto& [e, c] : c_) {
        unsigned exp = (v == Var::D) ? e.first : e.second;
        if (exp < order) continue;
        Rat f = Rat(falling_factorial(exp, order)) * c;
        if (v == Var::D)
            r.set(e.first - order, e.second, f);
        else
            r.set(e.first, e.second - order, f);
    }
    return r;
}

Poly2 Poly2::mul_D_power(unsigned k) const {
    Poly2 r;
    for (const auto& [e, c] : c_) r.c_.emplace(std::make_pair(e.first + k, e.second), c);
    return r;
}

void Poly2::add_term(unsigned dexp, unsigned xexp, const Rat& c) {
    if (c.is_zero()) return;
    auto it = c_.find({dexp, xexp});
    if (it == c_.end()) {
        c_.emplace(std::make_pair(dexp, xexp), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Poly1 Poly2::coeff_of_second(unsigned k) const {
    Poly1 r(Var::D);
    for (const auto& [e, c] : c_)
        if (e.second == k) r += Poly1::monomial(Var::D, e.first, c);
    return r;
}

std::string Poly2::str(char second_letter) const {
    if (is_zero()) return "0";
    // Terms in descending lexicographic order of (D-exponent, second-exponent).
    std::ostringstream os;
    bool leading_term = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool has_vars = e.first > 0 || e.second > 0;
        append_coefficient(os, c, leading_term, has_vars);
        bool first_factor = true;
        append_power(os, 'D', e.first, first_factor);
        append_power(os, second_letter, e.second, first_factor);
        leading_term = false;
    }
    return os.str();
}

Poly2 subst_second(const Poly2& p, const Poly2& replacement) {
    // Horner in the second variable: p = sum_k c_k(D) * s^k.
    int degs = p.deg_x();
    Poly2 acc;
    for (int k = degs; k >= 0; --k) {
        acc = acc * replacement;
        acc += Poly2::from_poly1_D(p.coeff_of_second(static_cast<unsigned>(k)));
    }
    return acc;
}

Poly2 embed_y_to_x_minus_D(const Poly1& q) {
    if (!q.is_zero() && q.var() == Var::D)
        throw std::invalid_argument("embed_y_to_x_minus_D: input already depends on D");
    Poly2 packed;
    for (const auto& [e, v] : q.terms()) packed += Poly2::monomial(0, e, v);
    Poly2 x_minus_D = Poly2::var_x() - Poly2::var_D();
    return subst_second(packed, x_minus_D);
}

Poly2 rewrite_x_as_D_plus_y(const Poly2& p) { return subst_second(p, Poly2::var_D() + Poly2::var_x()); }

Poly2 rewrite_y_as_x_minus_D(const Poly2& p) { return subst_second(p, Poly2::var_x() - Poly2::var_D()); }

std::optional<Poly2> div_exact_second(const Poly2& p, const Poly1& s) {
    if (s.is_zero()) throw std::invalid_argument("div_exact_second: zero divisor");
    const int sdeg = s.degree();
    const Rat slead = s.leading();
    Poly2 sdense;
    for (const auto& [e, v] : s.terms()) sdense += Poly2::monomial(0, e, v);

    Poly2 rem = p, quot;
    while (!rem.is_zero() && rem.deg_x() >= sdeg) {
        unsigned k = static_cast<unsigned>(rem.deg_x());
        Poly1 lead = rem.coeff_of_second(k);  // in D
        Poly2 qterm;
        for (const auto& [e, v] : lead.terms())
            qterm += Poly2::monomial(e, k - static_cast<unsigned>(sdeg), v / slead);
        quot += qterm;
        rem -= qterm * sdense;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

}  // namespace cenda
