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

#include "cenda/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace cenda {

// ---------------------------------------------------------------- WeylOperator

WeylOperator WeylOperator::term(unsigned dpow, unsigned delpow, const Rat& c) {
    WeylOperator w;
    w.add(dpow, delpow, c);
    return w;
}

void WeylOperator::add(unsigned dpow, unsigned delpow, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find({dpow, delpow});
    if (it == t_.end()) {
        t_.emplace(std::make_pair(dpow, delpow), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

WeylOperator WeylOperator::operator-() const {
    WeylOperator r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
    for (const auto& [e, c] : o.t_) add(e.first, e.second, c);
    return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) { return *this += -o; }

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
    // (D^i del^j)(D^k del^l): commute del^j past D^k, one contraction per s.
    WeylOperator r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            const unsigned i = ea.first, j = ea.second, k = eb.first, l = eb.second;
            const unsigned smax = std::min(j, k);
            for (unsigned s = 0; s <= smax; ++s) {
                Rat c = ca * cb * Rat(binomial(j, s)) * Rat(falling_factorial(k, s));
                r.add(i + k - s, j + l - s, c);
            }
        }
    return r;
}

WeylOperator operator*(const Rat& s, const WeylOperator& p) {
    WeylOperator r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.t_) r.t_.emplace(e, s * c);
    return r;
}

Poly1 WeylOperator::apply(const Poly1& p) const {
    if (!p.is_zero() && p.var() != Var::D) throw std::invalid_argument("WeylOperator: operand must be in D");
    Poly1 out(Var::D);
    for (const auto& [e, c] : t_) {
        Poly1 q = p.derivative(e.second);
        if (q.is_zero()) continue;
        Poly1 shifted(Var::D);
        for (const auto& [pe, pc] : q.terms()) shifted += Poly1::monomial(Var::D, pe + e.first, c * pc);
        out += shifted;
    }
    return out;
}

std::string WeylOperator::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rat a = c;
        if (a.sign() < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        bool unit = e.first == 0 && e.second == 0;
        if (!a.is_one() || unit) os << a.str();
        bool star = !a.is_one();
        auto power = [&](const char* sym, unsigned k) {
            if (k == 0) return;
            if (star) os << "*";
            os << sym;
            if (k > 1) os << "^" << k;
            star = true;
        };
        power("D", e.first);
        power("del", e.second);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- VNElement

VNElement::VNElement(std::vector<Poly1> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("VNElement: empty coordinate vector");
    for (const auto& c : coords_)
        if (!c.is_zero() && c.var() != Var::D) throw std::invalid_argument("VNElement: coordinates must be in D");
}

VNElement VNElement::basis(std::size_t n, std::size_t i, const Poly1& f) {
    VNElement v(n);
    v.coord(i) = f;
    return v;
}

bool VNElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

int VNElement::degree() const {
    int d = -1;
    for (const auto& c : coords_) d = std::max(d, c.degree());
    return d;
}

VNElement operator+(VNElement a, const VNElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("VNElement: size mismatch");
    for (std::size_t i = 0; i < b.size(); ++i) a.coord(i) += b.coord(i);
    return a;
}

VNElement operator-(VNElement a, const VNElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("VNElement: size mismatch");
    for (std::size_t i = 0; i < b.size(); ++i) a.coord(i) -= b.coord(i);
    return a;
}

VNElement VNElement::scaled(const Rat& s) const {
    VNElement r(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coord(i) = s * coords_[i];
    return r;
}

VNElement VNElement::mul_D_power(unsigned k) const {
    VNElement r(coords_.size());
    Poly1 dk = Poly1::monomial(Var::D, k, 1);
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coord(i) = dk * coords_[i];
    return r;
}

std::string VNElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- realization

WeylMatrix realize(const ConformalElement& a, unsigned m) {
    const std::size_t N = a.size();
    WeylMatrix op(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (const auto& [e, c] : a.entry(i, j).terms()) {
                const unsigned p = e.first, q = e.second;
                if (p > m) continue;  // [m]_p vanishes
                Rat w = c * Rat(falling_factorial(m, p));
                if (p % 2 == 1) w = -w;
                op.at(i, j) += WeylOperator::term(q, m - p, w);
            }
    return op;
}

VNElement apply(const WeylMatrix& op, const VNElement& v) {
    if (op.cols() != v.size()) throw std::invalid_argument("apply: size mismatch");
    VNElement out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j) out.coord(i) += op.at(i, j).apply(v.coord(j));
    return out;
}

std::vector<VNElement> standard_probes(std::size_t n, unsigned max_deg) {
    std::vector<VNElement> probes;
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k <= max_deg; ++k)
            probes.push_back(VNElement::basis(n, i, Poly1::monomial(Var::D, k, 1)));
    return probes;
}

OracleReport oracle_check_product(const ConformalElement& a, const ConformalElement& b, unsigned n, unsigned m,
                                  const std::vector<VNElement>& probes) {
    if (a.size() != b.size()) throw std::invalid_argument("oracle_check_product: size mismatch");
    OracleReport rep;
    WeylMatrix lhs_op = realize(n_product(a, b, n), m);
    for (const VNElement& v : probes) {
        VNElement lhs = apply(lhs_op, v);
        VNElement rhs(v.size());
        for (unsigned s = 0; s <= n; ++s) {
            VNElement inner = apply(realize(b, m + s), v);
            VNElement term = apply(realize(a, n - s), inner).scaled(Rat(binomial(n, s)));
            if (s % 2 == 1) term = term.scaled(-1);
            rhs = rhs + term;
        }
        if (lhs != rhs) {
            rep.ok = false;
            std::ostringstream os;
            os << "composition mismatch at n=" << n << " m=" << m << " probe=" << v.str() << ": lhs=" << lhs.str()
               << " rhs=" << rhs.str();
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

std::function<ConformalElement(const ConformalElement&)> zero_mult_operator(const ConformalElement& a) {
    return [a](const ConformalElement& x) { return n_product(a, x, 0); };
}

namespace {

// v (p) tilde(c): the right-endomorphism action of the tilde image of c.
VNElement tilde_action(const ConformalElement& c, unsigned p, const VNElement& v) {
    VNElement acc(v.size());
    const int dc = c.deg_D();
    const int dv = v.degree();
    if (dc < 0 || dv < 0) return acc;
    for (unsigned s = 0; static_cast<int>(p + s) <= dc + dv; ++s) {
        VNElement t = apply(realize(c, p + s), v).mul_D_power(s).scaled(inv_factorial(s));
        if ((p + s) % 2 == 1) t = t.scaled(-1);
        acc = acc + t;
    }
    return acc;
}

}  // namespace

OracleReport check_anti_iso(const ConformalElement& a, const ConformalElement& b, unsigned n,
                            const std::vector<VNElement>& probes) {
    if (a.size() != b.size()) throw std::invalid_argument("check_anti_iso: size mismatch");
    OracleReport rep;
    ConformalElement rhs_elem = curly_product(b, a, n);
    for (const VNElement& v : probes) {
        int pmax = std::max(0, a.deg_D()) + std::max(0, b.deg_D()) + std::max(0, v.degree()) + static_cast<int>(n) + 2;
        for (unsigned p = 0; static_cast<int>(p) <= pmax; ++p) {
            // v (p) (tilde(a) (n) tilde(b)) via the right-module expansion.
            VNElement lhs(v.size());
            for (unsigned s = 0; s <= p; ++s) {
                VNElement inner = tilde_action(a, p - s, v);
                VNElement term = tilde_action(b, n + s, inner).scaled(Rat(binomial(p, s)));
                lhs = lhs + term;
            }
            VNElement rhs = tilde_action(rhs_elem, p, v);
            if (lhs != rhs) {
                rep.ok = false;
                std::ostringstream os;
                os << "anti-isomorphism mismatch at n=" << n << " p=" << p << " probe=" << v.str()
                   << ": lhs=" << lhs.str() << " rhs=" << rhs.str();
                rep.detail = os.str();
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace cenda
