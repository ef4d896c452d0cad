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

#include "cenda/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace cenda {

ConformalElement::ConformalElement(Matrix<Poly2> mat) : n_(mat.rows()), m_(std::move(mat)) {
    if (!m_.is_square()) throw std::invalid_argument("ConformalElement: matrix must be square");
}

ConformalElement ConformalElement::zero(std::size_t n) { return ConformalElement(Matrix<Poly2>(n, n)); }

ConformalElement ConformalElement::identity(std::size_t n) {
    return ConformalElement(Matrix<Poly2>::identity(n, Poly2::constant(1)));
}

ConformalElement ConformalElement::x_identity(std::size_t n) {
    return ConformalElement(Matrix<Poly2>::identity(n, Poly2::var_x()));
}

ConformalElement ConformalElement::matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix<Poly2> m(n, n);
    m.at(i, j) = Poly2::constant(1);
    return ConformalElement(m);
}

ConformalElement ConformalElement::scalar(std::size_t n, const Poly2& p) {
    Matrix<Poly2> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
    return ConformalElement(m);
}

bool ConformalElement::is_zero() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!m_.at(i, j).is_zero()) return false;
    return true;
}

int ConformalElement::deg_D() const {
    int d = -1;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d = std::max(d, m_.at(i, j).deg_D());
    return d;
}

int ConformalElement::deg_x() const {
    int d = -1;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d = std::max(d, m_.at(i, j).deg_x());
    return d;
}

ConformalElement ConformalElement::operator-() const {
    Matrix<Poly2> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = -m_.at(i, j);
    return ConformalElement(m);
}

ConformalElement& ConformalElement::operator+=(const ConformalElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("ConformalElement: size mismatch");
    m_ += o.m_;
    return *this;
}

ConformalElement& ConformalElement::operator-=(const ConformalElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("ConformalElement: size mismatch");
    m_ -= o.m_;
    return *this;
}

bool operator==(const ConformalElement& a, const ConformalElement& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

ConformalElement ConformalElement::scaled(const Rat& s) const {
    Matrix<Poly2> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = s * m_.at(i, j);
    return ConformalElement(m);
}

ConformalElement ConformalElement::mul_D_power(unsigned k) const {
    Matrix<Poly2> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = m_.at(i, j).mul_D_power(k);
    return ConformalElement(m);
}

ConformalElement ConformalElement::mul_poly1_D(const Poly1& f) const {
    Poly2 f2 = Poly2::from_poly1_D(f);
    Matrix<Poly2> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = f2 * m_.at(i, j);
    return ConformalElement(m);
}

ConformalElement ConformalElement::mul_x_power(unsigned k) const {
    Poly2 xk = Poly2::monomial(0, k, 1);
    Matrix<Poly2> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = xk * m_.at(i, j);
    return ConformalElement(m);
}

std::string ConformalElement::str() const {
    std::ostringstream os;
    os << "N=" << n_ << "\n";
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!m_.at(i, j).is_zero()) os << "[" << i + 1 << "," << j + 1 << "]: " << m_.at(i, j).str() << "\n";
    return os.str();
}

std::string ConformalElement::str_inline() const {
    std::ostringstream os;
    os << "N=" << n_;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!m_.at(i, j).is_zero()) os << "; [" << i + 1 << "," << j + 1 << "]: " << m_.at(i, j).str();
    return os.str();
}

namespace {

// Memoized combinatorial factors: the inner product loop below hits the same
// small (n, k) pairs constantly, and mpz construction is not free. Rows are
// filled eagerly up to the requested column, so a stored value is always
// final.
const Rat& binom_memo(unsigned n, unsigned k) {
    thread_local std::vector<std::vector<Rat>> tab;
    if (n >= tab.size()) tab.resize(n + 1);
    auto& row = tab[n];
    if (k >= row.size()) {
        std::size_t old = row.size();
        row.resize(k + 1);
        for (std::size_t j = old; j <= k; ++j) row[j] = Rat(binomial(n, j));
    }
    return row[k];
}

const Rat& falling_memo(unsigned n, unsigned k) {
    thread_local std::vector<std::vector<Rat>> tab;
    if (n >= tab.size()) tab.resize(n + 1);
    auto& row = tab[n];
    if (k >= row.size()) {
        std::size_t old = row.size();
        row.resize(k + 1);
        for (std::size_t j = old; j <= k; ++j) row[j] = Rat(falling_factorial(n, j));
    }
    return row[k];
}

// The n-th product of two scalar monomial aggregates. For monomials
// a = D^p x^alpha, b = D^q x^beta:
//   a (n) b = (-1)^p sum_{j=0}^{q} C(q,j) [n]_{p+j} D^{q-j} x^alpha d^{n-p-j}/dx (x^beta)
// where [n]_k is the falling factorial, zero for k > n.
Poly2 scalar_n_product(const Poly2& a, const Poly2& b, unsigned n) {
    Poly2 out;
    for (const auto& [ea, ca] : a.terms()) {
        const unsigned p = ea.first, alpha = ea.second;
        if (p > n) continue;  // every falling factorial below vanishes
        for (const auto& [eb, cb] : b.terms()) {
            const unsigned q = eb.first, beta = eb.second;
            const Rat cab = (p % 2 == 1) ? -(ca * cb) : ca * cb;
            for (unsigned j = 0; j <= q; ++j) {
                if (p + j > n) break;  // falling factorial vanishes from here on
                const unsigned d = n - p - j;
                if (d > beta) continue;  // x-derivative kills the monomial
                // each memo reference is consumed before the next lookup can
                // grow the table under it
                Rat c = cab;
                {
                    const Rat& f = binom_memo(q, j);
                    if (!f.is_one()) c *= f;
                }
                {
                    const Rat& f = falling_memo(n, p + j);
                    if (!f.is_one()) c *= f;
                }
                {
                    const Rat& f = falling_memo(beta, d);
                    if (!f.is_one()) c *= f;
                }
                out.add_term(q - j, alpha + beta - d, c);
            }
        }
    }
    return out;
}

}  // namespace

ConformalElement n_product(const ConformalElement& a, const ConformalElement& b, unsigned n) {
    if (a.size() != b.size()) throw std::invalid_argument("n_product: size mismatch");
    const std::size_t N = a.size();
    Matrix<Poly2> m(N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            Poly2 acc;
            for (std::size_t j = 0; j < N; ++j) acc += scalar_n_product(a.entry(i, j), b.entry(j, k), n);
            m.at(i, k) = acc;
        }
    return ConformalElement(m);
}

ConformalElement d_action(const ConformalElement& a) { return a.mul_D_power(1); }

unsigned locality_bound(const ConformalElement& a, const ConformalElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("locality_bound: size mismatch");
    if (a.is_zero() || b.is_zero()) return 0;
    unsigned bound = static_cast<unsigned>(a.deg_D() + b.deg_D() + b.deg_x()) + 1;
    while (bound > 0 && n_product(a, b, bound - 1).is_zero()) --bound;
    return bound;
}

ConformalElement curly_product(const ConformalElement& a, const ConformalElement& b, unsigned n) {
    if (a.size() != b.size()) throw std::invalid_argument("curly_product: size mismatch");
    const unsigned bound = locality_bound(a, b);
    ConformalElement acc = ConformalElement::zero(a.size());
    for (unsigned s = 0; n + s < bound; ++s) {
        ConformalElement term = n_product(a, b, n + s).mul_D_power(s).scaled(inv_factorial(s));
        if ((n + s) % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

ConformalElement alpha_product(const ConformalElement& a, const ConformalElement& b, const Rat& alpha, bool curly) {
    if (a.size() != b.size()) throw std::invalid_argument("alpha_product: size mismatch");
    const unsigned bound = locality_bound(a, b);
    ConformalElement acc = ConformalElement::zero(a.size());
    for (unsigned n = 0; n < bound; ++n) {
        Rat w = pow_rat(alpha, n) * inv_factorial(n);
        if (w.is_zero()) continue;
        ConformalElement term = curly ? curly_product(a, b, n) : n_product(a, b, n);
        acc += term.scaled(w);
    }
    return acc;
}

ConformalElement element_1x1(const Poly2& p) {
    Matrix<Poly2> m(1, 1);
    m.at(0, 0) = p;
    return ConformalElement(m);
}

}  // namespace cenda
