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

#include "cenda/rng.hpp"

namespace cenda {

Rat SweepRng::nonzero_rat() {
    for (int tries = 0; tries < 64; ++tries) {
        Rat r = rat();
        if (!r.is_zero()) return r;
    }
    return Rat(1);
}

Poly1 SweepRng::poly1(Var tag, unsigned max_deg) {
    Poly1 p(tag);
    for (unsigned e = 0; e <= max_deg; ++e) p += Poly1::monomial(tag, e, rat());
    return p;
}

Poly1 SweepRng::nonzero_poly1(Var tag, unsigned max_deg) {
    for (int tries = 0; tries < 64; ++tries) {
        Poly1 p = poly1(tag, max_deg);
        if (!p.is_zero()) return p;
    }
    return Poly1::constant(tag, 1);
}

Poly2 SweepRng::poly2(unsigned max_dD, unsigned max_dx) {
    Poly2 p;
    for (unsigned d = 0; d <= max_dD; ++d)
        for (unsigned x = 0; x <= max_dx; ++x) p += Poly2::monomial(d, x, rat());
    return p;
}

ConformalElement SweepRng::element(std::size_t n, unsigned max_dD, unsigned max_dx) {
    Matrix<Poly2> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned dd = uniform(0, max_dD);
            unsigned dx = uniform(0, max_dx);
            m.at(i, j) = poly2(dd, dx);
        }
    return ConformalElement(m);
}

ConformalElement SweepRng::nonzero_element(std::size_t n, unsigned max_dD, unsigned max_dx) {
    for (int tries = 0; tries < 64; ++tries) {
        ConformalElement e = element(n, max_dD, max_dx);
        if (!e.is_zero()) return e;
    }
    return ConformalElement::identity(n);
}

Matrix<Poly1> SweepRng::pmat(std::size_t n, unsigned max_deg) {
    Matrix<Poly1> m(n, n, Poly1(Var::Y));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = poly1(Var::Y, uniform(0, max_deg));
    return m;
}

Matrix<Poly1> SweepRng::nonsingular_pmat(std::size_t n, unsigned max_deg) {
    for (int tries = 0; tries < 256; ++tries) {
        Matrix<Poly1> m = pmat(n, max_deg);
        if (!m.det().is_zero()) return m;
    }
    return Matrix<Poly1>::identity(n, Poly1::constant(Var::Y, 1));
}

Matrix<Poly1> SweepRng::unimodular(std::size_t n, unsigned max_deg) {
    Matrix<Poly1> m = Matrix<Poly1>::identity(n, Poly1::constant(Var::Y, 1));
    if (n == 1) {
        m.at(0, 0) = Poly1::constant(Var::Y, nonzero_rat());
        return m;
    }
    for (int step = 0; step < 4; ++step) {
        std::size_t i = uniform(0, static_cast<unsigned>(n - 1));
        std::size_t j = uniform(0, static_cast<unsigned>(n - 2));
        if (j >= i) ++j;  // j != i
        Poly1 f = poly1(Var::Y, max_deg);
        bool row = uniform(0, 1) == 0;
        if (row) {
            // row_i += f * row_j
            for (std::size_t c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
        } else {
            for (std::size_t r = 0; r < n; ++r) m.at(r, i) += f * m.at(r, j);
        }
    }
    return m;
}

Matrix<Rat> SweepRng::rat_matrix(std::size_t n) {
    Matrix<Rat> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rat();
    return m;
}

DistSymbol SweepRng::symbol(std::size_t n, unsigned max_wdeg, int max_shift) {
    Poly1 w = poly1(Var::N, uniform(0, max_wdeg));
    Matrix<Rat> c = rat_matrix(n);
    int shift = static_cast<int>(uniform_int(-max_shift, max_shift));
    return DistSymbol(w, c, shift);
}

VNElement SweepRng::vn(std::size_t n, unsigned max_deg) {
    VNElement v(n);
    for (std::size_t i = 0; i < n; ++i) v.coord(i) = poly1(Var::D, uniform(0, max_deg));
    return v;
}

}  // namespace cenda
