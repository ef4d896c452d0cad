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

// Test-only helpers: independent oracles kept deliberately naive so they
// share no code path with the implementations they check.

#ifndef CENDA_TEST_UTIL_HPP
#define CENDA_TEST_UTIL_HPP

#include <optional>
#include <vector>

#include "cenda/conformal.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"
#include "cenda/rat.hpp"

namespace cenda_test {

using cenda::ConformalElement;
using cenda::Matrix;
using cenda::Poly1;
using cenda::Poly2;
using cenda::Rat;
using cenda::Var;

// Dense Gaussian elimination over the rationals: returns any solution of
// A x = b, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Brute-force membership of E in {M * Q} with deg(M entries) <= deg_cap,
// solved as a linear system in the unknown coefficients of M. Univariate
// version over the variable y.
inline bool brute_force_right_membership(const Matrix<Poly1>& E, const Matrix<Poly1>& Q, unsigned deg_cap) {
    const std::size_t n = Q.rows();
    int qdeg = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qdeg = std::max(qdeg, Q.at(i, j).degree());
    const unsigned out_deg = deg_cap + static_cast<unsigned>(qdeg);

    // Unknowns: m[i][k][e], entry (i,k) coefficient of y^e.
    const std::size_t unknowns = n * n * (deg_cap + 1);
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (unsigned e = 0; e <= out_deg; ++e) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (std::size_t k = 0; k < n; ++k)
                    for (unsigned f = 0; f <= deg_cap; ++f) {
                        if (f > e) continue;
                        // coefficient of y^e in m_{ik} * Q_{kj}: m-coeff f times Q-coeff e-f
                        Rat qc = Q.at(k, j).coeff(e - f);
                        if (qc.is_zero()) continue;
                        row[(i * n + k) * (deg_cap + 1) + f] += qc;
                    }
                A.push_back(std::move(row));
                rhs.push_back(E.at(i, j).coeff(e));
            }
    return solve_linear(std::move(A), std::move(rhs)).has_value();
}

// Bivariate version: E over k[D][y] (second slot = y), M unknown over
// k[D][y] with both partial degrees capped.
inline bool brute_force_right_membership2(const Matrix<Poly2>& E, const Matrix<Poly1>& Q, unsigned ddeg_cap,
                                          unsigned ydeg_cap) {
    const std::size_t n = Q.rows();
    int qdeg = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qdeg = std::max(qdeg, Q.at(i, j).degree());
    const unsigned out_y = ydeg_cap + static_cast<unsigned>(qdeg);

    const std::size_t per_entry = (ddeg_cap + 1) * (ydeg_cap + 1);
    const std::size_t unknowns = n * n * per_entry;
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> rhs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (unsigned de = 0; de <= ddeg_cap; ++de)
                for (unsigned ye = 0; ye <= out_y; ++ye) {
                    std::vector<Rat> row(unknowns, Rat(0));
                    for (std::size_t k = 0; k < n; ++k)
                        for (unsigned f = 0; f <= ydeg_cap && f <= ye; ++f) {
                            Rat qc = Q.at(k, j).coeff(ye - f);
                            if (qc.is_zero()) continue;
                            row[(i * n + k) * per_entry + de * (ydeg_cap + 1) + f] += qc;
                        }
                    A.push_back(std::move(row));
                    rhs.push_back(E.at(i, j).coeff(de, ye));
                }
    return solve_linear(std::move(A), std::move(rhs)).has_value();
}

// All products of all bracketings of words of length <= n over the
// generators, every index below the pairwise locality bound. Exponential;
// for cross-checking the left-normed enumeration at tiny lengths only.
inline void all_bracketings_rec(const std::vector<ConformalElement>& gens, unsigned len,
                                std::vector<ConformalElement>& out) {
    if (len == 1) {
        out = gens;
        return;
    }
    out.clear();
    for (unsigned left = 1; left < len; ++left) {
        std::vector<ConformalElement> ls, rs;
        all_bracketings_rec(gens, left, ls);
        all_bracketings_rec(gens, len - left, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) {
                unsigned bound = cenda::locality_bound(l, r);
                for (unsigned m = 0; m < bound; ++m) {
                    ConformalElement p = cenda::n_product(l, r, m);
                    if (!p.is_zero()) out.push_back(p);
                }
            }
    }
}

inline std::vector<ConformalElement> all_bracketings_span(const std::vector<ConformalElement>& gens, unsigned n) {
    std::vector<ConformalElement> out;
    for (unsigned len = 1; len <= n; ++len) {
        std::vector<ConformalElement> words;
        all_bracketings_rec(gens, len, words);
        for (auto& w : words)
            if (!w.is_zero()) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace cenda_test

#endif
