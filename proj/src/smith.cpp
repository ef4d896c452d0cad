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

#include "cenda/smith.hpp"

#include <stdexcept>

#include "cenda/errors.hpp"

namespace cenda {

namespace {

Var mat_var(const Matrix<Poly1>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return m.at(i, j).var();
    return Var::Y;
}

// Working state: S = U * A * V is maintained by mirroring every row
// operation on U and every column operation on V.
struct Elim {
    Matrix<Poly1> S, U, V;
    unsigned cap;

    Elim(const Matrix<Poly1>& A, unsigned degree_cap)
        : S(A),
          U(Matrix<Poly1>::identity(A.rows(), Poly1::constant(mat_var(A), 1))),
          V(Matrix<Poly1>::identity(A.cols(), Poly1::constant(mat_var(A), 1))),
          cap(degree_cap) {}

    void guard(const Poly1& p) const {
        if (p.degree() > static_cast<int>(cap))
            throw limit_error("smith_normal_form: intermediate degree " + std::to_string(p.degree()) +
                              " exceeds cap " + std::to_string(cap));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }

    // row a -= q * row b
    void add_row(std::size_t a, std::size_t b, const Poly1& q) {
        for (std::size_t j = 0; j < S.cols(); ++j) {
            S.at(a, j) -= q * S.at(b, j);
            guard(S.at(a, j));
        }
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
    }

    // col a -= q * col b
    void add_col(std::size_t a, std::size_t b, const Poly1& q) {
        for (std::size_t i = 0; i < S.rows(); ++i) {
            S.at(i, a) -= q * S.at(i, b);
            guard(S.at(i, a));
        }
        for (std::size_t i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
    }

    void scale_row(std::size_t a, const Rat& c) {
        for (std::size_t j = 0; j < S.cols(); ++j) S.at(a, j) = c * S.at(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = c * U.at(a, j);
    }

    // Minimal-degree nonzero entry in the trailing block, ties by (row, col).
    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        int best = -1;
        for (std::size_t i = k; i < S.rows(); ++i)
            for (std::size_t j = k; j < S.cols(); ++j) {
                const Poly1& p = S.at(i, j);
                if (p.is_zero()) continue;
                if (best < 0 || p.degree() < best) {
                    best = p.degree();
                    pi = i;
                    pj = j;
                }
            }
        return best >= 0;
    }

    // Clears row k and column k against the pivot at (k, k); the pivot is
    // re-selected whenever a remainder survives, so degrees strictly drop.
    void clear_cross(std::size_t k) {
        while (true) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(k, pi, pj)) return;
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < S.rows(); ++i) {
                if (S.at(i, k).is_zero()) continue;
                add_row(i, k, Poly1::divmod(S.at(i, k), S.at(k, k)).first);
                if (!S.at(i, k).is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < S.cols(); ++j) {
                if (S.at(k, j).is_zero()) continue;
                add_col(j, k, Poly1::divmod(S.at(k, j), S.at(k, k)).first);
                if (!S.at(k, j).is_zero()) clean = false;
            }
            if (clean) return;
        }
    }
};

}  // namespace

SNFResult smith_normal_form(const Matrix<Poly1>& A, unsigned degree_cap) {
    Elim e(A, degree_cap);
    const std::size_t steps = std::min(A.rows(), A.cols());

    for (std::size_t k = 0; k < steps; ++k) e.clear_cross(k);

    // Monic normalization of the diagonal.
    for (std::size_t k = 0; k < steps; ++k)
        if (!e.S.at(k, k).is_zero()) e.scale_row(k, e.S.at(k, k).leading().inverse());

    // Divisibility-chain repair: an adjacent pair (a, b) with a !| b is
    // replaced by (gcd, lcm) via elementary operations confined to its two
    // rows and columns, iterated to a fixpoint. Each absorption strictly
    // lowers the degree of the earlier entry, so the pass terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < steps; ++k) {
            if (e.S.at(k, k).is_zero() || e.S.at(k + 1, k + 1).is_zero()) continue;
            if (Poly1::divides(e.S.at(k, k), e.S.at(k + 1, k + 1))) continue;
            changed = true;
            e.add_col(k, k + 1, Poly1::constant(e.S.at(k, k).var(), -1));  // col k += col k+1
            // Euclid on the two rows within column k.
            while (!e.S.at(k + 1, k).is_zero()) {
                if (e.S.at(k, k).degree() > e.S.at(k + 1, k).degree()) e.swap_rows(k, k + 1);
                e.add_row(k + 1, k, Poly1::divmod(e.S.at(k + 1, k), e.S.at(k, k)).first);
            }
            // The gcd divides everything left in the block, so this is exact.
            auto [q, rem] = Poly1::divmod(e.S.at(k, k + 1), e.S.at(k, k));
            if (!rem.is_zero()) throw std::logic_error("smith_normal_form: absorption step left a remainder");
            e.add_col(k + 1, k, q);
            e.scale_row(k, e.S.at(k, k).leading().inverse());
            e.scale_row(k + 1, e.S.at(k + 1, k + 1).leading().inverse());
        }
    }

    SNFResult r{e.U, e.S, e.V, {}};
    for (std::size_t k = 0; k < steps; ++k)
        if (!e.S.at(k, k).is_zero()) r.invariant_factors.push_back(e.S.at(k, k));
    return r;
}

bool is_unimodular(const Matrix<Poly1>& A) {
    if (!A.is_square()) throw std::invalid_argument("is_unimodular: matrix must be square");
    Poly1 d = A.det();
    return !d.is_zero() && d.is_constant();
}

MembershipResult<Matrix<Poly1>> right_module_membership(const Matrix<Poly1>& E, const Matrix<Poly1>& Q) {
    if (!E.is_square() || !Q.is_square() || E.rows() != Q.rows())
        throw std::invalid_argument("right_module_membership: E, Q must be square of equal size");
    if (Q.det().is_zero()) throw std::invalid_argument("right_module_membership: singular Q rejected");

    const std::size_t n = Q.rows();
    SNFResult snf = smith_normal_form(Q);
    Matrix<Poly1> G = E * snf.V;

    MembershipResult<Matrix<Poly1>> out;
    Matrix<Poly1> P(n, n, Poly1(Var::Y));
    for (std::size_t j = 0; j < n; ++j) {
        const Poly1& s = snf.S.at(j, j);
        for (std::size_t i = 0; i < n; ++i) {
            auto [q, rem] = Poly1::divmod(G.at(i, j), s);
            if (!rem.is_zero()) {
                out.refusal = "column " + std::to_string(j + 1) + " not divisible by invariant factor " + s.str() +
                              " (remainder " + rem.str() + " at row " + std::to_string(i + 1) + ")";
                return out;
            }
            P.at(i, j) = q;
        }
    }
    Matrix<Poly1> M = P * snf.U;
    if (!(M * Q == E)) throw std::logic_error("right_module_membership: witness verification failed");
    out.member = true;
    out.factor = M;
    return out;
}

MembershipResult<Matrix<Poly2>> right_module_membership_ext(const Matrix<Poly2>& E, const Matrix<Poly1>& Q) {
    if (!E.is_square() || !Q.is_square() || E.rows() != Q.rows())
        throw std::invalid_argument("right_module_membership_ext: E, Q must be square of equal size");
    if (Q.det().is_zero()) throw std::invalid_argument("right_module_membership_ext: singular Q rejected");

    const std::size_t n = Q.rows();
    SNFResult snf = smith_normal_form(Q);

    auto embed = [](const Matrix<Poly1>& m) {
        Matrix<Poly2> r(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (const auto& [e, c] : m.at(i, j).terms()) r.at(i, j) += Poly2::monomial(0, e, c);
        return r;
    };

    Matrix<Poly2> G = E * embed(snf.V);

    MembershipResult<Matrix<Poly2>> out;
    Matrix<Poly2> P(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Poly1& s = snf.S.at(j, j);
        for (std::size_t i = 0; i < n; ++i) {
            auto q = div_exact_second(G.at(i, j), s);
            if (!q) {
                out.refusal = "column " + std::to_string(j + 1) + " not divisible by invariant factor " + s.str();
                return out;
            }
            P.at(i, j) = *q;
        }
    }
    Matrix<Poly2> M = P * embed(snf.U);
    if (!(M * embed(Q) == E)) throw std::logic_error("right_module_membership_ext: witness verification failed");
    out.member = true;
    out.factor = M;
    return out;
}

}  // namespace cenda
