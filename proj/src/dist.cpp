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

#include "cenda/dist.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cenda {

namespace {

bool matrix_is_zero(const Matrix<Rat>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

bool weights_zero(const Matrix<Poly1>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

Matrix<Rat> eval_weights(const Matrix<Poly1>& m, long at) {
    Matrix<Rat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(Rat(at));
    return r;
}

int weights_degree(const Matrix<Poly1>& m) {
    int d = -1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m.at(i, j).degree());
    return d;
}

}  // namespace

// ---------------------------------------------------------------- DistSymbol

DistSymbol::DistSymbol(Poly1 weight, Matrix<Rat> coeff, int shift)
    : weight_(std::move(weight)), coeff_(std::move(coeff)), shift_(shift) {
    if (!coeff_.is_square()) throw std::invalid_argument("DistSymbol: coefficient matrix must be square");
    if (!weight_.is_zero() && weight_.var() != Var::N)
        throw std::invalid_argument("DistSymbol: weight must be a polynomial in n");
    if (weight_.is_zero() || matrix_is_zero(coeff_)) {
        weight_ = Poly1(Var::N);
        coeff_ = Matrix<Rat>(coeff_.rows(), coeff_.cols());
        shift_ = 0;
        return;
    }
    // Push the leading weight coefficient into the matrix: monic weight.
    Rat lead = weight_.leading();
    if (!lead.is_one()) {
        weight_ = weight_.monic();
        for (std::size_t i = 0; i < coeff_.rows(); ++i)
            for (std::size_t j = 0; j < coeff_.cols(); ++j) coeff_.at(i, j) = lead * coeff_.at(i, j);
    }
}

DistSymbol DistSymbol::zero(std::size_t n) { return DistSymbol(Poly1(Var::N), Matrix<Rat>(n, n), 0); }

bool operator==(const DistSymbol& a, const DistSymbol& b) {
    return a.size() == b.size() && a.weight_ == b.weight_ && a.coeff_ == b.coeff_ && a.shift_ == b.shift_;
}

std::string DistSymbol::str() const {
    std::ostringstream os;
    os << "weight: " << weight_.str() << "; shift: " << shift_ << "; coeff:";
    for (std::size_t i = 0; i < coeff_.rows(); ++i) {
        os << " [";
        for (std::size_t j = 0; j < coeff_.cols(); ++j) {
            if (j) os << ", ";
            os << coeff_.at(i, j).str();
        }
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- DistSum

DistSum::DistSum(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("DistSum: size must be positive");
}

DistSum::DistSum(const DistSymbol& s) : n_(s.size()) {
    if (s.is_zero()) return;
    Matrix<Poly1> w(n_, n_, Poly1(Var::N));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) w.at(i, j) = s.coeff().at(i, j) * s.weight();
    add_block(s.shift(), w);
}

DistSum& DistSum::add_block(int shift, const Matrix<Poly1>& weights) {
    if (weights.rows() != n_ || weights.cols() != n_) throw std::invalid_argument("DistSum: block size mismatch");
    auto it = blocks_.find(shift);
    if (it == blocks_.end()) {
        if (!weights_zero(weights)) blocks_.emplace(shift, weights);
    } else {
        it->second = it->second + weights;
        if (weights_zero(it->second)) blocks_.erase(it);
    }
    return *this;
}

DistSum operator+(DistSum a, const DistSum& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("DistSum: size mismatch");
    for (const auto& [s, w] : b.blocks_) a.add_block(s, w);
    return a;
}

std::string DistSum::str() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, w] : blocks_) {
        if (!first) os << " ++ ";
        os << "{shift " << s << ":";
        for (std::size_t i = 0; i < n_; ++i) {
            os << " [";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) os << ", ";
                os << w.at(i, j).str();
            }
            os << "]";
        }
        os << "}";
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- products

DistSymbol residue_n_product(const DistSymbol& a, const DistSymbol& b, unsigned m) {
    if (a.size() != b.size()) throw std::invalid_argument("residue_n_product: size mismatch");
    Poly1 w(Var::N);
    for (unsigned i = 0; i <= m; ++i) {
        Rat c = a.weight().eval(Rat(static_cast<long>(i))) * Rat(binomial(m, i));
        if ((m - i) % 2 == 1) c = -c;
        if (c.is_zero()) continue;
        w += c * b.weight().shifted(Rat(static_cast<long>(m - i)));
    }
    return DistSymbol(w, a.coeff() * b.coeff(), a.shift() + b.shift() + static_cast<int>(m));
}

DistSum residue_n_product(const DistSum& a, const DistSum& b, unsigned m) {
    if (a.size() != b.size()) throw std::invalid_argument("residue_n_product: size mismatch");
    DistSum out(a.size());
    for (const auto& [sa, P] : a.blocks())
        for (const auto& [sb, Q] : b.blocks()) {
            Matrix<Poly1> w(a.size(), a.size(), Poly1(Var::N));
            for (unsigned i = 0; i <= m; ++i) {
                Matrix<Rat> Pi = eval_weights(P, static_cast<long>(i));
                Matrix<Poly1> Qs(a.size(), a.size(), Poly1(Var::N));
                for (std::size_t r = 0; r < a.size(); ++r)
                    for (std::size_t c = 0; c < a.size(); ++c)
                        Qs.at(r, c) = Q.at(r, c).shifted(Rat(static_cast<long>(m - i)));
                Rat sign = ((m - i) % 2 == 1) ? Rat(-1) : Rat(1);
                Rat bin = Rat(binomial(m, i)) * sign;
                // w += bin * Pi * Qs (constant matrix times weight matrix)
                for (std::size_t r = 0; r < a.size(); ++r)
                    for (std::size_t c = 0; c < a.size(); ++c) {
                        Poly1 acc(Var::N);
                        for (std::size_t k = 0; k < a.size(); ++k) acc += Pi.at(r, k) * Qs.at(k, c);
                        w.at(r, c) += bin * acc;
                    }
            }
            out.add_block(sa + sb + static_cast<int>(m), w);
        }
    return out;
}

DistSum dz_action(const DistSum& a) {
    DistSum out(a.size());
    Poly1 n_var = Poly1::variable(Var::N);
    for (const auto& [s, P] : a.blocks()) {
        Matrix<Poly1> w(a.size(), a.size(), Poly1(Var::N));
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t c = 0; c < a.size(); ++c) w.at(r, c) = -(n_var * P.at(r, c).shifted(Rat(-1)));
        out.add_block(s - 1, w);
    }
    return out;
}

unsigned symbol_locality_bound(const DistSum& a, const DistSum& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int da = -1, db = -1;
    for (const auto& [s, w] : a.blocks()) da = std::max(da, weights_degree(w));
    for (const auto& [s, w] : b.blocks()) db = std::max(db, weights_degree(w));
    unsigned bound = static_cast<unsigned>(da + db) + 1;
    while (bound > 0 && residue_n_product(a, b, bound - 1).is_zero()) --bound;
    return bound;
}

DistSum curr_embed(const Poly1& f, const Matrix<Rat>& A) {
    if (!f.is_zero() && f.var() != Var::D) throw std::invalid_argument("curr_embed: f must be a polynomial in D");
    if (!A.is_square()) throw std::invalid_argument("curr_embed: coefficient matrix must be square");
    DistSum out(A.rows());
    DistSum unit(DistSymbol::constant(A));
    // f(d/dz) applied to the constant symbol, one power at a time.
    for (const auto& [e, c] : f.terms()) {
        DistSum term = unit;
        for (unsigned k = 0; k < e; ++k) term = dz_action(term);
        DistSum scaled(A.rows());
        for (const auto& [s, w] : term.blocks()) {
            Matrix<Poly1> sw(A.rows(), A.rows(), Poly1(Var::N));
            for (std::size_t r = 0; r < A.rows(); ++r)
                for (std::size_t cc = 0; cc < A.rows(); ++cc) sw.at(r, cc) = c * w.at(r, cc);
            scaled.add_block(s, sw);
        }
        out = out + scaled;
    }
    return out;
}

DistSum curr_embed_element(const ConformalElement& e) {
    if (e.deg_x() > 0) throw std::invalid_argument("curr_embed_element: element has positive x-degree");
    DistSum out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) {
            const Poly2& p = e.entry(i, j);
            if (p.is_zero()) continue;
            Poly1 f = p.coeff_of_second(0);  // entries carry no x: pure k[D]
            Matrix<Rat> unit(e.size(), e.size());
            unit.at(i, j) = 1;
            out = out + curr_embed(f, unit);
        }
    return out;
}

// ---------------------------------------------------------------- brute force

bool verify_residue_product(const DistSum& a, const DistSum& b, unsigned m, int window, std::string* detail) {
    if (a.size() != b.size()) throw std::invalid_argument("verify_residue_product: size mismatch");
    const std::size_t N = a.size();
    const int W = window;

    int max_deg = 0, max_shift = 0;
    for (const auto& [s, w] : a.blocks()) {
        max_deg = std::max(max_deg, weights_degree(w));
        max_shift = std::max(max_shift, std::abs(s));
    }
    for (const auto& [s, w] : b.blocks()) {
        max_deg = std::max(max_deg, weights_degree(w));
        max_shift = std::max(max_shift, std::abs(s));
    }
    if (W <= max_deg + static_cast<int>(m) + max_shift + 1)
        throw std::invalid_argument("verify_residue_product: window too small for the degrees involved");

    // Brute force: truncate both series on [-W, W], multiply against the
    // expanded binomial kernel, and read off the residue (w-power -1).
    // Keyed by (t-power, z-power); w is integrated out on extraction.
    std::map<std::pair<int, int>, Matrix<Rat>> brute;
    auto add_brute = [&](int tpow, int zpow, const Matrix<Rat>& c) {
        auto it = brute.find({tpow, zpow});
        if (it == brute.end())
            brute.emplace(std::make_pair(tpow, zpow), c);
        else
            it->second = it->second + c;
    };

    for (const auto& [sa, P] : a.blocks())
        for (int p = -W; p <= W; ++p) {
            Matrix<Rat> cp = eval_weights(P, p);
            if (matrix_is_zero(cp)) continue;
            // term: cp * t^(p+sa) * w^(-p-1)
            for (const auto& [sb, Q] : b.blocks())
                for (int q = -W; q <= W; ++q) {
                    Matrix<Rat> cq = eval_weights(Q, q);
                    if (matrix_is_zero(cq)) continue;
                    // kernel (w - z)^m = sum_i C(m,i) (-1)^(m-i) w^i z^(m-i)
                    for (unsigned i = 0; i <= m; ++i) {
                        // residue: need -p-1+i == -1
                        if (p != static_cast<int>(i)) continue;
                        Rat k = Rat(binomial(m, i));
                        if ((m - i) % 2 == 1) k = -k;
                        Matrix<Rat> prod = cp * cq;
                        for (std::size_t r = 0; r < N; ++r)
                            for (std::size_t c = 0; c < N; ++c) prod.at(r, c) = k * prod.at(r, c);
                        add_brute(p + sa + q + sb, -q - 1 + static_cast<int>(m - i), prod);
                    }
                }
        }

    // Closed form expanded over the interior of the window.
    const int interior = W - static_cast<int>(m) - max_shift - max_deg - 1;
    DistSum closed = residue_n_product(a, b, m);
    std::map<std::pair<int, int>, Matrix<Rat>> expect;
    for (const auto& [s, R] : closed.blocks())
        for (int j = -interior; j <= interior; ++j) {
            Matrix<Rat> cj = eval_weights(R, j);
            if (matrix_is_zero(cj)) continue;
            auto it = expect.find({j + s, -j - 1});
            if (it == expect.end())
                expect.emplace(std::make_pair(j + s, -j - 1), cj);
            else
                it->second = it->second + cj;
        }

    // Compare on interior z-powers only; the truncated tails disagree by
    // construction and are excluded.
    auto interior_z = [&](int zpow) { return zpow >= -interior - 1 && zpow <= interior - 1; };
    for (const auto& [key, mat] : brute) {
        if (!interior_z(key.second)) continue;
        auto it = expect.find(key);
        Matrix<Rat> want = it == expect.end() ? Matrix<Rat>(N, N) : it->second;
        if (!(mat == want)) {
            if (detail) {
                std::ostringstream os;
                os << "residue mismatch at t-power " << key.first << ", z-power " << key.second;
                *detail = os.str();
            }
            return false;
        }
    }
    for (const auto& [key, mat] : expect) {
        if (!interior_z(key.second)) continue;
        if (matrix_is_zero(mat)) continue;
        if (brute.find(key) == brute.end()) {
            if (detail) {
                std::ostringstream os;
                os << "closed form predicts a term missing from the expansion at t-power " << key.first
                   << ", z-power " << key.second;
                *detail = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace cenda
