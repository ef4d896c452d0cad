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

#include "cenda/isom.hpp"

#include <stdexcept>

#include "cenda/smith.hpp"

namespace cenda {

std::string iso_reason_name(IsoReason r) {
    switch (r) {
        case IsoReason::SizeMismatch: return "size-mismatch";
        case IsoReason::DegreeMismatch: return "degree-mismatch";
        case IsoReason::FactorMismatch: return "factor-mismatch";
        case IsoReason::Match: return "match";
    }
    return "?";
}

std::vector<Poly1> canonical_form(const Matrix<Poly1>& Q) {
    if (!Q.is_square()) throw std::invalid_argument("canonical_form: matrix must be square");
    if (Q.det().is_zero()) throw std::invalid_argument("canonical_form: singular matrix");
    SNFResult snf = smith_normal_form(Q);
    if (snf.invariant_factors.size() != Q.rows())
        throw std::logic_error("canonical_form: nonsingular matrix produced a zero invariant factor");
    return snf.invariant_factors;
}

IsoVerdict iso_test(const Matrix<Poly1>& P, const Matrix<Poly1>& Q) {
    IsoVerdict v;
    if (!P.is_square() || !Q.is_square()) throw std::invalid_argument("iso_test: matrices must be square");
    if (P.det().is_zero() || Q.det().is_zero()) throw std::invalid_argument("iso_test: singular input");

    if (P.rows() != Q.rows()) {
        v.reason = IsoReason::SizeMismatch;
        return v;
    }

    v.canonical_p = canonical_form(P);
    v.canonical_q = canonical_form(Q);
    const std::size_t n = v.canonical_p.size();

    // Invariant factors form a divisibility chain, so degrees are sorted;
    // pointwise comparison decides the degree multiset.
    for (std::size_t i = 0; i < n; ++i)
        if (v.canonical_p[i].degree() != v.canonical_q[i].degree()) {
            v.reason = IsoReason::DegreeMismatch;
            return v;
        }

    // All factors constant: both cuts are the full algebra.
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
        if (v.canonical_p[i].degree() >= 1) {
            first = i;
            break;
        }
    if (first == n) {
        v.isomorphic = true;
        v.alpha = Rat(0);
        v.reason = IsoReason::Match;
        return v;
    }

    // Monic degree-d pair f = t^d + a t^(d-1) + ..., g = t^d + b t^(d-1) + ...
    // g(t + alpha) has subleading coefficient b + d*alpha, so the candidate
    // shift is forced: alpha = (a - b) / d.
    const Poly1& f = v.canonical_p[first];
    const Poly1& g = v.canonical_q[first];
    const unsigned d = static_cast<unsigned>(f.degree());
    Rat a = f.coeff(d - 1);
    Rat b = g.coeff(d - 1);
    Rat alpha = (a - b) / Rat(static_cast<long>(d));

    for (std::size_t i = 0; i < n; ++i)
        if (v.canonical_p[i] != v.canonical_q[i].shifted(alpha)) {
            v.reason = IsoReason::FactorMismatch;
            return v;
        }

    v.isomorphic = true;
    v.alpha = alpha;
    v.reason = IsoReason::Match;
    return v;
}

}  // namespace cenda
