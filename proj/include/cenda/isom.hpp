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

#ifndef CENDA_ISOM_HPP
#define CENDA_ISOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"

namespace cenda {

enum class IsoReason { SizeMismatch, DegreeMismatch, FactorMismatch, Match };

std::string iso_reason_name(IsoReason r);

/// Verdict of the subalgebra isomorphism test. When isomorphic, alpha is the
/// verified shift: canonical_p[i](t) == canonical_q[i](t + alpha) for all i.
struct IsoVerdict {
    bool isomorphic = false;
    std::optional<Rat> alpha;
    std::vector<Poly1> canonical_p;
    std::vector<Poly1> canonical_q;
    IsoReason reason = IsoReason::FactorMismatch;
};

/// Canonical diagonal form of a nonsingular square polynomial matrix: its
/// monic invariant factors, divisibility-chained, all nonzero.
std::vector<Poly1> canonical_form(const Matrix<Poly1>& Q);

/**
 * Decides whether the two subalgebras cut out by P and Q are isomorphic:
 * exactly when the sizes agree and some shift alpha aligns the canonical
 * diagonal forms. In characteristic zero the shift is pinned linearly by
 * the subleading coefficients of the first nonconstant factor pair
 * (alpha = (a - b) / deg), then verified against every factor; the
 * verification step is what fixes the sign convention.
 */
IsoVerdict iso_test(const Matrix<Poly1>& P, const Matrix<Poly1>& Q);

}  // namespace cenda

#endif
