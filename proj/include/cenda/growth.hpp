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

#ifndef CENDA_GROWTH_HPP
#define CENDA_GROWTH_HPP

#include <string>
#include <vector>

#include "cenda/conformal.hpp"

namespace cenda {

enum class GrowthVerdict { Finite, Linear, SuperlinearOrUnknown };

std::string verdict_name(GrowthVerdict v);

/**
 * Growth profile of the filtration generated by a finite set: d[k] is the
 * rank (over the fraction field of k[D]) of the span of all products of
 * length <= k+1 in the generators.
 *
 * The verdict is a finite-window heuristic and is labeled as such in every
 * rendering: "finite" once two consecutive ranks agree (ranks then stay
 * constant, since the ambient module is torsion-free and a stalled
 * filtration stalls forever), "linear" when the increments settle to a
 * positive constant inside the window, otherwise "superlinear-or-unknown".
 */
struct GrowthProfile {
    std::vector<ConformalElement> generators;
    std::vector<unsigned> d;  // d[k] = rank of the length-(k+1) span
    GrowthVerdict verdict = GrowthVerdict::SuperlinearOrUnknown;
    std::string log_estimate;  // log_n d_n at the largest computed n, 6 decimals
    unsigned window = 0;       // the n_max actually computed
    bool truncated = false;    // span cap hit; d holds the completed prefix
};

/**
 * All nonzero left-normed product words of length <= n in the generators,
 * deduplicated by canonical form, with each product index kept below the
 * pairwise locality bound. The result spans the same module as the set of
 * all bracketings of the same length: regrouping any bracketing through the
 * associativity expansions only produces left-normed words again (a fact the
 * tests confirm against an all-bracketings enumeration at small lengths).
 * Exceeding `cap` distinct words raises a limit error.
 */
std::vector<ConformalElement> span_Cn(const std::vector<ConformalElement>& generators, unsigned n,
                                      std::size_t cap = 20000);

/**
 * Rank over the fraction field of k[D]: elements are coordinatized on the
 * monomial basis x^q E_ij with coefficients in k[D], and the rank of that
 * coefficient matrix is computed by fraction-free (Bareiss) elimination --
 * exact, no rational-function arithmetic. Pivots by minimal degree, ties by
 * lowest position.
 */
unsigned rank_over_H(const std::vector<ConformalElement>& elements);

/**
 * Ranks d[1..n_max] of the filtration plus the verdict. Internally each step
 * keeps a reduced row-echelon spanning set over k[D] instead of all product
 * words: products of a spanning set span every longer word (index-lowering
 * expansions rewrite products of combinations into products of the words
 * themselves), so the ranks are identical to the literal enumeration --
 * which the tests verify on small windows.
 */
GrowthProfile gk_profile(const std::vector<ConformalElement>& generators, unsigned n_max, std::size_t cap = 20000);

}  // namespace cenda

#endif
