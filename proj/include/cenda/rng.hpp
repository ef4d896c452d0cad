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

#ifndef CENDA_RNG_HPP
#define CENDA_RNG_HPP

#include <cstdint>
#include <random>

#include "cenda/conformal.hpp"
#include "cenda/dist.hpp"
#include "cenda/matrix.hpp"
#include "cenda/poly.hpp"
#include "cenda/weyl.hpp"

namespace cenda {

/**
 * Deterministic sampler for all randomized sweeps: the seed fully determines
 * every draw. The draw order is part of the interface (documented in the
 * README) so that identical seeds reproduce identical sweeps:
 *
 *   uniform(lo, hi)  = lo + next() % (hi - lo + 1)
 *   rat()            = num/den, num = uniform(-4, 4), den = uniform(1, 2)
 *   poly1(deg)       = for e = 0..deg: coefficient rat()
 *   poly2(dD, dx)    = for p = 0..dD: for q = 0..dx: coefficient rat()
 *   element(N,dD,dx) = per entry, row-major: dD' = uniform(0,dD),
 *                      dx' = uniform(0,dx), then poly2(dD', dx')
 *   pmat(n, deg)     = per entry, row-major: deg' = uniform(0,deg), poly1(deg')
 *   unimodular(n)    = 4 elementary row/column additions with poly1 factors
 */
class SweepRng {
   public:
    explicit SweepRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    unsigned uniform(unsigned lo, unsigned hi) {
        if (hi < lo) throw std::invalid_argument("SweepRng: empty range");
        return lo + static_cast<unsigned>(next() % (static_cast<std::uint64_t>(hi - lo) + 1));
    }

    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(next() % (static_cast<std::uint64_t>(hi - lo) + 1));
    }

    Rat rat() { return Rat(uniform_int(-4, 4), static_cast<long>(uniform(1, 2))); }
    Rat nonzero_rat();

    Poly1 poly1(Var tag, unsigned max_deg);
    Poly1 nonzero_poly1(Var tag, unsigned max_deg);
    Poly2 poly2(unsigned max_dD, unsigned max_dx);

    ConformalElement element(std::size_t n, unsigned max_dD, unsigned max_dx);
    ConformalElement nonzero_element(std::size_t n, unsigned max_dD, unsigned max_dx);

    Matrix<Poly1> pmat(std::size_t n, unsigned max_deg);
    Matrix<Poly1> nonsingular_pmat(std::size_t n, unsigned max_deg);
    Matrix<Poly1> unimodular(std::size_t n, unsigned max_deg);

    Matrix<Rat> rat_matrix(std::size_t n);
    DistSymbol symbol(std::size_t n, unsigned max_wdeg, int max_shift);
    VNElement vn(std::size_t n, unsigned max_deg);

   private:
    std::mt19937_64 eng_;
};

}  // namespace cenda

#endif
