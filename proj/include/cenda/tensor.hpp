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

#ifndef CENDA_TENSOR_HPP
#define CENDA_TENSOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cenda/poly.hpp"

namespace cenda {

/// An element of k[D] (x) k[D], stored canonically on the monomial tensor
/// basis D^n (x) D^m. Built from finite lists of (left, right) polynomial
/// pairs; no zero terms are kept.
class TensorHH {
   public:
    TensorHH() = default;
    explicit TensorHH(const std::vector<std::pair<Poly1, Poly1>>& pairs);

    static TensorHH basis(unsigned n, unsigned m) { return TensorHH({{n, m, Rat(1)}}); }

    const std::map<std::pair<unsigned, unsigned>, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    TensorHH& add(unsigned n, unsigned m, const Rat& c);
    friend TensorHH operator+(TensorHH a, const TensorHH& b);
    friend bool operator==(const TensorHH& a, const TensorHH& b) { return a.t_ == b.t_; }
    friend bool operator!=(const TensorHH& a, const TensorHH& b) { return !(a == b); }

    std::string str() const;

   private:
    struct Term {
        unsigned n, m;
        Rat c;
    };
    explicit TensorHH(std::initializer_list<Term> ts) {
        for (const auto& t : ts) add(t.n, t.m, t.c);
    }
    std::map<std::pair<unsigned, unsigned>, Rat> t_;
};

/// Formal Fourier transform exp(-d/dD (x) D) on H (x) H:
///   D^n (x) D^m  |->  sum_s (-1)^s C(n,s) D^(n-s) (x) D^(m+s);
/// the inverse drops the sign. Both expansions are finite.
TensorHH fourier(const TensorHH& t, bool inverse);

}  // namespace cenda

#endif
