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

#include "cenda/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace cenda {

TensorHH::TensorHH(const std::vector<std::pair<Poly1, Poly1>>& pairs) {
    for (const auto& [l, r] : pairs) {
        if ((!l.is_zero() && l.var() != Var::D) || (!r.is_zero() && r.var() != Var::D))
            throw std::invalid_argument("TensorHH: factors must be polynomials in D");
        for (const auto& [el, cl] : l.terms())
            for (const auto& [er, cr] : r.terms()) add(el, er, cl * cr);
    }
}

TensorHH& TensorHH::add(unsigned n, unsigned m, const Rat& c) {
    if (c.is_zero()) return *this;
    auto it = t_.find({n, m});
    if (it == t_.end()) {
        t_.emplace(std::make_pair(n, m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
    return *this;
}

TensorHH operator+(TensorHH a, const TensorHH& b) {
    for (const auto& [e, c] : b.t_) a.add(e.first, e.second, c);
    return a;
}

std::string TensorHH::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rat a = c;
        if (a.sign() < 0) {
            os << (first ? "-" : " - ");
            a = -a;
        } else if (!first) {
            os << " + ";
        }
        if (!a.is_one()) os << a.str() << "*";
        auto power = [&](unsigned k) {
            if (k == 0) return std::string("1");
            if (k == 1) return std::string("D");
            return "D^" + std::to_string(k);
        };
        os << power(e.first) << "(x)" << power(e.second);
        first = false;
    }
    return os.str();
}

TensorHH fourier(const TensorHH& t, bool inverse) {
    TensorHH out;
    for (const auto& [e, c] : t.terms()) {
        const unsigned n = e.first, m = e.second;
        for (unsigned s = 0; s <= n; ++s) {
            Rat w = Rat(binomial(n, s)) * c;
            if (!inverse && s % 2 == 1) w = -w;
            out.add(n - s, m + s, w);
        }
    }
    return out;
}

}  // namespace cenda
