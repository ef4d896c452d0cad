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

#include "cenda/algebras.hpp"

#include <sstream>
#include <stdexcept>

#include "cenda/smith.hpp"

namespace cenda {

AlgebraSpec AlgebraSpec::cend(std::size_t n) {
    if (n == 0) throw std::invalid_argument("AlgebraSpec: size must be positive");
    return {Kind::CendN, n, std::nullopt};
}

AlgebraSpec AlgebraSpec::curr(std::size_t n) {
    if (n == 0) throw std::invalid_argument("AlgebraSpec: size must be positive");
    return {Kind::CurrN, n, std::nullopt};
}

AlgebraSpec AlgebraSpec::cendq(std::size_t n, Matrix<Poly1> q) {
    if (n == 0) throw std::invalid_argument("AlgebraSpec: size must be positive");
    if (!q.is_square() || q.rows() != n) throw std::invalid_argument("AlgebraSpec: Q must be square of size N");
    if (q.det().is_zero()) throw std::invalid_argument("AlgebraSpec: singular Q");
    return {Kind::CendNQ, n, std::move(q)};
}

std::string AlgebraSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::CendN: os << "cend " << n; break;
        case Kind::CurrN: os << "curr " << n; break;
        case Kind::CendNQ: os << "cendq " << n; break;
    }
    return os.str();
}

Matrix<Poly2> q_embedded(const AlgebraSpec& spec) {
    if (spec.kind != AlgebraSpec::Kind::CendNQ) throw std::invalid_argument("q_embedded: spec has no Q");
    const Matrix<Poly1>& q = *spec.q;
    Matrix<Poly2> r(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) r.at(i, j) = embed_y_to_x_minus_D(q.at(i, j));
    return r;
}

MemberVerdict membership(const AlgebraSpec& spec, const ConformalElement& e) {
    if (e.size() != spec.n) throw std::invalid_argument("membership: element size does not match the algebra");
    MemberVerdict v;
    switch (spec.kind) {
        case AlgebraSpec::Kind::CendN:
            v.member = true;
            return v;
        case AlgebraSpec::Kind::CurrN:
            v.member = e.deg_x() <= 0;
            if (!v.member) v.detail = "entry with positive x-degree";
            return v;
        case AlgebraSpec::Kind::CendNQ: {
            // Change variables to (D, y), divide out Q(y), map the factor back.
            Matrix<Poly2> E(spec.n, spec.n);
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = 0; j < spec.n; ++j) E.at(i, j) = rewrite_x_as_D_plus_y(e.entry(i, j));
            auto res = right_module_membership_ext(E, *spec.q);
            v.member = res.member;
            v.detail = res.refusal;
            if (res.member) {
                Matrix<Poly2> w(spec.n, spec.n);
                for (std::size_t i = 0; i < spec.n; ++i)
                    for (std::size_t j = 0; j < spec.n; ++j) w.at(i, j) = rewrite_y_as_x_minus_D(res.factor->at(i, j));
                if (!(ConformalElement(w * q_embedded(spec)) == e))
                    throw std::logic_error("membership: witness verification failed");
                v.witness = std::move(w);
            }
            return v;
        }
    }
    throw std::invalid_argument("membership: unknown algebra kind");
}

bool is_unit(const ConformalElement& e, const std::vector<ConformalElement>& probes) {
    for (const auto& p : probes) {
        if (p.size() != e.size()) throw std::invalid_argument("is_unit: probe size mismatch");
        if (!(n_product(e, p, 0) == p)) return false;
    }
    const unsigned bound = locality_bound(e, e);
    for (unsigned n = 1; n < bound; ++n)
        if (!n_product(e, e, n).is_zero()) return false;
    return true;
}

bool is_idempotent(const ConformalElement& e) {
    if (!(n_product(e, e, 0) == e)) return false;
    const unsigned bound = locality_bound(e, e);
    for (unsigned n = 1; n < bound; ++n)
        if (!n_product(e, e, n).is_zero()) return false;
    return true;
}

std::vector<ConformalElement> default_generators(const AlgebraSpec& spec) {
    std::vector<ConformalElement> gens;
    switch (spec.kind) {
        case AlgebraSpec::Kind::CendN:
            gens.push_back(ConformalElement::x_identity(spec.n));
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = 0; j < spec.n; ++j) gens.push_back(ConformalElement::matrix_unit(spec.n, i, j));
            break;
        case AlgebraSpec::Kind::CurrN:
            for (std::size_t i = 0; i < spec.n; ++i)
                for (std::size_t j = 0; j < spec.n; ++j) gens.push_back(ConformalElement::matrix_unit(spec.n, i, j));
            break;
        case AlgebraSpec::Kind::CendNQ: {
            // x^k E_ij Q(x - D): left multiples of Q by construction, so each
            // generator is a member.
            Matrix<Poly2> qm = q_embedded(spec);
            for (unsigned k = 0; k <= 1; ++k)
                for (std::size_t i = 0; i < spec.n; ++i)
                    for (std::size_t j = 0; j < spec.n; ++j) {
                        ConformalElement m = ConformalElement::matrix_unit(spec.n, i, j);
                        gens.push_back(ConformalElement(m.mat() * qm).mul_x_power(k));
                    }
            break;
        }
    }
    return gens;
}

}  // namespace cenda
