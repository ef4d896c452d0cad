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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cenda/algebras.hpp"
#include "cenda/growth.hpp"
#include "cenda/identities.hpp"
#include "cenda/parse.hpp"
#include "cenda/rng.hpp"
#include "test_util.hpp"

using namespace cenda;

namespace {

ConformalElement ce(const std::string& poly) { return element_1x1(parse_poly2(poly)); }

Matrix<Poly1> pm1(const std::string& s) {
    Matrix<Poly1> m(1, 1, Poly1(Var::Y));
    m.at(0, 0) = parse_poly1(s, "y", Var::Y);
    return m;
}

Matrix<Poly1> diag2(const std::string& a, const std::string& b) {
    Matrix<Poly1> m(2, 2, Poly1(Var::Y));
    m.at(0, 0) = parse_poly1(a, "y", Var::Y);
    m.at(1, 1) = parse_poly1(b, "y", Var::Y);
    return m;
}

}  // namespace

TEST_CASE("algebra spec validation") {
    CHECK_THROWS_AS(AlgebraSpec::cend(0), std::invalid_argument);
    Matrix<Poly1> singular(2, 2, Poly1(Var::Y));
    singular.at(0, 0) = parse_poly1("y", "y", Var::Y);
    CHECK_THROWS_AS(AlgebraSpec::cendq(2, singular), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraSpec::cendq(1, diag2("1", "y")), std::invalid_argument);
}

TEST_CASE("membership: named examples") {
    // current subalgebra: x-degree zero
    AlgebraSpec curr2 = AlgebraSpec::curr(2);
    ConformalElement d2e11 = ConformalElement::matrix_unit(2, 0, 0).mul_D_power(2);
    CHECK(membership(curr2, d2e11).member);
    CHECK(!membership(curr2, ConformalElement::x_identity(2)).member);

    // Q = (y), size 1: members are the multiples of x - D
    AlgebraSpec q1 = AlgebraSpec::cendq(1, pm1("y"));
    auto v = membership(q1, ce("x - D"));
    CHECK(v.member);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->at(0, 0) == parse_poly2("1"));

    CHECK(!membership(q1, ce("1")).member);
    CHECK(membership(q1, ce("D*x - D^2")).member);  // left H-multiple

    // full algebra: everything belongs
    CHECK(membership(AlgebraSpec::cend(1), ce("D^3*x^2")).member);

    CHECK_THROWS_AS(membership(q1, ConformalElement::identity(2)), std::invalid_argument);
}

TEST_CASE("membership agrees with brute force on the Q-cut subalgebra") {
    SweepRng rng(131);
    int members = 0;
    for (int i = 0; i < 30; ++i) {
        std::size_t n = rng.uniform(1, 2);
        Matrix<Poly1> q = rng.nonsingular_pmat(n, 2);
        AlgebraSpec spec = AlgebraSpec::cendq(n, q);
        ConformalElement e = rng.element(n, 1, 2);
        if (i % 2 == 0) {
            // guaranteed member: M * Q(x - D)
            ConformalElement m = rng.element(n, 1, 1);
            e = ConformalElement(m.mat() * q_embedded(spec));
        }
        auto verdict = membership(spec, e);
        // brute force in the (D, y) coordinates
        Matrix<Poly2> E(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) E.at(a, b) = rewrite_x_as_D_plus_y(e.entry(a, b));
        int ddeg = 0, ydeg = 0, qdeg = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                ddeg = std::max(ddeg, E.at(a, b).deg_D());
                ydeg = std::max(ydeg, E.at(a, b).deg_x());
                qdeg = std::max(qdeg, q.at(a, b).degree());
            }
        bool brute = cenda_test::brute_force_right_membership2(
            E, q, static_cast<unsigned>(std::max(0, ddeg)),
            static_cast<unsigned>(std::max(0, ydeg) + std::max(0, qdeg) * static_cast<int>(n)));
        CHECK(verdict.member == brute);
        if (verdict.member) {
            ++members;
            CHECK(ConformalElement(*verdict.witness * q_embedded(spec)) == e);
        }
    }
    CHECK(members >= 10);
}

TEST_CASE("units") {
    // identity is a unit against generator probes
    for (std::size_t n : {1u, 2u}) {
        auto probes = default_generators(AlgebraSpec::cend(n));
        CHECK(is_unit(ConformalElement::identity(n), probes));
    }
    // x is not: x (0) x = x^2
    CHECK(!is_unit(ce("x"), {ce("x")}));
    // E11 fails against E22
    CHECK(!is_unit(ConformalElement::matrix_unit(2, 0, 0), {ConformalElement::matrix_unit(2, 1, 1)}));
    CHECK_THROWS_AS(is_unit(ce("1"), {ConformalElement::identity(2)}), std::invalid_argument);
}

TEST_CASE("idempotents") {
    CHECK(is_idempotent(ConformalElement::identity(1)));
    CHECK(is_idempotent(ConformalElement::identity(3)));
    CHECK(is_idempotent(ConformalElement::matrix_unit(2, 0, 0)));
    CHECK(!is_idempotent(ce("x")));
    CHECK(is_idempotent(ConformalElement::zero(2)));

    // E11 is an idempotent member of the diag(1, y) cut
    AlgebraSpec spec = AlgebraSpec::cendq(2, diag2("1", "y"));
    ConformalElement e11 = ConformalElement::matrix_unit(2, 0, 0);
    CHECK(is_idempotent(e11));
    CHECK(membership(spec, e11).member);
}

TEST_CASE("idempotence survives constant-matrix conjugation") {
    SweepRng rng(137);
    ConformalElement e11 = ConformalElement::matrix_unit(2, 0, 0);
    int done = 0;
    for (int i = 0; i < 30 && done < 10; ++i) {
        Matrix<Rat> t = rng.rat_matrix(2);
        Rat det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
        if (det.is_zero()) continue;
        // inverse of a 2x2
        Matrix<Rat> inv(2, 2);
        inv.at(0, 0) = t.at(1, 1) / det;
        inv.at(1, 1) = t.at(0, 0) / det;
        inv.at(0, 1) = -t.at(0, 1) / det;
        inv.at(1, 0) = -t.at(1, 0) / det;
        auto lift = [](const Matrix<Rat>& m) {
            Matrix<Poly2> p(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) p.at(i, j) = Poly2::constant(m.at(i, j));
            return p;
        };
        ConformalElement conj(lift(t) * e11.mat() * lift(inv));
        CHECK(is_idempotent(conj));
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("default generators are members") {
    SweepRng rng(139);
    std::vector<AlgebraSpec> specs;
    specs.push_back(AlgebraSpec::cend(1));
    specs.push_back(AlgebraSpec::cend(2));
    specs.push_back(AlgebraSpec::curr(2));
    specs.push_back(AlgebraSpec::cendq(1, pm1("y")));
    specs.push_back(AlgebraSpec::cendq(2, diag2("1", "y")));
    specs.push_back(AlgebraSpec::cendq(2, rng.nonsingular_pmat(2, 2)));
    for (const auto& spec : specs) {
        auto gens = default_generators(spec);
        CHECK(!gens.empty());
        for (const auto& g : gens) CHECK(membership(spec, g).member);
    }
    // expected shapes
    auto g1 = default_generators(AlgebraSpec::cend(1));
    REQUIRE(g1.size() == 2);
    CHECK(g1[0] == ce("x"));
    CHECK(g1[1] == ce("1"));
    auto gq = default_generators(AlgebraSpec::cendq(1, pm1("y")));
    REQUIRE(gq.size() == 2);
    CHECK(gq[0] == ce("x - D"));
    CHECK(gq[1] == ce("x^2 - D*x"));
}

TEST_CASE("generated spans contain the expected monomial ladder") {
    // {1, x} generates every x^k over H: check up to degree 6 by brute force
    auto gens1 = default_generators(AlgebraSpec::cend(1));
    auto span = span_Cn(gens1, 7);
    for (unsigned k = 0; k <= 6; ++k) {
        std::vector<ConformalElement> probe = span;
        probe.push_back(ce(k == 0 ? std::string("1") : "x^" + std::to_string(k)));
        CHECK(rank_over_H(probe) == rank_over_H(span));  // already inside
    }

    // {x - D, x(x - D)} reaches x^k (x - D) for k <= 6
    auto gensq = default_generators(AlgebraSpec::cendq(1, pm1("y")));
    auto spanq = span_Cn(gensq, 7);
    unsigned base = rank_over_H(spanq);
    for (unsigned k = 0; k <= 6; ++k) {
        Poly2 xk = Poly2::monomial(0, k, 1);
        ConformalElement target = element_1x1(xk * parse_poly2("x - D"));
        std::vector<ConformalElement> probe = spanq;
        probe.push_back(target);
        CHECK(rank_over_H(probe) == base);
    }
}

TEST_CASE("subalgebra closure under all products") {
    SweepRng rng(149);
    // current subalgebra
    for (int i = 0; i < 20; ++i) {
        std::size_t n = rng.uniform(1, 2);
        AlgebraSpec spec = AlgebraSpec::curr(n);
        ConformalElement a = rng.element(n, 2, 0), b = rng.element(n, 2, 0);
        unsigned bound = locality_bound(a, b) + 1;
        for (unsigned k = 0; k < bound; ++k) CHECK(membership(spec, n_product(a, b, k)).member);
    }
    // Q-cut subalgebra
    for (int i = 0; i < 12; ++i) {
        std::size_t n = rng.uniform(1, 2);
        AlgebraSpec spec = AlgebraSpec::cendq(n, rng.nonsingular_pmat(n, 2));
        ConformalElement a(rng.element(n, 1, 1).mat() * q_embedded(spec));
        ConformalElement b(rng.element(n, 1, 1).mat() * q_embedded(spec));
        unsigned bound = locality_bound(a, b) + 1;
        for (unsigned k = 0; k < bound; ++k) CHECK(membership(spec, n_product(a, b, k)).member);
    }
}

TEST_CASE("current elements commute exactly at size 1") {
    SweepRng rng(151);
    for (int i = 0; i < 20; ++i) {
        ConformalElement a = rng.element(1, 3, 0), b = rng.element(1, 3, 0);
        unsigned bound = std::max(locality_bound(a, b), locality_bound(b, a)) + 1;
        for (unsigned n = 0; n < bound; ++n)
            CHECK(check_identity(IdentityTag::Commutativity, {a, b}, {n}).ok);
    }
    // counterexample among matrix units at size 2
    ConformalElement e12 = ConformalElement::matrix_unit(2, 0, 1);
    ConformalElement e21 = ConformalElement::matrix_unit(2, 1, 0);
    CHECK(!check_identity(IdentityTag::Commutativity, {e12, e21}, {0}).ok);
}
