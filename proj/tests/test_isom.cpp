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

#include "cenda/isom.hpp"
#include "cenda/parse.hpp"
#include "cenda/rng.hpp"

using namespace cenda;

namespace {

Poly1 p1(const std::string& s) { return parse_poly1(s, "y", Var::Y); }

Matrix<Poly1> pm1(const std::string& s) {
    Matrix<Poly1> m(1, 1, Poly1(Var::Y));
    m.at(0, 0) = p1(s);
    return m;
}

Matrix<Poly1> shifted_matrix(const Matrix<Poly1>& q, const Rat& alpha) {
    Matrix<Poly1> r(q.rows(), q.cols(), Poly1(Var::Y));
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) r.at(i, j) = q.at(i, j).shifted(alpha);
    return r;
}

}  // namespace

TEST_CASE("canonical form: named instances") {
    Matrix<Poly1> d(2, 2, Poly1(Var::Y));
    d.at(0, 0) = p1("1");
    d.at(1, 1) = p1("y");
    auto f = canonical_form(d);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == p1("1"));
    CHECK(f[1] == p1("y"));

    Matrix<Poly1> j(2, 2, Poly1(Var::Y));
    j.at(0, 0) = p1("y");
    j.at(0, 1) = p1("1");
    j.at(1, 1) = p1("y");
    f = canonical_form(j);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == p1("1"));
    CHECK(f[1] == p1("y^2"));

    CHECK(canonical_form(pm1("y + 3"))[0] == p1("y + 3"));
    CHECK(canonical_form(pm1("2*y + 6"))[0] == p1("y + 3"));  // monic normalization

    Matrix<Poly1> singular(2, 2, Poly1(Var::Y));
    singular.at(0, 0) = p1("y");
    CHECK_THROWS_AS(canonical_form(singular), std::invalid_argument);
}

TEST_CASE("isomorphism decision: named instances") {
    // (y) vs (y + 3): isomorphic, shifted
    IsoVerdict v = iso_test(pm1("y"), pm1("y + 3"));
    CHECK(v.isomorphic);
    CHECK(v.reason == IsoReason::Match);
    REQUIRE(v.alpha.has_value());
    // convention: canonical_p[i](t) == canonical_q[i](t + alpha)
    CHECK(*v.alpha == Rat(-3));
    CHECK(v.canonical_p[0] == v.canonical_q[0].shifted(*v.alpha));

    // degree mismatch
    v = iso_test(pm1("y"), pm1("y^2"));
    CHECK(!v.isomorphic);
    CHECK(v.reason == IsoReason::DegreeMismatch);

    // both full algebras
    v = iso_test(pm1("1"), pm1("5"));
    CHECK(v.isomorphic);
    CHECK(*v.alpha == Rat(0));

    // canonical forms (1, y) vs (1, y^2)
    Matrix<Poly1> a(2, 2, Poly1(Var::Y));
    a.at(0, 0) = p1("1");
    a.at(1, 1) = p1("y");
    Matrix<Poly1> b(2, 2, Poly1(Var::Y));
    b.at(0, 0) = p1("y");
    b.at(0, 1) = p1("1");
    b.at(1, 1) = p1("y");
    v = iso_test(a, b);
    CHECK(!v.isomorphic);
    CHECK(v.reason == IsoReason::DegreeMismatch);

    // factor mismatch at equal degrees: y(y-1) vs y(y-2) share no shift
    Matrix<Poly1> c1(2, 2, Poly1(Var::Y)), c2(2, 2, Poly1(Var::Y));
    c1.at(0, 0) = p1("y");
    c1.at(1, 1) = p1("y^2 - y");
    c2.at(0, 0) = p1("y");
    c2.at(1, 1) = p1("y^2 - 2*y");
    v = iso_test(c1, c2);
    CHECK(!v.isomorphic);
    CHECK(v.reason == IsoReason::FactorMismatch);

    // size mismatch
    v = iso_test(pm1("y"), a);
    CHECK(!v.isomorphic);
    CHECK(v.reason == IsoReason::SizeMismatch);

    CHECK_THROWS_AS(iso_test(pm1("0"), pm1("y")), std::invalid_argument);
}

TEST_CASE("reflexivity and symmetry") {
    SweepRng rng(191);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = rng.uniform(1, 3);
        Matrix<Poly1> q = rng.nonsingular_pmat(n, 2);
        IsoVerdict v = iso_test(q, q);
        CHECK(v.isomorphic);
        CHECK(*v.alpha == Rat(0));

        Matrix<Poly1> p = rng.nonsingular_pmat(n, 2);
        IsoVerdict ab = iso_test(p, q);
        IsoVerdict ba = iso_test(q, p);
        CHECK(ab.isomorphic == ba.isomorphic);
        if (ab.isomorphic) CHECK(*ab.alpha == -*ba.alpha);
    }
}

TEST_CASE("unimodular invariance") {
    SweepRng rng(193);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = rng.uniform(1, 3);
        Matrix<Poly1> q = rng.nonsingular_pmat(n, 2);
        Matrix<Poly1> u = rng.unimodular(n, 1);
        Matrix<Poly1> v = rng.unimodular(n, 1);
        IsoVerdict verdict = iso_test(q, u * q * v);
        CHECK(verdict.isomorphic);
        CHECK(*verdict.alpha == Rat(0));
    }
}

TEST_CASE("shift soundness") {
    SweepRng rng(197);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = rng.uniform(1, 2);
        Matrix<Poly1> q = rng.nonsingular_pmat(n, 2);
        Rat alpha0 = rng.rat();
        IsoVerdict v = iso_test(q, shifted_matrix(q, alpha0));
        CHECK(v.isomorphic);
        REQUIRE(v.alpha.has_value());
        for (std::size_t k = 0; k < v.canonical_p.size(); ++k)
            CHECK(v.canonical_p[k] == v.canonical_q[k].shifted(*v.alpha));
    }
}
