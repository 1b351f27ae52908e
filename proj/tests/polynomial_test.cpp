#include <doctest.h>

#include "cleanwords/polynomial.hpp"
#include "support.hpp"

using namespace cleanwords;
using cwtest::poly;
using cwtest::random_poly;

namespace {
const VarsPtr XY = VariableTable::length_only();
Polynomial C(long c) { return Polynomial::constant(XY, c); }
Polynomial X() { return Polynomial::variable(XY, 0); }
Polynomial Y() { return Polynomial::variable(XY, 1); }
} // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK((X() * Y() + (-(X() * Y()))).is_zero());
    CHECK((C(1) + X()) * (C(1) - X()) == C(1) - X() * X());
    // (x y^2 - x y) * (x^2 y) = x^3 y^3 - x^3 y^2
    const Polynomial lhs = poly(XY, {{1, {1, 2}}, {-1, {1, 1}}}) * poly(XY, {{1, {2, 1}}});
    CHECK(lhs == poly(XY, {{1, {3, 3}}, {-1, {3, 2}}}));
}

TEST_CASE("degrees, constant term, leading coefficient") {
    const Polynomial p = poly(XY, {{3, {2, 1}}, {-5, {0, 0}}, {1, {1, 3}}});
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 3);
    CHECK(p.constant_term() == -5);
    CHECK(p.leading_coefficient() == 1); // x*y^3 has total degree 4, beating 3*x^2*y
    CHECK(Polynomial(XY).total_degree() == -1);
}

TEST_CASE("graded-lex order drives rendering") {
    const Polynomial den = poly(XY, {{1, {3, 2}}, {-1, {3, 1}}, {-1, {2, 1}}, {-1, {1, 1}},
                                     {1, {0, 0}}});
    CHECK(den.str() == "x^3*y^2 - x^3*y - x^2*y - x*y + 1");
    const Polynomial num = poly(XY, {{-1, {2, 2}}, {1, {2, 1}}, {1, {1, 1}}, {1, {0, 0}}});
    CHECK(num.str() == "-x^2*y^2 + x^2*y + x*y + 1");
    CHECK(num.latex() == "-x^{2} y^{2} + x^{2} y + x y + 1");
    CHECK(Polynomial(XY).str() == "0");
    CHECK(C(-3).str() == "-3");
    CHECK(poly(XY, {{2, {1, 0}}}).str() == "2*x");
}

TEST_CASE("gcd worked examples") {
    // gcd(x^2 - y^2, x - y) = x - y
    CHECK(gcd(X() * X() - Y() * Y(), X() - Y()) == X() - Y());
    // gcd(p, 1) = 1
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) CHECK(gcd(random_poly(rng, XY, 6, 5), C(1)).is_one());
    // gcd(2x+2, 4x^2-4) = 2x+2 (integer content carried along)
    CHECK(gcd(C(2) * X() + C(2), C(4) * X() * X() - C(4)) == C(2) * X() + C(2));
    // gcd(p, 0) = p normalized to a positive leading coefficient
    const Polynomial p = C(-2) * X() + C(4);
    CHECK(gcd(p, Polynomial(XY)) == -p);
    CHECK(gcd(Polynomial(XY), p) == -p);
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937 rng(42);
    const VarsPtr XYZ = VariableTable::make({"x", "y", "z"});
    for (int trial = 0; trial < 60; ++trial) {
        const VarsPtr& vars = trial % 2 ? XYZ : XY;
        const Polynomial a = random_poly(rng, vars, 8, 6);
        const Polynomial b = random_poly(rng, vars, 8, 6);
        const Polynomial c = random_poly(rng, vars, 8, 6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("gcd of common multiples is divisible by the common factor") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial g = cwtest::random_nonzero_poly(rng, XY, 3, 3, true);
        const Polynomial p = random_poly(rng, XY, 3, 3, true);
        const Polynomial q = random_poly(rng, XY, 3, 3, true);
        if (p.is_zero() && q.is_zero()) continue;
        const Polynomial d = gcd(p * g, q * g);
        CHECK(d.divided_by(g).has_value());
        // and the gcd divides both products
        CHECK((p * g).divided_by(d).has_value());
        CHECK((q * g).divided_by(d).has_value());
    }
}

TEST_CASE("exact division") {
    const Polynomial p = (X() + Y()) * (X() - Y());
    const auto q = p.divided_by(X() + Y());
    REQUIRE(q.has_value());
    CHECK(*q == X() - Y());
    CHECK_FALSE(X().divided_by(Y()).has_value());
    CHECK_FALSE((X() + C(1)).divided_by(C(2)).has_value());
}

TEST_CASE("substitution") {
    const Polynomial p = poly(XY, {{1, {2, 0}}, {1, {0, 1}}}); // x^2 + y
    std::map<int, Polynomial> s;
    s.emplace(0, Y() + C(1)); // x -> y+1
    CHECK(p.substitute(s) == (Y() + C(1)) * (Y() + C(1)) + Y());
    std::map<int, Polynomial> id;
    id.emplace(0, X());
    CHECK(p.substitute(id) == p);
}

TEST_CASE("coefficients_in splits by powers") {
    const Polynomial p = poly(XY, {{1, {0, 0}}, {2, {1, 1}}, {3, {2, 0}}, {4, {2, 2}}});
    const auto by_x = p.coefficients_in(0);
    REQUIRE(by_x.size() == 3);
    CHECK(by_x.at(0) == C(1));
    CHECK(by_x.at(1) == C(2) * Y());
    CHECK(by_x.at(2) == C(3) + C(4) * Y() * Y());
}

TEST_CASE("embed maps variables by name") {
    const VarsPtr big = VariableTable::make({"x", "y", "t"});
    const Polynomial p = X() * Y() + C(7);
    const Polynomial e = embed(p, big);
    CHECK(e.vars()->size() == 3);
    CHECK(e.coefficient({1, 1, 0}) == 1);
    CHECK(e.coefficient({0, 0, 0}) == 7);
    CHECK_THROWS_AS(embed(Polynomial::variable(big, 2), XY), std::logic_error);
}

TEST_CASE("mismatched variable tables are rejected") {
    const VarsPtr other = VariableTable::make({"a", "b"});
    CHECK_THROWS_AS(X() + Polynomial::variable(other, 0), std::logic_error);
}
