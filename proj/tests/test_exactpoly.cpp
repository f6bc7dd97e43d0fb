#include <doctest.h>

#include "germinv/errors.hpp"
#include "germinv/parse.hpp"
#include "germinv/polyalg.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

const VarList XY{"x", "y"};
const VarList XYYP{"x", "y", "y'"};
const VarList XYZ{"X", "Y", "Z"};

MPoly P(const char* s, const VarList& v = XY) { return parse_poly(s, v); }

}  // namespace

TEST_CASE("parse_poly: C5 third coordinate") {
    const MPoly p = P("x*y^3 - x^5*y");
    CHECK(p.size() == 2);
    Monomial a, b;
    a.e = {1, 3, 0, 0};
    b.e = {5, 1, 0, 0};
    CHECK(p.coefficient(a) == 1);
    CHECK(p.coefficient(b) == -1);
}

TEST_CASE("parse_poly: zero and binomial") {
    CHECK(P("0").is_zero());
    CHECK(P("(x+y)^3") == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("parse_poly: grammar features") {
    CHECK(P("5/2*x") == MPoly::variable(XY, 0) * Rat(5, 2));
    CHECK(P("2xy") == P("2*x*y"));
    CHECK(P("x**3") == P("x^3"));
    CHECK(P("-x^2") == -P("x^2"));
    CHECK(P("  x   +\ty ") == P("x+y"));
    CHECK(P("(x+y)/3") == P("1/3*x + 1/3*y"));
    CHECK(P("x(y+1)") == P("x*y + x"));
}

TEST_CASE("parse_poly: errors carry kind and position") {
    try {
        P("x + z");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::UnknownVariable);
        CHECK(e.position() == 4);
    }
    try {
        P("x^-2");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::NegativeExponent);
        CHECK(e.position() == 2);
    }
    try {
        P("x + * y");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Syntax);
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    CHECK_THROWS_AS(P("x/y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("poly_arith examples") {
    CHECK(P("y-x") * P("y+x") == P("y^2-x^2"));
    CHECK(divexact(P("x*y^2-x^5"), P("x")) == P("y^2-x^4"));
    const MPoly p = P("3x^2y - 7/3 y + 1");
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(divexact(P("x^2+1"), P("x")), DomainError);
}

TEST_CASE("to_string round-trips through the parser") {
    for (const char* s : {"x*y^3 - x^5*y", "-3/4*x^2 + y", "0", "7", "x^2*y - 2*x*y^2 + 1/5"}) {
        const MPoly p = P(s);
        CHECK(P(p.to_string().c_str()) == p);
    }
}

TEST_CASE("gcd_poly examples") {
    CHECK(associates(gcd_poly(P("y^2-x^2"), P("y-x")), P("y-x")));
    CHECK(gcd_poly(P("x*y^2-x^5"), P("3*x^2*y")) == P("x"));
    CHECK(gcd_poly(P("2*x+4*y"), MPoly(XY)) == P("x+2*y"));
    CHECK(gcd_poly(MPoly(XY), MPoly(XY)).is_zero());
    CHECK(gcd_poly(P("x^2+1"), P("y")) == P("1"));
}

TEST_CASE("squarefree_part examples") {
    CHECK(associates(squarefree_part(P("x^2*(y-x)")), P("x*(y-x)")));
    CHECK(associates(squarefree_part(P("x*y^2-x^5")), P("x*y^2-x^5")));
    CHECK(squarefree_part(P("x^2")) == P("x"));
    CHECK(is_squarefree(P("x*y^2-x^5")));
    CHECK_FALSE(is_squarefree(P("x^2*y")));
    CHECK_THROWS_AS(squarefree_part(MPoly(XY)), DomainError);
}

TEST_CASE("resultant examples") {
    // Res_{y'}(y+y', x(y^2+yy'+y'^2) - x^5) is -(xy^2 - x^5) up to sign.
    const MPoly r = resultant(P("y+y'", XYYP), P("x*(y^2+y*y'+y'^2)-x^5", XYYP), "y'");
    CHECK(r.vars() == XY);
    CHECK(associates(r, P("x*y^2-x^5")));
    // Res_y(y^2 - x, y - x) = x^2 - x over the remaining variable x.
    const MPoly r2 = resultant(P("y^2-x"), P("y-x"), "y");
    CHECK(r2 == parse_poly("x^2-x", VarList{"x"}));
    CHECK_THROWS_AS(resultant(P("x"), P("y"), "z"), DomainError);
}

TEST_CASE("resultant: image equation of (x, y^3, xy)") {
    const VarList V{"X", "Y", "Z", "y"};
    const MPoly r = resultant(parse_poly("y^3 - Y", V), parse_poly("X*y - Z", V), "y");
    CHECK(associates(r, P("Z^3 - X^3*Y", XYZ)));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    oracle::PolyGen gen(11);
    for (int i = 0; i < 40; ++i) {
        const MPoly p = gen.poly(XY, 4, 4);
        const MPoly q = gen.poly(XY, 4, 4);
        if (p.degree_in(1) <= 0 || q.degree_in(1) <= 0) continue;
        CHECK(resultant(p, q, 1) == oracle::sylvester_resultant(p, q, 1));
    }
}

TEST_CASE("divided_difference examples") {
    CHECK(divided_difference(P("y^2"), "y", "y'") == P("y+y'", XYYP));
    CHECK(divided_difference(P("x*y^3-x^5*y"), "y", "y'") == P("x*(y^2+y*y'+y'^2)-x^5", XYYP));
    CHECK(divided_difference(P("x^7"), "y", "y'").is_zero());
}

TEST_CASE("qh_check examples") {
    const QhCheck c5 = qh_check(P("x*y^3-x^5*y"), 1, 2);
    CHECK(c5.ok());
    CHECK(c5.degree == 7);
    CHECK(qh_check(P("y^2"), 1, 2).degree == 4);
    CHECK(qh_check(P("x+y^2"), 1, 1).status == QhCheck::Status::NotQuasihomogeneous);
    CHECK(qh_check(MPoly(XY), 1, 1).status == QhCheck::Status::Zero);
}

TEST_CASE("order_at_origin examples") {
    CHECK(order_at_origin(P("Z^3-X^3*Y", XYZ)) == 3);
    CHECK(order_at_origin(P("Z^3-X^3*Y-Y^2-3*X*Y*Z", XYZ)) == 2);
    CHECK(order_at_origin(P("x")) == 1);
    CHECK_THROWS_AS(order_at_origin(MPoly(XY)), DomainError);
}
