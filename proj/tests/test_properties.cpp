// Randomized algebraic properties with fixed seeds.

#include <doctest.h>

#include "germinv/localalg.hpp"
#include "germinv/parse.hpp"
#include "germinv/polyalg.hpp"
#include "oracles.hpp"

using namespace germinv;

namespace {

const VarList XY{"x", "y"};
const VarList XYZ{"x", "y", "z"};
const VarList XYYP{"x", "y", "y'"};

MPoly monomial(const VarList& vars, const std::vector<unsigned>& e) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i];
    return MPoly::monomial(vars, m);
}

}  // namespace

TEST_CASE("ring axioms") {
    oracle::PolyGen gen(1);
    const MPoly zero(XYZ), one = MPoly::constant(XYZ, 1);
    for (int i = 0; i < 60; ++i) {
        const MPoly a = gen.poly(XYZ, 5, 4), b = gen.poly(XYZ, 5, 4), c = gen.poly(XYZ, 5, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK((a * zero).is_zero());
        CHECK(a.pow(3) == a * a * a);
        CHECK(parse_poly(a.to_string(), XYZ) == a);
    }
}

TEST_CASE("gcd divides, and scales with a common factor") {
    oracle::PolyGen gen(2);
    for (int i = 0; i < 40; ++i) {
        const MPoly p = gen.poly(XY, 3, 3), q = gen.poly(XY, 3, 3), r = gen.poly(XY, 2, 2);
        if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
        const MPoly g = gcd_poly(p, q);
        CHECK(divides(g, p));
        CHECK(divides(g, q));
        CHECK(associates(gcd_poly(p * r, q * r), g * r));
    }
}

TEST_CASE("squarefree part is squarefree, idempotent and has the same zero set") {
    oracle::PolyGen gen(3);
    for (int i = 0; i < 30; ++i) {
        const MPoly p = gen.poly(XY, 3, 2), q = gen.poly(XY, 2, 2);
        if (p.is_constant() || q.is_constant()) continue;
        const MPoly f = p * p * q;
        const MPoly s = squarefree_part(f);
        CHECK(is_squarefree(s));
        CHECK(associates(squarefree_part(s), s));
        CHECK(divides(s, f));
        CHECK(divides(f, s.pow(6)));  // every factor of f has multiplicity at most 6
    }
}

TEST_CASE("divided difference identity") {
    oracle::PolyGen gen(4);
    for (int i = 0; i < 60; ++i) {
        const MPoly p = gen.poly(XY, 5, 6);
        const MPoly dd = divided_difference(p, "y", "y'");
        const MPoly at_y = p.remap(XYYP, {0, 1});
        const MPoly at_yp = p.remap(XYYP, {0, 2});
        CHECK(dd * parse_poly("y - y'", XYYP) == at_y - at_yp);
    }
}

TEST_CASE("resultant vanishes exactly when there is a common factor") {
    oracle::PolyGen gen(5);
    int shared = 0, coprime = 0;
    for (int i = 0; i < 100; ++i) {
        MPoly p = gen.poly(XY, 3, 3), q = gen.poly(XY, 3, 3);
        if (i % 2 == 0) {
            MPoly c = gen.poly(XY, 2, 2);
            if (c.degree_in(1) == 0) c += parse_poly("y", XY);
            p *= c;
            q *= c;
        }
        if (p.degree_in(1) <= 0 || q.degree_in(1) <= 0) continue;
        const bool common = gcd_poly(p, q).degree_in(1) > 0;
        CHECK(resultant(p, q, 1).is_zero() == common);
        (common ? shared : coprime) += 1;
    }
    CHECK(shared > 10);
    CHECK(coprime > 10);
}

TEST_CASE("resultant is the product of the other polynomial over the roots") {
    // Res_y(y - r, q) = q(r) for monic linear p.
    oracle::PolyGen gen(6);
    for (int i = 0; i < 30; ++i) {
        const MPoly q = gen.poly(XY, 4, 4);
        const long r = gen.range(-4, 4);
        const MPoly lin = parse_poly("y", XY) - MPoly::constant(XY, Rat(r));
        if (q.degree_in(1) <= 0) continue;
        const MPoly res = resultant(lin, q, 1);
        CHECK(associates(res, q.substitute(1, Rat(r)).drop_variable(1)));
    }
}

TEST_CASE("quasihomogeneous polynomials scale with their weighted degree") {
    oracle::PolyGen gen(7);
    for (int i = 0; i < 40; ++i) {
        const long a = gen.range(1, 3), b = gen.range(1, 3), d = gen.range(4, 12);
        MPoly p(XY);
        for (long k = 0; k * a <= d; ++k)
            if ((d - k * a) % b == 0 && gen.range(0, 1) == 1)
                p += gen.range(1, 5) * monomial(XY, {static_cast<unsigned>(k), static_cast<unsigned>((d - k * a) / b)});
        if (p.is_zero()) continue;
        const QhCheck q = qh_check(p, a, b);
        REQUIRE(q.status == QhCheck::Status::Quasihomogeneous);
        CHECK(q.degree == d);
        const Rat t(2);
        MPoly tx = MPoly::constant(XY, 1), ty = MPoly::constant(XY, 1);
        Rat ta = 1, tb = 1, td = 1;
        for (long k = 0; k < a; ++k) ta *= t;
        for (long k = 0; k < b; ++k) tb *= t;
        for (long k = 0; k < d; ++k) td *= t;
        const MPoly scaled = p.compose({ta * parse_poly("x", XY), tb * parse_poly("y", XY)});
        CHECK(scaled == td * p);
    }
}

TEST_CASE("colength of random monomial ideals matches the staircase count") {
    oracle::PolyGen gen(8);
    for (int i = 0; i < 50; ++i) {
        const std::size_t nv = i % 2 == 0 ? 2 : 3;
        const VarList& vars = nv == 2 ? XY : XYZ;
        std::vector<std::vector<unsigned>> exps;
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<unsigned> e(nv, 0);
            e[v] = static_cast<unsigned>(gen.range(1, nv == 2 ? 9 : 5));
            exps.push_back(e);
        }
        const long extra = gen.range(0, 4);
        for (long k = 0; k < extra; ++k) {
            std::vector<unsigned> e(nv);
            for (auto& x : e) x = static_cast<unsigned>(gen.range(0, 4));
            exps.push_back(e);
        }
        std::vector<MPoly> gens;
        for (const auto& e : exps) gens.push_back(monomial(vars, e));
        CAPTURE(i);
        CHECK(colength_local(gens).get() == oracle::staircase_count(exps, nv));
    }
}

TEST_CASE("truncated colength matches linear algebra for non-homogeneous generators") {
    oracle::PolyGen gen(9);
    for (int i = 0; i < 25; ++i) {
        std::vector<MPoly> gens;
        for (int k = 0; k < 2 + i % 2; ++k) {
            const MPoly p = gen.poly(XY, 4, 6, 20);
            gens.push_back(p - MPoly::constant(XY, p.constant_term()));
        }
        CAPTURE(i);
        for (int n : {4, 8, 10}) CHECK(truncated_colength(gens, n) == oracle::truncated_dimension(gens, n));
    }
}

TEST_CASE("colength is invariant under a unit multiple and a linear change of coordinates") {
    oracle::PolyGen gen(10);
    for (int i = 0; i < 20; ++i) {
        const MPoly f = gen.poly(XY, 4, 5) * parse_poly("x", XY) + parse_poly("y^3 - x^4", XY);
        const ColengthResult mu = milnor_number(f, 32);
        if (!mu.is_finite()) continue;
        const MPoly unit = MPoly::constant(XY, 1) + parse_poly("x + 2*y", XY);
        CHECK(milnor_number(f * unit, 32) == mu);
        const MPoly g = f.compose({parse_poly("x + 3*y", XY), parse_poly("2*x - y", XY)});
        CHECK(milnor_number(g, 32) == mu);
    }
}
