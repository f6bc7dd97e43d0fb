#include <doctest.h>

#include "germinv/errors.hpp"
#include "germinv/imagefit.hpp"
#include "germinv/invariants.hpp"
#include "germinv/parse.hpp"
#include "germinv/polyalg.hpp"

using namespace germinv;

namespace {

const VarList XY{"x", "y"};

MapGerm G(const char* s) { return parse_germ(s, XY); }
MPoly T3(const char* s) { return parse_poly(s, target_vars()); }

// Germs whose second or third coordinate is a pure power of y.
const char* const kMonic[] = {
    "(x,y^2,xy)",                "(x,y^2,xy^3-x^5y)",        "(x,y^2,y^3-x^2y)",
    "(x,y^2,y^3+x^3y)",          "(x,y^2,xy^3-x^3y)",        "(x,y^2,xy^3+x^4y)",
    "(x,y^3,y^5+x^2y)",          "(x,y^4,x^5y+xy^5+y^6)",    "(x,y^4,2y^13+x^2y+3xy^7)",
    "(x,y^5+xy,y^6)",            "(x,y^3,xy+y^2)",           "(x,y^3,(x+y)^4)",
    "(x,y^3,(x+y)^5)",           "(x,y^4,(x+y)^5)",
};

}  // namespace

TEST_CASE("image_equation examples") {
    CHECK(associates(image_equation(G("(x,y^3,xy)")).F, T3("Z^3-X^3*Y")));
    CHECK(associates(image_equation(G("(x,y^3,xy+y^2)")).F, T3("Z^3-X^3*Y-Y^2-3X*Y*Z")));
    CHECK(associates(image_equation(G("(x,y^2,xy^3-x^5y)")).F, T3("Z^2-X^2*Y^3+2X^6*Y^2-X^10*Y")));
    CHECK(associates(image_equation(G("(x,y^2,xy)")).F, T3("Z^2-X^2*Y")));
    CHECK_THROWS_AS(image_equation(G("(x^2,y^2,xy)")), DomainError);
}

TEST_CASE("image_equation handles other charts") {
    // Cross-cap with the source variables and target coordinates permuted.
    const ImageEquation e = image_equation(G("(x^2,xy,y)"));
    CHECK(associates(e.F, T3("Y^2-Z^2*X")));
}

TEST_CASE("image_equation flags a non-reduced resultant") {
    // Not generically one-to-one: every image point has two preimages.
    const ImageEquation e = image_equation(G("(x,y^2,y^4+x*y^2)"));
    CHECK_FALSE(e.squarefree);
    CHECK(associates(e.F, T3("Z - Y^2 - X*Y")));
}

TEST_CASE("image_equation vanishes on the image") {
    for (const char* s : kMonic) {
        CAPTURE(s);
        const MapGerm f = G(s);
        CHECK(f.pullback(image_equation(f).F).is_zero());
    }
}

TEST_CASE("image_equation is quasihomogeneous of degree d1 d2 d3 / (ab)") {
    for (const char* s : kMonic) {
        CAPTURE(s);
        const MapGerm f = G(s);
        const QhType t = *infer_qh_type(f);
        const QhCheck q = qh_check(image_equation(f).F, {t.d1, t.d2, t.d3});
        REQUIRE(q.status == QhCheck::Status::Quasihomogeneous);
        CHECK(Rat(q.degree) == t.delta());
    }
}

TEST_CASE("order of the image equation equals the multiplicity formula") {
    for (const char* s : kMonic) {
        CAPTURE(s);
        const MapGerm f = G(s);
        CHECK(Rat(order_at_origin(image_equation(f).F)) == image_multiplicity_formula(*infer_qh_type(f)));
    }
}

TEST_CASE("presentation matrix of (x, y^3, xy)") {
    const PresentationMatrix pm = presentation_matrix(G("(x,y^3,xy)"));
    REQUIRE(pm.n == 3);
    CHECK_FALSE(pm.swapped);
    const char* expected[3][3] = {{"Z", "-X", "0"}, {"0", "Z", "-X"}, {"-X*Y", "0", "Z"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(pm.entries[i][j] == T3(expected[i][j]));
}

TEST_CASE("presentation matrix of the cross-cap") {
    const PresentationMatrix pm = presentation_matrix(G("(x,y^2,xy)"));
    REQUIRE(pm.n == 2);
    CHECK(pm.entries[0][0] == T3("Z"));
    CHECK(pm.entries[0][1] == T3("-X"));
    CHECK(pm.entries[1][0] == T3("-X*Y"));
    CHECK(pm.entries[1][1] == T3("Z"));
    CHECK(determinant(pm.entries) == T3("Z^2-X^2*Y"));
}

TEST_CASE("presentation matrix of (x, y^3, xy + y^2) has the expected determinant") {
    const PresentationMatrix pm = presentation_matrix(G("(x,y^3,xy+y^2)"));
    CHECK(associates(determinant(pm.entries), T3("Z^3-X^3*Y-Y^2-3X*Y*Z")));
    // The alternative presentation differs by row operations only.
    PolyMatrix alt{{T3("Z"), T3("-X"), T3("-1")}, {T3("-Y"), T3("Z"), T3("-X")}, {T3("0"), T3("-Y-X*Z"), T3("Z+X^2")}};
    CHECK(associates(determinant(alt), determinant(pm.entries)));
}

TEST_CASE("presentation matrix: swapped chart and unsupported germs") {
    const PresentationMatrix pm = presentation_matrix(G("(x,y^5+xy,y^6)"));
    CHECK(pm.swapped);
    CHECK(pm.n == 6);
    CHECK_THROWS_AS(presentation_matrix(G("(x,y^3+x*y,y^4+x*y)")), DomainError);
    CHECK_THROWS_AS(presentation_matrix(G("(y,x^2,xy)")), DomainError);
}

TEST_CASE("determinant of the presentation matrix associates with the image equation") {
    for (const char* s : kMonic) {
        CAPTURE(s);
        const MapGerm f = G(s);
        CHECK(associates(fitting_loci(presentation_matrix(f)).F, image_equation(f).F));
    }
}

TEST_CASE("fitting_loci of the cross-cap: the double point image is the Y axis") {
    const FittingLoci fl = fitting_loci(presentation_matrix(G("(x,y^2,xy)")));
    // 1-minors: Z, X, XY (as primitive polynomials).
    CHECK(fl.fD_ideal.size() == 3);
    const auto g = groebner(fl.fD_ideal);
    CHECK(normal_form(T3("X"), g).is_zero());
    CHECK(normal_form(T3("Z"), g).is_zero());
    CHECK_FALSE(normal_form(T3("Y"), g).is_zero());
    REQUIRE(fl.fitt2.size() == 1);
    CHECK(fl.fitt2[0] == T3("1"));
}

TEST_CASE("minors: sizes and a hand-computed case") {
    const PolyMatrix m{{T3("X"), T3("Y")}, {T3("Z"), T3("X")}};
    CHECK(minors(m, 0) == std::vector<MPoly>{T3("1")});
    CHECK(minors(m, 1).size() == 3);
    CHECK(minors(m, 2) == std::vector<MPoly>{T3("X^2-Y*Z")});
    CHECK(minors(m, 3).empty());
}

TEST_CASE("triple_point_oracle examples") {
    CHECK(triple_point_oracle(G("(x,y^2,xy)")).get() == 0);
    CHECK(triple_point_oracle(G("(x,y^2,xy^3-x^5y)")).get() == 0);
    CHECK(triple_point_oracle(G("(x,y^3,y^5+x^2y)")).get() == 2);
    CHECK(triple_point_oracle(G("(x,y^3,xy+y^2)")).get() == mond_T(QhType(1, 3, 2, 1, 1)));
    // The non-reduced double point curve of (x, y^3, xy) gives a non-isolated Fitt2.
    CHECK_FALSE(triple_point_oracle(G("(x,y^3,xy)"), 16).is_finite());
}

TEST_CASE("triple_point_oracle agrees with mond_T on the monic subclass") {
    for (const char* s : kMonic) {
        CAPTURE(s);
        const MapGerm f = G(s);
        CHECK(triple_point_oracle(f).get() == mond_T(*infer_qh_type(f)));
    }
}
