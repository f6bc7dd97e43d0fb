#include <doctest.h>

#include <set>

#include "germinv/corpus.hpp"
#include "germinv/errors.hpp"
#include "germinv/germfile.hpp"
#include "germinv/parse.hpp"
#include "germinv/report.hpp"

using namespace germinv;

namespace {

const VarList XY{"x", "y"};

MapGerm G(const char* s) { return parse_germ(s, XY); }

}  // namespace

TEST_CASE("germ file: keys, comments and blank lines") {
    const GermFile gf = parse_germ_file("# comment\n\nlabel: C5   # trailing\nvars: x y\nmap: (x, y^2, x*y^3 - x^5*y)\n");
    CHECK(gf.label == "C5");
    CHECK_FALSE(gf.parameter);
    CHECK(gf.germ() == G("(x,y^2,xy^3-x^5y)"));
    CHECK_THROWS_AS(gf.family(), DomainError);
}

TEST_CASE("germ file: other variable names and a parameter") {
    const GermFile gf = parse_germ_file("vars: u v\nparam: s\nmap: u, v^2, u*v + s*v^3\n");
    REQUIRE(gf.parameter);
    CHECK(*gf.parameter == "s");
    CHECK_THROWS_AS(gf.germ(), DomainError);
    const MapGerm f = gf.family().at(Rat(3));
    CHECK(f.f3() == parse_poly("u*v + 3*v^3", VarList{"u", "v"}));
}

TEST_CASE("germ file: format errors carry positions") {
    auto kind_at = [](const char* text) {
        try {
            parse_germ_file(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.kind(), e.position());
        }
        FAIL("no error");
        return std::make_pair(ParseError::Kind::Format, std::size_t{0});
    };
    CHECK(kind_at("map: (x, y, x)\n").first == ParseError::Kind::Format);            // missing vars
    CHECK(kind_at("vars: x y\n").first == ParseError::Kind::Format);                 // missing map
    CHECK(kind_at("vars: x\nmap: (x, x, x)\n").first == ParseError::Kind::Format);   // one variable
    CHECK(kind_at("vars: x y\nmap: (x, y)\n").first == ParseError::Kind::Format);    // two components
    CHECK(kind_at("vars: x y\ncolor: red\nmap: (x,y,x)\n") == std::make_pair(ParseError::Kind::Format, std::size_t{10}));
    CHECK(kind_at("vars: x y\nvars: x y\nmap: (x,y,x)\n").first == ParseError::Kind::Format);
    CHECK(kind_at("vars: x y\nparam: x\nmap: (x,y,x)\n").first == ParseError::Kind::Format);
    // "vars: x y\n" is 10 characters, "map: (x, y, " another 12.
    const auto bad = kind_at("vars: x y\nmap: (x, y, z)\n");
    CHECK(bad.first == ParseError::Kind::UnknownVariable);
    CHECK(bad.second == 22);
    CHECK_THROWS_AS(load_germ_file("/nonexistent/file.germ"), ParseError);
}

TEST_CASE("report of C5") {
    const ReportDocument d = make_report(G("(x,y^2,xy^3-x^5y)"), {}, "C5");
    CHECK(d.fd);
    CHECK(d.verdict == "FD");
    CHECK(d.invariants.r_i == 2);
    CHECK(d.invariants.r_f == 1);
    CHECK(d.invariants.mu_D == 6);
    CHECK(d.invariants.m_image == 2);
    CHECK(d.invariants.C == 5);
    CHECK(d.invariants.T == 0);
    REQUIRE(d.slice);
    CHECK(d.slice->m_fD == 2);
    CHECK(d.slice->mu_W == 13);
    CHECK(d.inconsistencies.empty());
    CHECK(d.branches.size() == 2);
}

TEST_CASE("report of a germ that is not finitely determined") {
    const ReportDocument d = make_report(G("(x,y^3,xy)"));
    CHECK_FALSE(d.fd);
    CHECK(d.verdict == "NonReducedD");
    CHECK(d.invariants.m_image == 3);
    CHECK(d.invariants.m_formula == "2");
    CHECK(d.inconsistencies.empty());
    CHECK_FALSE(d.slice);
    CHECK_FALSE(d.notes.empty());
}

TEST_CASE("report of a corank-2 double fold is partial") {
    const ReportDocument d = make_report(G("(x^2,y^2,x^3+y^3+xy)"));
    CHECK(d.corank == 2);
    CHECK(d.verdict == "Unsupported");
    CHECK_FALSE(d.invariants.mu_D);
    CHECK_FALSE(d.slice);
    CHECK(d.branches.empty());
    CHECK_FALSE(d.notes.empty());
}

TEST_CASE("JSON schema and lossless round trip") {
    for (const char* s : {"(x,y^2,xy^3-x^5y)", "(x,y^3,xy)", "(x^2,y^2,x^3+y^3+xy)", "(x,y^4,2y^13+x^2y+3xy^7)"}) {
        CAPTURE(s);
        const ReportDocument d = make_report(G(s), {kDefaultMaxOrder, 3}, "sample");
        const Json j = to_json(d);
        for (const char* key : {"germ", "qh_type", "fd", "branches", "invariants", "slice", "inconsistencies",
                                "version", "seed"})
            CHECK(j.contains(key));
        for (const char* key : {"C", "T", "ae_codim", "mu_D", "r_i", "r_f", "m_image"})
            CHECK(j["invariants"].contains(key));
        if (!j["slice"].is_null())
            for (const char* key : {"plane", "mu_gamma", "m_fD", "i_D_gamma", "mu_W"}) CHECK(j["slice"].contains(key));
        for (const auto& b : j["branches"])
            for (const char* key : {"kind", "class_poly", "classification", "count"}) CHECK(b.contains(key));
        CHECK(j["seed"] == 3);

        const ReportDocument back = report_from_json(Json::parse(j.dump()));
        CHECK(back == d);
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("JSON output is deterministic") {
    const MapGerm f = G("(x,y^3,y^5+x^2y)");
    CHECK(to_json(make_report(f)).dump() == to_json(make_report(f)).dump());
}

TEST_CASE("malformed report documents are rejected") {
    Json j = to_json(make_report(G("(x,y^2,xy)")));
    j.erase("verdict");
    CHECK_THROWS_AS(report_from_json(j), ParseError);
    Json k = to_json(make_report(G("(x,y^2,xy)")));
    k["invariants"]["C"] = "one";
    CHECK_THROWS_AS(report_from_json(k), ParseError);
}

TEST_CASE("text output mentions the main invariants") {
    const std::string t = to_text(make_report(G("(x,y^2,xy^3-x^5y)"), {}, "C5"));
    CHECK(t.find("label:           C5") != std::string::npos);
    CHECK(t.find("mu(W) = 13") != std::string::npos);
    CHECK(t.find("r_i = 2, r_f = 1") != std::string::npos);
}

TEST_CASE("built-in corpus passes, ordered by label") {
    const auto& entries = builtin_corpus();
    CHECK(entries.size() >= 19);
    std::set<std::string> labels;
    for (const auto& e : entries) labels.insert(e.label);
    CHECK(labels.size() == entries.size());
    const auto outcomes = run_corpus(entries);
    REQUIRE(outcomes.size() == entries.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        CAPTURE(outcomes[i].label);
        CHECK(outcomes[i].pass());
        if (i > 0) CHECK(outcomes[i - 1].label < outcomes[i].label);
    }
    const Json j = to_json(outcomes);
    REQUIRE(j.is_array());
    CHECK(j[0].contains("pass"));
}

TEST_CASE("corpus reports a wrong expectation") {
    // A sign error in the double point curve would show up like this.
    const CorpusEntry wrong{"C5 with a sign error", "(x, y^2, x*y^3 - x^5*y)", {{"lambda", "x*y^2 + x^5"}, {"r_i", "2"}}};
    const CorpusOutcome o = run_entry(wrong);
    CHECK_FALSE(o.pass());
    CHECK_FALSE(o.checks[0].pass);
    CHECK(o.checks[1].pass);
    CHECK(to_text({o}).find("FAIL C5 with a sign error") != std::string::npos);

    const CorpusOutcome broken = run_entry({"bad map", "(x, y", {}});
    CHECK_FALSE(broken.pass());
    CHECK_FALSE(broken.error.empty());
}

TEST_CASE("field_value rejects unknown fields") {
    const ReportDocument d = make_report(G("(x,y^2,xy)"));
    CHECK(field_value(d, "C") == "1");
    CHECK(field_value(d, "consistent") == "true");
    CHECK_THROWS_AS(field_value(d, "colour"), DomainError);
}

TEST_CASE("comparison and family documents") {
    const Json c = to_json(zariski_compare(G("(x,y^2,xy^3-x^5y)"), G("(x,y^2,xy^3-4x^5y)")));
    CHECK(c["all_match"] == true);
    const GermFile gf = parse_germ_file("vars: x y\nparam: t\nmap: (x, y^2, y^3 + (t - 1)*x^2*y)\n");
    const FamilyResult r = whitney_family_check(gf.family(), {Rat(0), Rat(1)}, 0);
    const Json fj = to_json(r);
    CHECK(fj["samples"][1]["verdict"] == "NonReducedD");
    CHECK(fj["all_fd"] == false);
    CHECK(to_text(r).find("t = 1: NonReducedD") != std::string::npos);
}
