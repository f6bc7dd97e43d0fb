#include "germinv/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "germinv/errors.hpp"
#include "germinv/imagefit.hpp"
#include "germinv/parse.hpp"
#include "germinv/polyalg.hpp"

namespace germinv {
namespace {

const VarList& source_vars() {
    static const VarList v{"x", "y"};
    return v;
}

std::string show(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }
std::string show(const std::optional<std::string>& v) { return v ? *v : "-"; }

bool polynomial_field(const std::string& field) { return field == "lambda" || field == "image_equation"; }

bool same_up_to_constant(const std::string& a, const std::string& b, const VarList& vars) {
    try {
        return associates(parse_poly(a, vars), parse_poly(b, vars));
    } catch (const Error&) {
        return false;
    }
}

std::vector<CorpusEntry> make_corpus() {
    std::vector<CorpusEntry> c;
    c.push_back({"cross-cap", "(x, y^2, x*y)",
                 {{"verdict", "FD"}, {"C", "1"}, {"T", "0"}, {"mu_D", "0"}, {"m_image", "2"}, {"r_i", "0"}, {"r_f", "1"},
                  {"image_equation", "Z^2 - X^2*Y"}, {"consistent", "true"}}});
    c.push_back({"C5", "(x, y^2, x*y^3 - x^5*y)",
                 {{"verdict", "FD"},
                  {"qh_type", "(1,4,7;1,2)"},
                  {"lambda", "x*y^2 - x^5"},
                  {"image_equation", "Z^2 - X^2*Y^3 + 2*X^6*Y^2 - X^10*Y"},
                  {"r_i", "2"},
                  {"r_f", "1"},
                  {"m_image", "2"},
                  {"mu_D", "6"},
                  {"m_fD", "2"},
                  {"i_D_gamma", "4"},
                  {"mu_W", "13"},
                  {"consistent", "true"}}});
    c.push_back({"S1", "(x, y^2, y^3 - x^2*y)", {{"verdict", "FD"}, {"C", "2"}, {"r_i", "2"}, {"r_f", "0"}, {"consistent", "true"}}});
    c.push_back({"S2", "(x, y^2, y^3 + x^3*y)", {{"verdict", "FD"}, {"r_i", "0"}, {"r_f", "1"}, {"consistent", "true"}}});
    c.push_back({"C3", "(x, y^2, x*y^3 - x^3*y)", {{"verdict", "FD"}, {"r_i", "2"}, {"r_f", "1"}, {"consistent", "true"}}});
    c.push_back({"C4", "(x, y^2, x*y^3 + x^4*y)", {{"verdict", "FD"}, {"r_i", "0"}, {"r_f", "2"}, {"consistent", "true"}}});

    c.push_back({"s-vector (1,0,0)", "(x, y^4, x^5*y + x*y^5 + y^6)",
                 {{"verdict", "FD"}, {"qh_type", "(1,4,6;1,1)"}, {"s_vector", "(1,0,0)"}, {"r_i", "14"}, {"r_f", "1"},
                  {"m_image", "4"}, {"consistent", "true"}}});
    c.push_back({"s-vector (0,1,0)", "(x, y^4, 2*y^13 + x^2*y + 3*x*y^7)",
                 {{"verdict", "FD"}, {"qh_type", "(6,4,13;6,1)"}, {"s_vector", "(0,1,0)"}, {"r_i", "4"}, {"r_f", "2"},
                  {"fold_plane", "Z=0"}, {"consistent", "true"}}});
    c.push_back({"s-vector (0,0,1)", "(x, y^5 + x*y, y^6)",
                 {{"verdict", "FD"}, {"qh_type", "(4,5,6;4,1)"}, {"s_vector", "(0,0,1)"}, {"r_i", "4"}, {"r_f", "1"},
                  {"consistent", "true"}}});
    c.push_back({"s-vector (0,0,0)", "(x, y^3, y^5 + x^2*y)",
                 {{"verdict", "FD"}, {"qh_type", "(2,3,5;2,1)"}, {"s_vector", "(0,0,0)"}, {"r_i", "4"}, {"r_f", "0"},
                  {"m_image", "3"}, {"T", "2"}, {"consistent", "true"}}});

    std::string h = "y";
    for (int k = 1; k <= 3; ++k) {
        h += k == 1 ? "*(x - y^2)" : "*(x - " + std::to_string(k) + "*y^2)";
        c.push_back({"f_" + std::to_string(k), "(x, y^2, " + h + ")",
                     {{"verdict", "FD"}, {"r_i", "0"}, {"r_f", std::to_string(k)}, {"m_image", "2"}, {"consistent", "true"}}});
    }
    for (int n = 2; n <= 4; ++n)
        c.push_back({"g_" + std::to_string(n), "(x, y^" + std::to_string(n) + ", (x + y)^" + std::to_string(n + 1) + ")",
                     {{"verdict", "FD"}, {"m_image", std::to_string(n)}, {"r_f", "0"}, {"consistent", "true"}}});

    c.push_back({"not FD (x, y^3, xy)", "(x, y^3, x*y)",
                 {{"verdict", "NonReducedD"}, {"fd", "false"}, {"m_image", "3"}, {"image_equation", "Z^3 - X^3*Y"}}});
    c.push_back({"FD (x, y^3, xy + y^2)", "(x, y^3, x*y + y^2)",
                 {{"verdict", "FD"}, {"m_image", "2"}, {"image_equation", "Z^3 - X^3*Y - Y^2 - 3*X*Y*Z"},
                  {"consistent", "true"}}});
    c.push_back({"double fold", "(x^2, y^2, x^3 + y^3 + x*y)", {{"corank", "2"}, {"verdict", "Unsupported"}}});
    std::sort(c.begin(), c.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.label < b.label; });
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> c = make_corpus();
    return c;
}

bool CorpusOutcome::pass() const {
    return error.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

std::string field_value(const ReportDocument& d, const std::string& f) {
    const auto& i = d.invariants;
    if (f == "verdict") return d.verdict;
    if (f == "fd") return d.fd ? "true" : "false";
    if (f == "corank") return std::to_string(d.corank);
    if (f == "qh_type") return show(d.qh_type);
    if (f == "lambda") return show(d.lambda);
    if (f == "image_equation") return show(d.image_equation);
    if (f == "s_vector") return show(d.s_vector);
    if (f == "fold_plane") return show(d.fold_plane);
    if (f == "r_i") return show(i.r_i);
    if (f == "r_f") return show(i.r_f);
    if (f == "C") return show(i.C);
    if (f == "T") return show(i.T);
    if (f == "ae_codim") return show(i.ae_codim);
    if (f == "mu_D") return show(i.mu_D);
    if (f == "m_image") return show(i.m_image);
    if (f == "consistent") return d.inconsistencies.empty() ? "true" : "false";
    if (f == "mu_W" || f == "m_fD" || f == "i_D_gamma" || f == "mu_gamma") {
        if (!d.slice) return "-";
        const auto& s = *d.slice;
        const long v = f == "mu_W" ? s.mu_W : f == "m_fD" ? s.m_fD : f == "i_D_gamma" ? s.i_D_gamma : s.mu_gamma;
        return std::to_string(v);
    }
    throw DomainError("unknown report field '" + f + "'");
}

CorpusOutcome run_entry(const CorpusEntry& e, const ReportOptions& opts) {
    CorpusOutcome out;
    out.label = e.label;
    out.germ = e.map;
    try {
        const ReportDocument doc = make_report(parse_germ(e.map, source_vars()), opts, e.label);
        out.germ = doc.germ;
        for (const auto& x : e.expected) {
            CheckOutcome c{x.field, x.value, field_value(doc, x.field), false};
            if (polynomial_field(x.field))
                c.pass = same_up_to_constant(c.actual, c.expected,
                                             x.field == "lambda" ? source_vars() : target_vars());
            else
                c.pass = c.actual == c.expected;
            out.checks.push_back(std::move(c));
        }
    } catch (const Error& ex) {
        out.error = ex.what();
    }
    return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const ReportOptions& opts) {
    std::vector<CorpusOutcome> out;
    for (const auto& e : entries) out.push_back(run_entry(e, opts));
    std::sort(out.begin(), out.end(), [](const CorpusOutcome& a, const CorpusOutcome& b) { return a.label < b.label; });
    return out;
}

Json to_json(const std::vector<CorpusOutcome>& outcomes) {
    Json arr = Json::array();
    for (const auto& o : outcomes) {
        Json checks = Json::array();
        for (const auto& c : o.checks)
            checks.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        arr.push_back({{"label", o.label}, {"germ", o.germ}, {"pass", o.pass()}, {"error", o.error}, {"checks", checks}});
    }
    return arr;
}

std::string to_text(const std::vector<CorpusOutcome>& outcomes) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        out << (o.pass() ? "PASS " : "FAIL ") << o.label << "  " << o.germ << "\n";
        if (!o.error.empty()) out << "     error: " << o.error << "\n";
        for (const auto& c : o.checks)
            if (!c.pass) out << "     " << c.field << ": expected " << c.expected << ", got " << c.actual << "\n";
        passed += o.pass();
    }
    out << passed << "/" << outcomes.size() << " corpus entries pass\n";
    return out.str();
}

}  // namespace germinv
