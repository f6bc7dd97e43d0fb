#include "germinv/report.hpp"

#include <sstream>

#include "germinv/errors.hpp"
#include "germinv/imagefit.hpp"

#ifndef GERMINV_VERSION
#define GERMINV_VERSION "0.0.0"
#endif

namespace germinv {
namespace {

std::optional<long> finite(const ColengthResult& r) { return r.value; }

std::string s_vector_string(const SVector& s) {
    return "(" + std::to_string(s.s1) + "," + std::to_string(s.s2) + "," + std::to_string(s.s3) + ")";
}

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

[[noreturn]] void bad(const std::string& what) {
    throw ParseError(ParseError::Kind::Format, "report document: " + what, 0);
}

const Json& at(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

template <class T>
std::optional<T> read_opt(const Json& j, const char* key) {
    const Json& v = at(j, key);
    if (v.is_null()) return std::nullopt;
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(std::string("wrong type for '") + key + "'");
    }
}

template <class T>
T read(const Json& j, const char* key) {
    auto v = read_opt<T>(j, key);
    if (!v) bad(std::string("null '") + key + "'");
    return *v;
}

std::string show(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }
std::string show(const std::optional<std::string>& v) { return v ? *v : "-"; }

}  // namespace

const char* version() { return GERMINV_VERSION; }

ReportDocument make_report(const MapGerm& f, const ReportOptions& opts, std::string label) {
    const InvariantReport r = full_report(f, opts);
    ReportDocument doc;
    doc.label = std::move(label);
    doc.germ = f.to_string();
    doc.corank = r.corank;
    if (r.qh_type) doc.qh_type = r.qh_type->to_string();
    doc.fd = r.fd.fd();
    doc.verdict = to_string(r.fd.verdict);
    if (r.fd.lambda) doc.lambda = r.fd.lambda->poly.to_string();
    doc.inconsistencies = r.inconsistencies;
    doc.notes = r.notes;
    doc.version = version();
    doc.seed = opts.seed;
    doc.max_colength = opts.max_order;
    auto flag = [&](const std::string& msg) {
        if (doc.fd)
            doc.inconsistencies.push_back(msg);
        else
            doc.notes.push_back(msg);
    };

    if (r.branches)
        for (const auto& br : r.branches->classes)
            doc.branches.push_back({to_string(br.kind), br.class_poly.to_string(), to_string(br.classification), br.count()});
    if (r.table) {
        if (r.table->s) doc.s_vector = s_vector_string(*r.table->s);
        if (r.table->applicable) doc.component_rule = r.table->rule;
    }
    if (r.fold_plane) doc.fold_plane = to_string(r.fold_plane->observed);

    InvariantSummary& inv = doc.invariants;
    inv.C = r.C;
    inv.T = r.T;
    inv.ae_codim = r.ae_codim;
    inv.mu_D = r.mu_D;
    inv.r_i = r.r_i;
    inv.r_f = r.r_f;
    inv.m_image = r.mult_image;
    inv.C_oracle = finite(r.C_oracle);
    inv.mu_D_branches = r.mu_D_branches;
    if (r.C_formula) inv.C_formula = r.C_formula->get_str();
    if (r.T_formula) inv.T_formula = r.T_formula->get_str();
    if (r.mult_formula) inv.m_formula = r.mult_formula->get_str();

    if (r.corank <= 1 && r.fd.verdict != FdVerdict::NotFinite) {
        try {
            const ImageEquation e = image_equation(f);
            doc.image_equation = e.F.to_string();
            if (!e.squarefree) doc.notes.push_back("image equation: resultant has repeated factors");
        } catch (const DomainError& e) {
            doc.notes.push_back(std::string("image equation: ") + e.what());
        }
        try {
            presentation_matrix(f);
            inv.T_oracle = finite(triple_point_oracle(f, opts.max_order));
            if (inv.T && inv.T_oracle && *inv.T != *inv.T_oracle)
                flag("T formula " + std::to_string(*inv.T) + " differs from triple point colength " +
                     std::to_string(*inv.T_oracle));
        } catch (const DomainError&) {
            // outside the monic subclass: no second computation of T
        }
    }

    if (doc.fd && r.corank == 1 && r.qh_type) {
        try {
            const SliceData sd = slice_report(f, opts.seed, opts.max_order);
            doc.slice = SliceSummary{sd.plane.to_string(), sd.mu_gamma,      sd.mu_D,        sd.m_fD,
                                     sd.i_D_gamma,         sd.mu_W,          sd.mu_W_branches, sd.mu_W_oracle,
                                     sd.mult_D,            sd.mult_gamma,    sd.tangent_cones_disjoint};
            for (const auto& s : sd.inconsistencies) doc.inconsistencies.push_back("slice: " + s);
            if (inv.mu_D && *inv.mu_D != sd.mu_D)
                doc.inconsistencies.push_back("slice mu(D) " + std::to_string(sd.mu_D) + " differs from report " +
                                              std::to_string(*inv.mu_D));
        } catch (const DomainError& e) {
            doc.notes.push_back(std::string("slice: ") + e.what());
        } catch (const Error& e) {
            doc.inconsistencies.push_back(std::string("slice: ") + e.what());
        }
    }
    return doc;
}

Json to_json(const ReportDocument& d) {
    Json j;
    j["label"] = d.label;
    j["germ"] = d.germ;
    j["corank"] = d.corank;
    j["qh_type"] = opt(d.qh_type);
    j["fd"] = d.fd;
    j["verdict"] = d.verdict;
    j["lambda"] = opt(d.lambda);
    j["image_equation"] = opt(d.image_equation);
    j["s_vector"] = opt(d.s_vector);
    j["component_rule"] = opt(d.component_rule);
    j["fold_plane"] = opt(d.fold_plane);
    j["branches"] = Json::array();
    for (const auto& b : d.branches)
        j["branches"].push_back(
            {{"kind", b.kind}, {"class_poly", b.class_poly}, {"classification", b.classification}, {"count", b.count}});
    const auto& i = d.invariants;
    j["invariants"] = {{"C", opt(i.C)},
                       {"T", opt(i.T)},
                       {"ae_codim", opt(i.ae_codim)},
                       {"mu_D", opt(i.mu_D)},
                       {"r_i", opt(i.r_i)},
                       {"r_f", opt(i.r_f)},
                       {"m_image", opt(i.m_image)},
                       {"C_oracle", opt(i.C_oracle)},
                       {"T_oracle", opt(i.T_oracle)},
                       {"mu_D_branches", opt(i.mu_D_branches)},
                       {"C_formula", opt(i.C_formula)},
                       {"T_formula", opt(i.T_formula)},
                       {"m_formula", opt(i.m_formula)}};
    if (d.slice) {
        const auto& s = *d.slice;
        j["slice"] = {{"plane", s.plane},
                      {"mu_gamma", s.mu_gamma},
                      {"m_fD", s.m_fD},
                      {"i_D_gamma", s.i_D_gamma},
                      {"mu_W", s.mu_W},
                      {"mu_D", s.mu_D},
                      {"mu_W_branches", s.mu_W_branches},
                      {"mu_W_oracle", s.mu_W_oracle},
                      {"mult_D", s.mult_D},
                      {"mult_gamma", s.mult_gamma},
                      {"tangent_cones_disjoint", s.tangent_cones_disjoint}};
    } else {
        j["slice"] = nullptr;
    }
    j["inconsistencies"] = d.inconsistencies;
    j["notes"] = d.notes;
    j["version"] = d.version;
    j["seed"] = d.seed;
    j["max_colength"] = d.max_colength;
    return j;
}

ReportDocument report_from_json(const Json& j) {
    ReportDocument d;
    d.label = read<std::string>(j, "label");
    d.germ = read<std::string>(j, "germ");
    d.corank = read<long>(j, "corank");
    d.qh_type = read_opt<std::string>(j, "qh_type");
    d.fd = read<bool>(j, "fd");
    d.verdict = read<std::string>(j, "verdict");
    d.lambda = read_opt<std::string>(j, "lambda");
    d.image_equation = read_opt<std::string>(j, "image_equation");
    d.s_vector = read_opt<std::string>(j, "s_vector");
    d.component_rule = read_opt<std::string>(j, "component_rule");
    d.fold_plane = read_opt<std::string>(j, "fold_plane");
    const Json& branches = at(j, "branches");
    if (!branches.is_array()) bad("'branches' is not an array");
    for (const auto& b : branches)
        d.branches.push_back({read<std::string>(b, "kind"), read<std::string>(b, "class_poly"),
                              read<std::string>(b, "classification"), read<long>(b, "count")});
    const Json& i = at(j, "invariants");
    auto& inv = d.invariants;
    inv.C = read_opt<long>(i, "C");
    inv.T = read_opt<long>(i, "T");
    inv.ae_codim = read_opt<long>(i, "ae_codim");
    inv.mu_D = read_opt<long>(i, "mu_D");
    inv.r_i = read_opt<long>(i, "r_i");
    inv.r_f = read_opt<long>(i, "r_f");
    inv.m_image = read_opt<long>(i, "m_image");
    inv.C_oracle = read_opt<long>(i, "C_oracle");
    inv.T_oracle = read_opt<long>(i, "T_oracle");
    inv.mu_D_branches = read_opt<long>(i, "mu_D_branches");
    inv.C_formula = read_opt<std::string>(i, "C_formula");
    inv.T_formula = read_opt<std::string>(i, "T_formula");
    inv.m_formula = read_opt<std::string>(i, "m_formula");
    const Json& s = at(j, "slice");
    if (!s.is_null()) {
        d.slice = SliceSummary{read<std::string>(s, "plane"), read<long>(s, "mu_gamma"),
                               read<long>(s, "mu_D"),         read<long>(s, "m_fD"),
                               read<long>(s, "i_D_gamma"),    read<long>(s, "mu_W"),
                               read<long>(s, "mu_W_branches"), read<long>(s, "mu_W_oracle"),
                               read<long>(s, "mult_D"),       read<long>(s, "mult_gamma"),
                               read<bool>(s, "tangent_cones_disjoint")};
    }
    d.inconsistencies = read<std::vector<std::string>>(j, "inconsistencies");
    d.notes = read<std::vector<std::string>>(j, "notes");
    d.version = read<std::string>(j, "version");
    d.seed = read<std::uint64_t>(j, "seed");
    d.max_colength = read<int>(j, "max_colength");
    return d;
}

std::string to_text(const ReportDocument& d) {
    std::ostringstream out;
    if (!d.label.empty()) out << "label:           " << d.label << "\n";
    out << "germ:            " << d.germ << "\n";
    out << "corank:          " << d.corank << "\n";
    out << "type:            " << show(d.qh_type) << "\n";
    out << "verdict:         " << d.verdict << (d.fd ? " (finitely determined)" : "") << "\n";
    if (d.lambda) out << "lambda:          " << *d.lambda << "\n";
    if (d.image_equation) out << "image:           " << *d.image_equation << " = 0\n";
    if (d.s_vector) out << "s-vector:        " << *d.s_vector << "\n";
    if (d.fold_plane) out << "fold plane:      " << *d.fold_plane << "\n";
    if (!d.branches.empty()) {
        out << "branches:\n";
        for (const auto& b : d.branches)
            out << "  " << b.kind << " " << b.class_poly << ": " << b.classification << " x" << b.count << "\n";
    }
    const auto& i = d.invariants;
    out << "C = " << show(i.C) << " (ramification colength " << show(i.C_oracle) << ")\n";
    out << "T = " << show(i.T);
    if (i.T_oracle) out << " (triple point colength " << *i.T_oracle << ")";
    out << "\n";
    out << "Ae-codim = " << show(i.ae_codim) << "\n";
    out << "mu(D) = " << show(i.mu_D) << " (branches " << show(i.mu_D_branches) << ")\n";
    out << "r_i = " << show(i.r_i) << ", r_f = " << show(i.r_f) << "\n";
    out << "m(image) = " << show(i.m_image) << " (formula " << show(i.m_formula) << ")\n";
    if (d.slice) {
        const auto& s = *d.slice;
        out << "slice plane " << s.plane << ": mu(gamma) = " << s.mu_gamma << ", m(f(D)) = " << s.m_fD
            << ", i(D, gamma) = " << s.i_D_gamma << ", mu(W) = " << s.mu_W << "\n";
    }
    for (const auto& s : d.inconsistencies) out << "INCONSISTENCY: " << s << "\n";
    for (const auto& s : d.notes) out << "note: " << s << "\n";
    out << "seed " << d.seed << ", max colength order " << d.max_colength << ", version " << d.version << "\n";
    return out.str();
}

namespace {

Json profile_json(const ZariskiProfile& p) {
    return {{"qh_type", p.type.to_string()},
            {"degrees", p.sorted_degrees},
            {"lambda_degree", p.lambda_degree},
            {"intersections", p.intersections},
            {"r_i", p.r_i},
            {"r_f", p.r_f},
            {"C", p.C},
            {"T", p.T},
            {"m_image", p.mult_image}};
}

}  // namespace

Json to_json(const ZariskiComparison& c) {
    return {{"first", profile_json(c.first)},
            {"second", profile_json(c.second)},
            {"weights_match", c.weights_match},
            {"intersection_tables_match", c.intersection_tables_match},
            {"C_T_match", c.C_T_match},
            {"degrees_equal", c.degrees_equal},
            {"multiplicities_equal", c.multiplicities_equal},
            {"all_match", c.all_match()},
            {"version", version()}};
}

std::string to_text(const ZariskiComparison& c) {
    std::ostringstream out;
    auto line = [&](const char* name, const ZariskiProfile& p) {
        out << name << ": type " << p.type.to_string() << ", r = (" << p.r_i << "," << p.r_f << "), C = " << p.C
            << ", T = " << p.T << ", m(image) = " << p.mult_image << "\n";
    };
    line("first ", c.first);
    line("second", c.second);
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "weights match:             " << yes(c.weights_match) << "\n";
    out << "intersection tables match: " << yes(c.intersection_tables_match) << "\n";
    out << "C and T match:             " << yes(c.C_T_match) << "\n";
    out << "degrees equal:             " << yes(c.degrees_equal) << "\n";
    out << "multiplicities equal:      " << yes(c.multiplicities_equal) << "\n";
    out << (c.all_match() ? "profiles agree\n" : "profiles differ\n");
    return out.str();
}

Json to_json(const FamilyResult& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"t", s.t.get_str()},
                           {"verdict", to_string(s.verdict)},
                           {"mu_W", opt(s.mu_W)},
                           {"m_image", opt(s.mult_image)},
                           {"note", s.note}});
    return {{"samples", samples},
            {"all_fd", r.all_fd},
            {"mu_W_constant", r.mu_W_constant},
            {"m_image_constant", r.mult_constant},
            {"constant", r.constant()},
            {"version", version()}};
}

std::string to_text(const FamilyResult& r) {
    std::ostringstream out;
    for (const auto& s : r.samples) {
        out << "t = " << s.t.get_str() << ": " << to_string(s.verdict) << ", mu(W) = " << show(s.mu_W)
            << ", m(image) = " << show(s.mult_image);
        if (!s.note.empty()) out << " [" << s.note << "]";
        out << "\n";
    }
    if (!r.all_fd)
        out << "not every sample is finitely determined\n";
    else
        out << (r.constant() ? "mu(W) and m(image) are constant at the samples\n"
                             : "mu(W) or m(image) varies across the samples\n");
    return out.str();
}

}  // namespace germinv
