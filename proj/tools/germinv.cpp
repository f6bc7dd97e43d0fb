// germinv: invariants of quasihomogeneous map germs from the plane to 3-space.
//
//   germinv report FILE [--json] [--seed N] [--max-colength N]
//   germinv compare FILE_A FILE_B [--json]
//   germinv family FILE --samples 0,1,-1,1/2 [--json]
//   germinv corpus [--json]
//
// Exit status: 0 on success, 1 on input errors, 2 when a computation finds
// an inconsistency (or a corpus check fails).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "germinv/corpus.hpp"
#include "germinv/errors.hpp"
#include "germinv/germfile.hpp"
#include "germinv/report.hpp"

using namespace germinv;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

std::vector<Rat> parse_samples(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::size_t pos = 0;
    for (std::string item; std::getline(ss, item, ',');) {
        const auto lo = item.find_first_not_of(" \t"), hi = item.find_last_not_of(" \t");
        const std::string s = lo == std::string::npos ? "" : item.substr(lo, hi - lo + 1);
        Rat r;
        if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
            throw ParseError(ParseError::Kind::Syntax, "invalid sample '" + s + "'", pos);
        r.canonicalize();
        out.push_back(r);
        pos += item.size() + 1;
    }
    if (out.empty()) throw ParseError(ParseError::Kind::Syntax, "no samples given", 0);
    return out;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of quasihomogeneous map germs (C^2,0) -> (C^3,0)"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = 0;
    int max_colength = kDefaultMaxOrder;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed", seed, "Seed for generic choices")->capture_default_str();
    app.add_option("--max-colength", max_colength, "Truncation order bound for local colengths")
        ->capture_default_str()
        ->check(CLI::Range(4, 4096));

    std::string file, file_b, samples;
    auto* report = app.add_subcommand("report", "Full invariant report of one germ");
    report->add_option("file", file, "Germ file")->required();
    auto* compare = app.add_subcommand("compare", "Compare the invariant profiles of two germs");
    compare->add_option("first", file, "Germ file")->required();
    compare->add_option("second", file_b, "Germ file")->required();
    auto* family = app.add_subcommand("family", "Check constancy of mu(W) along a one-parameter family");
    family->add_option("file", file, "Germ file declaring a parameter")->required();
    family->add_option("--samples", samples, "Comma-separated rational parameter values")->required();
    auto* corpus = app.add_subcommand("corpus", "Run the built-in example corpus");
    for (auto* sub : {report, compare, family, corpus}) {
        sub->add_flag("--json", json, "Machine-readable output");
        sub->add_option("--seed", seed, "Seed for generic choices");
        sub->add_option("--max-colength", max_colength, "Truncation order bound for local colengths")
            ->check(CLI::Range(4, 4096));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    const ReportOptions opts{max_colength, seed};
    try {
        if (*report) {
            const GermFile gf = load_germ_file(file);
            const ReportDocument doc = make_report(gf.germ(), opts, gf.label);
            if (json)
                print(to_json(doc));
            else
                std::cout << to_text(doc);
            for (const auto& s : doc.inconsistencies) std::cerr << "inconsistency: " << s << "\n";
            return doc.inconsistencies.empty() ? kOk : kInconsistent;
        }
        if (*compare) {
            const ZariskiComparison c =
                zariski_compare(load_germ_file(file).germ(), load_germ_file(file_b).germ(), max_colength);
            if (json)
                print(to_json(c));
            else
                std::cout << to_text(c);
            return kOk;
        }
        if (*family) {
            const GermFile gf = load_germ_file(file);
            const FamilyResult r = whitney_family_check(gf.family(), parse_samples(samples), seed, max_colength);
            if (json)
                print(to_json(r));
            else
                std::cout << to_text(r);
            return kOk;
        }
        if (*corpus) {
            const auto outcomes = run_corpus(builtin_corpus(), opts);
            if (json)
                print(to_json(outcomes));
            else
                std::cout << to_text(outcomes);
            for (const auto& o : outcomes)
                if (!o.pass()) return kInconsistent;
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kInputError;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
