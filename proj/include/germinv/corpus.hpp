#pragma once

// Built-in example germs with published invariant values, run as a golden
// suite against the full report pipeline.

#include <string>
#include <vector>

#include "germinv/report.hpp"

namespace germinv {

/// A named field of a ReportDocument and the value it must take. Fields:
/// verdict, fd, corank, qh_type, r_i, r_f, C, T, mu_D, m_image, s_vector,
/// fold_plane, mu_W, m_fD, i_D_gamma, mu_gamma, consistent, and the
/// polynomial fields lambda and image_equation (compared up to a constant).
struct Expectation {
    std::string field;
    std::string value;
};

struct CorpusEntry {
    std::string label;
    std::string map;  // over x, y
    std::vector<Expectation> expected;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct CheckOutcome {
    std::string field, expected, actual;
    bool pass = false;
};

struct CorpusOutcome {
    std::string label;
    std::string germ;
    std::vector<CheckOutcome> checks;
    std::string error;  // non-empty when the pipeline threw

    bool pass() const;
};

/// Value of `field` in `doc` as a string; "-" when absent. Throws DomainError
/// for an unknown field name.
std::string field_value(const ReportDocument& doc, const std::string& field);

CorpusOutcome run_entry(const CorpusEntry& e, const ReportOptions& opts = {});
/// Results ordered by label.
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const ReportOptions& opts = {});

Json to_json(const std::vector<CorpusOutcome>& outcomes);
std::string to_text(const std::vector<CorpusOutcome>& outcomes);

}  // namespace germinv
