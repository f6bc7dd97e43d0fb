#pragma once

// Serializable summaries of the analysis pipeline: per-germ reports, Zariski
// comparisons and family checks, as JSON and as plain text.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germinv/invariants.hpp"
#include "germinv/slice.hpp"

namespace germinv {

using Json = nlohmann::ordered_json;

/// Library version recorded in every document.
const char* version();

struct BranchRow {
    std::string kind;
    std::string class_poly;
    std::string classification;
    long count = 0;
    friend bool operator==(const BranchRow&, const BranchRow&) = default;
};

struct InvariantSummary {
    std::optional<long> C, T, ae_codim, mu_D, r_i, r_f, m_image;
    std::optional<long> C_oracle, T_oracle, mu_D_branches;
    std::optional<std::string> C_formula, T_formula, m_formula;
    friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

struct SliceSummary {
    std::string plane;
    long mu_gamma = 0, mu_D = 0, m_fD = 0, i_D_gamma = 0, mu_W = 0;
    long mu_W_branches = 0, mu_W_oracle = 0;
    long mult_D = 0, mult_gamma = 0;
    bool tangent_cones_disjoint = false;
    friend bool operator==(const SliceSummary&, const SliceSummary&) = default;
};

struct ReportDocument {
    std::string label;
    std::string germ;
    long corank = 0;
    std::optional<std::string> qh_type;
    bool fd = false;
    std::string verdict;
    std::optional<std::string> lambda;
    std::optional<std::string> image_equation;
    std::optional<std::string> s_vector;
    std::optional<std::string> component_rule;
    std::optional<std::string> fold_plane;
    std::vector<BranchRow> branches;
    InvariantSummary invariants;
    std::optional<SliceSummary> slice;
    std::vector<std::string> inconsistencies;
    std::vector<std::string> notes;
    std::string version;
    std::uint64_t seed = 0;
    int max_colength = kDefaultMaxOrder;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Runs every applicable stage: finite determinacy, invariants with their
/// second computations, image equation and triple point colength where a
/// coordinate is a source variable, and the slice identities for FD
/// quasihomogeneous corank-1 germs. Failures inside a stage become
/// inconsistencies (FD germs) or notes.
ReportDocument make_report(const MapGerm& f, const ReportOptions& opts = {}, std::string label = {});

Json to_json(const ReportDocument& doc);
/// Inverse of to_json; throws ParseError (kind Format) on a malformed document.
ReportDocument report_from_json(const Json& j);
std::string to_text(const ReportDocument& doc);

Json to_json(const ZariskiComparison& c);
std::string to_text(const ZariskiComparison& c);

Json to_json(const FamilyResult& r);
std::string to_text(const FamilyResult& r);

}  // namespace germinv
