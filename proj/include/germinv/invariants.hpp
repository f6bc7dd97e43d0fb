#pragma once

// Closed-form invariants of quasihomogeneous germs and their independent
// local-algebra counterparts.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germinv/doublepoint.hpp"
#include "germinv/germ.hpp"
#include "germinv/localalg.hpp"

namespace germinv {

/// Exact formula values; may be non-integral off the finite determinacy hypothesis.
Rat mond_C_value(const QhType& t);
Rat mond_T_value(const QhType& t);
Rat ae_codim_value(const QhType& t, long mu_D);

/// Integer versions; throw InconsistencyError when the value is not a
/// nonnegative integer.
long mond_C(const QhType& t);
long mond_T(const QhType& t);
long ae_codim(const QhType& t, long mu_D);

/// Colength of the ideal of 2x2 minors of the Jacobian matrix.
ColengthResult crosscap_oracle(const MapGerm& f, int max_order = kDefaultMaxOrder);

/// Weighted degree of lambda predicted from the type: delta - epsilon.
Rat lambda_degree_formula(const QhType& t);

/// Milnor number of D(f) from its branches: each conic branch has
/// mu = (a-1)(b-1); conic/conic meet with multiplicity ab, conic/V(x) with a,
/// conic/V(y) with b, V(x)/V(y) with 1.
long mu_from_branch_set(const BranchSet& bs);

/// Intersection multiplicity of two branches of D(f) from their kinds.
long branch_intersection(const Branch& p, const Branch& q);

struct MuD {
    ColengthResult oracle;         // Milnor number of lambda
    std::optional<long> branches;  // from the branch set, when quasihomogeneous
};

/// Both Milnor number paths for an FD corank-1 germ. Throws
/// InconsistencyError when they disagree, DomainError when f is not FD.
MuD mu_D(const MapGerm& f, int max_order = kDefaultMaxOrder);

struct InvariantReport {
    explicit InvariantReport(MapGerm g) : germ(std::move(g)) {}

    MapGerm germ;
    long corank = 0;
    std::optional<QhType> qh_type;
    FdResult fd;
    std::optional<BranchSet> branches;
    std::optional<TableResult> table;
    std::optional<FoldPlaneResult> fold_plane;

    std::optional<Rat> C_formula, T_formula, mult_formula;
    std::optional<long> C, T, ae_codim;
    ColengthResult C_oracle;
    std::optional<long> mu_D, mu_D_branches;
    std::optional<long> r_i, r_f;
    std::optional<long> mult_image;  // generic direct multiplicity
    std::optional<Projection> projection;

    std::vector<std::string> inconsistencies;
    std::vector<std::string> notes;
};

struct ReportOptions {
    int max_order = kDefaultMaxOrder;
    std::uint64_t seed = 0;
};

/// Every invariant that applies, each cross-checked against its second
/// computation. Failed checks on FD inputs go to `inconsistencies`;
/// divergences explained by a failed hypothesis go to `notes`.
InvariantReport full_report(const MapGerm& f, const ReportOptions& opts = {});

}  // namespace germinv
