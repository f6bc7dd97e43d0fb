#pragma once

// Transversal slices: the preimage curve of a generic plane section, the
// multiplicity of the double point image, the Milnor number of
// W(f) = D(f) ∪ preimage curve, one-parameter family checks and invariant
// profiles for comparing germs.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germinv/doublepoint.hpp"
#include "germinv/germ.hpp"
#include "germinv/localalg.hpp"

namespace germinv {

/// Plane a1 X + a2 Y + a3 Z = 0 in the target.
struct SlicePlane {
    std::array<Rat, 3> l{};
    int candidate = -1;  // index among the seeded candidates, -1 if given explicitly
    std::vector<std::string> certificate;

    std::string to_string() const;
};

/// Validates l != 0.
SlicePlane make_plane(const std::array<Rat, 3>& l);

/// Among kGenericCandidates seeded planes, those with squarefree l o f coprime
/// to lambda and finite intersection with D(f) are admissible; returns the one
/// with lexicographically smallest (mu(l o f), i(D(f), l o f)). Germs without
/// a double point curve (corank 2) are scored by mu alone. Throws DomainError
/// when no candidate is admissible.
SlicePlane choose_generic_plane(const MapGerm& f, std::uint64_t seed, int max_order = kDefaultMaxOrder);

/// m(f(D(f))) from branch parametrizations: fold branches contribute half
/// their lowest image order, identification branches half the sum of theirs.
/// Requires an FD quasihomogeneous corank-1 germ.
long m_image_double_curve(const MapGerm& f, int max_order = kDefaultMaxOrder);

struct SliceData {
    SlicePlane plane;
    MPoly gamma_tilde;
    long mu_gamma = 0;
    long mu_D = 0;
    long m_fD = 0;
    long i_D_gamma = 0;
    long mu_W = 0;             // mu_D + mu_gamma + 4 m_fD - 1
    long mu_W_branches = 0;    // branch data of D(f) plus oracle intersections with the slice
    long mu_W_oracle = 0;      // Milnor number of lambda * (l o f)
    long mult_D = 0, mult_gamma = 0;
    bool tangent_cones_disjoint = false;
    std::vector<std::string> inconsistencies;

    bool consistent() const noexcept { return inconsistencies.empty(); }
};

/// Computes every slice quantity by two routes and records each failed
/// identity in `inconsistencies`. Requires an FD quasihomogeneous corank-1
/// germ; throws DomainError otherwise.
SliceData check_slice_identities(const MapGerm& f, const SlicePlane& sp, int max_order = kDefaultMaxOrder);

/// choose_generic_plane + check_slice_identities, re-sampling once with seed + 1 when
/// the first plane fails a check.
SliceData slice_report(const MapGerm& f, std::uint64_t seed, int max_order = kDefaultMaxOrder);

/// Germ whose coordinates depend polynomially on one parameter.
class GermFamily {
public:
    /// `vars` lists the two source variables followed by the parameter.
    GermFamily(std::array<MPoly, 3> coords, VarList vars);

    const std::array<MPoly, 3>& coords() const noexcept { return f_; }
    const VarList& vars() const noexcept { return vars_; }
    const std::string& parameter() const { return vars_[2]; }

    MapGerm at(const Rat& t) const;

private:
    std::array<MPoly, 3> f_;
    VarList vars_;
};

struct FamilySample {
    Rat t;
    FdVerdict verdict = FdVerdict::Unsupported;
    std::optional<long> mu_W;
    std::optional<long> mult_image;
    std::string note;
};

struct FamilyResult {
    std::vector<FamilySample> samples;
    bool all_fd = false;
    /// mu(W(f_t)) is the same at every sample (requires all_fd).
    bool mu_W_constant = false;
    bool mult_constant = false;
    bool constant() const noexcept { return mu_W_constant && mult_constant; }
};

/// Evaluates mu(W(f_t)) and m(f_t(C^2)) at each sample. The verdict is a
/// statement about the samples only.
FamilyResult whitney_family_check(const GermFamily& family, const std::vector<Rat>& samples, std::uint64_t seed,
                                  int max_order = kDefaultMaxOrder);

struct ZariskiProfile {
    QhType type;                       // of the prepared germ (first coordinate x)
    std::array<long, 3> sorted_degrees{};
    std::array<Rat, 3> degree_symmetric{};  // e1, e2, e3 of the degrees
    long lambda_degree = 0;
    std::vector<long> intersections;   // sorted pairwise branch intersections of D(f)
    long r_i = 0, r_f = 0;
    long C = 0, T = 0;
    long mult_image = 0;
};

/// Requires an FD quasihomogeneous corank-1 germ.
ZariskiProfile zariski_profile(const MapGerm& f, int max_order = kDefaultMaxOrder);

struct ZariskiComparison {
    ZariskiProfile first, second;
    bool weights_match = false;
    bool intersection_tables_match = false;
    bool C_T_match = false;
    bool degrees_equal = false;  // solution of the symmetric degree system
    bool multiplicities_equal = false;

    bool all_match() const noexcept {
        return weights_match && intersection_tables_match && C_T_match && degrees_equal && multiplicities_equal;
    }
};

ZariskiComparison zariski_compare(const MapGerm& f, const MapGerm& g, int max_order = kDefaultMaxOrder);

}  // namespace germinv
