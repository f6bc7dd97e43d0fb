#pragma once

// Local algebra at the origin: Groebner bases, colength of ideals in the
// local ring, intersection multiplicities and Milnor numbers.

#include <optional>
#include <vector>

#include "germinv/mpoly.hpp"

namespace germinv {

inline constexpr int kDefaultMaxOrder = 64;

/// dim O/I at the origin, or "infinite" when the truncated dimensions had not
/// stabilized by `bound`.
struct ColengthResult {
    std::optional<long> value;
    int bound = 0;

    static ColengthResult finite(long v) { return {v, 0}; }
    static ColengthResult infinite(int at) { return {std::nullopt, at}; }
    bool is_finite() const noexcept { return value.has_value(); }
    /// Throws DomainError when infinite.
    long get() const;
    std::string to_string() const;
    friend bool operator==(const ColengthResult&, const ColengthResult&) = default;
};

/// Reduced Groebner basis in graded lex order. Zero generators are dropped;
/// the result is sorted by leading monomial, each element monic.
std::vector<MPoly> groebner(const std::vector<MPoly>& gens);

/// Remainder of p on division by a Groebner basis.
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis);

/// dim k[x] / (I + m^N), computed with a Groebner basis of the truncated ideal.
long truncated_colength(const std::vector<MPoly>& gens, int order);

/// dim O/I at the origin: the value of N -> dim O/(I + m^N) once two
/// consecutive orders agree. Throws DomainError on an empty generator list.
ColengthResult colength_local(const std::vector<MPoly>& gens, int max_order = kDefaultMaxOrder);

/// Local intersection multiplicity of two plane curves at the origin.
ColengthResult intersection_multiplicity(const MPoly& p, const MPoly& q, int max_order = kDefaultMaxOrder);

/// Milnor number of a plane curve: colength of its two partial derivatives.
ColengthResult milnor_number(const MPoly& p, int max_order = kDefaultMaxOrder);

/// Milnor number of a reduced curve from its branches: sum(mu_q - 1) +
/// 2 * sum_{q<j} i(q,j) + 1. `pairwise` is square of the same size as
/// `branch_mus`; its diagonal is ignored.
long milnor_from_branches(const std::vector<long>& branch_mus, const std::vector<std::vector<long>>& pairwise);

}  // namespace germinv
