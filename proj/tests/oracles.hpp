#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library algorithms they check.

#include <cstdint>
#include <vector>

#include "germinv/mpoly.hpp"

namespace oracle {

using germinv::MPoly;
using germinv::Rat;

/// Determinant of the Sylvester matrix (fraction-free Bareiss elimination),
/// as a polynomial over the same variable list with `var` eliminated.
MPoly sylvester_resultant(const MPoly& p, const MPoly& q, std::size_t var);

/// Number of monomials outside a monomial ideal (given by exponent vectors).
/// Returns -1 if the ideal lacks a pure power of some variable.
long staircase_count(const std::vector<std::vector<unsigned>>& gens, std::size_t nvars);

/// dim k[x] / (I + m^N) by plain linear algebra on the span of
/// monomial multiples of the generators.
long truncated_dimension(const std::vector<MPoly>& gens, int order);

/// ord_u p(c1 u^e1, c2 u^e2): intersection multiplicity of the plane curve
/// p with the branch parametrized monomially (c1 = 0 allowed).
long order_along(const MPoly& p, const Rat& c1, unsigned e1, const Rat& c2, unsigned e2);

/// Small random polynomial in the given variables with integer coefficients.
class PolyGen {
public:
    explicit PolyGen(std::uint64_t seed) : state_(seed * 2862933555777941757ull + 3037000493ull) {}
    std::uint64_t next();
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    MPoly poly(const germinv::VarList& vars, int max_terms, int max_deg, long coef_bound = 5);

private:
    std::uint64_t state_;
};

}  // namespace oracle
