#pragma once

// Map germs (C^2,0) -> (C^3,0) given by polynomial coordinates.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "germinv/localalg.hpp"
#include "germinv/mpoly.hpp"

namespace germinv {

/// f = (f1, f2, f3), each a polynomial in two source variables vanishing at 0.
class MapGerm {
public:
    MapGerm(MPoly f1, MPoly f2, MPoly f3);

    const MPoly& f1() const noexcept { return f_[0]; }
    const MPoly& f2() const noexcept { return f_[1]; }
    const MPoly& f3() const noexcept { return f_[2]; }
    const MPoly& operator[](std::size_t i) const { return f_.at(i); }
    const std::array<MPoly, 3>& coords() const noexcept { return f_; }
    const VarList& vars() const noexcept { return f_[0].vars(); }

    /// Polynomials in (X, Y, Z) composed with f.
    MPoly pullback(const MPoly& target_poly) const;
    /// Linear form a1 X + a2 Y + a3 Z composed with f.
    MPoly linear_pullback(const std::array<Rat, 3>& coefs) const;

    std::string to_string() const;
    friend bool operator==(const MapGerm&, const MapGerm&) = default;

private:
    std::array<MPoly, 3> f_;
};

/// Parses "(e1, e2, e3)" or "e1, e2, e3" over the given source variables.
MapGerm parse_germ(const std::string& text, const VarList& vars);

/// Weighted degrees (d1, d2, d3) for weights a (first variable) and b (second).
struct QhType {
    long d1 = 0, d2 = 0, d3 = 0;
    long a = 1, b = 1;

    QhType() = default;
    /// Validates a, b >= 1, gcd(a, b) = 1 and d_i >= min(a, b).
    QhType(long d1, long d2, long d3, long a, long b);

    Rat delta() const { return ratio(d1 * d2 * d3, a * b); }
    long epsilon() const noexcept { return d1 + d2 + d3 - a - b; }
    long degree(std::size_t i) const { return i == 0 ? d1 : (i == 1 ? d2 : d3); }
    std::string to_string() const;
    friend bool operator==(const QhType&, const QhType&) = default;
};

long corank(const MapGerm& f);

/// Smallest coprime weights making every coordinate quasihomogeneous. When no
/// term pair constrains the weights (all coordinates monomials) the result
/// uses (1, 1). nullopt when no positive weights work or a coordinate is zero.
std::optional<QhType> infer_qh_type(const MapGerm& f);

/// f = (x, y^n + x p, beta y^m + x q) with p(x,0) = q(x,0) = 0.
struct NormalFormInfo {
    int n = 0;
    /// Absent when beta = 0 (no pure power of y in the third coordinate).
    std::optional<int> m;
    Rat beta;
    MPoly p, q;

    MapGerm reconstruct() const;
};

/// Recognizes the normal form exactly; never transforms f. On failure returns
/// nullopt and stores the reason in `why` when given.
std::optional<NormalFormInfo> check_normal_form(const MapGerm& f, std::string* why = nullptr);

/// When f1 is the first source variable, removes from f2 and f3 every term
/// that is a pure power of it. This is a change of coordinates in the target.
MapGerm strip_first_coordinate_terms(const MapGerm& f);

/// f^{-1}(0) = {0} with finite local algebra.
bool is_finite(const MapGerm& f, int max_order = kDefaultMaxOrder);

/// d'1 d'2 / (a b) for the sorted degrees; may be non-integral when the
/// finite determinacy hypothesis fails.
Rat image_multiplicity_formula(const QhType& t);

using Projection = std::array<std::array<Rat, 3>, 2>;

/// Colength of <l1 o f, l2 o f>.
ColengthResult image_multiplicity_direct(const MapGerm& f, const Projection& proj,
                                         int max_order = kDefaultMaxOrder);

/// Deterministic stream of small integers in [-17, 17].
class SmallIntStream {
public:
    explicit SmallIntStream(std::uint64_t seed) : gen_(static_cast<std::mt19937::result_type>(seed)) {}
    long next() { return static_cast<long>(gen_() % 35u) - 17; }

private:
    std::mt19937 gen_;
};

inline constexpr int kGenericCandidates = 5;

struct GenericMultiplicity {
    ColengthResult value;
    Projection projection;
};

/// Minimum of image_multiplicity_direct over five seeded projections with
/// finite colength. Infinite only if every candidate was degenerate.
GenericMultiplicity image_multiplicity_generic(const MapGerm& f, std::uint64_t seed,
                                               int max_order = kDefaultMaxOrder);

}  // namespace germinv
