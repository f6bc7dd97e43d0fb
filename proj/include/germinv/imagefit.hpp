#pragma once

// Image equation of a corank-1 germ by elimination, and presentation
// matrices of f_*O_2 with their Fitting ideals on the monic subclass.

#include <vector>

#include "germinv/germ.hpp"
#include "germinv/localalg.hpp"
#include "germinv/mpoly.hpp"

namespace germinv {

/// Target variables X, Y, Z.
const VarList& target_vars();

struct ImageEquation {
    MPoly F;                 // primitive, reduced
    bool squarefree = true;  // false when the raw resultant had repeated factors
};

/// Primitive part of the resultant eliminating the non-coordinate source
/// variable from f_k - Y_k, f_l - Y_l, for a coordinate f_i equal to a source
/// variable. Throws DomainError when no coordinate is a source variable or
/// the other two coordinates are not finite along it.
ImageEquation image_equation(const MapGerm& f);

using PolyMatrix = std::vector<std::vector<MPoly>>;

struct PresentationMatrix {
    std::size_t n = 0;
    PolyMatrix entries;
    /// True when the third coordinate is the pure power y^n and the second
    /// acts by multiplication.
    bool swapped = false;
};

/// For f = (x, y^n, h) (or (x, h, y^n)), f_*O_2 is free over C{X, Z} (resp.
/// C{X, Y}) on 1, y, ..., y^{n-1}; row j of the matrix is W e_j minus the
/// coordinates of h y^j, with W the multiplying coordinate. Throws
/// DomainError outside this subclass.
PresentationMatrix presentation_matrix(const MapGerm& f);

/// Determinant by cofactor expansion.
MPoly determinant(const PolyMatrix& m);

/// Nonzero k x k minors, made primitive and deduplicated. k = 0 gives {1}.
std::vector<MPoly> minors(const PolyMatrix& m, std::size_t k);

struct FittingLoci {
    MPoly F;                      // det
    std::vector<MPoly> fD_ideal;  // (n-1)-minors
    std::vector<MPoly> fitt2;     // (n-2)-minors; {1} when n <= 2
};

FittingLoci fitting_loci(const PresentationMatrix& pm);

/// Colength of the ideal of (n-2)-minors at the origin of C^3.
ColengthResult triple_point_oracle(const MapGerm& f, int max_order = kDefaultMaxOrder);

}  // namespace germinv
