#pragma once

// Double point curve D(f) of corank-1 germs, finite determinacy, and the
// identification/fold structure of its branches.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "germinv/germ.hpp"
#include "germinv/mpoly.hpp"

namespace germinv {

/// A germ brought to first coordinate x by permuting target coordinates
/// and/or swapping the source variables, with pure powers of x removed from
/// the other two coordinates.
struct PreparedGerm {
    MapGerm germ;
    /// germ[i] comes from original coordinate target_order[i].
    std::array<int, 3> target_order{0, 1, 2};
    bool source_swapped = false;
};

/// nullopt when no coordinate is exactly one of the source variables.
std::optional<PreparedGerm> prepare_corank1(const MapGerm& f);

/// P = (f2(x,y) - f2(x,y'))/(y - y'), Q likewise for f3; over (x, y, y').
struct DoubleLift {
    MPoly P, Q;
};

/// Requires f1 = x (first source variable); throws DomainError otherwise.
DoubleLift double_point_lift(const MapGerm& f);

struct LambdaQh {
    long d, a, b;
};

struct Lambda {
    MPoly poly;
    std::optional<LambdaQh> qh;
};

/// Primitive part of Res_{y'}(P, Q). Throws DomainError when it vanishes
/// identically (f not generically one-to-one).
Lambda double_point_curve(const MapGerm& f);

enum class FdVerdict { FD, NotFinite, NotGenerically1to1, NonReducedD, Unsupported };

std::string to_string(FdVerdict v);

struct FdResult {
    FdVerdict verdict = FdVerdict::Unsupported;
    long corank = 0;
    std::optional<PreparedGerm> prepared;
    std::optional<Lambda> lambda;
    std::string note;

    bool fd() const noexcept { return verdict == FdVerdict::FD; }
};

/// FD iff f is finite, lambda is not identically zero and lambda is reduced
/// with isolated singularity at the origin. Corank 0 is FD with lambda = 1;
/// corank 2 and germs without a coordinate equal to a source variable are
/// Unsupported.
FdResult is_finitely_determined(const MapGerm& f, int max_order = kDefaultMaxOrder);

enum class BranchKind { XAxis, YAxis, ConicClass };
enum class BranchClass { Identification, Fold, Invalid };

std::string to_string(BranchKind k);
std::string to_string(BranchClass c);

/// One axis, or a class of branches y^a = alpha x^b with alpha running over
/// the roots of a squarefree B(t) (t = y^a / x^b) sharing one vanishing pattern.
struct Branch {
    BranchKind kind = BranchKind::ConicClass;
    MPoly class_poly;  // B(t) for conic classes; x or y for the axes
    long a = 1, b = 1;
    bool f2_vanishes = false;
    bool f3_vanishes = false;
    BranchClass classification = BranchClass::Invalid;
    long degree = 0;  // generic degree of f restricted to the branch

    long count() const;  // number of complex branches represented
    std::string describe() const;
};

struct BranchSet {
    int s = 0;  // x divides lambda
    int v = 0;  // y divides lambda
    std::vector<Branch> classes;
    long r_i = 0, r_f = 0;

    long total() const noexcept { return r_i + r_f; }
};

/// Splits a squarefree quasihomogeneous lambda into axis branches and conic
/// classes. Classes are split by their vanishing pattern against f2 and f3
/// of `f` (which must have first coordinate x), then classified.
BranchSet branch_decompose(const Lambda& lam, const MapGerm& f, const QhType& t);

/// Generic degree of f restricted to a branch, and the resulting tag.
BranchClass classify_branch(Branch& br, const MapGerm& f, const QhType& t);

struct ComponentCounts {
    long r_i = 0, r_f = 0;
};

/// Direct count from the branch decomposition. Requires an FD, quasihomogeneous
/// corank-1 germ; throws DomainError otherwise and InconsistencyError on an
/// invalid branch.
ComponentCounts count_components(const MapGerm& f, int max_order = kDefaultMaxOrder);

struct SVector {
    long s1 = 0, s2 = 0, s3 = 0;
    friend bool operator==(const SVector&, const SVector&) = default;
};

struct TableResult {
    bool applicable = false;
    std::string rule;  // e.g. "mult2:a_odd,s=1" or "mult3+:s2"
    std::string reason;  // why not applicable
    long r_i = 0, r_f = 0;
    std::optional<SVector> s;
    std::optional<Rat> r_total;  // total component count for multiplicity >= 3
    int multiplicity = 0;
};

/// Closed-form component counts. Multiplicity 2 needs the shape
/// (x, y^2, y h(x, y^2)); multiplicity >= 3 needs beta != 0.
TableResult table_r(const NormalFormInfo& nf, const QhType& t);

enum class FoldPlane { X0, Y0, Z0, NoFolds };
std::string to_string(FoldPlane p);

struct FoldPlaneResult {
    FoldPlane observed = FoldPlane::NoFolds;  // from branch images
    FoldPlane predicted = FoldPlane::NoFolds;  // from the s-vector
};

/// Coordinate plane containing the images of all fold branches. Throws
/// InconsistencyError when fold images lie in different planes or
/// observation and prediction disagree.
FoldPlaneResult fold_image_plane(const MapGerm& f, int max_order = kDefaultMaxOrder);

}  // namespace germinv
