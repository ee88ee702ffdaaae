#ifndef PIVOTSEQ_DECOMPOSE_HPP
#define PIVOTSEQ_DECOMPOSE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pivotseq/lp.hpp"

namespace pivotseq {

// Forward pivot list (row, col), 0-based.
using PivotSequence = std::vector<std::pair<int, int>>;

enum class StepSign {
    Positive, // most limiting step >= 0 over components moving down
    Negative, // most limiting step <= 0 over components moving up
};

// Solutions of A_RC dx = e_i and A_RC^T dy = e_j. The shared component
// dx_j = dy_i is checked at construction.
struct DirectionPair {
    int i = 0; // row index in R
    int j = 0; // column index in C
    RationalVector dx;
    RationalVector dy;
};

DirectionPair directions(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids,
                         int i, int j);

struct StepPair {
    Rational primal_step; // zeroes x at j
    Rational dual_step;   // zeroes y at i
};

// Exact evaluation of the four direction identities plus, when the shared
// component is nonzero, the unique step pair and the equal-objective
// relation. A failed identity raises IdentityViolatedError — it cannot
// happen when the solves are exact.
struct IdentityReport {
    Rational primal_objective; // c_C^T x
    Rational dual_objective;   // b_R^T y
    Rational cdx;              // c_C^T dx
    Rational yi;               // y_i
    Rational bdy;              // b_R^T dy
    Rational xj;               // x_j
    Rational dxj;              // dx_j
    Rational dyi;              // dy_i
    bool steps_defined = false;
    std::optional<StepPair> steps;
    std::optional<Rational> stepped_primal_objective;
    std::optional<Rational> stepped_dual_objective;
};

IdentityReport check_identities(const CanonicalLP& lp, const IndexSet& row_ids,
                                const IndexSet& col_ids, int i, int j);

// Most limiting step keeping vec + step*dvec nonnegative. Positive: the
// minimum of vec_l / -dvec_l over dvec_l < 0 (a value >= 0); Negative: the
// maximum of the same quotient over dvec_l > 0 (a value <= 0). Ties break to
// the smallest position. Throws NoBlockingComponentError when no component
// qualifies.
struct RatioResult {
    Rational step;
    int index = 0; // position within vec
};

RatioResult ratio_step(const RationalVector& vec, const RationalVector& dvec, StepSign sign);

enum class ReductionCase {
    YZero,          // some dual component is zero
    XZero,          // some primal component is zero
    StrictPositive, // both vectors strictly positive; alternating inner loop
};

const char* to_string(ReductionCase c);

struct ReductionStep {
    int removed_row = 0;
    int removed_col = 0;
    ReductionCase tag = ReductionCase::YZero;
    int inner_iterations = 0;
    BasicPair child; // on (R \ removed_row, C \ removed_col)
};

// One dimension-reduction step: removes a row and a column while keeping the
// reduced basis nonsingular and the reduced pair nonnegative. Case order:
// zero dual component first, then zero primal, then the strictly positive
// alternating loop (capped at k^2 iterations). `prefer` picks the ratio-test
// variant when both are defined.
ReductionStep reduce_once(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids,
                          const BasicPair& pair, StepSign prefer = StepSign::Positive);

struct TraceLevel {
    IndexSet rows;
    IndexSet cols;
    RationalVector x;
    RationalVector y;
    Rational objective;
    std::optional<ReductionCase> tag; // reduction applied at this level
    int inner_iterations = 0;
};

// Forward trace: levels k = 1..r with nested supports, each an optimal pair
// of the restricted problems; pivots in forward order grow level k-1 into
// level k. r = 0 gives an empty trace.
struct DecompositionTrace {
    int m = 0;
    int n = 0;
    int r = 0;
    std::vector<TraceLevel> levels;
    PivotSequence pivots;
};

// Peels the certificate basis down to a single element and reverses the
// removal order into the forward pivot list. The certificate must pass
// check_certificate.
DecompositionTrace decompose(const CanonicalLP& lp, const PartitionCertificate& cert,
                             StepSign prefer = StepSign::Positive);

enum class ReplayFailure {
    None,
    SingularBasis,
    NegativeComponent,
};

struct ReplayResult {
    bool ok = false;
    DecompositionTrace trace; // valid prefix on failure
    ReplayFailure failure = ReplayFailure::None;
    int fail_level = 0; // 1-based level count at which the replay stopped
};

// Rebuilds the trace from a pivot list alone, solving both systems at every
// level and checking nonsingularity and nonnegativity.
ReplayResult replay(const CanonicalLP& lp, const PivotSequence& pivots);

// Basis shrinking that ignores sign conditions: repeatedly removes the
// smallest row and the smallest column with a nonzero direction component,
// keeping every intermediate submatrix nonsingular. Returns the removal list
// down to a 1x1 basis.
PivotSequence relaxed_reduce(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids);

namespace detail {

// Shared alternating loop of the strictly positive reduction case, used by
// both the plain and the bordered flavor. The callbacks solve for the
// direction vectors given a row/column position; `candidate` evaluates the
// objective proxy whose strict monotonicity (decreasing for Positive,
// increasing for Negative) certifies termination.
struct InnerLoop {
    std::function<RationalVector(int row_pos)> primal_direction;
    std::function<RationalVector(int col_pos)> dual_direction;
    std::function<Rational(const Rational& step, int row_pos)> candidate;
};

struct InnerLoopResult {
    int row_pos = 0;
    int col_pos = 0;
    Rational primal_step;
    Rational dual_step;
    RationalVector dx;
    RationalVector dy;
    int iterations = 0;
};

InnerLoopResult alternating_reduction(const RationalVector& x, const RationalVector& y,
                                      StepSign sign, int cap, const InnerLoop& ops);

} // namespace detail

} // namespace pivotseq

#endif
