#ifndef PIVOTSEQ_SIMPLEX_HPP
#define PIVOTSEQ_SIMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "pivotseq/lp.hpp"

namespace pivotseq {

// Working state of the slack-augmented standard form
//   minimize c^T x  s.t. [A, -I] (x, s) = b, x >= 0, s >= 0
// after the two simplex phases. Column indices: 0..n-1 structural,
// n..n+m-1 slack. Rows whose original b was negative are stored negated so
// the right-hand side stays nonnegative throughout.
struct StandardFormTableau {
    CanonicalLP lp;
    int m = 0;
    int n = 0;
    std::vector<RationalVector> row; // m rows of n+m coefficients
    RationalVector rhs;              // current basic values, always >= 0
    std::vector<int> basic;          // column basic in each row
    int phase = 0;
};

enum class SolveStatus {
    Optimal,
    PrimalInfeasible,
    DualInfeasible, // primal unbounded
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Optimal;
    std::optional<PartitionCertificate> certificate;
    std::optional<StandardFormTableau> tableau;
    std::vector<std::string> pivot_log;              // when recording is on
    std::vector<std::vector<int>> visited_bases;     // when recording is on
};

const char* to_string(SolveStatus status);

// Two-phase simplex with Bland's smallest-index rule; every pivot is exact.
// An Optimal outcome always carries a certificate that passes
// check_certificate (verified internally; failure raises
// InternalInvariantError).
SolveOutcome solve_canonical(const CanonicalLP& lp, bool record = false);

// Reads the optimal partition off a final tableau: the column support is the
// set of structural columns in the basis, the row support the set of rows
// whose slack is nonbasic. Equal sizes and nonsingularity of the selected
// submatrix are checked, not assumed; failure raises
// PartitionRepairFailedError.
IndexPartition extract_partition(const StandardFormTableau& tableau);

} // namespace pivotseq

#endif
