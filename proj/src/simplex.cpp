#include "pivotseq/simplex.hpp"

#include <algorithm>

#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"

namespace pivotseq {

namespace {

constexpr int kMaxPivots = 200000;

// Columns: [0, n) structural x, [n, n+m) slack s, [n+m, n+2m) artificial a.
class Solver {
public:
    Solver(const CanonicalLP& lp, bool record)
        : lp_(lp), m_(lp.rows()), n_(lp.cols()), record_(record) {}

    SolveOutcome run() {
        build();
        if (!phase_one()) {
            SolveOutcome out;
            out.status = SolveStatus::PrimalInfeasible;
            out.pivot_log = std::move(log_);
            out.visited_bases = std::move(history_);
            return out;
        }
        drop_artificials();
        if (!phase_two()) {
            SolveOutcome out;
            out.status = SolveStatus::DualInfeasible;
            out.pivot_log = std::move(log_);
            out.visited_bases = std::move(history_);
            return out;
        }
        return assemble();
    }

private:
    const CanonicalLP& lp_;
    int m_;
    int n_;
    bool record_;
    int num_cols_ = 0;
    int phase_ = 1;
    std::vector<RationalVector> row_;
    RationalVector rhs_;
    RationalVector reduced_; // reduced costs of the current phase
    std::vector<int> basic_;
    std::vector<bool> dead_; // retired artificial columns
    std::vector<std::string> log_;
    std::vector<std::vector<int>> history_;
    int pivots_ = 0;
    // Bland's no-repeat guarantee holds per pivot segment: the phase-1 loop,
    // the artificial clean-out (strictly fewer artificials each pivot), and
    // the phase-2 loop. Snapshots carry the segment id so the whole history
    // must be pairwise distinct.
    int segment_ = 1;

    void build() {
        num_cols_ = n_ + 2 * m_;
        row_.assign(m_, RationalVector(num_cols_));
        rhs_.assign(m_, Rational(0));
        basic_.resize(m_);
        dead_.assign(num_cols_, false);
        for (int i = 0; i < m_; ++i) {
            const int sign = lp_.b[i] < 0 ? -1 : 1;
            for (int j = 0; j < n_; ++j) {
                row_[i][j] = sign * lp_.A(i, j);
            }
            row_[i][n_ + i] = -sign;
            row_[i][n_ + m_ + i] = 1;
            rhs_[i] = sign * lp_.b[i];
            basic_[i] = n_ + m_ + i;
        }
        // Phase-1 reduced costs: minimize the artificial sum; zero out the
        // basic artificial columns by subtracting every constraint row.
        reduced_.assign(num_cols_, Rational(0));
        for (int i = 0; i < m_; ++i) {
            reduced_[n_ + m_ + i] = 1;
        }
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < num_cols_; ++j) {
                reduced_[j] -= row_[i][j];
            }
        }
        snapshot();
    }

    Rational objective(int phase) const {
        Rational sum = 0;
        for (int i = 0; i < m_; ++i) {
            const int col = basic_[i];
            if (phase == 1) {
                if (col >= n_ + m_) {
                    sum += rhs_[i];
                }
            } else if (col < n_) {
                sum += lp_.c[col] * rhs_[i];
            }
        }
        return sum;
    }

    std::string column_name(int col) const {
        if (col < n_) {
            return "x" + std::to_string(col + 1);
        }
        if (col < n_ + m_) {
            return "s" + std::to_string(col - n_ + 1);
        }
        return "a" + std::to_string(col - n_ - m_ + 1);
    }

    void snapshot() {
        if (!record_) {
            return;
        }
        std::vector<int> entry;
        entry.reserve(basic_.size() + 1);
        entry.push_back(segment_);
        entry.insert(entry.end(), basic_.begin(), basic_.end());
        std::sort(entry.begin() + 1, entry.end());
        history_.push_back(std::move(entry));
    }

    void pivot(int pr, int pc) {
        if (++pivots_ > kMaxPivots) {
            throw InternalInvariantError("pivot budget exceeded; Bland's rule should have terminated");
        }
        const Rational piv = row_[pr][pc];
        const int leaving = basic_[pr];
        for (auto& v : row_[pr]) {
            v /= piv;
        }
        rhs_[pr] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == pr || row_[i][pc] == 0) {
                continue;
            }
            const Rational factor = row_[i][pc];
            for (int j = 0; j < num_cols_; ++j) {
                row_[i][j] -= factor * row_[pr][j];
            }
            rhs_[i] -= factor * rhs_[pr];
        }
        if (reduced_[pc] != 0) {
            const Rational factor = reduced_[pc];
            for (int j = 0; j < num_cols_; ++j) {
                reduced_[j] -= factor * row_[pr][j];
            }
        }
        basic_[pr] = pc;
        if (leaving >= n_ + m_) {
            dead_[leaving] = true; // artificials never re-enter
        }
        if (record_) {
            log_.push_back("p" + std::to_string(phase_) + " in=" + column_name(pc) +
                           " out=" + column_name(leaving) +
                           " obj=" + pivotseq::to_string(objective(phase_)));
            snapshot();
        }
    }

    // Bland: entering = smallest eligible column index, leaving = minimum
    // ratio with ties broken by smallest basic variable index. Returns false
    // when no entering column exists (phase optimum reached).
    bool bland_step(bool* unbounded) {
        int entering = -1;
        for (int j = 0; j < num_cols_; ++j) {
            if (!dead_[j] && reduced_[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) {
            return false;
        }
        int leave_row = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < m_; ++i) {
            if (row_[i][entering] <= 0) {
                continue;
            }
            const Rational ratio = rhs_[i] / row_[i][entering];
            if (leave_row < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basic_[i] < basic_[leave_row])) {
                leave_row = i;
                best_ratio = ratio;
            }
        }
        if (leave_row < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leave_row, entering);
        return true;
    }

    bool phase_one() {
        phase_ = 1;
        bool unbounded = false;
        while (bland_step(&unbounded)) {
        }
        if (unbounded) {
            // The artificial objective is bounded below by zero.
            throw InternalInvariantError("phase-1 objective reported unbounded");
        }
        return objective(1) == 0;
    }

    void drop_artificials() {
        segment_ = 2;
        for (int i = 0; i < m_; ++i) {
            if (basic_[i] < n_ + m_) {
                continue;
            }
            if (rhs_[i] != 0) {
                throw InternalInvariantError("basic artificial with nonzero value after phase 1");
            }
            int pc = -1;
            for (int j = 0; j < n_ + m_; ++j) {
                if (row_[i][j] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0) {
                // [A, -I] has full row rank, so a zero row cannot appear.
                throw InternalInvariantError("cannot pivot artificial out of the basis");
            }
            pivot(i, pc);
        }
        for (auto& r : row_) {
            r.resize(n_ + m_);
        }
        num_cols_ = n_ + m_;
        dead_.assign(num_cols_, false);
    }

    bool phase_two() {
        phase_ = 2;
        segment_ = 3;
        reduced_.assign(num_cols_, Rational(0));
        for (int j = 0; j < n_; ++j) {
            reduced_[j] = lp_.c[j];
        }
        for (int i = 0; i < m_; ++i) {
            const int col = basic_[i];
            if (col < n_ && lp_.c[col] != 0) {
                const Rational factor = lp_.c[col];
                for (int j = 0; j < num_cols_; ++j) {
                    reduced_[j] -= factor * row_[i][j];
                }
            }
        }
        bool unbounded = false;
        while (bland_step(&unbounded)) {
        }
        return !unbounded;
    }

    SolveOutcome assemble() {
        StandardFormTableau tableau;
        tableau.lp = lp_;
        tableau.m = m_;
        tableau.n = n_;
        tableau.row = row_;
        tableau.rhs = rhs_;
        tableau.basic = basic_;
        tableau.phase = 2;

        const IndexPartition partition = extract_partition(tableau);
        PartitionCertificate cert;
        cert.partition = partition;
        cert.pair = basic_pair(lp_, partition.row_support, partition.col_support);
        cert.objective = partition.row_support.empty()
                             ? Rational(0)
                             : dot(restrict_to(lp_.c, full_index_set(n_), partition.col_support), cert.pair.x);

        const CertificateCheck check = check_certificate(lp_, cert);
        if (!check.ok) {
            std::string what = "optimal tableau produced an invalid certificate:";
            for (const auto& v : check.violations) {
                what += " [" + v + "]";
            }
            throw InternalInvariantError(what);
        }

        SolveOutcome out;
        out.status = SolveStatus::Optimal;
        out.certificate = std::move(cert);
        out.tableau = std::move(tableau);
        out.pivot_log = std::move(log_);
        out.visited_bases = std::move(history_);
        return out;
    }
};

} // namespace

const char* to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::PrimalInfeasible:
        return "primal infeasible";
    case SolveStatus::DualInfeasible:
        return "dual infeasible (primal unbounded)";
    }
    return "unknown";
}

SolveOutcome solve_canonical(const CanonicalLP& lp, bool record) {
    Solver solver(lp, record);
    return solver.run();
}

IndexPartition extract_partition(const StandardFormTableau& tableau) {
    const int m = tableau.m;
    const int n = tableau.n;
    std::vector<bool> in_basis(n + m, false);
    for (int col : tableau.basic) {
        if (col < 0 || col >= n + m) {
            throw PartitionRepairFailedError("tableau basis contains a retired column");
        }
        in_basis[col] = true;
    }

    IndexPartition partition;
    for (int j = 0; j < n; ++j) {
        if (in_basis[j]) {
            partition.col_support.push_back(j);
        }
    }
    for (int i = 0; i < m; ++i) {
        if (!in_basis[n + i]) {
            partition.row_support.push_back(i);
        }
    }

    // m = |C+| + (#basic slacks) and #basic slacks = m - |R+|, so the two
    // supports must agree in size; a mismatch means the tableau is corrupt.
    if (partition.row_support.size() != partition.col_support.size()) {
        throw PartitionRepairFailedError("support sizes differ in extracted partition");
    }
    if (!partition.row_support.empty() &&
        !is_nonsingular(tableau.lp.A.submatrix(partition.row_support, partition.col_support))) {
        throw PartitionRepairFailedError("extracted basis submatrix is singular");
    }
    return partition;
}

} // namespace pivotseq
