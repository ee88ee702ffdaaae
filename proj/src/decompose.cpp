#include "pivotseq/decompose.hpp"

#include <algorithm>

#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"

namespace pivotseq {

namespace {

bool has_blocking(const RationalVector& dvec, StepSign sign) {
    for (const Rational& d : dvec) {
        if (sign == StepSign::Positive ? d < 0 : d > 0) {
            return true;
        }
    }
    return false;
}

StepSign flipped(StepSign sign) {
    return sign == StepSign::Positive ? StepSign::Negative : StepSign::Positive;
}

RatioResult ratio_with_fallback(const RationalVector& vec, const RationalVector& dvec, StepSign prefer) {
    if (has_blocking(dvec, prefer)) {
        return ratio_step(vec, dvec, prefer);
    }
    return ratio_step(vec, dvec, flipped(prefer));
}

void require_sets(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids) {
    if (!is_index_set(row_ids, lp.rows()) || !is_index_set(col_ids, lp.cols())) {
        throw IndexOutOfRangeError("index sets out of range or not ascending");
    }
    if (row_ids.size() != col_ids.size()) {
        throw SizeMismatchError("row and column sets differ in size");
    }
}

RationalVector rows_of(const CanonicalLP& lp, const IndexSet& row_ids) {
    return restrict_to(lp.b, full_index_set(lp.rows()), row_ids);
}

RationalVector cols_of(const CanonicalLP& lp, const IndexSet& col_ids) {
    return restrict_to(lp.c, full_index_set(lp.cols()), col_ids);
}

} // namespace

const char* to_string(ReductionCase c) {
    switch (c) {
    case ReductionCase::YZero:
        return "y_zero";
    case ReductionCase::XZero:
        return "x_zero";
    case ReductionCase::StrictPositive:
        return "strict_positive";
    }
    return "unknown";
}

DirectionPair directions(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids,
                         int i, int j) {
    require_sets(lp, row_ids, col_ids);
    const int k = static_cast<int>(row_ids.size());
    const int pos_i = position_of(row_ids, i);
    const int pos_j = position_of(col_ids, j);
    if (pos_i < 0 || pos_j < 0) {
        throw IndexOutOfRangeError("pivot indices must belong to the row and column sets");
    }
    const RationalMatrix basis = lp.A.submatrix(row_ids, col_ids);
    DirectionPair dp;
    dp.i = i;
    dp.j = j;
    try {
        dp.dx = solve_linear(basis, unit_vector(k, pos_i));
        dp.dy = transpose_solve(basis, unit_vector(k, pos_j));
    } catch (const SingularMatrixError&) {
        throw SingularBasisError("basis matrix A_RC is singular");
    }
    if (dp.dx[pos_j] != dp.dy[pos_i]) {
        throw IdentityViolatedError("shared direction component dx_j = dy_i failed");
    }
    return dp;
}

IdentityReport check_identities(const CanonicalLP& lp, const IndexSet& row_ids,
                                const IndexSet& col_ids, int i, int j) {
    const BasicPair pair = basic_pair(lp, row_ids, col_ids);
    const DirectionPair dp = directions(lp, row_ids, col_ids, i, j);
    const int pos_i = position_of(row_ids, i);
    const int pos_j = position_of(col_ids, j);
    const RationalVector b_R = rows_of(lp, row_ids);
    const RationalVector c_C = cols_of(lp, col_ids);

    IdentityReport rep;
    rep.primal_objective = dot(c_C, pair.x);
    rep.dual_objective = dot(b_R, pair.y);
    rep.cdx = dot(c_C, dp.dx);
    rep.yi = pair.y[pos_i];
    rep.bdy = dot(b_R, dp.dy);
    rep.xj = pair.x[pos_j];
    rep.dxj = dp.dx[pos_j];
    rep.dyi = dp.dy[pos_i];

    if (rep.primal_objective != rep.dual_objective) {
        throw IdentityViolatedError("c_C^T x = b_R^T y failed");
    }
    if (rep.cdx != rep.yi) {
        throw IdentityViolatedError("c_C^T dx = y_i failed");
    }
    if (rep.bdy != rep.xj) {
        throw IdentityViolatedError("b_R^T dy = x_j failed");
    }
    if (rep.dxj != rep.dyi) {
        throw IdentityViolatedError("dx_j = dy_i failed");
    }

    rep.steps_defined = rep.dxj != 0;
    if (rep.steps_defined) {
        StepPair steps;
        steps.primal_step = -rep.xj / rep.dxj;
        steps.dual_step = -rep.yi / rep.dyi;
        rep.stepped_primal_objective = dot(c_C, add_scaled(pair.x, steps.primal_step, dp.dx));
        rep.stepped_dual_objective = dot(b_R, add_scaled(pair.y, steps.dual_step, dp.dy));
        if (*rep.stepped_primal_objective != *rep.stepped_dual_objective) {
            throw IdentityViolatedError("equal-objective relation after the step pair failed");
        }
        rep.steps = steps;
    }
    return rep;
}

RatioResult ratio_step(const RationalVector& vec, const RationalVector& dvec, StepSign sign) {
    if (vec.size() != dvec.size()) {
        throw SizeMismatchError("ratio test on vectors of different lengths");
    }
    int best = -1;
    Rational best_step = 0;
    for (size_t l = 0; l < vec.size(); ++l) {
        const bool qualifies = sign == StepSign::Positive ? dvec[l] < 0 : dvec[l] > 0;
        if (!qualifies) {
            continue;
        }
        const Rational step = vec[l] / -dvec[l];
        if (best < 0 || (sign == StepSign::Positive ? step < best_step : step > best_step)) {
            best = static_cast<int>(l);
            best_step = step;
        }
    }
    if (best < 0) {
        throw NoBlockingComponentError(sign == StepSign::Positive
                                           ? "no negative direction component blocks a positive step"
                                           : "no positive direction component blocks a negative step");
    }
    return {best_step, best};
}

namespace detail {

InnerLoopResult alternating_reduction(const RationalVector& x, const RationalVector& y,
                                      StepSign sign, int cap, const InnerLoop& ops) {
    InnerLoopResult res;
    res.row_pos = 0;
    res.dx = ops.primal_direction(res.row_pos);
    {
        const RatioResult first = ratio_step(x, res.dx, sign);
        res.primal_step = first.step;
        res.col_pos = first.index;
    }
    Rational prev_candidate = ops.candidate(res.primal_step, res.row_pos);

    while (true) {
        if (++res.iterations > cap) {
            throw InnerLoopCapExceededError(
                "alternating reduction exceeded its iteration cap of " + std::to_string(cap) +
                " at row position " + std::to_string(res.row_pos) + ", column position " +
                std::to_string(res.col_pos) + "; candidate objective " + to_string(prev_candidate));
        }

        res.dy = ops.dual_direction(res.col_pos);
        if (res.dy[res.row_pos] != res.dx[res.col_pos]) {
            throw IdentityViolatedError("dx_j = dy_i failed inside the alternating loop");
        }
        const Rational t_zero = -y[res.row_pos] / res.dy[res.row_pos];
        if (all_nonnegative(add_scaled(y, t_zero, res.dy))) {
            res.dual_step = t_zero;
            return res;
        }

        // Truncate the dual step to the most limiting feasible one; the newly
        // binding row replaces the current one.
        const RatioResult dual_ratio = ratio_step(y, res.dy, sign);
        res.row_pos = dual_ratio.index;

        res.dx = ops.primal_direction(res.row_pos);
        if (res.dx[res.col_pos] != res.dy[res.row_pos]) {
            throw IdentityViolatedError("dx_j = dy_i failed inside the alternating loop");
        }
        const Rational s_zero = -x[res.col_pos] / res.dx[res.col_pos];
        if (all_nonnegative(add_scaled(x, s_zero, res.dx))) {
            res.primal_step = s_zero;
            res.dual_step = dual_ratio.step;
            return res;
        }

        const RatioResult primal_ratio = ratio_step(x, res.dx, sign);
        res.primal_step = primal_ratio.step;
        res.col_pos = primal_ratio.index;

        const Rational candidate = ops.candidate(res.primal_step, res.row_pos);
        const bool progress =
            sign == StepSign::Positive ? candidate < prev_candidate : candidate > prev_candidate;
        if (!progress) {
            throw InternalInvariantError("candidate objective failed to move strictly inside the alternating loop");
        }
        prev_candidate = candidate;
    }
}

} // namespace detail

namespace {

ReductionStep finalize_reduction(const CanonicalLP& lp, const IndexSet& row_ids,
                                 const IndexSet& col_ids, int row_pos, int col_pos,
                                 const RationalVector& stepped_x, const RationalVector& stepped_y,
                                 ReductionCase tag, int inner) {
    if (stepped_x[col_pos] != 0 || stepped_y[row_pos] != 0) {
        throw InternalInvariantError("stepped pair is not zero at the removed indices");
    }
    if (!all_nonnegative(stepped_x) || !all_nonnegative(stepped_y)) {
        throw InternalInvariantError("stepped pair lost nonnegativity");
    }

    ReductionStep step;
    step.removed_row = row_ids[row_pos];
    step.removed_col = col_ids[col_pos];
    step.tag = tag;
    step.inner_iterations = inner;

    const IndexSet child_rows = without_value(row_ids, step.removed_row);
    const IndexSet child_cols = without_value(col_ids, step.removed_col);
    if (!is_nonsingular(lp.A.submatrix(child_rows, child_cols))) {
        throw SingularBasisError("reduced basis became singular");
    }

    RationalVector child_x = stepped_x;
    child_x.erase(child_x.begin() + col_pos);
    RationalVector child_y = stepped_y;
    child_y.erase(child_y.begin() + row_pos);

    // Fresh solves on the reduced basis must reproduce the restricted
    // stepped vectors exactly.
    const BasicPair fresh = basic_pair(lp, child_rows, child_cols);
    if (fresh.x != child_x || fresh.y != child_y) {
        throw InternalInvariantError("restricted stepped pair disagrees with the fresh child solve");
    }
    step.child = fresh;
    return step;
}

} // namespace

ReductionStep reduce_once(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids,
                          const BasicPair& pair, StepSign prefer) {
    require_sets(lp, row_ids, col_ids);
    const int k = static_cast<int>(row_ids.size());
    if (k < 2) {
        throw SizeMismatchError("reduction requires a basis of size at least 2");
    }
    if (static_cast<int>(pair.x.size()) != k || static_cast<int>(pair.y.size()) != k) {
        throw SizeMismatchError("pair dimensions do not match the index sets");
    }
    if (!all_nonnegative(pair.x) || !all_nonnegative(pair.y)) {
        throw InvalidCertificateError("reduction requires a nonnegative basic pair");
    }

    const RationalMatrix basis = lp.A.submatrix(row_ids, col_ids);
    if (basis.apply(pair.x) != rows_of(lp, row_ids) ||
        basis.apply_transposed(pair.y) != cols_of(lp, col_ids)) {
        throw InvalidCertificateError("pair does not solve the basis systems");
    }

    auto dx_for = [&](int pos) {
        try {
            return solve_linear(basis, unit_vector(k, pos));
        } catch (const SingularMatrixError&) {
            throw SingularBasisError("basis matrix A_RC is singular");
        }
    };
    auto dy_for = [&](int pos) {
        try {
            return transpose_solve(basis, unit_vector(k, pos));
        } catch (const SingularMatrixError&) {
            throw SingularBasisError("basis matrix A_RC is singular");
        }
    };

    // Zero dual component: the primal step through dx keeps the common
    // objective (c^T dx = y_i = 0), so only the x side moves.
    for (int pos = 0; pos < k; ++pos) {
        if (pair.y[pos] == 0) {
            const RationalVector dx = dx_for(pos);
            const RatioResult ratio = ratio_with_fallback(pair.x, dx, prefer);
            const RationalVector stepped_x = add_scaled(pair.x, ratio.step, dx);
            return finalize_reduction(lp, row_ids, col_ids, pos, ratio.index, stepped_x, pair.y,
                                      ReductionCase::YZero, 0);
        }
    }

    // Zero primal component: symmetric on the y side.
    for (int pos = 0; pos < k; ++pos) {
        if (pair.x[pos] == 0) {
            const RationalVector dy = dy_for(pos);
            const RatioResult ratio = ratio_with_fallback(pair.y, dy, prefer);
            const RationalVector stepped_y = add_scaled(pair.y, ratio.step, dy);
            return finalize_reduction(lp, row_ids, col_ids, ratio.index, pos, pair.x, stepped_y,
                                      ReductionCase::XZero, 0);
        }
    }

    // Strictly positive pair: alternate primal and dual steps until both stay
    // nonnegative, swapping in the newly binding index after each truncation.
    const StepSign sign = has_blocking(dx_for(0), prefer) ? prefer : flipped(prefer);
    detail::InnerLoop ops;
    ops.primal_direction = dx_for;
    ops.dual_direction = dy_for;
    const Rational base_objective = dot(cols_of(lp, col_ids), pair.x);
    ops.candidate = [&](const Rational& step, int row_pos) {
        return base_objective + step * pair.y[row_pos];
    };
    const detail::InnerLoopResult res = detail::alternating_reduction(pair.x, pair.y, sign, k * k, ops);
    const RationalVector stepped_x = add_scaled(pair.x, res.primal_step, res.dx);
    const RationalVector stepped_y = add_scaled(pair.y, res.dual_step, res.dy);
    return finalize_reduction(lp, row_ids, col_ids, res.row_pos, res.col_pos, stepped_x, stepped_y,
                              ReductionCase::StrictPositive, res.iterations);
}

DecompositionTrace decompose(const CanonicalLP& lp, const PartitionCertificate& cert, StepSign prefer) {
    const CertificateCheck check = check_certificate(lp, cert);
    if (!check.ok) {
        std::string what = "decompose requires a valid certificate:";
        for (const auto& v : check.violations) {
            what += " [" + v + "]";
        }
        throw InvalidCertificateError(what);
    }

    DecompositionTrace trace;
    trace.m = lp.rows();
    trace.n = lp.cols();
    trace.r = cert.partition.size();
    if (trace.r == 0) {
        return trace;
    }

    IndexSet cur_rows = cert.partition.row_support;
    IndexSet cur_cols = cert.partition.col_support;
    BasicPair cur = cert.pair;
    std::vector<TraceLevel> reversed;
    PivotSequence removals; // at sizes r, r-1, ..., 2

    for (int k = trace.r; k >= 1; --k) {
        TraceLevel level;
        level.rows = cur_rows;
        level.cols = cur_cols;
        level.x = cur.x;
        level.y = cur.y;
        level.objective = dot(cols_of(lp, cur_cols), cur.x);
        if (level.objective != dot(rows_of(lp, cur_rows), cur.y)) {
            throw InternalInvariantError("primal and dual objectives differ at a trace level");
        }
        if (k >= 2) {
            const ReductionStep step = reduce_once(lp, cur_rows, cur_cols, cur, prefer);
            level.tag = step.tag;
            level.inner_iterations = step.inner_iterations;
            removals.emplace_back(step.removed_row, step.removed_col);
            cur_rows = without_value(cur_rows, step.removed_row);
            cur_cols = without_value(cur_cols, step.removed_col);
            cur = step.child;
        }
        reversed.push_back(std::move(level));
    }

    trace.pivots.emplace_back(cur_rows.front(), cur_cols.front());
    trace.pivots.insert(trace.pivots.end(), removals.rbegin(), removals.rend());
    trace.levels.assign(reversed.rbegin(), reversed.rend());
    return trace;
}

ReplayResult replay(const CanonicalLP& lp, const PivotSequence& pivots) {
    std::vector<bool> row_used(lp.rows(), false);
    std::vector<bool> col_used(lp.cols(), false);
    for (const auto& [i, j] : pivots) {
        if (i < 0 || i >= lp.rows() || j < 0 || j >= lp.cols()) {
            throw IndexOutOfRangeError("pivot index out of range");
        }
        if (row_used[i] || col_used[j]) {
            throw IndexOutOfRangeError("pivot list repeats a row or column");
        }
        row_used[i] = col_used[j] = true;
    }

    ReplayResult res;
    res.trace.m = lp.rows();
    res.trace.n = lp.cols();

    IndexSet rows;
    IndexSet cols;
    for (size_t level = 0; level < pivots.size(); ++level) {
        rows = with_value(rows, pivots[level].first);
        cols = with_value(cols, pivots[level].second);
        const RationalMatrix basis = lp.A.submatrix(rows, cols);
        if (!is_nonsingular(basis)) {
            res.failure = ReplayFailure::SingularBasis;
            res.fail_level = static_cast<int>(level) + 1;
            return res;
        }
        TraceLevel lvl;
        lvl.rows = rows;
        lvl.cols = cols;
        lvl.x = solve_linear(basis, rows_of(lp, rows));
        lvl.y = transpose_solve(basis, cols_of(lp, cols));
        if (!all_nonnegative(lvl.x) || !all_nonnegative(lvl.y)) {
            res.failure = ReplayFailure::NegativeComponent;
            res.fail_level = static_cast<int>(level) + 1;
            return res;
        }
        lvl.objective = dot(cols_of(lp, cols), lvl.x);
        if (lvl.objective != dot(rows_of(lp, rows), lvl.y)) {
            throw InternalInvariantError("primal and dual objectives differ during replay");
        }
        res.trace.levels.push_back(std::move(lvl));
        res.trace.pivots.push_back(pivots[level]);
        res.trace.r = static_cast<int>(level) + 1;
    }
    res.ok = true;
    return res;
}

PivotSequence relaxed_reduce(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids) {
    require_sets(lp, row_ids, col_ids);
    if (row_ids.empty()) {
        throw EmptySelectionError("relaxed reduction needs a nonempty basis");
    }
    if (!is_nonsingular(lp.A.submatrix(row_ids, col_ids))) {
        throw SingularBasisError("input basis is singular");
    }

    PivotSequence removals;
    IndexSet cur_rows = row_ids;
    IndexSet cur_cols = col_ids;
    while (cur_rows.size() >= 2) {
        const int k = static_cast<int>(cur_rows.size());
        const RationalMatrix basis = lp.A.submatrix(cur_rows, cur_cols);
        const RationalVector dx = solve_linear(basis, unit_vector(k, 0));
        int col_pos = -1;
        for (int pos = 0; pos < k; ++pos) {
            if (dx[pos] != 0) {
                col_pos = pos;
                break;
            }
        }
        if (col_pos < 0) {
            throw InternalInvariantError("direction vector vanished on a nonsingular basis");
        }
        removals.emplace_back(cur_rows.front(), cur_cols[col_pos]);
        cur_rows = without_value(cur_rows, cur_rows.front());
        cur_cols = without_value(cur_cols, cur_cols[col_pos]);
        if (!is_nonsingular(lp.A.submatrix(cur_rows, cur_cols))) {
            throw InternalInvariantError("relaxed reduction produced a singular basis");
        }
    }
    return removals;
}

} // namespace pivotseq
