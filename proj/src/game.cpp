#include "pivotseq/game.hpp"

#include <algorithm>
#include <iostream>

#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"
#include "pivotseq/oracle.hpp"
#include "pivotseq/simplex.hpp"

namespace pivotseq {

namespace {

void require_game_sets(const MatrixGame& game, const IndexSet& row_ids, const IndexSet& col_ids) {
    if (!is_index_set(row_ids, game.rows()) || !is_index_set(col_ids, game.cols())) {
        throw IndexOutOfRangeError("index sets out of range or not ascending");
    }
    if (row_ids.size() != col_ids.size()) {
        throw SizeMismatchError("row and column sets differ in size");
    }
    if (row_ids.empty()) {
        throw EmptySelectionError("bordered basis needs nonempty index sets");
    }
}

// Solves [sub, e; e^T, 0] (w, value) = (target, target_last). Returns the
// first k components and the border value separately.
std::pair<RationalVector, Rational> bordered_solve(const RationalMatrix& sub,
                                                   const RationalVector& target,
                                                   const Rational& target_last) {
    const int k = sub.rows();
    RationalVector rhs = target;
    rhs.push_back(target_last);
    RationalVector full;
    try {
        full = solve_linear(bordered_matrix(sub), rhs);
    } catch (const SingularMatrixError&) {
        throw SingularBorderedBasisError("bordered basis matrix is singular");
    }
    RationalVector head(full.begin(), full.begin() + k);
    return {std::move(head), full[k]};
}

StepSign sign_for(GammaDirection direction) {
    // The primal step scales dalpha = v_i >= 0, so a negative step can only
    // lower gamma and a positive step can only raise it.
    return direction == GammaDirection::Decreasing ? StepSign::Negative : StepSign::Positive;
}

GameReductionStep finalize_game_reduction(const MatrixGame& game, const IndexSet& row_ids,
                                          const IndexSet& col_ids, int row_pos, int col_pos,
                                          const RationalVector& stepped_u,
                                          const RationalVector& stepped_v,
                                          const Rational& parent_gamma, ReductionCase tag, int inner,
                                          GammaDirection direction) {
    if (stepped_u[col_pos] != 0 || stepped_v[row_pos] != 0) {
        throw InternalInvariantError("stepped pair is not zero at the removed indices");
    }
    if (!all_nonnegative(stepped_u) || !all_nonnegative(stepped_v)) {
        throw InternalInvariantError("stepped pair lost nonnegativity");
    }

    GameReductionStep step;
    step.removed_row = row_ids[row_pos];
    step.removed_col = col_ids[col_pos];
    step.tag = tag;
    step.inner_iterations = inner;

    const IndexSet child_rows = without_value(row_ids, step.removed_row);
    const IndexSet child_cols = without_value(col_ids, step.removed_col);

    RationalVector child_u = stepped_u;
    child_u.erase(child_u.begin() + col_pos);
    RationalVector child_v = stepped_v;
    child_v.erase(child_v.begin() + row_pos);

    const GameBasicPair fresh = bordered_pair(game, child_rows, child_cols);
    if (fresh.u != child_u || fresh.v != child_v) {
        throw InternalInvariantError("restricted stepped pair disagrees with the fresh bordered solve");
    }
    step.child = fresh;
    step.child_gamma = fresh.alpha;

    if (direction == GammaDirection::Decreasing && step.child_gamma > parent_gamma) {
        throw DirectionUnavailableError("reduction raised gamma; only the increasing direction is achievable here");
    }
    if (direction == GammaDirection::Increasing && step.child_gamma < parent_gamma) {
        throw DirectionUnavailableError("reduction lowered gamma; only the decreasing direction is achievable here");
    }
    return step;
}

} // namespace

MatrixGame::MatrixGame(RationalMatrix m) : M(std::move(m)) {
    if (M.rows() < 1 || M.cols() < 1) {
        throw SizeMismatchError("game matrix needs at least one row and one column");
    }
}

const char* to_string(GammaDirection d) {
    return d == GammaDirection::Decreasing ? "decreasing" : "increasing";
}

RationalMatrix bordered_matrix(const RationalMatrix& sub) {
    if (sub.rows() != sub.cols()) {
        throw NonSquareError("bordered matrix needs a square block");
    }
    const int k = sub.rows();
    RationalMatrix result(k + 1, k + 1);
    std::vector<Rational> entries(static_cast<size_t>(k + 1) * (k + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            entries[static_cast<size_t>(i) * (k + 1) + j] = sub(i, j);
        }
        entries[static_cast<size_t>(i) * (k + 1) + k] = 1;
        entries[static_cast<size_t>(k) * (k + 1) + i] = 1;
    }
    return RationalMatrix(k + 1, k + 1, std::move(entries));
}

GameBasicPair bordered_pair(const MatrixGame& game, const IndexSet& row_ids, const IndexSet& col_ids) {
    require_game_sets(game, row_ids, col_ids);
    const RationalMatrix sub = game.M.submatrix(row_ids, col_ids);
    const int k = sub.rows();
    const RationalVector zero(k, Rational(0));

    GameBasicPair pair;
    auto [u, alpha] = bordered_solve(sub, zero, 1);
    auto [v, beta] = bordered_solve(sub.transposed(), zero, 1);
    pair.u = std::move(u);
    pair.v = std::move(v);
    pair.alpha = alpha;
    pair.beta = beta;

    if (pair.alpha != pair.beta) {
        throw IdentityViolatedError("alpha = beta failed on a bordered basis");
    }
    Rational sum_u = 0;
    Rational sum_v = 0;
    for (const auto& w : pair.u) {
        sum_u += w;
    }
    for (const auto& w : pair.v) {
        sum_v += w;
    }
    if (sum_u != 1 || sum_v != 1) {
        throw IdentityViolatedError("simplex sums e^T u = e^T v = 1 failed on a bordered basis");
    }
    return pair;
}

RationalVector GameCertificate::padded_u(int n) const {
    RationalVector full(n, Rational(0));
    for (size_t p = 0; p < partition.col_support.size(); ++p) {
        full[partition.col_support[p]] = pair.u[p];
    }
    return full;
}

RationalVector GameCertificate::padded_v(int m) const {
    RationalVector full(m, Rational(0));
    for (size_t p = 0; p < partition.row_support.size(); ++p) {
        full[partition.row_support[p]] = pair.v[p];
    }
    return full;
}

CertificateCheck check_game_certificate(const MatrixGame& game, const GameCertificate& cert) {
    const IndexSet& R = cert.partition.row_support;
    const IndexSet& C = cert.partition.col_support;
    if (!is_index_set(R, game.rows()) || !is_index_set(C, game.cols())) {
        throw IndexOutOfRangeError("partition index sets out of range or not ascending");
    }

    CertificateCheck result;
    auto fail = [&result](const char* label) { result.violations.emplace_back(label); };

    if (R.size() != C.size()) {
        fail("partition sizes differ");
        return result;
    }
    if (R.empty()) {
        fail("empty partition");
        return result;
    }
    if (cert.pair.u.size() != C.size() || cert.pair.v.size() != R.size()) {
        fail("pair dimensions mismatch");
        return result;
    }

    const RationalMatrix sub = game.M.submatrix(R, C);
    if (!is_nonsingular(bordered_matrix(sub))) {
        fail("bordered basis singular");
    }

    const RationalVector& u = cert.pair.u;
    const RationalVector& v = cert.pair.v;
    const Rational& gamma = cert.gamma;
    if (cert.pair.alpha != gamma || cert.pair.beta != gamma) {
        fail("alpha = beta = gamma");
    }

    Rational sum_u = 0;
    for (const auto& w : u) {
        sum_u += w;
    }
    Rational sum_v = 0;
    for (const auto& w : v) {
        sum_v += w;
    }

    bool primal_system = sum_u == 1;
    const RationalVector mu = sub.apply(u);
    for (const auto& value : mu) {
        if (value + gamma != 0) {
            primal_system = false;
            break;
        }
    }
    if (!primal_system) {
        fail("bordered primal system");
    }

    bool dual_system = sum_v == 1;
    const RationalVector mtv = sub.apply_transposed(v);
    for (const auto& value : mtv) {
        if (value + gamma != 0) {
            dual_system = false;
            break;
        }
    }
    if (!dual_system) {
        fail("bordered dual system");
    }

    if (!all_nonnegative(u)) {
        fail("u >= 0");
    }
    if (!all_nonnegative(v)) {
        fail("v >= 0");
    }

    for (int i : complement_of(R, game.rows())) {
        Rational lhs = gamma;
        for (size_t p = 0; p < C.size(); ++p) {
            lhs += game.M(i, C[p]) * u[p];
        }
        if (lhs < 0) {
            fail("M_R0C u + e gamma >= 0");
            break;
        }
    }
    for (int j : complement_of(C, game.cols())) {
        Rational lhs = gamma;
        for (size_t p = 0; p < R.size(); ++p) {
            lhs += game.M(R[p], j) * v[p];
        }
        if (lhs > 0) {
            fail("M_RC0^T v + e gamma <= 0");
            break;
        }
    }

    result.ok = result.violations.empty();
    return result;
}

GameCertificate solve_game(const MatrixGame& game) {
    const int m = game.rows();
    const int n = game.cols();

    // Shift every entry strictly positive so the classical reciprocal-value
    // canonical pair applies; the bordered systems are invariant under the
    // shift up to gamma itself.
    Rational max_abs = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational a = abs(game.M(i, j));
            if (a > max_abs) {
                max_abs = a;
            }
        }
    }
    const Rational sigma = 1 + max_abs;

    std::vector<Rational> shifted;
    shifted.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            shifted.push_back(game.M(i, j) + sigma);
        }
    }
    const CanonicalLP lp(RationalMatrix(m, n, std::move(shifted)), constant_vector(m, 1),
                         constant_vector(n, 1));

    const SolveOutcome outcome = solve_canonical(lp);
    if (outcome.status != SolveStatus::Optimal || !outcome.certificate.has_value()) {
        throw InternalInvariantError("shifted reciprocal pair must be solvable");
    }
    const PartitionCertificate& lp_cert = *outcome.certificate;
    const Rational theta = lp_cert.objective;
    if (theta <= 0) {
        throw InternalInvariantError("reciprocal objective must be strictly positive");
    }

    GameCertificate cert;
    cert.partition = lp_cert.partition;
    cert.gamma = sigma - 1 / theta;
    cert.pair.alpha = cert.gamma;
    cert.pair.beta = cert.gamma;
    cert.pair.u.reserve(lp_cert.pair.x.size());
    for (const auto& w : lp_cert.pair.x) {
        cert.pair.u.push_back(w / theta);
    }
    cert.pair.v.reserve(lp_cert.pair.y.size());
    for (const auto& w : lp_cert.pair.y) {
        cert.pair.v.push_back(w / theta);
    }

    if (check_game_certificate(game, cert).ok) {
        return cert;
    }

    // Construction failed validation — fall back to exhaustion when the game
    // is small enough, and flag the certificate for study.
    std::cerr << "pivotseq: assembled game certificate failed validation; falling back to enumeration\n";
    try {
        const auto all = enumerate_game_bases(game, 6);
        if (!all.empty()) {
            GameCertificate repaired = all.front();
            repaired.used_fallback = true;
            return repaired;
        }
    } catch (const InstanceTooLargeError&) {
    }
    throw CertificateAssemblyFailedError("both the construction and the exhaustive search failed");
}

GameDirectionPair game_directions(const MatrixGame& game, const IndexSet& row_ids,
                                  const IndexSet& col_ids, int i, int j) {
    require_game_sets(game, row_ids, col_ids);
    const int pos_i = position_of(row_ids, i);
    const int pos_j = position_of(col_ids, j);
    if (pos_i < 0 || pos_j < 0) {
        throw IndexOutOfRangeError("pivot indices must belong to the row and column sets");
    }
    const RationalMatrix sub = game.M.submatrix(row_ids, col_ids);
    const int k = sub.rows();

    GameDirectionPair dp;
    dp.i = i;
    dp.j = j;
    auto [du, dalpha] = bordered_solve(sub, unit_vector(k, pos_i), 0);
    auto [dv, dbeta] = bordered_solve(sub.transposed(), unit_vector(k, pos_j), 0);
    dp.du = std::move(du);
    dp.dv = std::move(dv);
    dp.dalpha = dalpha;
    dp.dbeta = dbeta;

    Rational sum_du = 0;
    Rational sum_dv = 0;
    for (const auto& w : dp.du) {
        sum_du += w;
    }
    for (const auto& w : dp.dv) {
        sum_dv += w;
    }
    if (sum_du != 0 || sum_dv != 0) {
        throw IdentityViolatedError("border sums e^T du = e^T dv = 0 failed");
    }
    if (dp.du[pos_j] != dp.dv[pos_i]) {
        throw IdentityViolatedError("shared direction component du_j = dv_i failed");
    }

    const GameBasicPair pair = bordered_pair(game, row_ids, col_ids);
    if (dp.dalpha != pair.v[pos_i] || dp.dbeta != pair.u[pos_j]) {
        throw IdentityViolatedError("dalpha = v_i / dbeta = u_j failed");
    }
    return dp;
}

GameReductionStep game_reduce_once(const MatrixGame& game, const IndexSet& row_ids,
                                   const IndexSet& col_ids, const GameBasicPair& pair,
                                   GammaDirection direction) {
    require_game_sets(game, row_ids, col_ids);
    const int k = static_cast<int>(row_ids.size());
    if (k < 2) {
        throw SizeMismatchError("game reduction requires a basis of size at least 2");
    }
    if (static_cast<int>(pair.u.size()) != k || static_cast<int>(pair.v.size()) != k) {
        throw SizeMismatchError("pair dimensions do not match the index sets");
    }
    if (!all_nonnegative(pair.u) || !all_nonnegative(pair.v)) {
        throw InvalidCertificateError("game reduction requires a nonnegative pair");
    }
    if (pair.alpha != pair.beta) {
        throw InvalidCertificateError("game reduction requires alpha = beta");
    }
    const Rational gamma = pair.alpha;

    const RationalMatrix sub = game.M.submatrix(row_ids, col_ids);
    auto du_for = [&](int pos) { return bordered_solve(sub, unit_vector(k, pos), 0).first; };
    auto dv_for = [&](int pos) {
        return bordered_solve(sub.transposed(), unit_vector(k, pos), 0).first;
    };

    const StepSign sign = sign_for(direction);

    // Zero dual component: dalpha = v_i = 0, so gamma is preserved and the
    // step satisfies either monotonicity requirement.
    for (int pos = 0; pos < k; ++pos) {
        if (pair.v[pos] == 0) {
            const RationalVector du = du_for(pos);
            // e^T du = 0 with du != 0 guarantees both signs are present.
            const RatioResult ratio = ratio_step(pair.u, du, sign);
            const RationalVector stepped_u = add_scaled(pair.u, ratio.step, du);
            return finalize_game_reduction(game, row_ids, col_ids, pos, ratio.index, stepped_u,
                                           pair.v, gamma, ReductionCase::YZero, 0, direction);
        }
    }

    // Zero primal component: symmetric, dbeta = u_j = 0.
    for (int pos = 0; pos < k; ++pos) {
        if (pair.u[pos] == 0) {
            const RationalVector dv = dv_for(pos);
            const RatioResult ratio = ratio_step(pair.v, dv, sign);
            const RationalVector stepped_v = add_scaled(pair.v, ratio.step, dv);
            return finalize_game_reduction(game, row_ids, col_ids, ratio.index, pos, pair.u,
                                           stepped_v, gamma, ReductionCase::XZero, 0, direction);
        }
    }

    // Strictly positive pair: both ratio-test variants are available, so the
    // requested direction picks the step sign outright.
    detail::InnerLoop ops;
    ops.primal_direction = du_for;
    ops.dual_direction = dv_for;
    ops.candidate = [&](const Rational& step, int row_pos) {
        return gamma + step * pair.v[row_pos];
    };
    const detail::InnerLoopResult res =
        detail::alternating_reduction(pair.u, pair.v, sign, k * k, ops);
    const RationalVector stepped_u = add_scaled(pair.u, res.primal_step, res.dx);
    const RationalVector stepped_v = add_scaled(pair.v, res.dual_step, res.dy);
    return finalize_game_reduction(game, row_ids, col_ids, res.row_pos, res.col_pos, stepped_u,
                                   stepped_v, gamma, ReductionCase::StrictPositive, res.iterations,
                                   direction);
}

GameTrace game_decompose(const MatrixGame& game, const GameCertificate& cert,
                         GammaDirection direction) {
    const CertificateCheck check = check_game_certificate(game, cert);
    if (!check.ok) {
        std::string what = "game_decompose requires a valid certificate:";
        for (const auto& v : check.violations) {
            what += " [" + v + "]";
        }
        throw InvalidCertificateError(what);
    }

    GameTrace trace;
    trace.m = game.rows();
    trace.n = game.cols();
    trace.r = cert.partition.size();
    trace.direction = direction;
    trace.gamma = cert.gamma;

    IndexSet cur_rows = cert.partition.row_support;
    IndexSet cur_cols = cert.partition.col_support;
    GameBasicPair cur = cert.pair;
    std::vector<GameTraceLevel> reversed;
    PivotSequence removals;

    for (int k = trace.r; k >= 1; --k) {
        GameTraceLevel level;
        level.rows = cur_rows;
        level.cols = cur_cols;
        level.u = cur.u;
        level.v = cur.v;
        level.gamma = cur.alpha;
        if (k >= 2) {
            const GameReductionStep step = game_reduce_once(game, cur_rows, cur_cols, cur, direction);
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

    for (size_t k = 1; k < trace.levels.size(); ++k) {
        const bool monotone = direction == GammaDirection::Decreasing
                                  ? trace.levels[k - 1].gamma <= trace.levels[k].gamma
                                  : trace.levels[k - 1].gamma >= trace.levels[k].gamma;
        if (!monotone) {
            throw InternalInvariantError("gamma sequence lost monotonicity");
        }
    }
    return trace;
}

} // namespace pivotseq
