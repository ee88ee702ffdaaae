#include <doctest.h>

#include "helpers.hpp"
#include "pivotseq/decompose.hpp"
#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"
#include "pivotseq/simplex.hpp"

using namespace pivotseq;
using namespace pivotseq::testing;

namespace {

PartitionCertificate solve_for_cert(const CanonicalLP& lp) {
    const SolveOutcome out = solve_canonical(lp);
    REQUIRE(out.status == SolveStatus::Optimal);
    return *out.certificate;
}

} // namespace

TEST_CASE("direction pair of the worked 2x2") {
    const CanonicalLP lp = worked_2x2();
    const DirectionPair dp = directions(lp, {0, 1}, {0, 1}, 0, 1);
    CHECK(dp.dx == vec({"2/3", "-1/3"}));
    CHECK(dp.dy == vec({"-1/3", "2/3"}));
    CHECK(dp.dx[1] == dp.dy[0]);
}

TEST_CASE("directions on an identity basis are unit vectors") {
    const CanonicalLP lp(RationalMatrix::identity(3), vec({"1", "2", "3"}), vec({"1", "2", "3"}));
    for (int i = 0; i < 3; ++i) {
        const DirectionPair dp = directions(lp, {0, 1, 2}, {0, 1, 2}, i, i);
        CHECK(dp.dx == unit_vector(3, i));
        CHECK(dp.dy == unit_vector(3, i));
    }
}

TEST_CASE("directions on a singular basis fail") {
    const CanonicalLP lp(mat({{"1", "1"}, {"1", "1"}}), vec({"1", "1"}), vec({"1", "1"}));
    CHECK_THROWS_AS(directions(lp, {0, 1}, {0, 1}, 0, 0), SingularBasisError);
}

TEST_CASE("identity report on the worked 2x2") {
    const CanonicalLP lp = worked_2x2();
    const IdentityReport rep = check_identities(lp, {0, 1}, {0, 1}, 0, 1);
    CHECK(rep.primal_objective == 6);
    CHECK(rep.dual_objective == 6);
    CHECK(rep.cdx == 1); // y_0
    CHECK(rep.bdy == 1); // x_1
    CHECK(rep.dxj == rat("-1/3"));
    REQUIRE(rep.steps_defined);
    CHECK(rep.steps->primal_step == 3);
    CHECK(rep.steps->dual_step == 3);
    CHECK(*rep.stepped_primal_objective == *rep.stepped_dual_objective);
}

TEST_CASE("identity report with i = j on an identity basis") {
    const CanonicalLP lp(RationalMatrix::identity(2), vec({"2", "3"}), vec({"5", "7"}));
    const IdentityReport rep = check_identities(lp, {0, 1}, {0, 1}, 0, 0);
    REQUIRE(rep.steps_defined);
    CHECK(rep.steps->primal_step == -rep.xj);
    CHECK(rep.steps->dual_step == -rep.yi);
    // Both stepped objectives equal c^T x - x_i y_i.
    CHECK(*rep.stepped_primal_objective == rep.primal_objective - rep.xj * rep.yi);
}

TEST_CASE("identity report marks the undefined-step case") {
    // Diagonal basis, i != j: dx = e_i/a_ii has dx_j = 0.
    const CanonicalLP lp(RationalMatrix::identity(2), vec({"2", "3"}), vec({"5", "7"}));
    const IdentityReport rep = check_identities(lp, {0, 1}, {0, 1}, 0, 1);
    CHECK(rep.dxj == 0);
    CHECK_FALSE(rep.steps_defined);
    CHECK_FALSE(rep.steps.has_value());
}

TEST_CASE("identity sweep over random bases") {
    Rng rng(101);
    int draws = 0;
    while (draws < 2000) {
        const int k = static_cast<int>(rng.next_int(1, 6));
        const RationalMatrix a = to_rational(random_int_matrix(rng, k, k, 9));
        if (!is_nonsingular(a)) {
            continue;
        }
        RationalVector b(k), c(k);
        for (auto& v : b) {
            v = rng.next_int(-9, 9);
        }
        for (auto& v : c) {
            v = rng.next_int(-9, 9);
        }
        const CanonicalLP lp(a, b, c);
        const int i = static_cast<int>(rng.next_int(0, k - 1));
        const int j = static_cast<int>(rng.next_int(0, k - 1));
        // check_identities throws on any exact identity failure.
        const IdentityReport rep =
            check_identities(lp, full_index_set(k), full_index_set(k), i, j);
        CHECK(rep.primal_objective == rep.dual_objective);
        ++draws;
    }
}

TEST_CASE("ratio step fixtures") {
    const RationalVector v = vec({"1", "1"});
    const RationalVector d = vec({"2/3", "-1/3"});

    const RatioResult pos = ratio_step(v, d, StepSign::Positive);
    CHECK(pos.step == 3);
    CHECK(pos.index == 1);

    const RatioResult neg = ratio_step(v, d, StepSign::Negative);
    CHECK(neg.step == rat("-3/2"));
    CHECK(neg.index == 0);

    CHECK_THROWS_AS(ratio_step(v, vec({"1", "1"}), StepSign::Positive), NoBlockingComponentError);
    CHECK_THROWS_AS(ratio_step(v, vec({"-1", "-1"}), StepSign::Negative), NoBlockingComponentError);
}

TEST_CASE("ratio step properties on random data") {
    Rng rng(103);
    for (int t = 0; t < 2000; ++t) {
        const int k = static_cast<int>(rng.next_int(1, 8));
        RationalVector v(k), d(k);
        for (auto& value : v) {
            value = Rational(rng.next_int(0, 9), rng.next_int(1, 4));
        }
        for (auto& value : d) {
            value = Rational(rng.next_int(-9, 9), rng.next_int(1, 4));
        }
        for (const StepSign sign : {StepSign::Positive, StepSign::Negative}) {
            bool defined = false;
            for (const auto& value : d) {
                defined |= sign == StepSign::Positive ? value < 0 : value > 0;
            }
            if (!defined) {
                CHECK_THROWS_AS(ratio_step(v, d, sign), NoBlockingComponentError);
                continue;
            }
            const RatioResult res = ratio_step(v, d, sign);
            if (sign == StepSign::Positive) {
                CHECK(res.step >= 0);
            } else {
                CHECK(res.step <= 0);
            }
            const RationalVector stepped = add_scaled(v, res.step, d);
            CHECK(all_nonnegative(stepped));
            CHECK(stepped[res.index] == 0);
        }
    }
}

TEST_CASE("reduce_once on the worked 2x2: strictly positive case") {
    const CanonicalLP lp = worked_2x2();
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    const ReductionStep step = reduce_once(lp, {0, 1}, {0, 1}, pair);
    CHECK(step.tag == ReductionCase::StrictPositive);
    CHECK(step.removed_row == 0);
    CHECK(step.removed_col == 1);
    CHECK(step.inner_iterations == 1);
    CHECK(step.child.x == vec({"3"}));
    CHECK(step.child.y == vec({"3"}));
}

TEST_CASE("reduce_once with the negative preference mirrors the step") {
    const CanonicalLP lp = worked_2x2();
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    const ReductionStep step = reduce_once(lp, {0, 1}, {0, 1}, pair, StepSign::Negative);
    CHECK(step.tag == ReductionCase::StrictPositive);
    CHECK(step.removed_row == 0);
    CHECK(step.removed_col == 0);
    CHECK(step.child.x == vec({"3/2"}));
    CHECK(step.child.y == vec({"3/2"}));
}

TEST_CASE("zero dual component takes precedence") {
    // y = (0, 1): the first zero dual index is removed.
    const CanonicalLP lp(RationalMatrix::identity(2), vec({"1", "1"}), vec({"0", "1"}));
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    REQUIRE(pair.y == vec({"0", "1"}));
    const ReductionStep step = reduce_once(lp, {0, 1}, {0, 1}, pair);
    CHECK(step.tag == ReductionCase::YZero);
    CHECK(step.removed_row == 0);
    CHECK(step.removed_col == 0);
    CHECK(step.inner_iterations == 0);
    CHECK(step.child.x == vec({"1"}));
    CHECK(step.child.y == vec({"1"}));
}

TEST_CASE("zero dual wins over zero primal") {
    const CanonicalLP lp(RationalMatrix::identity(2), vec({"0", "1"}), vec({"0", "1"}));
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    REQUIRE(pair.x == vec({"0", "1"}));
    REQUIRE(pair.y == vec({"0", "1"}));
    const ReductionStep step = reduce_once(lp, {0, 1}, {0, 1}, pair);
    CHECK(step.tag == ReductionCase::YZero);
}

TEST_CASE("zero primal component reduces on the dual side") {
    const CanonicalLP lp(RationalMatrix::identity(2), vec({"0", "1"}), vec({"1", "1"}));
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    REQUIRE(pair.x == vec({"0", "1"}));
    REQUIRE(pair.y == vec({"1", "1"}));
    const ReductionStep step = reduce_once(lp, {0, 1}, {0, 1}, pair);
    CHECK(step.tag == ReductionCase::XZero);
    CHECK(step.removed_col == 0);
    CHECK(step.removed_row == 0);
    CHECK(step.child.x == vec({"1"}));
    CHECK(step.child.y == vec({"1"}));
}

TEST_CASE("reduce_once preconditions") {
    const CanonicalLP lp = worked_2x2();
    const BasicPair pair = basic_pair(lp, {0, 1}, {0, 1});
    CHECK_THROWS_AS(reduce_once(lp, {0}, {0}, basic_pair(lp, {0}, {0})), SizeMismatchError);
    BasicPair negative = pair;
    negative.x[0] = -1;
    CHECK_THROWS_AS(reduce_once(lp, {0, 1}, {0, 1}, negative), InvalidCertificateError);
}

TEST_CASE("case (a) preserves the objective, case (c) levels stay consistent") {
    Rng rng(107);
    int tested = 0;
    for (int t = 0; tested < 80; ++t) {
        const Instance inst = generate_instance(4, 4, 21000 + t);
        const PartitionCertificate cert = solve_for_cert(inst.lp);
        if (cert.partition.size() < 2) {
            continue;
        }
        const IndexSet& R = cert.partition.row_support;
        const IndexSet& C = cert.partition.col_support;
        const ReductionStep step = reduce_once(inst.lp, R, C, cert.pair);
        const IndexSet child_rows = without_value(R, step.removed_row);
        const IndexSet child_cols = without_value(C, step.removed_col);
        const Rational parent_obj =
            dot(restrict_to(inst.lp.c, full_index_set(4), C), cert.pair.x);
        const Rational child_obj =
            dot(restrict_to(inst.lp.c, full_index_set(4), child_cols), step.child.x);
        if (step.tag == ReductionCase::YZero || step.tag == ReductionCase::XZero) {
            CHECK(child_obj == parent_obj);
        }
        CHECK(all_nonnegative(step.child.x));
        CHECK(all_nonnegative(step.child.y));
        ++tested;
    }
}

TEST_CASE("decompose the worked 2x2") {
    const CanonicalLP lp = worked_2x2();
    const DecompositionTrace trace = decompose(lp, solve_for_cert(lp));
    CHECK(trace.r == 2);
    REQUIRE(trace.pivots.size() == 2);
    CHECK(trace.pivots[0] == std::make_pair(1, 0));
    CHECK(trace.pivots[1] == std::make_pair(0, 1));
    REQUIRE(trace.levels.size() == 2);
    CHECK(trace.levels[0].objective == 9);
    CHECK(trace.levels[1].objective == 6);
    CHECK(trace.levels[0].rows == IndexSet{1});
    CHECK(trace.levels[0].cols == IndexSet{0});
    CHECK(trace.levels[0].x == vec({"3"}));
    CHECK(trace.levels[0].y == vec({"3"}));
    CHECK_FALSE(trace.levels[0].tag.has_value());
    CHECK(trace.levels[1].tag == ReductionCase::StrictPositive);
    CHECK(trace.levels[1].inner_iterations == 1);
}

TEST_CASE("decompose handles r = 0 and r = 1") {
    const CanonicalLP origin(mat({{"1"}}), vec({"-1"}), vec({"1"}));
    const DecompositionTrace empty = decompose(origin, solve_for_cert(origin));
    CHECK(empty.r == 0);
    CHECK(empty.levels.empty());
    CHECK(empty.pivots.empty());

    const CanonicalLP single(mat({{"2"}}), vec({"4"}), vec({"1"}));
    const DecompositionTrace one = decompose(single, solve_for_cert(single));
    CHECK(one.r == 1);
    REQUIRE(one.levels.size() == 1);
    CHECK(one.levels[0].x == vec({"2"}));
    CHECK(one.pivots == PivotSequence{{0, 0}});
}

TEST_CASE("decompose rejects invalid certificates") {
    const CanonicalLP lp = worked_2x2();
    PartitionCertificate cert = solve_for_cert(lp);
    cert.pair.x[0] = -1;
    CHECK_THROWS_AS(decompose(lp, cert), InvalidCertificateError);
}

TEST_CASE("every level of a decomposition is optimal for its restriction") {
    Rng rng(109);
    for (int t = 0; t < 80; ++t) {
        const int m = static_cast<int>(rng.next_int(1, 7));
        const int n = static_cast<int>(rng.next_int(1, 7));
        const Instance inst = generate_instance(m, n, 23000 + t);
        const DecompositionTrace trace = decompose(inst.lp, solve_for_cert(inst.lp));
        CHECK(trace.r <= std::min(m, n));
        for (const auto& level : trace.levels) {
            CHECK(all_nonnegative(level.x));
            CHECK(all_nonnegative(level.y));
            const auto c_C = restrict_to(inst.lp.c, full_index_set(n), level.cols);
            const auto b_R = restrict_to(inst.lp.b, full_index_set(m), level.rows);
            CHECK(level.objective == dot(c_C, level.x));
            CHECK(level.objective == dot(b_R, level.y));
        }
        // Supports are nested and grow by one.
        for (size_t k = 1; k < trace.levels.size(); ++k) {
            CHECK(trace.levels[k].rows.size() == trace.levels[k - 1].rows.size() + 1);
            for (int v : trace.levels[k - 1].rows) {
                CHECK(position_of(trace.levels[k].rows, v) >= 0);
            }
            for (int v : trace.levels[k - 1].cols) {
                CHECK(position_of(trace.levels[k].cols, v) >= 0);
            }
        }
    }
}

TEST_CASE("replay matches decompose level for level") {
    Rng rng(113);
    for (int t = 0; t < 60; ++t) {
        const int m = static_cast<int>(rng.next_int(1, 7));
        const int n = static_cast<int>(rng.next_int(1, 7));
        const Instance inst = generate_instance(m, n, 25000 + t);
        const DecompositionTrace trace = decompose(inst.lp, solve_for_cert(inst.lp));
        const ReplayResult rep = replay(inst.lp, trace.pivots);
        REQUIRE(rep.ok);
        REQUIRE(rep.trace.levels.size() == trace.levels.size());
        for (size_t k = 0; k < trace.levels.size(); ++k) {
            CHECK(rep.trace.levels[k].x == trace.levels[k].x);
            CHECK(rep.trace.levels[k].y == trace.levels[k].y);
            CHECK(rep.trace.levels[k].objective == trace.levels[k].objective);
        }
    }
}

TEST_CASE("replay validates the alternative order on the worked 2x2") {
    const CanonicalLP lp = worked_2x2();
    const ReplayResult rep = replay(lp, {{0, 1}, {1, 0}});
    REQUIRE(rep.ok);
    CHECK(rep.trace.levels[0].x == vec({"3"}));
    CHECK(rep.trace.levels[0].y == vec({"3"}));
    CHECK(rep.trace.levels[1].x == vec({"1", "1"}));
}

TEST_CASE("replay reports the first failing level") {
    const CanonicalLP negative(mat({{"1"}}), vec({"-1"}), vec({"1"}));
    const ReplayResult neg = replay(negative, {{0, 0}});
    CHECK_FALSE(neg.ok);
    CHECK(neg.failure == ReplayFailure::NegativeComponent);
    CHECK(neg.fail_level == 1);
    CHECK(neg.trace.levels.empty());

    const CanonicalLP offdiag(mat({{"0", "1"}, {"1", "0"}}), vec({"1", "1"}), vec({"1", "1"}));
    const ReplayResult sing = replay(offdiag, {{0, 0}});
    CHECK_FALSE(sing.ok);
    CHECK(sing.failure == ReplayFailure::SingularBasis);
    CHECK(sing.fail_level == 1);

    // A valid prefix survives a later failure.
    const ReplayResult partial = replay(offdiag, {{0, 1}, {1, 0}});
    CHECK(partial.ok);
}

TEST_CASE("replay of the empty sequence") {
    const ReplayResult rep = replay(worked_2x2(), {});
    CHECK(rep.ok);
    CHECK(rep.trace.levels.empty());
}

TEST_CASE("replay rejects repeated rows or columns") {
    const CanonicalLP lp = worked_2x2();
    CHECK_THROWS_AS(replay(lp, {{0, 0}, {0, 1}}), IndexOutOfRangeError);
    CHECK_THROWS_AS(replay(lp, {{0, 0}, {1, 0}}), IndexOutOfRangeError);
    CHECK_THROWS_AS(replay(lp, {{5, 0}}), IndexOutOfRangeError);
}

TEST_CASE("relaxed reduction fixtures") {
    const CanonicalLP lp = worked_2x2();
    const PivotSequence removals = relaxed_reduce(lp, {0, 1}, {0, 1});
    REQUIRE(removals.size() == 1);
    CHECK(removals[0] == std::make_pair(0, 0));

    CHECK(relaxed_reduce(lp, {0}, {0}).empty());

    const CanonicalLP diag(
        mat({{"2", "0", "0"}, {"0", "3", "0"}, {"0", "0", "5"}}),
        vec({"1", "1", "1"}), vec({"1", "1", "1"}));
    const PivotSequence d = relaxed_reduce(diag, {0, 1, 2}, {0, 1, 2});
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::make_pair(0, 0));
    CHECK(d[1] == std::make_pair(1, 1));
}

TEST_CASE("relaxed reduction needs a nonsingular start") {
    const CanonicalLP lp(mat({{"1", "1"}, {"1", "1"}}), vec({"1", "1"}), vec({"1", "1"}));
    CHECK_THROWS_AS(relaxed_reduce(lp, {0, 1}, {0, 1}), SingularBasisError);
}

TEST_CASE("relaxed reduction reaches a 1x1 basis from random bases") {
    Rng rng(127);
    int tested = 0;
    while (tested < 60) {
        const int m = static_cast<int>(rng.next_int(1, 6));
        const int n = static_cast<int>(rng.next_int(1, 6));
        const Instance inst = generate_instance(m, n, 27000 + tested * 17);
        const int k = static_cast<int>(rng.next_int(1, std::min(m, n)));
        IndexSet rows, cols;
        while (static_cast<int>(rows.size()) < k) {
            const int v = static_cast<int>(rng.next_int(0, m - 1));
            if (position_of(rows, v) < 0) {
                rows = with_value(rows, v);
            }
        }
        while (static_cast<int>(cols.size()) < k) {
            const int v = static_cast<int>(rng.next_int(0, n - 1));
            if (position_of(cols, v) < 0) {
                cols = with_value(cols, v);
            }
        }
        if (!is_nonsingular(inst.lp.A.submatrix(rows, cols))) {
            continue;
        }
        const PivotSequence removals = relaxed_reduce(inst.lp, rows, cols);
        CHECK(static_cast<int>(removals.size()) == k - 1);
        ++tested;
    }
}
