#include "pivotseq/lp.hpp"

#include <limits>

#include "pivotseq/errors.hpp"
#include "pivotseq/linsolve.hpp"

namespace pivotseq {

CanonicalLP::CanonicalLP(RationalMatrix a, RationalVector b_, RationalVector c_)
    : A(std::move(a)), b(std::move(b_)), c(std::move(c_)) {
    if (A.rows() < 1 || A.cols() < 1) {
        throw SizeMismatchError("canonical pair needs m >= 1 and n >= 1");
    }
    if (static_cast<int>(b.size()) != A.rows() || static_cast<int>(c.size()) != A.cols()) {
        throw SizeMismatchError("b/c lengths do not match A");
    }
}

CertificateCheck check_certificate(const CanonicalLP& lp, const PartitionCertificate& cert) {
    const IndexSet& R = cert.partition.row_support;
    const IndexSet& C = cert.partition.col_support;
    if (!is_index_set(R, lp.rows()) || !is_index_set(C, lp.cols())) {
        throw IndexOutOfRangeError("partition index sets out of range or not ascending");
    }

    CertificateCheck result;
    auto fail = [&result](const char* label) { result.violations.emplace_back(label); };

    if (R.size() != C.size()) {
        fail("partition sizes differ");
        return result;
    }
    if (cert.pair.x.size() != C.size() || cert.pair.y.size() != R.size()) {
        fail("pair dimensions mismatch");
        return result;
    }

    const IndexSet inactive_rows = complement_of(R, lp.rows());
    const IndexSet free_cols = complement_of(C, lp.cols());
    const RationalVector& x = cert.pair.x;
    const RationalVector& y = cert.pair.y;

    if (!R.empty()) {
        const RationalMatrix basis = lp.A.submatrix(R, C);
        if (!is_nonsingular(basis)) {
            fail("basis singular");
        }
        const RationalVector b_R = restrict_to(lp.b, full_index_set(lp.rows()), R);
        const RationalVector c_C = restrict_to(lp.c, full_index_set(lp.cols()), C);
        if (basis.apply(x) != b_R) {
            fail("A_RC x = b_R");
        }
        if (basis.apply_transposed(y) != c_C) {
            fail("A_RC^T y = c_C");
        }
    }

    // Feasibility on the complements; with an empty support the products are
    // zero vectors, so these cover the origin case (b <= 0, c >= 0).
    for (int i : inactive_rows) {
        Rational lhs = 0;
        for (size_t p = 0; p < C.size(); ++p) {
            lhs += lp.A(i, C[p]) * x[p];
        }
        if (lhs < lp.b[i]) {
            fail("A_R0C x >= b_R0");
            break;
        }
    }
    for (int j : free_cols) {
        Rational lhs = 0;
        for (size_t p = 0; p < R.size(); ++p) {
            lhs += lp.A(R[p], j) * y[p];
        }
        if (lhs > lp.c[j]) {
            fail("A_RC0^T y <= c_C0");
            break;
        }
    }

    if (!all_nonnegative(x)) {
        fail("x >= 0");
    }
    if (!all_nonnegative(y)) {
        fail("y >= 0");
    }

    const Rational primal_value = R.empty() ? Rational(0) : dot(restrict_to(lp.c, full_index_set(lp.cols()), C), x);
    const Rational dual_value = R.empty() ? Rational(0) : dot(restrict_to(lp.b, full_index_set(lp.rows()), R), y);
    if (cert.objective != primal_value || cert.objective != dual_value) {
        fail("objective equality");
    }

    result.ok = result.violations.empty();
    return result;
}

CanonicalLP subproblem(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids) {
    if (row_ids.empty() || col_ids.empty()) {
        throw EmptySelectionError("subproblem needs nonempty row and column sets");
    }
    if (!is_index_set(row_ids, lp.rows()) || !is_index_set(col_ids, lp.cols())) {
        throw IndexOutOfRangeError("subproblem index sets out of range or not ascending");
    }
    return CanonicalLP(lp.A.submatrix(row_ids, col_ids),
                       restrict_to(lp.b, full_index_set(lp.rows()), row_ids),
                       restrict_to(lp.c, full_index_set(lp.cols()), col_ids));
}

BasicPair basic_pair(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids) {
    if (row_ids.size() != col_ids.size()) {
        throw SizeMismatchError("basic pair needs |R| = |C|");
    }
    if (!is_index_set(row_ids, lp.rows()) || !is_index_set(col_ids, lp.cols())) {
        throw IndexOutOfRangeError("basic pair index sets out of range or not ascending");
    }
    if (row_ids.empty()) {
        return {};
    }
    const RationalMatrix basis = lp.A.submatrix(row_ids, col_ids);
    try {
        BasicPair pair;
        pair.x = solve_linear(basis, restrict_to(lp.b, full_index_set(lp.rows()), row_ids));
        pair.y = transpose_solve(basis, restrict_to(lp.c, full_index_set(lp.cols()), col_ids));
        return pair;
    } catch (const SingularMatrixError&) {
        throw SingularBasisError("basis matrix A_RC is singular");
    }
}

std::int64_t Rng::next_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw SizeMismatchError("empty draw range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) { // full 64-bit range
        return static_cast<std::int64_t>(engine_());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t word = engine_();
    while (word >= limit) {
        word = engine_();
    }
    return lo + static_cast<std::int64_t>(word % span);
}

Instance generate_instance(int m, int n, std::uint64_t seed, int max_abs) {
    if (m < 1 || n < 1) {
        throw SizeMismatchError("instance needs m >= 1 and n >= 1");
    }
    if (max_abs < 1) {
        throw SizeMismatchError("entry range must be at least 1");
    }
    Rng rng(seed);

    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m * n; ++i) {
        entries.emplace_back(rng.next_int(-max_abs, max_abs));
    }
    RationalMatrix A(m, n, std::move(entries));

    RationalVector xstar(n);
    for (int j = 0; j < n; ++j) {
        xstar[j] = rng.next_int(0, max_abs);
    }
    RationalVector ystar(m);
    for (int i = 0; i < m; ++i) {
        ystar[i] = rng.next_int(0, max_abs);
    }

    RationalVector b = A.apply(xstar);
    for (int i = 0; i < m; ++i) {
        b[i] -= rng.next_int(0, max_abs);
    }
    RationalVector c = A.apply_transposed(ystar);
    for (int j = 0; j < n; ++j) {
        c[j] += rng.next_int(0, max_abs);
    }

    Instance inst;
    inst.lp = CanonicalLP(std::move(A), std::move(b), std::move(c));
    inst.primal_witness = std::move(xstar);
    inst.dual_witness = std::move(ystar);
    inst.seed = seed;
    return inst;
}

} // namespace pivotseq
