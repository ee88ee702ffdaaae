#ifndef PIVOTSEQ_LP_HPP
#define PIVOTSEQ_LP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pivotseq/matrix.hpp"

namespace pivotseq {

// Canonical primal-dual pair:
//   minimize c^T x  s.t. A x >= b, x >= 0
//   maximize b^T y  s.t. A^T y <= c, y >= 0
struct CanonicalLP {
    RationalMatrix A;
    RationalVector b;
    RationalVector c;

    CanonicalLP() = default;
    CanonicalLP(RationalMatrix a, RationalVector b_, RationalVector c_);

    int rows() const { return A.rows(); }
    int cols() const { return A.cols(); }
};

// Active row set and binding column set (the complements are implicit).
struct IndexPartition {
    IndexSet row_support; // subset of {0..m-1}
    IndexSet col_support; // subset of {0..n-1}

    int size() const { return static_cast<int>(row_support.size()); }
    bool empty() const { return row_support.empty() && col_support.empty(); }
};

// x indexed by a column set C, y indexed by a row set R; both zero-padded
// outside their sets when viewed as full-dimension solutions.
struct BasicPair {
    RationalVector x;
    RationalVector y;
};

struct PartitionCertificate {
    IndexPartition partition;
    BasicPair pair;
    Rational objective;
};

struct CertificateCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

// Verifies every optimality condition exactly: basis nonsingular, the two
// equation systems, the two feasibility blocks on the complements, both
// nonnegativities, and the objective equality. An empty partition is legal
// (x = y = 0); the basis conditions are skipped and the feasibility blocks
// reduce to b <= 0 and c >= 0.
CertificateCheck check_certificate(const CanonicalLP& lp, const PartitionCertificate& cert);

// Restriction of the pair to A_{RC}, b_R, c_C. Throws IndexOutOfRangeError,
// EmptySelectionError.
CanonicalLP subproblem(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids);

// Exact basic solutions: A_{RC} x = b_R and A_{RC}^T y = c_C. Throws
// SizeMismatchError, SingularBasisError. Empty sets give the empty pair.
BasicPair basic_pair(const CanonicalLP& lp, const IndexSet& row_ids, const IndexSet& col_ids);

struct Instance {
    CanonicalLP lp;
    std::optional<RationalVector> primal_witness; // x*: A x* >= b, x* >= 0
    std::optional<RationalVector> dual_witness;   // y*: A^T y* <= c, y* >= 0
    std::optional<std::uint64_t> seed;
};

// Random instance with both sides feasible by construction: A is drawn with
// integer entries in [-max_abs, max_abs], witnesses x*, y* >= 0 are drawn,
// then b <= A x* and c >= A^T y* with nonnegative slack amounts. The draw
// sequence is fixed, so instances are reproducible per seed.
Instance generate_instance(int m, int n, std::uint64_t seed, int max_abs = 9);

// Deterministic bounded integer draws on top of the standard 64-bit engine;
// the mapping avoids distribution objects so streams are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Uniform on [lo, hi], inclusive, by rejection sampling.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

} // namespace pivotseq

#endif
