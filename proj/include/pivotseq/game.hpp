#ifndef PIVOTSEQ_GAME_HPP
#define PIVOTSEQ_GAME_HPP

#include <optional>

#include "pivotseq/decompose.hpp"
#include "pivotseq/lp.hpp"

namespace pivotseq {

// Min-max pair over a payoff matrix M, both sides on the unit simplex:
//   minimize alpha  s.t. M u + e alpha >= 0, e^T u = 1, u >= 0
//   maximize beta   s.t. M^T v + e beta <= 0, e^T v = 1, v >= 0
struct MatrixGame {
    RationalMatrix M;

    MatrixGame() = default;
    explicit MatrixGame(RationalMatrix m);

    int rows() const { return M.rows(); }
    int cols() const { return M.cols(); }
};

// [Msub, e; e^T, 0] — couples a square submatrix with the simplex constraint.
RationalMatrix bordered_matrix(const RationalMatrix& sub);

// Solutions of the two bordered systems against (0, 1). The identity
// alpha = beta and the simplex sums e^T u = e^T v = 1 are checked at
// construction.
struct GameBasicPair {
    RationalVector u; // on C
    RationalVector v; // on R
    Rational alpha;
    Rational beta;
};

GameBasicPair bordered_pair(const MatrixGame& game, const IndexSet& row_ids, const IndexSet& col_ids);

struct GameCertificate {
    IndexPartition partition;
    GameBasicPair pair;
    Rational gamma;
    bool used_fallback = false;

    RationalVector padded_u(int n) const;
    RationalVector padded_v(int m) const;
};

// Validates every optimality condition of a bordered basis exactly,
// including the inequality blocks on the complements.
CertificateCheck check_game_certificate(const MatrixGame& game, const GameCertificate& cert);

// Solves the pair by shifting M to strictly positive entries, running the
// reciprocal-value canonical LP through solve_canonical, and mapping the
// partition back. The assembled certificate is validated; on failure the
// exhaustive bordered-basis search takes over (possible only at enumeration
// scale; both paths failing raises CertificateAssemblyFailedError).
GameCertificate solve_game(const MatrixGame& game);

// Bordered direction solves against (e_i, 0) and (e_j, 0). The identities
// dalpha = v_i, dbeta = u_j and du_j = dv_i are checked against the basic
// pair of the same basis.
struct GameDirectionPair {
    int i = 0;
    int j = 0;
    RationalVector du;
    RationalVector dv;
    Rational dalpha;
    Rational dbeta;
};

GameDirectionPair game_directions(const MatrixGame& game, const IndexSet& row_ids,
                                  const IndexSet& col_ids, int i, int j);

// Which way the game value moves along the reduction (k -> k-1). Decreasing
// yields a forward trace whose gamma sequence is non-decreasing up to the
// full value; Increasing the mirror image.
enum class GammaDirection {
    Decreasing,
    Increasing,
};

const char* to_string(GammaDirection d);

struct GameReductionStep {
    int removed_row = 0;
    int removed_col = 0;
    ReductionCase tag = ReductionCase::YZero;
    int inner_iterations = 0;
    GameBasicPair child;
    Rational child_gamma;
};

// One bordered reduction step honoring the requested direction. Since
// e^T du = 0 forces du to carry both signs for k >= 2, both ratio-test
// variants are available in the strictly positive case; zero-component cases
// keep gamma unchanged, which satisfies either direction.
GameReductionStep game_reduce_once(const MatrixGame& game, const IndexSet& row_ids,
                                   const IndexSet& col_ids, const GameBasicPair& pair,
                                   GammaDirection direction);

struct GameTraceLevel {
    IndexSet rows;
    IndexSet cols;
    RationalVector u;
    RationalVector v;
    Rational gamma;
    std::optional<ReductionCase> tag;
    int inner_iterations = 0;
};

struct GameTrace {
    int m = 0;
    int n = 0;
    int r = 0;
    GammaDirection direction = GammaDirection::Decreasing;
    Rational gamma; // full value, equals the last level's gamma
    std::vector<GameTraceLevel> levels;
    PivotSequence pivots;
};

// Forward trace with a monotone gamma sequence ending at the game value:
// non-decreasing for Decreasing, non-increasing for Increasing.
GameTrace game_decompose(const MatrixGame& game, const GameCertificate& cert, GammaDirection direction);

} // namespace pivotseq

#endif
