#ifndef PIVOTSEQ_LINSOLVE_HPP
#define PIVOTSEQ_LINSOLVE_HPP

#include "pivotseq/matrix.hpp"

namespace pivotseq {

// Exact dense solves via fraction-free (Bareiss) elimination: denominators
// are cleared row by row, elimination stays in integers with exact divisions
// by the previous pivot, back substitution returns rationals. Every solve is
// from scratch; no factorization is kept across calls.

// Solves A x = rhs. Throws NonSquareError, SizeMismatchError,
// SingularMatrixError.
RationalVector solve_linear(const RationalMatrix& a, const RationalVector& rhs);

// Solves A^T y = rhs.
RationalVector transpose_solve(const RationalMatrix& a, const RationalVector& rhs);

// True iff det(A) != 0 (computed exactly). Throws NonSquareError.
bool is_nonsingular(const RationalMatrix& a);

// Exact determinant. The 0x0 matrix has determinant 1.
Rational determinant(const RationalMatrix& a);

} // namespace pivotseq

#endif
