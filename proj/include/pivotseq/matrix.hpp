#ifndef PIVOTSEQ_MATRIX_HPP
#define PIVOTSEQ_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "pivotseq/rational.hpp"

namespace pivotseq {

// Ordered index set: strictly ascending, 0-based. All file formats and
// human-readable reports use 1-based indices; the conversion happens at the
// I/O boundary only.
using IndexSet = std::vector<int>;

// Dense row-major matrix of exact rationals. Immutable after construction;
// submatrix extraction copies.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const;

    RationalMatrix transposed() const;
    RationalMatrix submatrix(const IndexSet& row_ids, const IndexSet& col_ids) const;

    RationalVector apply(const RationalVector& v) const;            // A v
    RationalVector apply_transposed(const RationalVector& v) const; // A^T v

    bool operator==(const RationalMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

// Vector helpers.
Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add_scaled(const RationalVector& a, const Rational& s, const RationalVector& d); // a + s*d
bool all_nonnegative(const RationalVector& v);
RationalVector unit_vector(int size, int position);
RationalVector constant_vector(int size, const Rational& value);

// Index-set helpers.
bool is_index_set(const IndexSet& s, int bound);
int position_of(const IndexSet& s, int value); // -1 when absent
IndexSet with_value(IndexSet s, int value);    // value must be absent
IndexSet without_value(IndexSet s, int value); // value must be present
IndexSet complement_of(const IndexSet& s, int bound);
IndexSet full_index_set(int bound);

// v is indexed by `owner`; returns the components at the positions of
// `subset` (subset must be contained in owner).
RationalVector restrict_to(const RationalVector& v, const IndexSet& owner, const IndexSet& subset);

} // namespace pivotseq

#endif
