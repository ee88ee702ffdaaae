#include "pivotseq/matrix.hpp"

#include <algorithm>

#include "pivotseq/errors.hpp"

namespace pivotseq {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) {
        throw SizeMismatchError("matrix dimensions must be nonnegative");
    }
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0 || entries_.size() != static_cast<size_t>(rows) * cols) {
        throw SizeMismatchError("entry count does not match matrix dimensions");
    }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(m) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw SizeMismatchError("ragged rows in matrix literal");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return RationalMatrix(m, n, std::move(entries));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix result(n, n);
    for (int i = 0; i < n; ++i) {
        result.entries_[static_cast<size_t>(i) * n + i] = 1;
    }
    return result;
}

const Rational& RationalMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw IndexOutOfRangeError("matrix index out of range");
    }
    return (*this)(i, j);
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix result(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            result.entries_[static_cast<size_t>(j) * rows_ + i] = (*this)(i, j);
        }
    }
    return result;
}

RationalMatrix RationalMatrix::submatrix(const IndexSet& row_ids, const IndexSet& col_ids) const {
    if (!is_index_set(row_ids, rows_) || !is_index_set(col_ids, cols_)) {
        throw IndexOutOfRangeError("submatrix index sets out of range or not ascending");
    }
    RationalMatrix result(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (size_t i = 0; i < row_ids.size(); ++i) {
        for (size_t j = 0; j < col_ids.size(); ++j) {
            result.entries_[i * col_ids.size() + j] = (*this)(row_ids[i], col_ids[j]);
        }
    }
    return result;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw SizeMismatchError("vector length does not match matrix columns");
    }
    RationalVector result(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational sum = 0;
        for (int j = 0; j < cols_; ++j) {
            sum += (*this)(i, j) * v[j];
        }
        result[i] = sum;
    }
    return result;
}

RationalVector RationalMatrix::apply_transposed(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != rows_) {
        throw SizeMismatchError("vector length does not match matrix rows");
    }
    RationalVector result(cols_);
    for (int j = 0; j < cols_; ++j) {
        Rational sum = 0;
        for (int i = 0; i < rows_; ++i) {
            sum += (*this)(i, j) * v[i];
        }
        result[j] = sum;
    }
    return result;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw SizeMismatchError("dot product of vectors of different lengths");
    }
    Rational sum = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

RationalVector add_scaled(const RationalVector& a, const Rational& s, const RationalVector& d) {
    if (a.size() != d.size()) {
        throw SizeMismatchError("add_scaled on vectors of different lengths");
    }
    RationalVector result(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        result[i] = a[i] + s * d[i];
    }
    return result;
}

bool all_nonnegative(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
}

RationalVector unit_vector(int size, int position) {
    if (position < 0 || position >= size) {
        throw IndexOutOfRangeError("unit vector position out of range");
    }
    RationalVector result(size);
    result[position] = 1;
    return result;
}

RationalVector constant_vector(int size, const Rational& value) {
    return RationalVector(static_cast<size_t>(size), value);
}

bool is_index_set(const IndexSet& s, int bound) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= bound) {
            return false;
        }
        if (i > 0 && s[i] <= s[i - 1]) {
            return false;
        }
    }
    return true;
}

int position_of(const IndexSet& s, int value) {
    const auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it == s.end() || *it != value) {
        return -1;
    }
    return static_cast<int>(it - s.begin());
}

IndexSet with_value(IndexSet s, int value) {
    const auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it != s.end() && *it == value) {
        throw IndexOutOfRangeError("index already present in set");
    }
    s.insert(it, value);
    return s;
}

IndexSet without_value(IndexSet s, int value) {
    const auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it == s.end() || *it != value) {
        throw IndexOutOfRangeError("index not present in set");
    }
    s.erase(it);
    return s;
}

IndexSet complement_of(const IndexSet& s, int bound) {
    IndexSet result;
    result.reserve(bound - s.size());
    size_t pos = 0;
    for (int v = 0; v < bound; ++v) {
        if (pos < s.size() && s[pos] == v) {
            ++pos;
        } else {
            result.push_back(v);
        }
    }
    return result;
}

IndexSet full_index_set(int bound) {
    IndexSet result(bound);
    for (int v = 0; v < bound; ++v) {
        result[v] = v;
    }
    return result;
}

RationalVector restrict_to(const RationalVector& v, const IndexSet& owner, const IndexSet& subset) {
    if (v.size() != owner.size()) {
        throw SizeMismatchError("vector length does not match owner set");
    }
    RationalVector result;
    result.reserve(subset.size());
    for (int value : subset) {
        const int pos = position_of(owner, value);
        if (pos < 0) {
            throw IndexOutOfRangeError("subset index not contained in owner set");
        }
        result.push_back(v[pos]);
    }
    return result;
}

} // namespace pivotseq
