#include "pivotseq/linsolve.hpp"

#include <utility>
#include <vector>

#include "pivotseq/errors.hpp"

namespace pivotseq {

namespace {

// State of the fraction-free elimination of [A | rhs] after clearing
// denominators. The working matrix is integer throughout; the divisions in
// the Bareiss update are exact.
struct Elimination {
    int n = 0;
    int width = 0;
    std::vector<Integer> work; // n x width, row-major
    std::vector<Integer> row_scale;
    int swap_sign = 1;
    bool singular = false;

    Integer& at(int i, int j) { return work[static_cast<size_t>(i) * width + j]; }
    const Integer& at(int i, int j) const { return work[static_cast<size_t>(i) * width + j]; }
};

Elimination eliminate(const RationalMatrix& a, const RationalVector* rhs) {
    Elimination e;
    e.n = a.rows();
    e.width = e.n + (rhs != nullptr ? 1 : 0);
    e.work.resize(static_cast<size_t>(e.n) * e.width);
    e.row_scale.resize(e.n);

    for (int i = 0; i < e.n; ++i) {
        Integer scale = 1;
        for (int j = 0; j < e.n; ++j) {
            scale = lcm(scale, denominator(a(i, j)));
        }
        if (rhs != nullptr) {
            scale = lcm(scale, denominator((*rhs)[i]));
        }
        e.row_scale[i] = scale;
        for (int j = 0; j < e.n; ++j) {
            e.at(i, j) = numerator(a(i, j)) * (scale / denominator(a(i, j)));
        }
        if (rhs != nullptr) {
            e.at(i, e.n) = numerator((*rhs)[i]) * (scale / denominator((*rhs)[i]));
        }
    }

    Integer prev = 1;
    for (int col = 0; col < e.n; ++col) {
        int pivot_row = -1;
        for (int i = col; i < e.n; ++i) {
            if (e.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            e.singular = true;
            return e;
        }
        if (pivot_row != col) {
            for (int j = 0; j < e.width; ++j) {
                std::swap(e.at(col, j), e.at(pivot_row, j));
            }
            e.swap_sign = -e.swap_sign;
        }
        const Integer pivot = e.at(col, col);
        for (int i = col + 1; i < e.n; ++i) {
            for (int j = col + 1; j < e.width; ++j) {
                e.at(i, j) = (e.at(i, j) * pivot - e.at(i, col) * e.at(col, j)) / prev;
            }
            e.at(i, col) = 0;
        }
        prev = pivot;
    }
    return e;
}

void require_square(const RationalMatrix& a) {
    if (a.rows() != a.cols()) {
        throw NonSquareError("matrix is not square");
    }
}

} // namespace

RationalVector solve_linear(const RationalMatrix& a, const RationalVector& rhs) {
    require_square(a);
    if (static_cast<int>(rhs.size()) != a.rows()) {
        throw SizeMismatchError("right-hand side length does not match matrix");
    }
    const int n = a.rows();
    if (n == 0) {
        return {};
    }

    Elimination e = eliminate(a, &rhs);
    if (e.singular) {
        throw SingularMatrixError("matrix is singular");
    }

    RationalVector x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rational sum(e.at(i, n));
        for (int j = i + 1; j < n; ++j) {
            sum -= Rational(e.at(i, j)) * x[j];
        }
        x[i] = sum / Rational(e.at(i, i));
    }
    return x;
}

RationalVector transpose_solve(const RationalMatrix& a, const RationalVector& rhs) {
    return solve_linear(a.transposed(), rhs);
}

bool is_nonsingular(const RationalMatrix& a) {
    require_square(a);
    if (a.rows() == 0) {
        return true;
    }
    return !eliminate(a, nullptr).singular;
}

Rational determinant(const RationalMatrix& a) {
    require_square(a);
    const int n = a.rows();
    if (n == 0) {
        return 1;
    }
    Elimination e = eliminate(a, nullptr);
    if (e.singular) {
        return 0;
    }
    // After full elimination the trailing pivot equals the determinant of the
    // scaled integer matrix, up to the row-swap sign.
    Integer scaled_det = e.at(n - 1, n - 1) * e.swap_sign;
    Integer scale = 1;
    for (const Integer& s : e.row_scale) {
        scale *= s;
    }
    return Rational(scaled_det, scale);
}

} // namespace pivotseq
