#ifndef PIVOTSEQ_TEST_HELPERS_HPP
#define PIVOTSEQ_TEST_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pivotseq/lp.hpp"
#include "pivotseq/matrix.hpp"

namespace pivotseq::testing {

inline Rational rat(const std::string& s) {
    return parse_rational(s);
}

inline RationalVector vec(std::initializer_list<const char*> values) {
    RationalVector out;
    for (const char* v : values) {
        out.push_back(parse_rational(v));
    }
    return out;
}

inline RationalMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Rational>> data;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const char* v : row) {
            r.push_back(parse_rational(v));
        }
        data.push_back(std::move(r));
    }
    return RationalMatrix::from_rows(data);
}

// The worked 2x2 pair used throughout: A=[[2,1],[1,2]], b=(3,3), c=(3,3),
// optimum x=y=(1,1) with objective 6.
inline CanonicalLP worked_2x2() {
    return CanonicalLP(mat({{"2", "1"}, {"1", "2"}}), vec({"3", "3"}), vec({"3", "3"}));
}

// Cofactor-expansion determinant over machine integers; the independent
// oracle for is_nonsingular / determinant on small matrices.
inline std::int64_t det_cofactor(const std::vector<std::vector<std::int64_t>>& a) {
    const size_t n = a.size();
    if (n == 1) {
        return a[0][0];
    }
    std::int64_t sum = 0;
    for (size_t col = 0; col < n; ++col) {
        std::vector<std::vector<std::int64_t>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (size_t j = 0; j < n; ++j) {
                if (j != col) {
                    row.push_back(a[i][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        const std::int64_t term = a[0][col] * det_cofactor(minor);
        sum += (col % 2 == 0) ? term : -term;
    }
    return sum;
}

inline RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& a) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) {
        std::vector<Rational> r;
        for (std::int64_t v : row) {
            r.emplace_back(v);
        }
        rows.push_back(std::move(r));
    }
    return RationalMatrix::from_rows(rows);
}

// Random integer matrix with entries in [-bound, bound].
inline std::vector<std::vector<std::int64_t>> random_int_matrix(Rng& rng, int rows, int cols,
                                                                int bound) {
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a) {
        for (auto& v : row) {
            v = rng.next_int(-bound, bound);
        }
    }
    return a;
}

} // namespace pivotseq::testing

#endif
