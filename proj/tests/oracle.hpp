#ifndef SYLV_TESTS_ORACLE_HPP
#define SYLV_TESTS_ORACLE_HPP

// Test-only determinant oracle: textbook cofactor expansion along the
// first row, no caching, no elimination. Deliberately independent of
// every determinant path in the library so it can arbitrate all of
// them.

#include <vector>

#include "sylv/matrix.hpp"

namespace sylv::testing {

inline Rat naive_det_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return Rat(1);
    if (n == 1) return rows[0][0];
    Rat acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (rows[0][c].is_zero()) continue;
        std::vector<std::vector<Rat>> rest;
        rest.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(rows[r][k]);
            rest.push_back(std::move(row));
        }
        const Rat term = rows[0][c] * naive_det_rows(rest);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline Rat naive_det(const Matrix& m) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 1; i <= m.rows(); ++i) {
        std::vector<Rat> row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 1; j <= m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return naive_det_rows(rows);
}

/// The worked 3x3 fixture used across the suites.
inline Matrix fixture_3x3() { return Matrix::from_int_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}); }

}  // namespace sylv::testing

#endif
