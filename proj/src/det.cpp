#include "sylv/det.hpp"

#include <bit>

namespace sylv {

namespace {

// det of a k x k row-major block. Expansion by minors along the top row
// of each trailing row block, cached per column subset: d[mask] is the
// minor using the last popcount(mask) rows and the columns in mask.
Rat det_dense(const std::vector<Rat>& a, int k) {
    if (k == 0) return Rat(1);
    const std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<Rat> d(full + 1);
    d[0] = Rat(1);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const int pc = std::popcount(mask);
        const int row = k - pc;  // 0-based row the expansion runs along
        Rat acc(0);
        int ordinal = 0;
        for (int c = 0; c < k; ++c) {
            if (!(mask & (std::size_t{1} << c))) continue;
            const Rat& entry = a[static_cast<std::size_t>(row) * k + c];
            if (!entry.is_zero()) {
                const Rat term = entry * d[mask ^ (std::size_t{1} << c)];
                if (ordinal % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++ordinal;
        }
        d[mask] = acc;
    }
    return d[full];
}

}  // namespace

Rat det_reference(const Matrix& m, int cap) {
    if (!m.is_square())
        throw ShapeError("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
    if (m.rows() > cap)
        throw CapacityError("order " + std::to_string(m.rows()) + " exceeds reference-determinant cap " +
                            std::to_string(cap));
    return det_dense(m.cells(), m.rows());
}

Rat minor_det(const Matrix& m, const IndexList& rows, const IndexList& cols) {
    if (rows.size() != cols.size())
        throw ShapeError("minor needs equally long lists, got " + rows.str() + " and " + cols.str());
    if (rows.empty()) return Rat(1);
    return det_reference(submatrix(m, rows, cols));
}

Rat minor_det(const Matrix& m, const MinorSelector& sel) { return minor_det(m, sel.row_list, sel.col_list); }

Rat extended_minor(const Matrix& m, int t, int i, int j) {
    const int bound = m.rows() < m.cols() ? m.rows() : m.cols();
    if (t < 0 || t > bound - 1)
        throw DomainError("bordered-minor order " + std::to_string(t) + " outside 0.." + std::to_string(bound - 1));
    if (i <= t || j <= t)
        throw DomainError("bordered minor needs i,j > t, got t=" + std::to_string(t) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j));
    return minor_det(m, IndexList::range(1, t).append(i), IndexList::range(1, t).append(j));
}

}  // namespace sylv
