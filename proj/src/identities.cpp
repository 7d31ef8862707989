#include "sylv/identities.hpp"

#include "sylv/permutation.hpp"

namespace sylv {

namespace {

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square())
        throw ShapeError(std::string(what) + " needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

// Pairs (a, b) in list x rest with a > b: the parity of interleaving the
// complement back into the list.
int cross_inversions(const IndexList& list, const IndexList& rest) {
    int count = 0;
    for (int a : list.items())
        for (int b : rest.items())
            if (a > b) ++count;
    return count;
}

}  // namespace

IdentityReport sylvester_check(const Matrix& m, int t) {
    require_square(m, "sylvester_check");
    const int n = m.rows();
    if (t < 0 || t > n - 1)
        throw DomainError("sylvester_check needs 0 <= t <= n-1, got t=" + std::to_string(t) + " n=" + std::to_string(n));

    const Rat det_m = det_reference(m);
    const Rat leading = minor_det(m, IndexList::range(1, t), IndexList::range(1, t));
    const Rat lhs = det_m * pow(leading, static_cast<unsigned long>(n - t - 1));

    const int order = n - t;
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(order) * order);
    for (int i = t + 1; i <= n; ++i)
        for (int j = t + 1; j <= n; ++j) cells.push_back(extended_minor(m, t, i, j));
    const Rat rhs = det_reference(Matrix(order, order, std::move(cells)));

    return make_report("sylvester", {{"n", std::to_string(n)}, {"t", std::to_string(t)}}, lhs, rhs);
}

std::pair<Matrix, IdentityReport> chio_condense(const Matrix& m) {
    require_square(m, "chio_condense");
    const int n = m.rows();
    if (n < 2) throw ShapeError("condensation needs order >= 2, got " + std::to_string(n));
    if (m.at(1, 1).is_zero()) throw PivotError("condensation pivot a11 is zero", 1);

    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) cells.push_back(extended_minor(m, 1, i + 1, j + 1));
    Matrix condensed(n - 1, n - 1, std::move(cells));

    const Rat lhs = det_reference(condensed);
    const Rat rhs = det_reference(m) * pow(m.at(1, 1), static_cast<unsigned long>(n - 2));
    IdentityReport report = make_report("chio", {{"n", std::to_string(n)}}, lhs, rhs);
    return {std::move(condensed), std::move(report)};
}

IdentityReport block_rule_check(const Matrix& m) {
    require_square(m, "block_rule_check");
    const int n = m.rows();
    if (n < 2) throw ShapeError("block rule needs order >= 2, got " + std::to_string(n));

    const IndexList head = IndexList::range(1, n - 1);
    const IndexList tail = IndexList::range(2, n);
    const IndexList core = IndexList::range(2, n - 1);

    const Rat lhs = det_reference(m) * minor_det(m, core, core);
    const Rat rhs = minor_det(m, head, head) * minor_det(m, tail, tail) -
                    minor_det(m, head, tail) * minor_det(m, tail, head);
    return make_report("block", {{"n", std::to_string(n)}}, lhs, rhs);
}

IdentityReport yakovlev_check(const Matrix& m, const IndexList& rows, const IndexList& cols) {
    require_square(m, "yakovlev_check");
    const int n = m.rows();
    if (rows.size() != cols.size())
        throw ShapeError("yakovlev_check needs equally long lists, got " + rows.str() + " and " + cols.str());
    require_ordered(rows, "yakovlev row list");
    require_ordered(cols, "yakovlev column list");
    const int t = static_cast<int>(rows.size());
    if (t < 1 || t > n - 1)
        throw DomainError("yakovlev_check needs 0 < t <= n-1, got t=" + std::to_string(t) + " n=" + std::to_string(n));
    if (rows.max_value() > n || cols.max_value() > n)
        throw BoundsError("index lists exceed matrix order " + std::to_string(n));

    const IndexList row_rest = list_complement(rows, n);
    const IndexList col_rest = list_complement(cols, n);

    const Rat lhs = det_reference(m) * pow(minor_det(m, rows, cols), static_cast<unsigned long>(n - t - 1));

    // Each bordered minor keeps its rows in listed order (the new row
    // sits at the bottom); relative to minors with sorted rows that
    // costs a fixed parity per side, so the whole sum carries
    // (-1)^(cross inversions of I with I' plus J with J').
    const int relabel_sign =
        (cross_inversions(rows, row_rest) + cross_inversions(cols, col_rest)) % 2 == 0 ? 1 : -1;

    Rat rhs(0);
    for (const PermutationWithSign& p : enumerate_permutations(IndexList::range(t + 1, n))) {
        Rat term(1);
        for (int beta = 0; beta < n - t; ++beta) {
            const int alpha = p.arrangement[static_cast<std::size_t>(beta)];
            term *= minor_det(m, rows.append(row_rest.at(static_cast<std::size_t>(alpha - t - 1))),
                              cols.append(col_rest.at(static_cast<std::size_t>(beta))));
        }
        if (p.sign() * relabel_sign > 0)
            rhs += term;
        else
            rhs -= term;
    }

    return make_report(
        "yakovlev",
        {{"n", std::to_string(n)}, {"t", std::to_string(t)}, {"I", rows.str()}, {"J", cols.str()}}, lhs, rhs);
}

}  // namespace sylv
