#include "sylv/mulders.hpp"

namespace sylv {

Rat mulders_pair_det(const Matrix& m, const PairClass& pc) {
    std::vector<int> rows, cols;
    rows.reserve(pc.size());
    cols.reserve(pc.size());
    for (const auto& [r, c] : pc.pairs()) {
        if (r > m.rows() || c > m.cols())
            throw BoundsError("pair (" + std::to_string(r) + "," + std::to_string(c) + ") exceeds " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        rows.push_back(r);
        cols.push_back(c);
    }
    if (pc.empty()) return Rat(1);
    if (pc.column_repeats()) return Rat(0);
    return minor_det(m, IndexList(std::move(rows)), IndexList(std::move(cols)));
}

Rat mulders_tilde(const Matrix& m, int t, int i, int j) {
    const int bound = m.rows() < m.cols() ? m.rows() : m.cols();
    if (t < 0 || t > bound) throw DomainError("tilde order " + std::to_string(t) + " outside 0.." + std::to_string(bound));
    if (i < 1 || i > m.rows()) throw BoundsError("row index " + std::to_string(i) + " outside 1.." + std::to_string(m.rows()));
    if (j < 1 || j > m.cols()) throw BoundsError("column index " + std::to_string(j) + " outside 1.." + std::to_string(m.cols()));
    return mulders_pair_det(m, PairClass::diagonal(t).arrow(PairClass({{i, j}})));
}

IdentityReport mulders_check(const Matrix& m, int t, int p, int q, int s) {
    const int bound = m.rows() < m.cols() ? m.rows() : m.cols();
    if (t < 0 || t > bound)
        throw DomainError("mulders_check needs 0 <= t <= min(n,m), got t=" + std::to_string(t));
    if (p < 0 || p > t || q < 0 || q > t)
        throw DomainError("mulders_check needs 0 <= p,q <= t, got p=" + std::to_string(p) + " q=" + std::to_string(q));
    const int s_bound = (m.rows() - p) < (m.cols() - q) ? (m.rows() - p) : (m.cols() - q);
    if (s < 1 || s > s_bound)
        throw DomainError("mulders_check needs 1 <= s <= min(n-p,m-q), got s=" + std::to_string(s));

    std::vector<PairClass::Pair> update;
    for (int k = 1; k <= s; ++k) update.emplace_back(p + k, q + k);
    const PairClass updated = PairClass::diagonal(t).arrow(PairClass(std::move(update)));

    const Rat base = (t == 0) ? Rat(1) : mulders_tilde(m, t - 1, t, t);
    const Rat lhs = mulders_pair_det(m, updated) * pow(base, static_cast<unsigned long>(s - 1));

    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(s) * s);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) cells.push_back(mulders_tilde(m, t, p + i, q + j));
    const Rat rhs = det_reference(Matrix(s, s, std::move(cells)));

    return make_report("mulders",
                       {{"n", std::to_string(m.rows())},
                        {"m", std::to_string(m.cols())},
                        {"t", std::to_string(t)},
                        {"p", std::to_string(p)},
                        {"q", std::to_string(q)},
                        {"s", std::to_string(s)}},
                       lhs, rhs, "class=" + updated.str());
}

}  // namespace sylv
