#include "sylv/glr.hpp"

#include <sstream>

namespace sylv {

GlrConfig::GlrConfig(int t_, std::vector<IndexList> lists) : t(t_), j_lists(std::move(lists)) {
    if (t < 0) throw ConfigError("negative t");
    q = static_cast<int>(j_lists.size());
    if (q < 1) throw ConfigError("at least one column list required");
    for (const IndexList& j : j_lists) {
        require_ordered(j, "column list");
        if (static_cast<int>(j.size()) != t + 1)
            throw ConfigError("column list " + j.str() + " must have length t+1 = " + std::to_string(t + 1));
    }
    for (int k = 0; k + 1 < q; ++k) {
        IndexList s = list_intersection(j_lists[static_cast<std::size_t>(k)], j_lists[static_cast<std::size_t>(k) + 1]);
        if (static_cast<int>(s.size()) != t)
            throw ConfigError("consecutive lists " + j_lists[static_cast<std::size_t>(k)].str() + " and " +
                              j_lists[static_cast<std::size_t>(k) + 1].str() + " must overlap in exactly t = " +
                              std::to_string(t) + " indices");
        overlaps.push_back(std::move(s));
    }
    j_union = j_lists[0];
    for (int k = 1; k < q; ++k) j_union = list_union(j_union, j_lists[static_cast<std::size_t>(k)]);

    if (q == 1) {
        // No S_1 exists; the degenerate chain reduces to det B = det M.
        sign = 1;
        mu = 0;
        return;
    }
    if (static_cast<int>(j_union.size()) < t + q) {
        sign = 0;
        mu = 0;
        return;
    }
    mu = static_cast<long>(q) * (q - 1) / 2;
    for (int k = 0; k < q; ++k) {
        const IndexList& neighbour = (k == 0) ? overlaps[0] : overlaps[static_cast<std::size_t>(k) - 1];
        const IndexList loose = list_difference(j_lists[static_cast<std::size_t>(k)], neighbour);
        if (loose.size() != 1)
            throw ConfigError("list " + j_lists[static_cast<std::size_t>(k)].str() +
                              " must leave exactly one index outside its neighbouring overlap");
        const int pivot = loose.at(0);
        const int position = static_cast<int>(j_lists[static_cast<std::size_t>(k)].position_of(pivot));
        pivots.push_back(pivot);
        pivot_positions.push_back(position);
        mu += pivot - position;
    }
    for (std::size_t a = 0; a < pivots.size(); ++a)
        for (std::size_t b = a + 1; b < pivots.size(); ++b)
            if (pivots[a] > pivots[b]) ++pivot_inversions;
    sign = ((mu + pivot_inversions) % 2 == 0) ? 1 : -1;
}

GlrSign glr_sign(const GlrConfig& cfg) { return {cfg.sign, cfg.mu}; }

IdentityReport glr_check(const Matrix& m, const GlrConfig& cfg) {
    if (!m.is_square())
        throw ShapeError("glr_check needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    const int n = m.rows();
    if (n != cfg.t + cfg.q)
        throw ShapeError("glr_check needs order n = t+q, got n=" + std::to_string(n) + " t=" + std::to_string(cfg.t) +
                         " q=" + std::to_string(cfg.q));
    if (cfg.j_union.max_value() > n) throw BoundsError("column lists exceed matrix order " + std::to_string(n));

    const IndexList lead = IndexList::range(1, cfg.t);
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(cfg.q) * cfg.q);
    for (int i = 1; i <= cfg.q; ++i)
        for (int k = 0; k < cfg.q; ++k)
            cells.push_back(minor_det(m, lead.append(cfg.t + i), cfg.j_lists[static_cast<std::size_t>(k)]));
    const Rat lhs = det_reference(Matrix(cfg.q, cfg.q, std::move(cells)));

    Rat rhs = Rat(cfg.sign) * det_reference(m);
    for (const IndexList& s : cfg.overlaps) rhs *= minor_det(m, lead, s);

    std::ostringstream lists;
    for (int k = 0; k < cfg.q; ++k) {
        if (k) lists << ';';
        lists << cfg.j_lists[static_cast<std::size_t>(k)].str();
    }
    std::string notes;
    if (cfg.q == 1) notes = "single-list chain: sign fixed to +1";
    return make_report("glr",
                       {{"n", std::to_string(n)},
                        {"t", std::to_string(cfg.t)},
                        {"q", std::to_string(cfg.q)},
                        {"lists", lists.str()},
                        {"mu", std::to_string(cfg.mu)},
                        {"pivot_inv", std::to_string(cfg.pivot_inversions)},
                        {"c", std::to_string(cfg.sign)}},
                       lhs, rhs, notes);
}

}  // namespace sylv
