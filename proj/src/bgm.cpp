#include "sylv/bgm.hpp"

#include <sstream>

#include "sylv/rng.hpp"

namespace sylv {

namespace {

std::string render_lists(const std::vector<IndexList>& lists) {
    std::ostringstream os;
    for (std::size_t k = 0; k < lists.size(); ++k) {
        if (k) os << ';';
        os << lists[k].str();
    }
    return os.str();
}

// M(I0;J) stacked over the q Z rows restricted to J.
Rat anchor_minor(const Matrix& m, const BgmConfig& cfg, const std::vector<std::vector<Rat>>& z) {
    const IndexList& anchor = *cfg.i0;
    const IndexList& cols = cfg.j_union;
    const int order = static_cast<int>(anchor.size()) + cfg.q;
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(order) * cols.size());
    for (int i : anchor.items())
        for (int j : cols.items()) cells.push_back(m.at(i, j));
    for (int k = 0; k < cfg.q; ++k)
        for (int j : cols.items()) cells.push_back(z[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)]);
    return det_reference(Matrix(order, static_cast<int>(cols.size()), std::move(cells)));
}

std::vector<std::pair<std::string, std::string>> base_params(const Matrix& m, const BgmConfig& cfg) {
    return {{"n", std::to_string(m.rows())},
            {"m", std::to_string(m.cols())},
            {"q", std::to_string(cfg.q)},
            {"I_lists", render_lists(cfg.i_lists)},
            {"J_lists", render_lists(cfg.j_lists)}};
}

}  // namespace

BgmConfig::BgmConfig(std::vector<IndexList> i_lists_, std::vector<IndexList> j_lists_, std::optional<IndexList> i0_,
                     std::vector<std::vector<Rat>> z_rows_)
    : i_lists(std::move(i_lists_)), j_lists(std::move(j_lists_)), i0(std::move(i0_)), z_rows(std::move(z_rows_)) {
    if (i_lists.size() != j_lists.size() || i_lists.empty())
        throw ConfigError("need matching, non-empty families of row and column lists");
    q = static_cast<int>(i_lists.size());
    for (int k = 0; k < q; ++k) {
        require_ordered(i_lists[static_cast<std::size_t>(k)], "row list");
        require_ordered(j_lists[static_cast<std::size_t>(k)], "column list");
        if (j_lists[static_cast<std::size_t>(k)].size() != i_lists[static_cast<std::size_t>(k)].size() + 1)
            throw ConfigError("column list " + j_lists[static_cast<std::size_t>(k)].str() +
                              " must be one longer than row list " + i_lists[static_cast<std::size_t>(k)].str());
    }
    i_meet = i_meet_prefix(q);
    j_union = j_union_prefix(q);
    if (i0) {
        require_ordered(*i0, "anchor rows");
        if (static_cast<int>(i0->size()) != static_cast<int>(j_union.size()) - q)
            throw ConfigError("anchor rows " + i0->str() + " must have card(union of J) - q = " +
                              std::to_string(static_cast<int>(j_union.size()) - q) + " entries");
        if (list_intersection(*i0, i_meet) != *i0)
            throw ConfigError("anchor rows " + i0->str() + " must lie inside the row-list intersection " +
                              i_meet.str());
    }
    if (!z_rows.empty() && static_cast<int>(z_rows.size()) != q)
        throw ConfigError("need exactly q border rows, got " + std::to_string(z_rows.size()));
}

IndexList BgmConfig::i_meet_prefix(int k) const {
    if (k < 1 || k > q) throw DomainError("prefix length outside 1..q");
    IndexList out = i_lists[0];
    for (int i = 1; i < k; ++i) out = list_intersection(out, i_lists[static_cast<std::size_t>(i)]);
    return out;
}

IndexList BgmConfig::j_union_prefix(int k) const {
    if (k < 1 || k > q) throw DomainError("prefix length outside 1..q");
    IndexList out = j_lists[0];
    for (int i = 1; i < k; ++i) out = list_union(out, j_lists[static_cast<std::size_t>(i)]);
    return out;
}

BgmConfig BgmConfig::with_z(std::vector<std::vector<Rat>> z) const {
    return BgmConfig(i_lists, j_lists, i0, std::move(z));
}

BgmConfig bgm_sylvester_config(int n, int t) {
    if (t < 1 || t >= n) throw ConfigError("classical lists need 0 < t < n");
    const int q = n - t;
    std::vector<IndexList> i_lists(static_cast<std::size_t>(q), IndexList::range(1, t));
    std::vector<IndexList> j_lists;
    for (int k = 1; k <= q; ++k) j_lists.push_back(IndexList::range(1, t).append(t + k));
    return BgmConfig(std::move(i_lists), std::move(j_lists), IndexList::range(1, t));
}

Matrix bgm_build_B(const Matrix& m, const BgmConfig& cfg) {
    if (cfg.z_rows.empty()) throw ConfigError("border rows Z are required to build B");
    for (const auto& row : cfg.z_rows)
        if (static_cast<int>(row.size()) != m.cols())
            throw ShapeError("border row length " + std::to_string(row.size()) + " does not match matrix width " +
                             std::to_string(m.cols()));
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(cfg.q) * cfg.q);
    for (int i = 0; i < cfg.q; ++i) {
        const IndexList& rows = cfg.i_lists[static_cast<std::size_t>(i)];
        const IndexList& cols = cfg.j_lists[static_cast<std::size_t>(i)];
        if (rows.max_value() > m.rows() || cols.max_value() > m.cols())
            throw BoundsError("list pair " + rows.str() + ";" + cols.str() + " exceeds matrix bounds");
        for (int j = 0; j < cfg.q; ++j) {
            const int order = static_cast<int>(cols.size());
            std::vector<Rat> bordered;
            bordered.reserve(static_cast<std::size_t>(order) * order);
            for (int r : rows.items())
                for (int c : cols.items()) bordered.push_back(m.at(r, c));
            for (int c : cols.items())
                bordered.push_back(cfg.z_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(c - 1)]);
            cells.push_back(det_reference(Matrix(order, order, std::move(bordered))));
        }
    }
    return Matrix(cfg.q, cfg.q, std::move(cells));
}

IdentityReport bgm_corollary_checks(const Matrix& m, const BgmConfig& cfg) {
    const Rat det_b = det_reference(bgm_build_B(m, cfg));

    if (static_cast<int>(cfg.j_union.size()) < cfg.q)
        return make_report("bgm-corollary", base_params(m, cfg), det_b, Rat(0),
                           "column union has card " + std::to_string(cfg.j_union.size()) + " < q: det B vanishes for every Z");

    for (int k = 2; k <= cfg.q; ++k) {
        if (static_cast<int>(cfg.i_meet_prefix(k).size()) > static_cast<int>(cfg.j_union_prefix(k).size()) - k)
            return make_report("bgm-corollary", base_params(m, cfg), det_b, Rat(0),
                               "prefix k=" + std::to_string(k) + " has card(I-meet) > card(J-union) - k: constant is 0");
    }
    return make_report("bgm-corollary", base_params(m, cfg), Rat(0), Rat(0), "not applicable");
}

IdentityReport bgm_ratio_constancy(const Matrix& m, const BgmConfig& cfg, int trials, std::uint64_t seed) {
    if (!cfg.i0) throw ConfigError("ratio constancy needs anchor rows I0");
    if (trials < 1) throw DomainError("ratio constancy needs at least one draw");

    std::vector<std::pair<std::string, std::string>> params = base_params(m, cfg);
    params.emplace_back("I0", cfg.i0->str());
    params.emplace_back("draws", std::to_string(trials));
    params.emplace_back("seed", std::to_string(seed));

    std::vector<Rat> dets, minors;
    for (int d = 0; d < trials; ++d) {
        TrialRng rng(seed, static_cast<std::uint64_t>(d));
        std::vector<std::vector<Rat>> z;
        for (int k = 0; k < cfg.q; ++k) z.push_back(random_row(rng, m.cols(), -9, 9));
        const BgmConfig drawn = cfg.with_z(z);
        dets.push_back(det_reference(bgm_build_B(m, drawn)));
        minors.push_back(anchor_minor(m, cfg, z));
    }

    for (int d = 0; d < trials; ++d) {
        if (minors[static_cast<std::size_t>(d)].is_zero() && !dets[static_cast<std::size_t>(d)].is_zero())
            return make_report("bgm-ratio", params, dets[static_cast<std::size_t>(d)], Rat(0),
                               "draw " + std::to_string(d) + ": anchor minor vanished but det B did not");
    }
    for (int a = 0; a < trials; ++a) {
        for (int b = a + 1; b < trials; ++b) {
            const Rat left = dets[static_cast<std::size_t>(a)] * minors[static_cast<std::size_t>(b)];
            const Rat right = dets[static_cast<std::size_t>(b)] * minors[static_cast<std::size_t>(a)];
            if (left != right)
                return make_report("bgm-ratio", params, left, right,
                                   "draws " + std::to_string(a) + "," + std::to_string(b) + " break proportionality");
        }
    }

    bool all_zero = true;
    for (const Rat& v : minors)
        if (!v.is_zero()) all_zero = false;
    const std::string notes = all_zero ? "inconclusive: every anchor minor vanished" : "";
    if (trials >= 2)
        return make_report("bgm-ratio", params, dets[0] * minors[1], dets[1] * minors[0], notes);
    return make_report("bgm-ratio", params, dets[0] * minors[0], dets[0] * minors[0], notes);
}

}  // namespace sylv
