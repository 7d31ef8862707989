#include "sylv/rng.hpp"

namespace sylv {

Matrix random_matrix(TrialRng& rng, int rows, int cols, long lo, long hi) {
    if (rows < 1 || cols < 1) throw DomainError("random matrix needs positive dimensions");
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (long k = 0; k < static_cast<long>(rows) * cols; ++k) cells.emplace_back(rng.next_in(lo, hi));
    return Matrix(rows, cols, std::move(cells));
}

std::vector<Rat> random_row(TrialRng& rng, int m, long lo, long hi) {
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) row.emplace_back(rng.next_in(lo, hi));
    return row;
}

IndexList random_ordered_subset(TrialRng& rng, int universe, int k) {
    if (k < 0 || k > universe)
        throw DomainError("cannot pick " + std::to_string(k) + " of " + std::to_string(universe) + " indices");
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    int remaining = k;
    for (int idx = 1; idx <= universe && remaining > 0; ++idx) {
        const std::uint32_t pool = static_cast<std::uint32_t>(universe - idx + 1);
        if (rng.next_below(pool) < static_cast<std::uint32_t>(remaining)) {
            picked.push_back(idx);
            --remaining;
        }
    }
    return IndexList(std::move(picked));
}

}  // namespace sylv
