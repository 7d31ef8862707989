#include "sylv/pair_class.hpp"

#include <algorithm>
#include <sstream>

namespace sylv {

PairClass::PairClass(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [r, c] : pairs_) {
        if (r < 1 || c < 1)
            throw DomainError("pair indices must be positive, got (" + std::to_string(r) + "," + std::to_string(c) +
                              ")");
    }
    std::vector<int> rows;
    for (const auto& p : pairs_) rows.push_back(p.first);
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
        throw DomainError("pair class repeats a row index: " + str());
}

PairClass PairClass::diagonal(int t) {
    std::vector<Pair> pairs;
    for (int k = 1; k <= t; ++k) pairs.emplace_back(k, k);
    return PairClass(std::move(pairs));
}

bool PairClass::has_row(int row) const {
    for (const auto& p : pairs_)
        if (p.first == row) return true;
    return false;
}

bool PairClass::column_repeats() const {
    std::vector<int> cols;
    for (const auto& p : pairs_) cols.push_back(p.second);
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) != cols.end();
}

PairClass PairClass::arrow(const PairClass& update) const {
    PairClass out = *this;
    for (const auto& [u, v] : update.pairs_) {
        bool replaced = false;
        for (auto& p : out.pairs_) {
            if (p.first == u) {
                p.second = v;
                replaced = true;
                break;
            }
        }
        if (!replaced) out.pairs_.emplace_back(u, v);
    }
    return out;
}

std::vector<PairClass::Pair> PairClass::canonical() const {
    std::vector<Pair> out = pairs_;
    std::sort(out.begin(), out.end());
    return out;
}

std::string PairClass::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (k) os << ',';
        os << '(' << pairs_[k].first << ',' << pairs_[k].second << ')';
    }
    os << ']';
    return os.str();
}

}  // namespace sylv
