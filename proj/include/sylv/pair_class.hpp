#ifndef SYLV_PAIR_CLASS_HPP
#define SYLV_PAIR_CLASS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sylv/errors.hpp"

namespace sylv {

/// An equivalence class of (row, column) pairs: two classes are equal
/// when they hold the same pairs regardless of order. Row indices are
/// pairwise distinct; column indices may repeat. The insertion order is
/// preserved for display, equality compares the row-sorted canonical
/// form.
class PairClass {
  public:
    using Pair = std::pair<int, int>;

    PairClass() = default;
    explicit PairClass(std::vector<Pair> pairs);

    /// (1,1),(2,2),...,(t,t).
    static PairClass diagonal(int t);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<Pair>& pairs() const { return pairs_; }

    bool has_row(int row) const;
    bool column_repeats() const;

    /// Row-keyed update: pairs of `update` are applied in listed order;
    /// a pair whose row is already present replaces that pair's column
    /// in place, otherwise the pair is appended.
    PairClass arrow(const PairClass& update) const;

    std::vector<Pair> canonical() const;  // sorted by row

    std::string str() const;  // "[(2,3),(3,3)]"

    friend bool operator==(const PairClass& a, const PairClass& b) { return a.canonical() == b.canonical(); }
    friend bool operator!=(const PairClass& a, const PairClass& b) { return !(a == b); }

  private:
    std::vector<Pair> pairs_;
};

inline PairClass pairclass_arrow(const PairClass& base, const PairClass& update) { return base.arrow(update); }

}  // namespace sylv

#endif
