#ifndef SYLV_INDEX_LIST_HPP
#define SYLV_INDEX_LIST_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sylv/errors.hpp"

namespace sylv {

/// A 1-based index list. The general form allows repetition and any
/// order (column selections); row selections must be repetition-free
/// and the set-algebra operations below additionally require the
/// strictly increasing ("ordered") form. Callers pick the variant via
/// the factories / validators, the storage is the same.
class IndexList {
  public:
    IndexList() = default;
    IndexList(std::initializer_list<int> items) : items_(items) { validate_positive(); }
    explicit IndexList(std::vector<int> items) : items_(std::move(items)) { validate_positive(); }

    /// (lo, lo+1, ..., hi); empty when hi < lo.
    static IndexList range(int lo, int hi);

    /// Parses "(1,3,4)" / "()"; spaces allowed after commas.
    static IndexList parse(const std::string& text);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    int at(std::size_t pos) const;  // 0-based position
    const std::vector<int>& items() const { return items_; }

    bool is_ordered() const;  // strictly increasing
    bool has_repeats() const;
    bool contains(int value) const;
    int max_value() const;  // 0 when empty

    /// Copy with one index appended (bordered row/column lists).
    IndexList append(int value) const;

    /// 1-based position of `value`, 0 if absent.
    std::size_t position_of(int value) const;

    std::string str() const;  // "(1,3,4)"

    friend bool operator==(const IndexList& a, const IndexList& b) { return a.items_ == b.items_; }
    friend bool operator!=(const IndexList& a, const IndexList& b) { return !(a == b); }

  private:
    void validate_positive() const;
    std::vector<int> items_;
};

/// Throws DomainError unless the list is strictly increasing.
void require_ordered(const IndexList& list, const std::string& what);

/// Throws DomainError if the list repeats an index.
void require_distinct(const IndexList& list, const std::string& what);

// Set algebra on ordered lists (inputs validated, outputs ordered).
IndexList list_union(const IndexList& a, const IndexList& b);
IndexList list_intersection(const IndexList& a, const IndexList& b);
IndexList list_difference(const IndexList& a, const IndexList& b);

/// N_universe \ a.
IndexList list_complement(const IndexList& a, int universe);

}  // namespace sylv

#endif
