#include "sylv/index_list.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sylv {

void IndexList::validate_positive() const {
    for (int v : items_)
        if (v < 1) throw DomainError("index lists hold positive indices, got " + std::to_string(v));
}

IndexList IndexList::range(int lo, int hi) {
    std::vector<int> items;
    for (int v = lo; v <= hi; ++v) items.push_back(v);
    return IndexList(std::move(items));
}

int IndexList::at(std::size_t pos) const {
    if (pos >= items_.size()) throw BoundsError("index-list position " + std::to_string(pos) + " out of range");
    return items_[pos];
}

bool IndexList::is_ordered() const {
    for (std::size_t k = 1; k < items_.size(); ++k)
        if (items_[k - 1] >= items_[k]) return false;
    return true;
}

bool IndexList::has_repeats() const {
    std::vector<int> copy = items_;
    std::sort(copy.begin(), copy.end());
    return std::adjacent_find(copy.begin(), copy.end()) != copy.end();
}

bool IndexList::contains(int value) const {
    return std::find(items_.begin(), items_.end(), value) != items_.end();
}

int IndexList::max_value() const {
    if (items_.empty()) return 0;
    return *std::max_element(items_.begin(), items_.end());
}

IndexList IndexList::append(int value) const {
    std::vector<int> items = items_;
    items.push_back(value);
    return IndexList(std::move(items));
}

std::size_t IndexList::position_of(int value) const {
    for (std::size_t k = 0; k < items_.size(); ++k)
        if (items_[k] == value) return k + 1;
    return 0;
}

std::string IndexList::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < items_.size(); ++k) {
        if (k) os << ',';
        os << items_[k];
    }
    os << ')';
    return os.str();
}

IndexList IndexList::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_spaces = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_spaces();
    if (i >= text.size() || text[i] != '(') throw ParseError("index list must start with '(': '" + text + "'");
    ++i;
    std::vector<int> items;
    skip_spaces();
    if (i < text.size() && text[i] == ')') {
        ++i;
    } else {
        while (true) {
            skip_spaces();
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (start == i) throw ParseError("expected index in list: '" + text + "'");
            items.push_back(std::atoi(text.substr(start, i - start).c_str()));
            skip_spaces();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ')') { ++i; break; }
            throw ParseError("expected ',' or ')' in index list: '" + text + "'");
        }
    }
    skip_spaces();
    if (i != text.size()) throw ParseError("trailing characters after index list: '" + text + "'");
    return IndexList(std::move(items));
}

void require_ordered(const IndexList& list, const std::string& what) {
    if (!list.is_ordered()) throw DomainError(what + " must be a strictly increasing index list, got " + list.str());
}

void require_distinct(const IndexList& list, const std::string& what) {
    if (list.has_repeats()) throw DomainError(what + " must not repeat indices, got " + list.str());
}

IndexList list_union(const IndexList& a, const IndexList& b) {
    require_ordered(a, "union operand");
    require_ordered(b, "union operand");
    std::vector<int> out;
    std::set_union(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(), std::back_inserter(out));
    return IndexList(std::move(out));
}

IndexList list_intersection(const IndexList& a, const IndexList& b) {
    require_ordered(a, "intersection operand");
    require_ordered(b, "intersection operand");
    std::vector<int> out;
    std::set_intersection(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(),
                          std::back_inserter(out));
    return IndexList(std::move(out));
}

IndexList list_difference(const IndexList& a, const IndexList& b) {
    require_ordered(a, "difference operand");
    require_ordered(b, "difference operand");
    std::vector<int> out;
    std::set_difference(a.items().begin(), a.items().end(), b.items().begin(), b.items().end(),
                        std::back_inserter(out));
    return IndexList(std::move(out));
}

IndexList list_complement(const IndexList& a, int universe) {
    require_ordered(a, "complement operand");
    if (universe < 0) throw DomainError("complement universe must be non-negative");
    if (a.max_value() > universe)
        throw BoundsError("complement operand " + a.str() + " exceeds universe " + std::to_string(universe));
    return list_difference(IndexList::range(1, universe), a);
}

}  // namespace sylv
