#include "sylv/permutation.hpp"

#include <algorithm>

namespace sylv {

int inversion_count(const std::vector<int>& values) {
    // O(k^2) pairwise scan; k stays tiny here.
    int count = 0;
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (values[a] > values[b]) ++count;
    return count;
}

std::vector<PermutationWithSign> enumerate_permutations(const IndexList& base) {
    require_distinct(base, "permutation base");
    if (base.size() > kPermutationLengthCap)
        throw CapacityError("permutation base of length " + std::to_string(base.size()) + " exceeds cap " +
                            std::to_string(kPermutationLengthCap));
    std::vector<int> current = base.items();
    std::sort(current.begin(), current.end());
    std::vector<PermutationWithSign> out;
    do {
        out.push_back({current, inversion_count(current)});
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

}  // namespace sylv
