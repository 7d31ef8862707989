#ifndef SYLV_PERMUTATION_HPP
#define SYLV_PERMUTATION_HPP

#include <vector>

#include "sylv/index_list.hpp"

namespace sylv {

/// One arrangement of a base list together with its inversion count;
/// (-1)^inversions is the Leibniz sign of the permutation.
struct PermutationWithSign {
    std::vector<int> arrangement;
    int inversions = 0;

    int sign() const { return (inversions % 2 == 0) ? 1 : -1; }
};

inline constexpr std::size_t kPermutationLengthCap = 8;

/// Number of pairs (a < b) with values[a] > values[b].
int inversion_count(const std::vector<int>& values);

/// All |base|! arrangements of a repetition-free base, in lexicographic
/// order, each with its inversion count. Length above
/// kPermutationLengthCap raises CapacityError.
std::vector<PermutationWithSign> enumerate_permutations(const IndexList& base);

}  // namespace sylv

#endif
