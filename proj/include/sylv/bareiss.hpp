#ifndef SYLV_BAREISS_HPP
#define SYLV_BAREISS_HPP

#include <vector>

#include "sylv/matrix.hpp"

namespace sylv {

/// One recorded exact division of the elimination: dividend / divisor
/// over the integers, with `exact` true when the remainder was zero.
struct DivisionRecord {
    Int dividend;
    Int divisor;
    bool exact = false;
};

/// Full record of the elimination: after step t the active block holds
/// the bordered minors of order t+1, which is exactly what the
/// certification in fraction_free.hpp checks. Division records are kept
/// for integer input only (the divisibility certificate is meaningless
/// over rationals).
struct EliminationTrace {
    std::vector<std::pair<int, Matrix>> steps;  // (stage t, state after step t), t = 1..n-1
    std::vector<DivisionRecord> divisions;
    bool integer_input = false;
};

struct BareissResult {
    Rat det;
    EliminationTrace trace;
    bool pivot_failure = false;
    int singular_minor_order = 0;  // order of the first singular leading minor
};

/// One-step fraction-free elimination without pivoting. A zero pivot is
/// reported through the result, never repaired by a row swap.
BareissResult det_bareiss(const Matrix& m);

}  // namespace sylv

#endif
