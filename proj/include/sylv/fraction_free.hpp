#ifndef SYLV_FRACTION_FREE_HPP
#define SYLV_FRACTION_FREE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sylv/bareiss.hpp"
#include "sylv/det.hpp"

namespace sylv {

/// Fraction-free elimination with every intermediate cross-checked
/// against the corresponding bordered minor and every recorded division
/// verified exact. Requires a square integer matrix whose leading
/// principal minors up to order n-1 are nonsingular; a singular one
/// raises PivotError naming its order. A certification mismatch raises
/// CertifyError naming (t,i,j) and always indicates a bug.
std::pair<Rat, EliminationTrace> bareiss_certified(const Matrix& m);

/// Per-stage maximum numerator bit lengths for the fraction-free path
/// and for naive rational elimination (fractions never reduced, which
/// is what makes the growth visible). Stage 0 is the input matrix.
struct GrowthStats {
    std::vector<std::size_t> ff_bits;
    std::vector<std::size_t> naive_bits;
    Rat det_ff;
    Rat det_naive;
};

GrowthStats growth_report(const Matrix& m, int reference_cap = kDetReferenceCap);

}  // namespace sylv

#endif
