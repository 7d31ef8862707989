#ifndef SYLV_MULDERS_HPP
#define SYLV_MULDERS_HPP

#include "sylv/det.hpp"
#include "sylv/pair_class.hpp"
#include "sylv/report.hpp"

namespace sylv {

/// Determinant attached to a pair class: rows and columns taken in pair
/// order. 1 for the empty class, 0 whenever a column index repeats.
Rat mulders_pair_det(const Matrix& m, const PairClass& pc);

/// Determinant of the class (1,1)..(t,t) updated with the single pair
/// (i,j). Covers the whole table: a fresh bordered minor for i,j > t, a
/// column-replaced or leading minor when i <= t, zero in the degenerate
/// cases.
Rat mulders_tilde(const Matrix& m, int t, int i, int j);

/// Block-updated identity: the determinant of the class
/// (1,1)..(t,t) <- (p+1,q+1)..(p+s,q+s), times the (s-1)-th power of the
/// leading t-minor, equals the s x s determinant of the updated-class
/// entries. Classical form at p = q = t, s = n-t on square input.
IdentityReport mulders_check(const Matrix& m, int t, int p, int q, int s);

}  // namespace sylv

#endif
