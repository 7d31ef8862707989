#ifndef SYLV_IDENTITIES_HPP
#define SYLV_IDENTITIES_HPP

#include <utility>

#include "sylv/det.hpp"
#include "sylv/index_list.hpp"
#include "sylv/report.hpp"

namespace sylv {

/// det M * (leading t-minor)^(n-t-1) against the determinant of the
/// (n-t) x (n-t) matrix of bordered minors of order t+1. Holds for
/// every square M and every 0 <= t <= n-1.
IdentityReport sylvester_check(const Matrix& m, int t);

/// Pivotal condensation: returns the order n-1 matrix B of 2x2 pivot
/// minors together with the check det B = det M * a11^(n-2). Requires
/// a11 != 0 (PivotError otherwise).
std::pair<Matrix, IdentityReport> chio_condense(const Matrix& m);

/// The 2x2 block rule with the order n-2 core D:
/// det M * det D = det A' * det D' - det B' * det C', where the primed
/// blocks are the four (n-1)-minors around D.
IdentityReport block_rule_check(const Matrix& m);

/// Row/column-relabelled form: det M * (M[I;J])^(n-t-1) equals the
/// signed sum over permutations of the complement rows of products of
/// bordered minors M[I,i'; J,j'], taken in listed order with the new
/// row/column at the end. The listed-order minors differ from their
/// sorted-row counterparts by one fixed parity per side, so the sum
/// carries the interleaving parity of (I, complement) and
/// (J, complement) on top of the per-permutation sign. I and J are
/// ordered lists of equal length t, 0 < t <= n-1.
IdentityReport yakovlev_check(const Matrix& m, const IndexList& rows, const IndexList& cols);

}  // namespace sylv

#endif
