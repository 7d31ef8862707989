#ifndef SYLV_DET_HPP
#define SYLV_DET_HPP

#include "sylv/matrix.hpp"

namespace sylv {

/// Largest order det_reference accepts; expansion by minors is
/// exponential, everything in this project fits well under the cap.
inline constexpr int kDetReferenceCap = 10;

/// Reference determinant by cofactor expansion (memoized over column
/// subsets, so identical to the signed Leibniz sum). This is the oracle
/// every other determinant path in the library is checked against.
Rat det_reference(const Matrix& m, int cap = kDetReferenceCap);

/// Determinant of the minor M[I;J] taken in listed order; 1 for empty
/// lists. |I| must equal |J|.
Rat minor_det(const Matrix& m, const IndexList& rows, const IndexList& cols);
Rat minor_det(const Matrix& m, const MinorSelector& sel);

/// Bordered minor: the leading t x t block extended by row i and column
/// j (so order t+1); for t = 0 this is the entry itself. Requires
/// t < i <= rows and t < j <= cols.
Rat extended_minor(const Matrix& m, int t, int i, int j);

}  // namespace sylv

#endif
