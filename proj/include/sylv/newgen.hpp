#ifndef SYLV_NEWGEN_HPP
#define SYLV_NEWGEN_HPP

#include <vector>

#include "sylv/det.hpp"
#include "sylv/report.hpp"

namespace sylv {

/// Hard bound on any single power computed while cross-multiplying the
/// staged identity: a factor whose result would exceed this many bits
/// raises CapacityError instead of being materialised.
inline constexpr unsigned long kPowerBitCap = 1UL << 20;

/// Staging parameters for the block-bordered chain: leading block order
/// t > 0, step s in [1, min(n-t,m-t)], and q stages with
/// t + q*s = min(n,m). Construction fails when no integer q exists.
struct NewGenConfig {
    NewGenConfig(const Matrix& m, int t, int s);

    int t = 0;
    int s = 0;
    int q = 0;
};

/// Leading principal submatrices M_0..M_q of orders t, t+s, ..., min(n,m).
std::vector<Matrix> newgen_chain(const Matrix& m, int t, int s);

/// Stage block: the s x s matrix of bordered minors of the order-m_k
/// leading block, m_k = t + k*s, for 0 <= k <= q-1.
Matrix newgen_B(const Matrix& m, int t, int s, int k);

/// Staged identity relating det M_k, det M_0 and the stage blocks, in
/// cross-multiplied form. Exponents (s-1)^j follow the 0^0 = 1 and
/// empty-product conventions. k = 1 is the classical identity on M_1.
IdentityReport newgen_check(const Matrix& m, int t, int s, int k);

/// s = 2 endpoint (k = q) on a square matrix with n-t even: the
/// determinant ratio/product form whose stage blocks are all 2 x 2.
IdentityReport newgen_s2_check(const Matrix& m, int t);

/// Centre-block form: the order t+4 input has an order-t block D in
/// rows/columns 3..t+2; rows and columns are permuted to put D leading
/// (determinant preserved) and the s = q = 2 endpoint is verified as
/// det M * det B0 = det D * det B1.
IdentityReport newgen_block_check(const Matrix& m_prime, int t);

}  // namespace sylv

#endif
