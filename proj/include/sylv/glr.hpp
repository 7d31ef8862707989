#ifndef SYLV_GLR_HPP
#define SYLV_GLR_HPP

#include <vector>

#include "sylv/det.hpp"
#include "sylv/report.hpp"

namespace sylv {

/// Column-list chain for the chained-minor identity: q ordered lists of
/// length t+1 whose consecutive intersections S_k all have length t.
/// The sign factor depends only on the lists: it is 0 when the union is
/// short of t+q, otherwise (-1)^(mu + w) with
/// mu = q(q-1)/2 + sum_k (pivot_k - position_k), where pivot_k is the
/// one element of J_k outside S_{k-1} (outside S_1 for k = 1), and w
/// the inversion count of the pivot sequence (p_1,...,p_q). Chains
/// whose pivots run in increasing order (the classical one included)
/// have w = 0; for the others the w term is what keeps det B and the
/// product side equal, checked exhaustively over the small-chain space
/// in the tests. A single-list chain (q = 1) has no S_1; its sign is
/// fixed to +1, forced by the reduction to det B = det M.
struct GlrConfig {
    GlrConfig(int t, std::vector<IndexList> j_lists);

    int t = 0;
    int q = 0;
    std::vector<IndexList> j_lists;
    std::vector<IndexList> overlaps;  // S_1..S_{q-1}
    IndexList j_union;
    std::vector<int> pivots;           // element of J_k outside the neighbouring overlap
    std::vector<int> pivot_positions;  // its 1-based position h_k inside J_k
    long mu = 0;
    long pivot_inversions = 0;  // inversions of (p_1,...,p_q)
    int sign = 0;               // -1, 0, +1
};

struct GlrSign {
    int c = 0;
    long mu = 0;
};

GlrSign glr_sign(const GlrConfig& cfg);

/// det B = c * det M * prod_k M[1..t; S_k] with b_{ik} = M[1..t,t+i; J_k].
/// M must be square of order t+q.
IdentityReport glr_check(const Matrix& m, const GlrConfig& cfg);

}  // namespace sylv

#endif
