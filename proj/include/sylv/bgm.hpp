#ifndef SYLV_BGM_HPP
#define SYLV_BGM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sylv/det.hpp"
#include "sylv/report.hpp"

namespace sylv {

/// Bordered-minor family: q ordered row lists I_k and column lists J_k
/// with card(J_k) = card(I_k)+1, optional anchor rows I0 inside the
/// intersection of the I_k with card(I0) = card(union of J_k) - q, and
/// optional border rows Z (q rows, matrix width). The identity asserts
/// det B = c * M[I0 | Z rows; union J] with one constant c for every
/// choice of Z; c is never computed symbolically here, it is pinned
/// behaviourally (zero corollaries, cross-ratio constancy).
struct BgmConfig {
    BgmConfig(std::vector<IndexList> i_lists, std::vector<IndexList> j_lists,
              std::optional<IndexList> i0 = std::nullopt,
              std::vector<std::vector<Rat>> z_rows = {});

    int q = 0;
    std::vector<IndexList> i_lists;
    std::vector<IndexList> j_lists;
    IndexList i_meet;   // intersection of all I_k
    IndexList j_union;  // union of all J_k
    std::optional<IndexList> i0;
    std::vector<std::vector<Rat>> z_rows;

    IndexList i_meet_prefix(int k) const;   // intersection of I_1..I_k
    IndexList j_union_prefix(int k) const;  // union of J_1..J_k

    BgmConfig with_z(std::vector<std::vector<Rat>> z) const;
};

/// Classical specialisation: I_k = I0 = (1..t), J_k = (1..t,t+k),
/// q = n-t. Always admissible on square order-n matrices.
BgmConfig bgm_sylvester_config(int n, int t);

/// q x q matrix with b_{ij} = det of M(I_i;J_i) bordered below by Z row
/// j restricted to the columns J_i. Needs Z present and as wide as M.
Matrix bgm_build_B(const Matrix& m, const BgmConfig& cfg);

/// Asserts det B = 0 for the configured Z when one of the two vanishing
/// conditions fires (short column union; some prefix with
/// card(I-meet) > card(J-union) - k); reports "not applicable" as a
/// trivially holding 0 = 0 otherwise.
IdentityReport bgm_corollary_checks(const Matrix& m, const BgmConfig& cfg);

/// Draws `trials` random Z (entries in [-9,9], per-draw streams derived
/// from `seed`), computes (det B, bordered anchor minor) for each, and
/// verifies proportionality with a single constant through pairwise
/// cross-products det B_a * minor_b = det B_b * minor_a, plus the
/// per-draw implication minor = 0 => det B = 0. All minors vanishing is
/// reported as inconclusive, not as failure.
IdentityReport bgm_ratio_constancy(const Matrix& m, const BgmConfig& cfg, int trials, std::uint64_t seed);

}  // namespace sylv

#endif
