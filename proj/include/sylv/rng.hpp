#ifndef SYLV_RNG_HPP
#define SYLV_RNG_HPP

#include <cstdint>
#include <vector>

#include "sylv/index_list.hpp"
#include "sylv/matrix.hpp"

namespace sylv {

/// Deterministic per-trial generator. Trial k starts from
/// master + k * 0x9E3779B97F4A7C15 and then runs the xorshift-star
/// recurrence (x ^= x>>12; x ^= x<<25; x ^= x>>27; out = x * M). The
/// recurrence is pinned so every front end reproduces the same streams;
/// values are mapped to ranges through the high output bits.
class TrialRng {
  public:
    TrialRng(std::uint64_t master, std::uint64_t trial)
        : state_(master + trial * 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform in [0, bound); bound >= 1.
    std::uint32_t next_below(std::uint32_t bound) {
        if (bound == 0) throw DomainError("next_below needs a positive bound");
        return static_cast<std::uint32_t>(((next() >> 32) * bound) >> 32);
    }

    /// Uniform in [lo, hi].
    long next_in(long lo, long hi) {
        if (lo > hi) throw DomainError("empty range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        return lo + static_cast<long>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

/// Row-major integer matrix with entries uniform in [lo, hi].
Matrix random_matrix(TrialRng& rng, int rows, int cols, long lo, long hi);

/// One integer row of length m with entries uniform in [lo, hi].
std::vector<Rat> random_row(TrialRng& rng, int m, long lo, long hi);

/// Ordered k-subset of (1..universe) by selection sampling.
IndexList random_ordered_subset(TrialRng& rng, int universe, int k);

}  // namespace sylv

#endif
