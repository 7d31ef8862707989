#include <doctest.h>

#include "oracle.hpp"
#include "sylv/identities.hpp"
#include "sylv/mulders.hpp"
#include "sylv/rng.hpp"

using namespace sylv;
using sylv::testing::fixture_3x3;

TEST_CASE("pair-class determinants") {
    const Matrix m2 = Matrix::from_int_rows({{1, 2}, {3, 4}});
    CHECK(mulders_pair_det(m2, PairClass()) == Rat(1));
    CHECK(mulders_pair_det(m2, PairClass({{1, 2}, {2, 2}})) == Rat(0));  // repeated column
    CHECK(mulders_pair_det(m2, PairClass({{1, 1}, {2, 2}})) == Rat(-2));
    // Pair order is immaterial: rows and columns permute together.
    CHECK(mulders_pair_det(m2, PairClass({{2, 2}, {1, 1}})) == Rat(-2));
    CHECK_THROWS_AS(mulders_pair_det(m2, PairClass({{3, 1}})), BoundsError);
}

TEST_CASE("updated-class table") {
    const Matrix m2 = Matrix::from_int_rows({{1, 2}, {3, 4}});
    CHECK(mulders_tilde(m2, 1, 1, 2) == Rat(2));  // column replaced: det [a12]

    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        TrialRng rng(930, trial);
        const int n = static_cast<int>(rng.next_in(2, 6));
        const int cols = static_cast<int>(rng.next_in(n, 7));
        const Matrix m = random_matrix(rng, n, cols, -9, 9);
        const int t = static_cast<int>(rng.next_in(0, n));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= cols; ++j) {
                const Rat v = mulders_tilde(m, t, i, j);
                if (i > t && j > t) {
                    CHECK(v == extended_minor(m, t, i, j));
                } else if (j <= t && i > t) {
                    CHECK(v == Rat(0));
                } else if (i <= t && j <= t && i != j) {
                    CHECK(v == Rat(0));
                } else if (i <= t && i == j) {
                    CHECK(v == minor_det(m, IndexList::range(1, t), IndexList::range(1, t)));
                } else {
                    // i <= t < j: column i of the leading block replaced by column j.
                    std::vector<int> cl;
                    for (int k = 1; k <= t; ++k) cl.push_back(k == i ? j : k);
                    CHECK(v == minor_det(m, IndexList::range(1, t), IndexList(cl)));
                }
            }
        }
    }
}

TEST_CASE("seven-by-eight worked example, overlapping update") {
    TrialRng rng(931, 0);
    const Matrix m = random_matrix(rng, 7, 8, -9, 9);
    // Class (1,1)..(5,5) <- (4,5),(5,6),(6,7): rows 1..6, columns 1,2,3,5,6,7.
    const PairClass updated = PairClass::diagonal(5).arrow(PairClass({{4, 5}, {5, 6}, {6, 7}}));
    CHECK(updated == PairClass({{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 6}, {6, 7}}));
    CHECK(mulders_pair_det(m, updated) == minor_det(m, IndexList::range(1, 6), {1, 2, 3, 5, 6, 7}));

    // The tilde grid of the example, entry by entry.
    CHECK(mulders_tilde(m, 5, 4, 5) == Rat(0));
    CHECK(mulders_tilde(m, 5, 4, 6) == minor_det(m, IndexList::range(1, 5), {1, 2, 3, 6, 5}));
    CHECK(mulders_tilde(m, 5, 4, 7) == minor_det(m, IndexList::range(1, 5), {1, 2, 3, 7, 5}));
    CHECK(mulders_tilde(m, 5, 5, 5) == minor_det(m, IndexList::range(1, 5), IndexList::range(1, 5)));
    CHECK(mulders_tilde(m, 5, 5, 6) == minor_det(m, IndexList::range(1, 5), {1, 2, 3, 4, 6}));
    CHECK(mulders_tilde(m, 5, 5, 7) == minor_det(m, IndexList::range(1, 5), {1, 2, 3, 4, 7}));
    CHECK(mulders_tilde(m, 5, 6, 5) == Rat(0));
    CHECK(mulders_tilde(m, 5, 6, 6) == minor_det(m, IndexList::range(1, 6), IndexList::range(1, 6)));
    CHECK(mulders_tilde(m, 5, 6, 7) == minor_det(m, IndexList::range(1, 6), {1, 2, 3, 4, 5, 7}));

    const IdentityReport r = mulders_check(m, 5, 3, 4, 3);
    CHECK(r.holds);
}

TEST_CASE("seven-by-eight worked example, interior update is 0 = 0") {
    TrialRng rng(932, 0);
    const Matrix m = random_matrix(rng, 7, 8, -9, 9);
    // Class (1,1)..(6,6) <- (3,4),(4,5),(5,6) repeats column 6.
    const PairClass updated = PairClass::diagonal(6).arrow(PairClass({{3, 4}, {4, 5}, {5, 6}}));
    CHECK(updated.column_repeats());
    CHECK(mulders_pair_det(m, updated) == Rat(0));
    const IdentityReport r = mulders_check(m, 6, 2, 3, 3);
    CHECK(r.holds);
    CHECK(r.lhs == Rat(0));
    CHECK(r.rhs == Rat(0));
}

TEST_CASE("corner update reduces to the classical identity") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        TrialRng rng(933, trial);
        const int n = static_cast<int>(rng.next_in(2, 7));
        const int t = static_cast<int>(rng.next_in(0, n - 1));
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        const IdentityReport mu = mulders_check(m, t, t, t, n - t);
        const IdentityReport sy = sylvester_check(m, t);
        CHECK(mu.holds);
        CHECK(mu.lhs == sy.lhs);
        CHECK(mu.rhs == sy.rhs);
    }
}

TEST_CASE("random admissible parameters") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        TrialRng rng(934, trial);
        const int n = static_cast<int>(rng.next_in(1, 7));
        const int cols = static_cast<int>(rng.next_in(1, 8));
        const Matrix m = random_matrix(rng, n, cols, -9, 9);
        const int bound = n < cols ? n : cols;
        const int t = static_cast<int>(rng.next_in(0, bound));
        const int p = static_cast<int>(rng.next_in(0, t));
        const int q = static_cast<int>(rng.next_in(0, t));
        const int s_max = (n - p) < (cols - q) ? (n - p) : (cols - q);
        if (s_max < 1) continue;
        const int s = static_cast<int>(rng.next_in(1, s_max));
        CHECK(mulders_check(m, t, p, q, s).holds);
    }
}

TEST_CASE("rational entries flow through the class calculus") {
    TrialRng rng(948, 0);
    std::vector<Rat> cells;
    for (int k = 0; k < 30; ++k) cells.push_back(Rat(Int(rng.next_in(-9, 9)), Int(rng.next_in(1, 5))));
    const Matrix m(5, 6, std::move(cells));
    CHECK(mulders_check(m, 3, 1, 2, 2).holds);
    CHECK(mulders_check(m, 4, 4, 4, 1).holds);
}

TEST_CASE("parameter validation") {
    const Matrix m = Matrix::identity(3);
    CHECK_THROWS_AS(mulders_check(m, 4, 0, 0, 1), DomainError);
    CHECK_THROWS_AS(mulders_check(m, 2, 3, 0, 1), DomainError);
    CHECK_THROWS_AS(mulders_check(m, 2, 0, 0, 4), DomainError);
    CHECK_THROWS_AS(mulders_tilde(m, 4, 1, 1), DomainError);
    CHECK_THROWS_AS(mulders_tilde(m, 1, 4, 1), BoundsError);
}
