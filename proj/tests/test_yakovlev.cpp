#include <doctest.h>

#include "oracle.hpp"
#include "sylv/identities.hpp"
#include "sylv/rng.hpp"

using namespace sylv;

TEST_CASE("single-permutation case n=2, t=1") {
    const Matrix m = Matrix::from_int_rows({{1, 2}, {3, 4}});
    const IdentityReport r = yakovlev_check(m, {1}, {1});
    CHECK(r.holds);
    CHECK(r.lhs == Rat(-2));  // det M * (a11)^0
    CHECK(r.rhs == Rat(-2));  // the full determinant as the single product
}

TEST_CASE("relabelled lists from the n=6 worked example") {
    const IndexList rows{1, 3, 5, 6};
    const IndexList cols{1, 2, 4, 6};
    CHECK(list_complement(rows, 6) == IndexList{2, 4});
    CHECK(list_complement(cols, 6) == IndexList{3, 5});
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        TrialRng rng(913, trial);
        const Matrix m = random_matrix(rng, 6, 6, -9, 9);
        const IdentityReport r = yakovlev_check(m, rows, cols);
        CHECK(r.holds);
        // Two-term signed expansion written out by hand.
        const Rat expected = minor_det(m, rows.append(2), cols.append(3)) * minor_det(m, rows.append(4), cols.append(5)) -
                             minor_det(m, rows.append(4), cols.append(3)) * minor_det(m, rows.append(2), cols.append(5));
        CHECK(r.rhs == expected);
    }
}

TEST_CASE("three-complement lists from the n=8 worked example") {
    const IndexList rows{2, 3, 5, 6, 8};
    const IndexList cols{2, 4, 5, 6, 7};
    CHECK(list_complement(rows, 8) == IndexList{1, 4, 7});
    CHECK(list_complement(cols, 8) == IndexList{1, 3, 8});
    TrialRng rng(914, 0);
    const Matrix m = random_matrix(rng, 8, 8, -4, 4);
    CHECK(yakovlev_check(m, rows, cols).holds);
}

TEST_CASE("leading lists reduce to the classical identity") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        TrialRng rng(915, trial);
        const int n = static_cast<int>(rng.next_in(2, 7));
        const int t = static_cast<int>(rng.next_in(1, n - 1));
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        const IdentityReport y = yakovlev_check(m, IndexList::range(1, t), IndexList::range(1, t));
        const IdentityReport s = sylvester_check(m, t);
        CHECK(y.holds);
        CHECK(y.lhs == s.lhs);
        CHECK(y.rhs == s.rhs);
    }
}

TEST_CASE("random admissible lists") {
    for (std::uint64_t trial = 0; trial < 80; ++trial) {
        TrialRng rng(916, trial);
        const int n = static_cast<int>(rng.next_in(2, 6));
        const int t = static_cast<int>(rng.next_in(1, n - 1));
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        CHECK(yakovlev_check(m, random_ordered_subset(rng, n, t), random_ordered_subset(rng, n, t)).holds);
    }
}

TEST_CASE("precondition failures") {
    const Matrix m = Matrix::from_int_rows({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(yakovlev_check(m, {1, 2}, {1}), ShapeError);
    CHECK_THROWS_AS(yakovlev_check(m, {1, 2}, {1, 2}), DomainError);  // t = n
    CHECK_THROWS_AS(yakovlev_check(m, {}, {}), DomainError);          // t = 0
    CHECK_THROWS_AS(yakovlev_check(Matrix::identity(3), {2, 1}, {1, 2}), DomainError);
    CHECK_THROWS_AS(yakovlev_check(Matrix::identity(3), {4}, {1}), BoundsError);
}
