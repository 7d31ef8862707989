#include <doctest.h>

#include "oracle.hpp"
#include "sylv/det.hpp"
#include "sylv/rng.hpp"

using namespace sylv;
using sylv::testing::fixture_3x3;
using sylv::testing::naive_det;

TEST_CASE("reference determinant frozen values") {
    CHECK(det_reference(Matrix::identity(4)) == Rat(1));
    CHECK(det_reference(Matrix::from_int_rows({{1, 2}, {3, 4}})) == Rat(-2));
    CHECK(det_reference(fixture_3x3()) == Rat(-3));  // frozen from the cofactor oracle
    CHECK(naive_det(fixture_3x3()) == Rat(-3));
    CHECK(det_reference(Matrix(0, 0, {})) == Rat(1));
    CHECK_THROWS_AS(det_reference(Matrix(2, 3, std::vector<Rat>(6))), ShapeError);
    CHECK_THROWS_AS(det_reference(Matrix::identity(11)), CapacityError);
    CHECK(det_reference(Matrix::identity(11), 11) == Rat(1));  // cap is configurable
}

TEST_CASE("reference determinant agrees with the cofactor oracle") {
    for (std::uint64_t trial = 0; trial < 120; ++trial) {
        TrialRng rng(905, trial);
        const int n = static_cast<int>(rng.next_in(1, 6));
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        CHECK(det_reference(m) == naive_det(m));
    }
}

TEST_CASE("row scaling scales the determinant") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        TrialRng rng(906, trial);
        const int n = static_cast<int>(rng.next_in(1, 5));
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        const int row = static_cast<int>(rng.next_in(1, n));
        const Rat k(rng.next_in(-6, 6));
        std::vector<Rat> cells = m.cells();
        for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(row - 1) * n + j] *= k;
        CHECK(det_reference(Matrix(n, n, std::move(cells))) == k * det_reference(m));
    }
}

TEST_CASE("minors in listed order") {
    CHECK(minor_det(fixture_3x3(), {}, {}) == Rat(1));
    CHECK(minor_det(Matrix::from_int_rows({{1, 2}, {3, 4}}), {1, 2}, {1, 2}) == Rat(-2));
    CHECK(minor_det(fixture_3x3(), {1, 2, 3}, {1, 2, 3}) == Rat(-3));
    // swapping two rows in the listed order flips the sign
    CHECK(minor_det(fixture_3x3(), {2, 1, 3}, {1, 2, 3}) == Rat(3));
    CHECK_THROWS_AS(minor_det(fixture_3x3(), {1, 2}, {1}), ShapeError);
}

TEST_CASE("bordered minors") {
    const Matrix m = fixture_3x3();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(extended_minor(m, 0, i, j) == m.at(i, j));
    CHECK(extended_minor(Matrix::from_int_rows({{1, 2}, {3, 4}}), 1, 2, 2) == Rat(-2));
    CHECK(extended_minor(m, 1, 2, 2) == Rat(-3));
    CHECK(extended_minor(m, 1, 2, 3) == Rat(-6));
    CHECK(extended_minor(m, 1, 3, 2) == Rat(-6));
    CHECK(extended_minor(m, 1, 3, 3) == Rat(-11));
    CHECK_THROWS_AS(extended_minor(m, 1, 1, 2), DomainError);
    CHECK_THROWS_AS(extended_minor(m, 3, 3, 3), DomainError);
}
