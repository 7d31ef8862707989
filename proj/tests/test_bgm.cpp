#include <doctest.h>

#include "oracle.hpp"
#include "sylv/bgm.hpp"
#include "sylv/det.hpp"
#include "sylv/rng.hpp"

using namespace sylv;

namespace {

// Worked 6x7 family whose constant exists but has no closed form.
BgmConfig example_one(std::vector<std::vector<Rat>> z = {}) {
    return BgmConfig({IndexList{2, 3, 4}, IndexList{2, 4}, IndexList{1, 2, 4}},
                     {IndexList{2, 3, 4, 5}, IndexList{2, 3, 4}, IndexList{2, 3, 4, 7}},
                     IndexList{2, 4}, std::move(z));
}

// Worked 6x7 family with a column union shorter than q.
BgmConfig example_two(std::vector<std::vector<Rat>> z = {}) {
    return BgmConfig({IndexList{1, 4}, IndexList{3, 4}, IndexList{2, 4}, IndexList{4, 5}, IndexList{4, 6}},
                     {IndexList{1, 2, 4}, IndexList{1, 4, 7}, IndexList{1, 2, 7}, IndexList{1, 4, 7},
                      IndexList{1, 2, 7}},
                     std::nullopt, std::move(z));
}

std::vector<std::vector<Rat>> draw_z(TrialRng& rng, int q, int m) {
    std::vector<std::vector<Rat>> z;
    for (int k = 0; k < q; ++k) z.push_back(random_row(rng, m, -9, 9));
    return z;
}

}  // namespace

TEST_CASE("derived families of the worked examples") {
    const BgmConfig one = example_one();
    CHECK(one.i_meet == IndexList{2, 4});
    CHECK(one.j_union == IndexList{2, 3, 4, 5, 7});
    CHECK(one.i0 == IndexList{2, 4});

    const BgmConfig two = example_two();
    CHECK(two.i_meet == IndexList{4});
    CHECK(two.j_union == IndexList{1, 2, 4, 7});
    CHECK(static_cast<int>(two.j_union.size()) < two.q);
}

TEST_CASE("bordered blocks are assembled row list by border row") {
    TrialRng rng(921, 0);
    const Matrix m = random_matrix(rng, 6, 7, -9, 9);
    const auto z = draw_z(rng, 3, 7);
    const Matrix b = bgm_build_B(m, example_one(z));
    REQUIRE(b.rows() == 3);
    // Spot-check one entry against a hand-built bordered determinant:
    // rows I_2 = (2,4), border row z_3 restricted to J_2 = (2,3,4).
    std::vector<Rat> cells = {m.at(2, 2), m.at(2, 3), m.at(2, 4), m.at(4, 2), m.at(4, 3), m.at(4, 4),
                              z[2][1],    z[2][2],    z[2][3]};
    CHECK(b.at(2, 3) == det_reference(Matrix(3, 3, std::move(cells))));
}

TEST_CASE("classical family with matrix rows or unit rows as borders") {
    TrialRng rng(935, 0);
    const int n = 5, t = 2, q = 3;
    const Matrix m = random_matrix(rng, n, n, -9, 9);
    const BgmConfig cfg = bgm_sylvester_config(n, t);

    // Border rows taken from M itself reproduce the bordered minors of
    // the classical block (transposed indexing: row j of Z, column list i).
    std::vector<std::vector<Rat>> m_rows;
    for (int k = 1; k <= q; ++k) {
        std::vector<Rat> row;
        for (int j = 1; j <= n; ++j) row.push_back(m.at(t + k, j));
        m_rows.push_back(std::move(row));
    }
    const Matrix b_m = bgm_build_B(m, cfg.with_z(m_rows));
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) CHECK(b_m.at(i, j) == extended_minor(m, t, t + j, t + i));

    // Unit border rows turn B into the leading minor times the identity.
    std::vector<std::vector<Rat>> unit_rows;
    for (int k = 1; k <= q; ++k) {
        std::vector<Rat> row(static_cast<std::size_t>(n), Rat(0));
        row[static_cast<std::size_t>(t + k - 1)] = Rat(1);
        unit_rows.push_back(std::move(row));
    }
    const Matrix b_unit = bgm_build_B(m, cfg.with_z(unit_rows));
    const Rat leading = minor_det(m, IndexList::range(1, t), IndexList::range(1, t));
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) CHECK(b_unit.at(i, j) == (i == j ? leading : Rat(0)));
}

TEST_CASE("single-pair family gives a one-by-one block") {
    TrialRng rng(922, 0);
    const Matrix m = random_matrix(rng, 3, 3, -9, 9);
    const auto z = draw_z(rng, 1, 3);
    const BgmConfig cfg({IndexList{1}}, {IndexList{1, 2}}, std::nullopt, z);
    const Matrix b = bgm_build_B(m, cfg);
    REQUIRE(b.rows() == 1);
    const Matrix bordered(2, 2, {m.at(1, 1), m.at(1, 2), z[0][0], z[0][1]});
    CHECK(b.at(1, 1) == det_reference(bordered));
}

TEST_CASE("short column union forces det B = 0 for every Z") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        TrialRng rng(923, trial);
        const Matrix m = random_matrix(rng, 6, 7, -9, 9);
        const auto z = draw_z(rng, 5, 7);
        const IdentityReport r = bgm_corollary_checks(m, example_two(z));
        CHECK(r.holds);
        CHECK(r.lhs == Rat(0));
    }
}

TEST_CASE("repeated singleton columns force det B = 0") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        TrialRng rng(924, trial);
        const Matrix m = random_matrix(rng, 4, 4, -9, 9);
        const auto z = draw_z(rng, 2, 4);
        const BgmConfig cfg({IndexList{}, IndexList{}}, {IndexList{3}, IndexList{3}}, std::nullopt, z);
        const IdentityReport r = bgm_corollary_checks(m, cfg);
        CHECK(r.holds);
        CHECK(r.lhs == Rat(0));
    }
}

TEST_CASE("prefix cardinality condition zeroes the constant") {
    // I-meet of the first two lists keeps two rows while the column
    // union only grows to three: card(I-meet) = 2 > 3 - 2.
    TrialRng rng(925, 0);
    const Matrix m = random_matrix(rng, 5, 5, -9, 9);
    const auto z = draw_z(rng, 2, 5);
    const BgmConfig cfg({IndexList{1, 2}, IndexList{1, 2}}, {IndexList{1, 2, 3}, IndexList{1, 2, 3}},
                        std::nullopt, z);
    const IdentityReport r = bgm_corollary_checks(m, cfg);
    CHECK(r.holds);
    CHECK(r.lhs == Rat(0));
    CHECK(r.notes.find("prefix") != std::string::npos);
}

TEST_CASE("classical lists: no corollary applies") {
    TrialRng rng(926, 0);
    const Matrix m = random_matrix(rng, 5, 5, -9, 9);
    BgmConfig cfg = bgm_sylvester_config(5, 2).with_z(draw_z(rng, 3, 5));
    const IdentityReport r = bgm_corollary_checks(m, cfg);
    CHECK(r.holds);
    CHECK(r.notes == "not applicable");
}

TEST_CASE("cross-ratio constancy on the worked family") {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        TrialRng rng(927, trial);
        const Matrix m = random_matrix(rng, 6, 7, -9, 9);
        const IdentityReport r = bgm_ratio_constancy(m, example_one(), 5, 1000 + trial);
        CHECK(r.holds);
    }
}

TEST_CASE("classical lists recover the leading-minor power") {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        TrialRng rng(928, trial);
        const int n = static_cast<int>(rng.next_in(3, 6));
        const int t = static_cast<int>(rng.next_in(1, n - 1));
        const int q = n - t;
        const Matrix m = random_matrix(rng, n, n, -9, 9);
        const BgmConfig cfg = bgm_sylvester_config(n, t);
        const Rat leading = minor_det(m, IndexList::range(1, t), IndexList::range(1, t));
        const Rat c = pow(leading, static_cast<unsigned long>(q - 1));
        for (int d = 0; d < 4; ++d) {
            TrialRng zrng(2000 + trial, static_cast<std::uint64_t>(d));
            const auto z = draw_z(zrng, q, n);
            const Rat det_b = det_reference(bgm_build_B(m, cfg.with_z(z)));
            // Anchor minor: rows (1..t) of M over the q border rows.
            std::vector<Rat> cells;
            for (int i = 1; i <= t; ++i)
                for (int j = 1; j <= n; ++j) cells.push_back(m.at(i, j));
            for (int k = 0; k < q; ++k)
                for (int j = 1; j <= n; ++j) cells.push_back(z[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)]);
            const Rat minor = det_reference(Matrix(n, n, std::move(cells)));
            CHECK(det_b == c * minor);
        }
        CHECK(bgm_ratio_constancy(m, cfg, 5, 3000 + trial).holds);
    }
}

TEST_CASE("zeroed anchor rows make every draw vanish") {
    TrialRng rng(929, 0);
    Matrix m = random_matrix(rng, 6, 7, -9, 9);
    std::vector<Rat> cells = m.cells();
    for (int j = 0; j < 7; ++j) {
        cells[static_cast<std::size_t>(1) * 7 + j] = Rat(0);  // row 2
        cells[static_cast<std::size_t>(3) * 7 + j] = Rat(0);  // row 4
    }
    m = Matrix(6, 7, std::move(cells));
    const IdentityReport r = bgm_ratio_constancy(m, example_one(), 5, 4000);
    CHECK(r.holds);
    CHECK(r.notes.find("inconclusive") != std::string::npos);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(BgmConfig({IndexList{1}}, {IndexList{1}}), ConfigError);  // lengths must differ by one
    CHECK_THROWS_AS(BgmConfig({IndexList{1}}, {IndexList{1, 2}}, IndexList{2}), ConfigError);  // anchor outside meet
    CHECK_THROWS_AS(BgmConfig({IndexList{}}, {IndexList{3}}, IndexList{1}), ConfigError);      // anchor too long
    CHECK_THROWS_AS(bgm_build_B(Matrix::identity(3), BgmConfig({IndexList{1}}, {IndexList{1, 2}})), ConfigError);
    const std::vector<std::vector<Rat>> short_z = {{Rat(1)}};
    CHECK_THROWS_AS(bgm_build_B(Matrix::identity(3), BgmConfig({IndexList{1}}, {IndexList{1, 2}}, std::nullopt, short_z)),
                    ShapeError);
}
