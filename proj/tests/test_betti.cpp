#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <geoiter/betti.hpp>
#include <geoiter/errors.hpp>

using namespace geoiter;

TEST_CASE("manifold classes validate their parameters") {
    ManifoldClass s = ManifoldClass::make(4, 2);
    CHECK(s.D() == 10);
    CHECK(s.dim() == 8);
    CHECK(ManifoldClass::make(2, 1).D() == 2);
    CHECK(ManifoldClass::make(3, 1).dim() == 3);
    CHECK_THROWS_AS(ManifoldClass::make(1, 1), ValidationError);
    CHECK_THROWS_AS(ManifoldClass::make(4, 0), ValidationError);
    CHECK_THROWS_AS(ManifoldClass::make(3, 2), ValidationError); // odd d forces h = 1
}

TEST_CASE("mean-index-identity coefficients") {
    CHECK(coefficient_B(ManifoldClass::make(2, 1)) == Rat(-1));
    CHECK(coefficient_B(ManifoldClass::make(3, 1)) == Rat(1));
    CHECK(coefficient_B(ManifoldClass::make(2, 2)) == Rat(-3, 2));
    CHECK(coefficient_B(ManifoldClass::make(4, 2)) == Rat(-6, 5));
    CHECK(coefficient_B(ManifoldClass::make(5, 1)) == Rat(3, 4));
}

TEST_CASE("frozen Betti tables") {
    ManifoldClass s2 = ManifoldClass::make(2, 1);
    long long expect_s2[10] = {0, 1, 0, 2, 0, 2, 0, 2, 0, 2};
    for (long long q = 0; q < 10; ++q) CHECK(betti_number(s2, q) == expect_s2[q]);

    ManifoldClass s3 = ManifoldClass::make(3, 1);
    long long expect_s3[10] = {0, 0, 1, 0, 2, 0, 2, 0, 2, 0};
    for (long long q = 0; q < 10; ++q) CHECK(betti_number(s3, q) == expect_s3[q]);

    ManifoldClass s5 = ManifoldClass::make(5, 1);
    long long expect_s5[17] = {0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2};
    for (long long q = 0; q < 17; ++q) CHECK(betti_number(s5, q) == expect_s5[q]);

    ManifoldClass proj = ManifoldClass::make(4, 2);
    long long expect_proj[22] = {0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 0,
                                 2, 0, 3, 0, 2, 0, 3, 0, 2, 0, 2};
    for (long long q = 0; q < 22; ++q) CHECK(betti_number(proj, q) == expect_proj[q]);

    CHECK(betti_number(s2, -1) == 0);
    CHECK(betti_number(s2, -100) == 0);
}

TEST_CASE("the two even-dimensional sphere derivations agree") {
    for (int d : {2, 4, 6, 8}) {
        ManifoldClass mc = ManifoldClass::make(d, 1);
        for (long long q = 0; q <= 500; ++q)
            CHECK(betti_number(mc, q) == sphere_betti_number(d, q));
    }
    CHECK(sphere_betti_number(2, 3) == 2);
    CHECK(sphere_betti_number(4, 9) == 2); // 9 = 3*(d-1)
    CHECK(sphere_betti_number(4, 11) == 1);
    CHECK_THROWS_AS(sphere_betti_number(3, 4), Error);
    CHECK_THROWS_AS(sphere_betti_number(0, 4), Error);
}

TEST_CASE("exceptional-set membership") {
    ManifoldClass proj = ManifoldClass::make(4, 2); // D = 10, offsets j*4 with j <= 1
    CHECK(omega_member(proj, 13));  // 13 - 3 = 10 = 1*10 + 0*4
    CHECK(omega_member(proj, 17));  // 14 = 10 + 4
    CHECK(!omega_member(proj, 7));  // below the first period
    CHECK(!omega_member(proj, 21)); // 18 needs j = 2 > h-1
    CHECK(!omega_member(proj, 12)); // even degrees never qualify

    // The narrower printed range drops the j = 0 column.
    CHECK(!omega_member(proj, 13, true));
    CHECK(omega_member(proj, 17, true));

    CHECK_THROWS_AS(omega_member(ManifoldClass::make(3, 1), 5), Error);
}

TEST_CASE("epsilon terms stay inside their claimed ranges") {
    for (int d : {3, 5, 7}) {
        ManifoldClass mc = ManifoldClass::make(d, 1);
        Rat upper = Rat(3, 2) - Rat(1, 2 * (d - 1));
        for (long long k = d - 1; k <= 400; ++k) {
            Rat e = epsilon_term(mc, k); // throws RangeClaimViolated on failure
            CHECK(e >= 0);
            CHECK(e < upper);
        }
    }
    for (int d : {2, 4, 6}) {
        for (int h = 1; h <= 3; ++h) {
            ManifoldClass mc = ManifoldClass::make(d, h);
            for (long long k = mc.dim() - 1; k <= 400; ++k) {
                Rat e = epsilon_term(mc, k);
                CHECK(e > -Rat(h + 2));
                CHECK(e < 1);
                if (h == 1) {
                    CHECK(e > -2);
                    CHECK(e <= 0);
                }
            }
        }
    }
    CHECK_THROWS_AS(epsilon_term(ManifoldClass::make(4, 2), 2), Error); // below d-1
}

TEST_CASE("partial sums match their closed forms") {
    for (auto [d, h] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {4, 2}, {6, 3}}) {
        ManifoldClass mc = ManifoldClass::make(d, h);
        SumCheckReport rep = alternating_sum_check(mc, 300);
        CHECK(rep.all_pass());
        CHECK(rep.rows.size() == static_cast<size_t>(300 - (mc.dim() - 1) + 1));
        for (const SumCheckRow& row : rep.rows) {
            CHECK(row.equal);
            CHECK(row.bounded);
            CHECK(row.direct == row.closed);
        }
    }
    CHECK_THROWS_AS(alternating_sum_check(ManifoldClass::make(4, 2), 3), Error);
}
