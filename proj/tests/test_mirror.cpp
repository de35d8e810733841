#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmtkit/mirror.hpp"
#include "gmtkit/quasimap.hpp"

using namespace gmtkit;

TEST_CASE("w0 coefficients (kd)!/(d!)^k") {
    QSeries w0 = w0_series(5, 3);
    CHECK(w0.at(0) == Rational(1));
    CHECK(w0.at(1) == Rational(120));
    CHECK(w0.at(2) == Rational(113400));
    CHECK(w0.at(3) == Rational::factorial(15) / Rational::pow(Rational(6), 5));

    QSeries ones = w0_series(1, 6);
    for (int d = 0; d <= 6; ++d) CHECK(ones.at(d) == Rational(1));

    QSeries central = w0_series(2, 4);
    CHECK(central.at(1) == Rational(2));
    CHECK(central.at(2) == Rational(6));
    CHECK(central.at(3) == Rational(20));
    CHECK(central.at(4) == Rational(70));
}

TEST_CASE("w1 double-sum coefficients") {
    QSeries w1 = w1_series(5, 2);
    CHECK(w1.at(0) == Rational(0));
    // inner sum at d=1: 1/4 + 2/3 + 3/2 + 4 = 77/12
    CHECK(w1.at(1) == Rational(120) * Rational(77, 12));
    CHECK(w1.at(1) == Rational(770));
    // d=2 inner sum: 77/12 + 3601/504 - 77/12 ... total 3601/504
    CHECK(w1.at(2) == Rational(113400) * Rational(3601, 504));
    CHECK(w1.at(2) == Rational(810225));

    QSeries zero = w1_series(1, 5);
    for (int d = 0; d <= 5; ++d) CHECK(zero.at(d) == Rational(0));
}

TEST_CASE("mirror map series") {
    MirrorData md = mirror_map_series(5, 3);
    CHECK(md.tmap.at(0) == Rational(0));
    CHECK(md.tmap.at(1) == Rational(770));
    CHECK(md.tmap.at(2) == Rational(717825));
    // tmap * w0 = w1 exactly through the order.
    CHECK(md.tmap * md.w0 == md.w1);

    MirrorData trivial = mirror_map_series(1, 4);
    for (int d = 0; d <= 4; ++d) CHECK(trivial.tmap.at(d) == Rational(0));
}

TEST_CASE("w-mirror identity for the quintic through d = 2") {
    MirrorIdentityReport rep = check_w_mirror_identity(5, 2);
    CHECK(rep.all_ok);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].ring_value == Rational(3850));
    CHECK(rep.rows[1].ring_value == Rational(3589125));
    CHECK_NOTHROW(require_w_mirror_identity(5, 2));
    CHECK_THROWS_AS(check_w_mirror_identity(2, 1), std::invalid_argument);
}

TEST_CASE("series route to quintic Gromov-Witten invariants") {
    std::map<int, Rational> w11;
    for (int d = 1; d <= 2; ++d) w11[d] = w_two_point(5, 5, d, 1, 1);
    auto gw = cy_series_route(5, w11, 2);
    CHECK(gw.at(1) == Rational(2875));
    CHECK(gw.at(2) == Rational(4876875, 2));

    // String-class pair (2, 0): w equals k t(x), so every invariant is 0.
    std::map<int, Rational> w20;
    for (int d = 1; d <= 2; ++d) w20[d] = w_two_point(5, 5, d, 2, 0);
    auto zero = cy_series_route(5, w20, 2);
    CHECK(zero.at(1) == Rational(0));
    CHECK(zero.at(2) == Rational(0));

    CHECK_THROWS_AS(cy_series_route(5, {}, 2), std::invalid_argument);
}
