#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gmtkit/errors.hpp"
#include "gmtkit/multipoly.hpp"
#include "gmtkit/qseries.hpp"
#include "test_util.hpp"

using namespace gmtkit;

namespace {

// Two-variable polynomial from (ex, ey, coeff) triples.
MultiPoly p2(std::initializer_list<std::tuple<int, int, long>> terms) {
    MultiPoly p(2);
    for (const auto& [ex, ey, c] : terms) p.add_term(Monomial(std::vector<int>{ex, ey}), Rational(c));
    return p;
}

const MultiPoly X = MultiPoly::variable(2, 0);
const MultiPoly Y = MultiPoly::variable(2, 1);

}  // namespace

TEST_CASE("rational reduction and representation") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");  // denominator normalized positive
    CHECK(Rational(6, -8).denominator_str() == "4");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(42).str() == "42");
    CHECK(Rational("4876875/2") == Rational(4876875, 2));
    CHECK(Rational("-12/8").str() == "-3/2");
    CHECK(Rational("3850").to_long() == 3850);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 4) + Rational(2, 3) + Rational(3, 2) + Rational(4) == Rational(77, 12));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(5, 6) - Rational(5, 6) == Rational(0));
    CHECK(Rational::factorial(10) == Rational(3628800));
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::binomial(10, 5) == Rational(252));
    CHECK(Rational(-3, 4) < Rational(1, 4));
    Rational acc(1);
    acc.add_mul(Rational(2, 3), Rational(3, 4));
    CHECK(acc == Rational(3, 2));
    // Round trip through strings is stable.
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 10; ++d) CHECK(Rational(Rational(n, d).str()) == Rational(n, d));
}

TEST_CASE("grevlex order is a strict total order") {
    // With H0 < H1, y^2 > x*y > x^2 must NOT hold blindly; check the rule:
    // equal degree, smaller exponent in the smaller variable wins.
    Monomial x2(std::vector<int>{2, 0}), xy(std::vector<int>{1, 1}), y2(std::vector<int>{0, 2});
    CHECK(Monomial::cmp_grevlex(y2, xy) > 0);
    CHECK(Monomial::cmp_grevlex(xy, x2) > 0);
    CHECK(Monomial::cmp_grevlex(x2, y2) < 0);
    CHECK(Monomial::cmp_grevlex(xy, xy) == 0);
    // Degree dominates.
    CHECK(Monomial::cmp_grevlex(Monomial(std::vector<int>{3, 0}), y2) > 0);

    std::mt19937 rng(7);
    for (int it = 0; it < 400; ++it) {
        Monomial a = testutil::random_monomial(rng, 3, 4);
        Monomial b = testutil::random_monomial(rng, 3, 4);
        Monomial c = testutil::random_monomial(rng, 3, 4);
        int ab = Monomial::cmp_grevlex(a, b);
        CHECK(Monomial::cmp_grevlex(b, a) == -ab);
        CHECK((ab == 0) == (a == b));
        if (ab > 0 && Monomial::cmp_grevlex(b, c) > 0) CHECK(Monomial::cmp_grevlex(a, c) > 0);
        // Multiplicative monotonicity.
        if (ab > 0) CHECK(Monomial::cmp_grevlex(a.times(c), b.times(c)) > 0);
    }
}

TEST_CASE("poly_add examples") {
    CHECK(p2({{1, 0, 1}, {0, 1, 1}}) + p2({{1, 0, 1}, {0, 1, -1}}) == p2({{1, 0, 2}}));
    MultiPoly p = p2({{2, 0, 3}, {1, 1, -5}});
    CHECK(p + MultiPoly(2) == p);
    CHECK((p2({{2, 0, 1}}) + p2({{2, 0, -1}})).is_zero());
    CHECK_THROWS_AS(MultiPoly(2) += MultiPoly(3), std::invalid_argument);
}

TEST_CASE("poly_mul examples") {
    MultiPoly xpy = X + Y;
    CHECK(xpy * xpy == p2({{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
    CHECK((MultiPoly(2) * xpy).is_zero());
    // (2y)(x+y)(2x) = 4x^2y + 4xy^2, the k=2 factor product.
    CHECK((Y * Rational(2)) * xpy * (X * Rational(2)) == p2({{2, 1, 4}, {1, 2, 4}}));
}

TEST_CASE("poly_divide_exact examples") {
    CHECK(p2({{2, 1, 1}, {1, 2, 1}}).divide_exact(p2({{1, 1, 1}})) == X + Y);
    MultiPoly lhs = (X + Y) * p2({{1, 1, 4}});  // 4xy(x+y)
    CHECK(lhs.divide_exact(p2({{0, 1, 2}})) == (X + Y) * (X * Rational(2)));
    CHECK_THROWS_AS(p2({{2, 0, 1}, {0, 2, 1}}).divide_exact(X + Y), NonExactDivision);
    CHECK_THROWS_AS(X.divide_exact(MultiPoly(2)), std::invalid_argument);
}

TEST_CASE("coeff examples") {
    MultiPoly p = p2({{2, 0, 1}, {1, 1, 2}});
    CHECK(p.coeff(Monomial(std::vector<int>{1, 1})) == Rational(2));
    CHECK(p.coeff(Monomial(std::vector<int>{0, 2})) == Rational(0));
    CHECK(p2({{2, 1, 4}, {1, 2, 4}}).coeff(Monomial(std::vector<int>{2, 1})) == Rational(4));
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        MultiPoly p = testutil::random_poly(rng, 3, 5, 3);
        MultiPoly q = testutil::random_poly(rng, 3, 5, 3);
        MultiPoly r = testutil::random_poly(rng, 3, 5, 3);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
        MultiPoly p = testutil::random_nonzero_poly(rng, 3, 4, 3);
        MultiPoly q = testutil::random_nonzero_poly(rng, 3, 4, 3);
        CHECK((p * q).divide_exact(q) == p);
    }
    // Degree additivity for homogeneous inputs.
    std::mt19937 rng2(17);
    for (int it = 0; it < 30; ++it) {
        MultiPoly p = testutil::random_homogeneous(rng2, 3, 2, 3);
        MultiPoly q = testutil::random_homogeneous(rng2, 3, 3, 3);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("series recip and exp examples") {
    QSeries s(2, {Rational(1), Rational(120)});
    QSeries r = s.recip();
    CHECK(r.at(0) == Rational(1));
    CHECK(r.at(1) == Rational(-120));
    CHECK(r.at(2) == Rational(14400));

    QSeries zero(3);
    QSeries e = zero.exp();
    for (int i = 0; i <= 3; ++i) CHECK(e.at(i) == Rational(i == 0 ? 1 : 0));

    QSeries w1(2, {Rational(0), Rational(770), Rational(810225)});
    QSeries w0(2, {Rational(1), Rational(120), Rational(113400)});
    CHECK((w1 * w0.recip()).at(2) == Rational(717825));
    CHECK((w1 * w0.recip()).at(1) == Rational(770));
}

TEST_CASE("series errors and inverse property") {
    QSeries no_const(2, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(no_const.recip(), ZeroConstantTerm);
    QSeries with_const(2, {Rational(1)});
    CHECK_THROWS_AS(with_const.exp(), NonzeroConstantTerm);
    CHECK_THROWS_AS(QSeries(2) + QSeries(3), std::invalid_argument);

    std::mt19937 rng(19);
    for (int it = 0; it < 40; ++it) {
        QSeries a(6);
        a.set(0, Rational(1));  // keep the constant term invertible
        for (int i = 1; i <= 6; ++i) a.set(i, testutil::random_rational(rng));
        QSeries prod = a * a.recip();
        for (int i = 0; i <= 6; ++i) CHECK(prod.at(i) == Rational(i == 0 ? 1 : 0));
        // exp turns sums into products.
        QSeries b(6);
        for (int i = 1; i <= 6; ++i) b.set(i, testutil::random_rational(rng));
        QSeries a0 = a;
        a0.set(0, Rational(0));
        CHECK((a0 + b).exp() == a0.exp() * b.exp());
    }
}
