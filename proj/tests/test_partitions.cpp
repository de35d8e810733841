#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "gmtkit/multipoly.hpp"
#include "gmtkit/partitions.hpp"

using namespace gmtkit;

namespace {

// Independent oracle: p(n, k) = number of partitions of n into parts <= k.
long partition_count(int n) {
    const int K = n;
    std::vector<std::vector<long>> p(static_cast<size_t>(n) + 1,
                                     std::vector<long>(static_cast<size_t>(K) + 1, 0));
    for (int k = 0; k <= K; ++k) p[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= K; ++k) {
            p[static_cast<size_t>(m)][static_cast<size_t>(k)] =
                p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)] +
                (m >= k ? p[static_cast<size_t>(m - k)][static_cast<size_t>(k)] : 0);
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(K)];
}

}  // namespace

TEST_CASE("enumeration examples") {
    auto p1 = enumerate_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].parts == std::vector<int>{1});

    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts == std::vector<int>{1, 1, 1});
    CHECK(p3[1].parts == std::vector<int>{1, 2});
    CHECK(p3[2].parts == std::vector<int>{3});

    CHECK(enumerate_partitions(5).size() == 7);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("counts match the restricted-partition recurrence up to 30") {
    for (int g = 1; g <= 30; ++g)
        CHECK(static_cast<long>(enumerate_partitions(g).size()) == partition_count(g));
}

TEST_CASE("multiplicity and symmetry factor") {
    Partition s{{1, 1, 2}};
    CHECK(multiplicity(1, s) == 2);
    CHECK(multiplicity(2, s) == 1);
    CHECK(multiplicity(3, s) == 0);
    CHECK(multiplicity(2, Partition{{2, 2, 2}}) == 3);

    CHECK(symmetry_factor(Partition{{1, 1, 1}}) == Rational(1, 6));
    CHECK(symmetry_factor(Partition{{1, 2}}) == Rational(1));
    CHECK(symmetry_factor(Partition{{1, 1, 2, 2, 2}}) == Rational(1, 12));
}

TEST_CASE("partition structure invariants") {
    for (int g = 1; g <= 12; ++g) {
        auto all = enumerate_partitions(g);
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].parts < all[i + 1].parts);
        for (const Partition& sigma : all) {
            CHECK(sigma.sum() == g);
            CHECK(sigma.length() >= 1);
            int weighted = 0, total = 0;
            for (int i = 1; i <= g; ++i) {
                weighted += i * multiplicity(i, sigma);
                total += multiplicity(i, sigma);
            }
            CHECK(weighted == g);
            CHECK(total == sigma.length());
            for (size_t j = 0; j + 1 < sigma.parts.size(); ++j)
                CHECK(sigma.parts[j] <= sigma.parts[j + 1]);
        }
    }
}

TEST_CASE("exponential formula: [y^g] exp(sum x_i y^i) = sum_sigma S(sigma) prod x_{g_j}") {
    const int G = 8;
    // Series in y with MultiPoly coefficients in x_1..x_G, truncated at y^G;
    // exp via the ODE recurrence n e_n = sum i a_i e_{n-i}.
    std::vector<MultiPoly> a(static_cast<size_t>(G) + 1, MultiPoly(G));
    for (int i = 1; i <= G; ++i) a[static_cast<size_t>(i)] = MultiPoly::variable(G, i - 1);
    std::vector<MultiPoly> e(static_cast<size_t>(G) + 1, MultiPoly(G));
    e[0] = MultiPoly::constant(G, Rational(1));
    for (int n = 1; n <= G; ++n) {
        MultiPoly acc(G);
        for (int i = 1; i <= n; ++i) acc += (a[static_cast<size_t>(i)] * Rational(i)) * e[static_cast<size_t>(n - i)];
        e[static_cast<size_t>(n)] = acc * Rational(1, n);
    }
    for (int g = 1; g <= G; ++g) {
        MultiPoly expected(G);
        for (const Partition& sigma : enumerate_partitions(g)) {
            MultiPoly mono = MultiPoly::constant(G, symmetry_factor(sigma));
            for (int part : sigma.parts) mono = mono * MultiPoly::variable(G, part - 1);
            expected += mono;
        }
        CHECK(e[static_cast<size_t>(g)] == expected);
    }
}
