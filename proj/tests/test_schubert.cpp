#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ramify/schubert.hpp"

using namespace ramify;

namespace {

SchubertCycle cycle_of(std::initializer_list<std::pair<BoxPartition, int>> terms) {
    SchubertCycle c;
    for (const auto& [key, coef] : terms) c.coefficients[key] = coef;
    return c;
}

} // namespace

TEST_CASE("class construction validates the box") {
    CHECK(schubert_class({}, 2, 4).coefficients.size() == 1);
    CHECK(schubert_class({2, 2}, 2, 4).coefficients.count({2, 2}) == 1);
    CHECK_THROWS_AS(schubert_class({1, 1, 1}, 2, 4), std::invalid_argument); // > k parts
    CHECK_THROWS_AS(schubert_class({3}, 2, 4), std::invalid_argument);       // part > n-k
    CHECK_THROWS_AS(schubert_class({1, 2}, 2, 4), std::invalid_argument);    // increasing
    CHECK_THROWS_AS(schubert_class({0}, 2, 4), std::invalid_argument);       // zero part
}

TEST_CASE("one pieri step in the plane grassmannian of 4-space") {
    const auto empty = schubert_class({}, 2, 4);
    CHECK(pieri_sigma1(empty, 2, 4) == cycle_of({{{1}, 1}}));
    const auto s1 = schubert_class({1}, 2, 4);
    CHECK(pieri_sigma1(s1, 2, 4) == cycle_of({{{2}, 1}, {{1, 1}, 1}}));
    const auto s21 = schubert_class({2, 1}, 2, 4);
    CHECK(pieri_sigma1(s21, 2, 4) == cycle_of({{{2, 2}, 1}}));
    const auto top = schubert_class({2, 2}, 2, 4);
    CHECK(pieri_sigma1(top, 2, 4).coefficients.empty()); // already the point class
}

TEST_CASE("iterated pieri fills the box with the expected multiplicity") {
    SchubertCycle c = schubert_class({}, 2, 4);
    for (int i = 0; i < 4; ++i) c = pieri_sigma1(c, 2, 4);
    REQUIRE(c.coefficients.size() == 1);
    CHECK(c.coefficients.at({2, 2}) == 2);
}

TEST_CASE("total mass counts box-addition chains") {
    SchubertCycle c = schubert_class({}, 2, 4);
    const BigInt masses[] = {1, 1, 2, 2, 2}; // chains of length m inside the 2x2 box
    for (int m = 0; m < 5; ++m) {
        CHECK(total_mass(c) == masses[m]);
        c = pieri_sigma1(c, 2, 4);
    }
}

TEST_CASE("plucker degrees of small grassmannians") {
    CHECK(plucker_degree(2, 3) == 1);
    CHECK(plucker_degree(2, 4) == 2);
    CHECK(plucker_degree(2, 5) == 5);
    CHECK(plucker_degree(2, 6) == 14);
    CHECK(plucker_degree(3, 6) == 42);
    for (int n = 2; n <= 7; ++n) CHECK(plucker_degree(1, n) == 1);
    for (int n = 3; n <= 7; ++n) CHECK(plucker_degree(n - 1, n) == 1);
    CHECK_THROWS_AS(plucker_degree(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(plucker_degree(4, 4), std::invalid_argument);
}

TEST_CASE("duality swaps k and n-k") {
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k < n; ++k) CHECK(plucker_degree(k, n) == plucker_degree(n - k, n));
}

TEST_CASE("closed form matches the pieri count for lines in projective space") {
    const BigInt expect[] = {1, 2, 5, 14, 42, 132, 429};
    for (int n = 2; n <= 8; ++n) {
        CHECK(catalan_closed(n) == expect[n - 2]);
        CHECK(catalan_closed(n) == plucker_degree(2, n + 1));
    }
    CHECK_THROWS_AS(catalan_closed(1), std::invalid_argument);
    CHECK_THROWS_AS(catalan_closed(0), std::invalid_argument);
}

TEST_CASE("big values stay exact") {
    CHECK(catalan_closed(20) == BigInt("1767263190"));
    CHECK(catalan_closed(30) == BigInt("1002242216651368"));
    CHECK(plucker_degree(3, 7) == 462);
    CHECK(plucker_degree(3, 8) == 6006);
    CHECK(plucker_degree(4, 8) == 24024);
}
