#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ramify/groebner.hpp"
#include "ramify/multipoly.hpp"
#include "ramify/rng.hpp"

using namespace ramify;

namespace {

bool basis_contains(const GroebnerBasis& gb, const MultiPoly& f) {
    return std::any_of(gb.elems.begin(), gb.elems.end(),
                       [&](const MultiPoly& g) { return g == f; });
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = lcm(f.lm(), g.lm());
    const Fp one = one_like(f.lc());
    return f.monic().mul_term(quotient(l, f.lm()), one) -
           g.monic().mul_term(quotient(l, g.lm()), one);
}

} // namespace

TEST_CASE("principal ideal basis is the monic generator") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "3*x^2-3")}));
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == parse_poly(ring, "x^2-1"));
}

TEST_CASE("linear system reduces to solved form") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x-y"), parse_poly(ring, "y-1")}));
    REQUIRE(gb.elems.size() == 2);
    CHECK(basis_contains(gb, parse_poly(ring, "x-1")));
    CHECK(basis_contains(gb, parse_poly(ring, "y-1")));
}

TEST_CASE("unit ideal collapses to one") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x*y-1"), parse_poly(ring, "x^2")}));
    REQUIRE(gb.elems.size() == 1);
    CHECK(gb.elems[0] == parse_poly(ring, "1"));
    CHECK(is_zero_dimensional(gb));
    CHECK(quotient_dimension(gb) == 0);
}

TEST_CASE("monomial complete intersection has dimension four") {
    const auto ring = make_ring(Prime(32003), {"x", "y"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x^2"), parse_poly(ring, "y^2")}));
    CHECK(is_zero_dimensional(gb));
    CHECK(quotient_dimension(gb) == 4);
}

TEST_CASE("split complete intersection has dimension six") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb =
        buchberger(Ideal(ring, {parse_poly(ring, "x^2-1"), parse_poly(ring, "y^3-y")}));
    CHECK(is_zero_dimensional(gb));
    CHECK(quotient_dimension(gb) == 6);
}

TEST_CASE("grid of rational points counts exactly") {
    const auto ring = make_ring(Prime(101), {"x", "y"});
    // (x-1)(x-2) and (y-1)(y-2)(y-3): six simple points
    const auto gb = buchberger(Ideal(
        ring, {parse_poly(ring, "x^2-3*x+2"), parse_poly(ring, "y^3-6*y^2+11*y-6")}));
    CHECK(quotient_dimension(gb) == 6);
}

TEST_CASE("three cyclic relations yield the classical count") {
    const auto ring = make_ring(Prime(7), {"x", "y", "z"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x+y+z"),
                                            parse_poly(ring, "x*y+y*z+z*x"),
                                            parse_poly(ring, "x*y*z-1")}));
    CHECK(is_zero_dimensional(gb));
    CHECK(quotient_dimension(gb) == 6);
}

TEST_CASE("generators are members of their own ideal") {
    const auto ring = make_ring(Prime(32003), {"x", "y", "z"});
    const std::vector<MultiPoly> gens = {parse_poly(ring, "x^2+y*z-3"),
                                         parse_poly(ring, "y^2-x*z+1"),
                                         parse_poly(ring, "z^3-x*y")};
    const auto gb = buchberger(Ideal(ring, gens));
    for (const auto& f : gens) CHECK(in_ideal(f, gb));

    // random ring combinations stay inside
    SplitMix64 rng(5);
    const MultiPoly combo = parse_poly(ring, "x*y-2") * gens[0] +
                            parse_poly(ring, "z+5") * gens[1] +
                            parse_poly(ring, "x^2") * gens[2];
    CHECK(in_ideal(combo, gb));
    CHECK(!in_ideal(parse_poly(ring, "x"), gb));
    CHECK(!in_ideal(parse_poly(ring, "1"), gb));
}

TEST_CASE("basis does not depend on generator insertion order") {
    const auto ring = make_ring(Prime(7), {"x", "y", "z"});
    std::vector<MultiPoly> gens = {parse_poly(ring, "x^2+y"), parse_poly(ring, "x*y+1"),
                                   parse_poly(ring, "y^3-z")};
    std::sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return poly_cmp(a, b) < 0;
    });
    const auto reference = buchberger(Ideal(ring, gens)).elems;
    int permutation = 0;
    do {
        const auto gb = buchberger(Ideal(ring, gens));
        CHECK(gb.elems == reference);
        ++permutation;
    } while (std::next_permutation(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return poly_cmp(a, b) < 0;
    }));
    CHECK(permutation == 6);
}

TEST_CASE("every S-polynomial of the basis reduces to zero") {
    const auto ring = make_ring(Prime(32003), {"x", "y", "z"});
    for (const auto& gens : std::vector<std::vector<const char*>>{
             {"x^2+y", "x*y+1"},
             {"x^2+y*z-3", "y^2-x*z+1", "z^3-x*y"},
             {"x^3-2*x*y", "x^2*y-2*y^2+x"}}) {
        std::vector<MultiPoly> fs;
        for (const char* s : gens) fs.push_back(parse_poly(ring, s));
        const auto gb = buchberger(Ideal(ring, fs));
        for (std::size_t i = 0; i < gb.elems.size(); ++i)
            for (std::size_t j = i + 1; j < gb.elems.size(); ++j)
                CHECK(normal_form(spoly(gb.elems[i], gb.elems[j]), gb).is_zero());
    }
}

TEST_CASE("basis elements are monic, reduced and sorted") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb = buchberger(
        Ideal(ring, {parse_poly(ring, "2*x^2+2*y"), parse_poly(ring, "3*x*y+3")}));
    const Fp one = fp_of(1, Prime(7));
    for (std::size_t i = 0; i < gb.elems.size(); ++i) {
        CHECK(gb.elems[i].lc() == one);
        // no term of one element is divisible by another element's lm
        for (std::size_t j = 0; j < gb.elems.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb.elems[i].terms())
                CHECK(!divides(gb.elems[j].lm(), t.m));
        }
        if (i + 1 < gb.elems.size())
            CHECK(cmp(gb.elems[i].lm(), gb.elems[i + 1].lm(), ring->order) < 0);
    }
}

TEST_CASE("normal form is linear and idempotent") {
    const auto ring = make_ring(Prime(32003), {"x", "y"});
    const auto gb = buchberger(
        Ideal(ring, {parse_poly(ring, "x^2-2"), parse_poly(ring, "y^2-x")}));
    SplitMix64 rng(71);
    const MultiPoly f = parse_poly(ring, "x^3*y^2-4*x*y+7");
    const MultiPoly g = parse_poly(ring, "y^4+x^2*y-1");
    CHECK(normal_form(normal_form(f, gb), gb) == normal_form(f, gb));
    CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
    CHECK(normal_form(f - normal_form(f, gb), gb).is_zero());
    CHECK(in_ideal(f - normal_form(f, gb), gb));
}

TEST_CASE("zero ideal and zero generators") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const Ideal ideal(ring, {MultiPoly::zero(ring), MultiPoly::zero(ring)});
    CHECK(ideal.gens.empty());
    const auto gb = buchberger(ideal);
    CHECK(gb.elems.empty());
    CHECK(!is_zero_dimensional(gb));
    CHECK_THROWS_AS(quotient_dimension(gb), std::invalid_argument);
}

TEST_CASE("positive dimensional ideals are recognized") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x*y-1")}));
    CHECK(!is_zero_dimensional(gb));
    CHECK_THROWS_AS(quotient_dimension(gb), std::invalid_argument);
}

TEST_CASE("step budget exhaustion carries diagnostics") {
    const auto ring = make_ring(Prime(32003), {"x", "y", "z"});
    const Ideal ideal(ring, {parse_poly(ring, "x^3+y^2*z-3*z"), parse_poly(ring, "y^3-x*z+x"),
                             parse_poly(ring, "z^3-x*y^2+y")});
    BuchbergerBudget tight;
    tight.max_steps = 3;
    try {
        buchberger(ideal, tight);
        FAIL("expected the step budget to trip");
    } catch (const budget_error& e) {
        CHECK(e.steps > 3);
        CHECK(e.secs >= 0.0);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("cross-ring inputs are rejected") {
    const auto ring = make_ring(Prime(7), {"x", "y"});
    const auto other = make_ring(Prime(7), {"x", "y", "z"});
    CHECK_THROWS_AS(Ideal(ring, {parse_poly(other, "z")}), std::invalid_argument);
    const auto gb = buchberger(Ideal(ring, {parse_poly(ring, "x")}));
    CHECK_THROWS_AS(normal_form(parse_poly(other, "z"), gb), std::invalid_argument);
}
