#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "ramify/linalg.hpp"
#include "ramify/rng.hpp"
#include "ramify/scroll.hpp"

using namespace ramify;

namespace {

const Prime kP(32003);

UniPoly<Fp> upoly(const Prime& p, const std::vector<int>& asc) {
    std::vector<Fp> c;
    for (int v : asc) c.push_back(fp_of(v, p));
    return UniPoly<Fp>(std::move(c));
}

UniPoly<Fp> random_upoly(SplitMix64& rng, const Prime& p, int maxdeg) {
    std::vector<Fp> c;
    for (int i = 0; i <= maxdeg; ++i) c.push_back(rng.field_elt(p));
    return UniPoly<Fp>(std::move(c));
}

Frame random_frame(SplitMix64& rng, const Prime& p, const Partition& part) {
    Frame fr;
    for (int i = 0; i <= part.r(); ++i) {
        Section s;
        for (int j = 0; j < part.r(); ++j) s.f.push_back(random_upoly(rng, p, part.part(j)));
        fr.v.push_back(std::move(s));
    }
    return fr;
}

Frame shift_frame(const Frame& fr, const Fp& s) {
    Frame out;
    for (const auto& sec : fr.v) {
        Section o;
        for (const auto& f : sec.f) o.f.push_back(f.shift(s));
        out.v.push_back(std::move(o));
    }
    return out;
}

} // namespace

TEST_CASE("splitting types validate their parts") {
    CHECK(Partition({1, 2}).r() == 2);
    CHECK(Partition({1, 2}).d() == 3);
    CHECK(Partition({3}).r() == 1);
    CHECK(Partition({1, 1, 2}).to_string() == "(1,1,2)");
    CHECK_THROWS_AS(Partition({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition({2, 1}) == Partition({1, 2})); // normalized to ascending
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>(201, 1)), std::invalid_argument);
}

TEST_CASE("dominance order on splitting types") {
    CHECK(dominates(Partition({1, 3}), Partition({2, 2})));
    CHECK(!dominates(Partition({2, 2}), Partition({1, 3})));
    CHECK(dominates(Partition({1, 4}), Partition({2, 3})));
    CHECK(dominates(Partition({2, 3}), Partition({2, 3})));
    CHECK(dominates(Partition({1, 1, 4}), Partition({2, 2, 2})));
    CHECK(dominates(Partition({1, 2, 3}), Partition({2, 2, 2})));
    // incomparable pair in rank 3 of degree 7: neither dominates
    CHECK(!dominates(Partition({3, 4}), Partition({2, 2, 3})));
    CHECK(!dominates(Partition({2, 2, 3}), Partition({3, 4})));
    CHECK(!dominates(Partition({1, 2}), Partition({2, 2}))); // different degree
}

TEST_CASE("section space dimension is degree plus rank") {
    CHECK(h0_dim(Partition({1, 1})) == 4);
    CHECK(h0_dim(Partition({2, 2})) == 6);
    CHECK(h0_dim(Partition({1, 1, 2})) == 7);
}

TEST_CASE("source and target dimensions agree for every splitting type") {
    for (const auto& parts : std::vector<std::vector<int>>{
             {1, 1}, {2, 2}, {1, 1, 2}, {2, 3}, {1, 1, 1, 2}, {5}, {2, 2, 2}, {1, 4}}) {
        const Partition p(parts);
        const DimCheck dc = dims_match(p);
        CHECK(dc.match);
        CHECK(dc.dim_source == static_cast<long long>(p.r() + 1) * (p.d() - 1));
    }
    CHECK(dims_match(Partition({2, 2})).dim_source == 9);
    CHECK(dims_match(Partition({1, 1, 2})).dim_source == 12);
    // rank one: Gr(2, n+1) -> P^(2n-2)
    CHECK(dims_match(Partition({4})).dim_source == 6);
    CHECK(dims_match(Partition({4})).dim_target == 6);
}

TEST_CASE("section count lower bound evaluates the binomial formula") {
    CHECK(kymh_lower_bound(5, 2, 3) == 10);
    for (int n = 2; n <= 8; ++n) CHECK(kymh_lower_bound(n, 1, 2) == 2ull * n - 1);
    for (int n = 4; n <= 8; ++n) CHECK(kymh_lower_bound(n, 3, 3) == static_cast<unsigned>(n - 3));
    CHECK_THROWS_AS(kymh_lower_bound(5, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(kymh_lower_bound(5, 4, 3), std::invalid_argument); // m < r
    CHECK_THROWS_AS(kymh_lower_bound(2, 2, 3), std::invalid_argument); // n <= r
}

TEST_CASE("the eccentric-bundle inequality flips exactly at rank four") {
    for (int r = 2; r <= 6; ++r)
        for (int b = 2; b <= 6; ++b) CHECK(requirement_holds(1, b, r) == (r >= 4));
    CHECK(requirement_holds(1, 2, 4)); // boundary case: 6 >= 6
    CHECK(!requirement_holds(1, 2, 3));
}

TEST_CASE("hand-expanded frame on the quadric surface") {
    const Partition p({1, 1});
    // sections (1,0), (0,1), (t, 1+t)
    Frame fr;
    fr.v.push_back(Section{{upoly(kP, {1}), upoly(kP, {})}});
    fr.v.push_back(Section{{upoly(kP, {}), upoly(kP, {1})}});
    fr.v.push_back(Section{{upoly(kP, {0, 1}), upoly(kP, {1, 1})}});
    const RamCoeffs c = ram_determinant(fr, p);
    REQUIRE(c.c.size() == 2);
    CHECK(c.c[0] == upoly(kP, {1}));
    CHECK(c.c[1] == upoly(kP, {1}));
    CHECK(ram_differential(fr, p) == c);
}

TEST_CASE("rank one specializes to the wronskian") {
    // frame {1, t^n} -> n t^(n-1)
    for (int n = 2; n <= 6; ++n) {
        const Partition p({n});
        std::vector<int> tn(static_cast<std::size_t>(n + 1), 0);
        tn[static_cast<std::size_t>(n)] = 1;
        Frame fr;
        fr.v.push_back(Section{{upoly(kP, {1})}});
        fr.v.push_back(Section{{upoly(kP, tn)}});
        const RamCoeffs c = ram_determinant(fr, p);
        REQUIRE(c.c.size() == 1);
        std::vector<int> expect(static_cast<std::size_t>(n), 0);
        expect[static_cast<std::size_t>(n - 1)] = n;
        CHECK(c.c[0] == upoly(kP, expect));
    }

    SplitMix64 rng(2);
    const Partition p({4});
    for (int i = 0; i < 100; ++i) {
        const auto f = random_upoly(rng, kP, 4);
        const auto g = random_upoly(rng, kP, 4);
        Frame fr;
        fr.v.push_back(Section{{f}});
        fr.v.push_back(Section{{g}});
        CHECK(ram_determinant(fr, p).c[0] == wronskian(f, g));
    }
}

TEST_CASE("wronskian basics") {
    CHECK(wronskian(upoly(kP, {1}), upoly(kP, {0, 1})) == upoly(kP, {1}));   // (1, t) -> 1
    CHECK(wronskian(upoly(kP, {0, 1}), upoly(kP, {0, 0, 1})) == upoly(kP, {0, 0, 1})); // (t, t^2) -> t^2
    const auto f = upoly(kP, {3, 1, 4});
    CHECK(wronskian(f, f).is_zero());
}

TEST_CASE("degenerate frames ramify nowhere") {
    const Partition p({2, 2});
    SplitMix64 rng(7);
    Frame fr = random_frame(rng, kP, p);
    fr.v[2] = fr.v[0]; // repeated section
    const RamCoeffs c = ram_determinant(fr, p);
    for (const auto& cj : c.c) CHECK(cj.is_zero());
    CHECK(ram_differential(fr, p) == c);
}

TEST_CASE("both construction routes agree on random frames") {
    for (const auto& parts : std::vector<std::vector<int>>{
             {1, 1}, {2, 2}, {2, 3}, {1, 1, 2}, {2, 2, 2}, {1, 1, 1, 2}}) {
        const Partition p(parts);
        SplitMix64 rng(static_cast<std::uint64_t>(p.d() * 31 + p.r()));
        for (int i = 0; i < 30; ++i) {
            const Frame fr = random_frame(rng, kP, p);
            CHECK(ram_determinant(fr, p) == ram_differential(fr, p));
        }
    }
}

TEST_CASE("frame validation guards shape and degree") {
    const Partition p({1, 2});
    SplitMix64 rng(3);
    Frame fr = random_frame(rng, kP, p);
    Frame bad = fr;
    bad.v.pop_back();
    CHECK_THROWS_AS(ram_determinant(bad, p), std::invalid_argument);
    bad = fr;
    bad.v[0].f[0] = random_upoly(rng, kP, 2); // degree 2 in a degree-1 slot
    CHECK_THROWS_AS(ram_determinant(bad, p), std::invalid_argument);
    bad = fr;
    bad.v[0].f.pop_back();
    CHECK_THROWS_AS(ram_determinant(bad, p), std::invalid_argument);
}

TEST_CASE("basis change multiplies by the determinant") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 1, 2}}) {
        const Partition p(parts);
        SplitMix64 rng(static_cast<std::uint64_t>(p.d()));
        for (int i = 0; i < 25; ++i) {
            const Frame fr = random_frame(rng, kP, p);
            const FpMat g = random_invertible(rng, static_cast<std::size_t>(p.r() + 1), kP);
            Frame gfr;
            for (int a = 0; a <= p.r(); ++a) {
                Section s;
                for (int j = 0; j < p.r(); ++j) {
                    UniPoly<Fp> acc;
                    for (int b = 0; b <= p.r(); ++b)
                        acc = acc + g.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) *
                                        fr.v[static_cast<std::size_t>(b)].f[static_cast<std::size_t>(j)];
                    s.f.push_back(std::move(acc));
                }
                gfr.v.push_back(std::move(s));
            }
            const RamCoeffs lhs = ram_determinant(gfr, p);
            const RamCoeffs rhs = ram_determinant(fr, p);
            const Fp dg = det(g);
            for (int j = 0; j < p.r(); ++j)
                CHECK(lhs.c[static_cast<std::size_t>(j)] == dg * rhs.c[static_cast<std::size_t>(j)]);
        }
    }
}

TEST_CASE("reparametrizing the line shifts the coefficients") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 3}, {1, 1, 2}}) {
        const Partition p(parts);
        SplitMix64 rng(static_cast<std::uint64_t>(p.d() + 100));
        for (int i = 0; i < 25; ++i) {
            const Frame fr = random_frame(rng, kP, p);
            const Fp s = rng.field_elt(kP);
            const RamCoeffs shifted = ram_determinant(shift_frame(fr, s), p);
            const RamCoeffs base = ram_determinant(fr, p);
            for (int j = 0; j < p.r(); ++j)
                CHECK(shifted.c[static_cast<std::size_t>(j)] ==
                      base.c[static_cast<std::size_t>(j)].shift(s));
        }
    }
}

TEST_CASE("coefficient degrees respect the serialization bounds") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {2, 3}, {1, 1, 2}}) {
        const Partition p(parts);
        SplitMix64 rng(static_cast<std::uint64_t>(p.d() + 55));
        for (int i = 0; i < 25; ++i) {
            const RamCoeffs c = ram_determinant(random_frame(rng, kP, p), p);
            for (int j = 0; j < p.r(); ++j)
                CHECK(c.c[static_cast<std::size_t>(j)].degree() <= p.part(j) + p.d() - 2);
        }
    }
}

TEST_CASE("serialized layout concatenates ascending coefficients") {
    const Partition p({1, 2});
    CHECK(ram_slot_count(p) == 7); // (1+3-1) + (2+3-1)
    RamCoeffs c;
    c.c.push_back(upoly(kP, {5, 6}));       // degree bound 2 -> 3 slots
    c.c.push_back(upoly(kP, {7, 0, 0, 9})); // degree bound 3 -> 4 slots
    const auto packed = pack_ram(c, p, kP);
    REQUIRE(packed.size() == 7);
    const int expect[] = {5, 6, 0, 7, 0, 0, 9};
    for (int i = 0; i < 7; ++i) CHECK(packed[static_cast<std::size_t>(i)] == fp_of(expect[i], kP));
    CHECK(static_cast<long long>(h0_basis(p).size()) == h0_dim(p));
}

TEST_CASE("slot count matches the grassmannian dimension plus one") {
    for (const auto& parts : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {2, 3}, {1, 1, 2}, {4}})
        CHECK(ram_slot_count(Partition(parts)) ==
              dims_match(Partition(parts)).dim_source + 1);
}

TEST_CASE("threefold closed form: frozen inputs") {
    const Prime p(32003);
    ThreefoldInput in;
    in.k = 1;
    in.a = upoly(p, {});
    in.b = upoly(p, {});
    in.c = upoly(p, {});
    in.d = upoly(p, {1});
    const RamCoeffs r1 = ram_threefold_closed(in, p);
    REQUIRE(r1.c.size() == 3);
    CHECK(r1.c[0] == upoly(p, {1}));
    CHECK(r1.c[1].is_zero());
    CHECK(r1.c[2].is_zero());

    ThreefoldInput in2;
    in2.k = 1;
    in2.a = upoly(p, {1});
    in2.b = upoly(p, {});
    in2.c = upoly(p, {});
    in2.d = upoly(p, {});
    const RamCoeffs r2 = ram_threefold_closed(in2, p);
    CHECK(r2.c[0].is_zero());
    CHECK(r2.c[1] == upoly(p, {0, 1}));
    CHECK(r2.c[2].is_zero());
}

TEST_CASE("threefold closed form matches the determinant route") {
    SplitMix64 rng(17);
    for (int k = 0; k <= 2; ++k) {
        const Partition part = threefold_partition(k);
        CHECK(part == Partition({1, 1, k + 1}));
        for (int i = 0; i < 35; ++i) {
            ThreefoldInput in;
            in.k = k;
            in.a = random_upoly(rng, kP, k + 1);
            in.b = random_upoly(rng, kP, k + 1);
            in.c = random_upoly(rng, kP, k + 1);
            in.d = random_upoly(rng, kP, k + 1);
            const RamCoeffs closed = ram_threefold_closed(in, kP);
            const RamCoeffs viaDet = ram_determinant(threefold_frame(in, kP), part);
            REQUIRE(closed.c.size() == viaDet.c.size());
            const Fp sign = fp_of(kThreefoldClosedVsDetSign, kP);
            for (std::size_t j = 0; j < closed.c.size(); ++j)
                CHECK(closed.c[j] == sign * viaDet.c[j]);
        }
    }
}

TEST_CASE("stabilizer dimensions separate the eccentric fourfold") {
    CHECK(stabilizer_dim_target(Partition({1, 1, 2}), kP, 11) == 0);
    CHECK(stabilizer_dim_target(Partition({1, 1}), kP, 12) == 0);
    CHECK(stabilizer_dim_target(Partition({1, 1, 1, 2}), kP, 13) >= 1);
    CHECK(stabilizer_dim_source(Partition({1, 1, 1, 2}), kP, 14) == 0);
    CHECK(stabilizer_dim_source(Partition({2, 2}), kP, 15) == 0);
    CHECK(stabilizer_dim_source(Partition({1, 1}), kP, 16) == 0);
}
