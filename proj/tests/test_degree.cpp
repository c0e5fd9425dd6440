#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "ramify/degree.hpp"

using namespace ramify;

namespace {

// Votes 1 over F_32003 and 2 over any other prime: the coefficient map is
// (a^2, a) resp. (a^3, a), whose fibers up to scale have 1 resp. 2 points.
class SplitVoteGeometry final : public FiberGeometry {
public:
    [[nodiscard]] std::string name() const override { return "mock split vote"; }
    [[nodiscard]] int rows() const override { return 1; }
    [[nodiscard]] int cols() const override { return 2; }
    [[nodiscard]] long long slots() const override { return 2; }
    [[nodiscard]] std::vector<Fp> eval(const FpMat&, std::span<const Fp> a) const override {
        const Fp x = a[0];
        return {x.p == 32003 ? x * x : x * x * x, x};
    }
    [[nodiscard]] std::vector<MultiPoly> symbolic(const FpMat&, const RingPtr& ring) const override {
        const MultiPoly x = MultiPoly::variable(ring, 0);
        return {ring->p.value() == 32003 ? x * x : x * x * x, x};
    }
};

RunConfig quick_config() {
    RunConfig cfg;
    cfg.seed = 41;
    cfg.record_timing = false;
    return cfg;
}

} // namespace

TEST_CASE("per-trial seeds are deterministic and collision free") {
    std::set<std::uint64_t> seen;
    for (std::uint32_t prime : {32003u, 1000003u, 2147483629u})
        for (int j = 0; j < 8; ++j) {
            const std::uint64_t s = trial_seed(2026, prime, j);
            CHECK(s == trial_seed(2026, prime, j));
            CHECK(seen.insert(s).second);
        }
    CHECK(trial_seed(1, 32003, 0) != trial_seed(2, 32003, 0));
}

TEST_CASE("config validation") {
    RunConfig cfg;
    CHECK_NOTHROW(validate_config(cfg));
    cfg.primes.clear();
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = RunConfig{};
    cfg.trials_per_prime = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = RunConfig{};
    cfg.parallelism = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = RunConfig{};
    cfg.budget.max_steps = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("chart dimensions of the built-in geometries") {
    const ScrollGeometry quadric(Partition({1, 1}));
    CHECK(quadric.rows() == 3);
    CHECK(quadric.cols() == 4);
    CHECK(quadric.chart_dim() == 3);
    CHECK(quadric.slots() == 4);
    CHECK(quadric.name() == "scroll (1,1)");
    CHECK(quadric.partition_tag() == std::vector<int>{1, 1});
    const VeroneseGeometry net;
    CHECK(net.chart_dim() == 9);
    CHECK(net.slots() == 10);
    CHECK(net.partition_tag().empty());
}

TEST_CASE("chart samples are reproducible and nondegenerate") {
    const ScrollGeometry geo(Partition({1, 1}));
    const Prime p(32003);
    const ChartSample s1 = sample_chart(geo, p, 7);
    const ChartSample s2 = sample_chart(geo, p, 7);
    CHECK(s1.g == s2.g);
    CHECK(s1.a0 == s2.a0);
    CHECK(s1.r0 == s2.r0);
    const ChartSample s3 = sample_chart(geo, p, 8);
    CHECK(s1.r0 != s3.r0);
    CHECK(s1.r0 == geo.eval(s1.g, s1.a0));
    bool nonzero = false;
    for (const auto& c : s1.r0) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
}

TEST_CASE("fiber ideal shape on the quadric surface") {
    const Prime p(32003);
    const FiberIdealSpec spec = build_fiber_ideal(Partition({1, 1}), p, 5);
    CHECK(spec.geometry == "scroll (1,1)");
    CHECK(spec.prime == 32003);
    CHECK(spec.ring->nvars() == 5); // 3 chart vars + lam + u
    CHECK(spec.ideal.gens.size() == 5);

    // every generator vanishes at the base point with lam = u = 1
    std::vector<Fp> pt = spec.a0;
    pt.push_back(fp_of(1, p));
    pt.push_back(fp_of(1, p));
    for (const auto& g : spec.ideal.gens) CHECK(g.eval(pt).is_zero());
}

TEST_CASE("fiber ideal shapes of the other geometries") {
    const Prime p(32003);
    const FiberIdealSpec curve = build_fiber_ideal(Partition({2}), p, 5);
    CHECK(curve.ring->nvars() == 4); // 2 chart vars + lam + u
    CHECK(curve.ideal.gens.size() == 4);

    const FiberIdealSpec net = build_fiber_ideal(VeroneseGeometry(), p, 5);
    CHECK(net.geometry == "veronese");
    CHECK(net.ring->nvars() == 11); // 9 chart vars + lam + u
    CHECK(net.ideal.gens.size() == 11);
    std::vector<Fp> pt = net.a0;
    pt.push_back(fp_of(1, p));
    pt.push_back(fp_of(1, p));
    for (const auto& g : net.ideal.gens) CHECK(g.eval(pt).is_zero());
}

TEST_CASE("exhaustive fiber counts over tiny fields") {
    CHECK(brute_force_fiber_count(Partition({1, 1}), 7, 3) == 1);
    CHECK(brute_force_fiber_count(Partition({2}), 7, 4) == 1);
    CHECK(brute_force_fiber_count(Partition({1, 2}), 5, 5) == 1);
    CHECK_THROWS_AS(brute_force_fiber_count(Partition({1, 1}), 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_fiber_count(Partition({2}), 32003, 3), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_fiber_count(Partition({2, 3}), 7, 3), std::invalid_argument);
}

TEST_CASE("consensus needs three trials spanning two primes") {
    const Partition p({1, 1});
    RunConfig cfg = quick_config();

    cfg.primes = {32003};
    cfg.trials_per_prime = 1;
    DegreeReport rep = phi(p, cfg);
    CHECK(rep.trials.size() == 1);
    CHECK(rep.agreement);
    CHECK(!rep.degree);

    cfg.trials_per_prime = 3;
    rep = phi(p, cfg);
    CHECK(rep.trials.size() == 3);
    CHECK(rep.agreement);
    CHECK(!rep.degree); // one prime only

    cfg.primes = {32003, 1000003};
    cfg.trials_per_prime = 1;
    rep = phi(p, cfg);
    CHECK(rep.trials.size() == 2);
    CHECK(rep.agreement);
    CHECK(!rep.degree); // two trials only

    cfg.trials_per_prime = 2;
    rep = phi(p, cfg);
    CHECK(rep.trials.size() == 4);
    CHECK(rep.agreement);
    REQUIRE(rep.degree.has_value());
    CHECK(*rep.degree == 1);
    for (const auto& t : rep.trials) {
        CHECK(t.zero_dim);
        REQUIRE(t.value.has_value());
        CHECK(*t.value == 1);
        CHECK(t.ms == 0.0); // timing disabled
        CHECK(!t.budget_hit);
    }
    CHECK(rep.geometry == "scroll (1,1)");
    CHECK(rep.partition == std::vector<int>{1, 1});
    CHECK(!rep.any_budget_hit());
}

TEST_CASE("budget exhaustion voids consensus") {
    RunConfig cfg = quick_config();
    cfg.primes = {32003, 1000003};
    cfg.trials_per_prime = 1;
    cfg.budget.max_steps = 10;
    const DegreeReport rep = phi(Partition({2, 3}), cfg);
    CHECK(rep.trials.size() == 2);
    CHECK(rep.any_budget_hit());
    CHECK(!rep.agreement);
    CHECK(!rep.degree);
    for (const auto& t : rep.trials) {
        CHECK(t.budget_hit);
        CHECK(!t.value.has_value());
    }
}

TEST_CASE("scheduling does not change the report") {
    RunConfig cfg = quick_config();
    cfg.primes = {32003, 1000003};
    cfg.trials_per_prime = 2;
    cfg.parallelism = 1;
    const DegreeReport serial = phi(Partition({1, 1}), cfg);
    cfg.parallelism = 4;
    const DegreeReport pooled = phi(Partition({1, 1}), cfg);
    REQUIRE(serial.trials.size() == pooled.trials.size());
    CHECK(serial.degree == pooled.degree);
    CHECK(serial.agreement == pooled.agreement);
    for (std::size_t i = 0; i < serial.trials.size(); ++i) {
        CHECK(serial.trials[i].prime == pooled.trials[i].prime);
        CHECK(serial.trials[i].seed == pooled.trials[i].seed);
        CHECK(serial.trials[i].value == pooled.trials[i].value);
        CHECK(serial.trials[i].zero_dim == pooled.trials[i].zero_dim);
    }
}

TEST_CASE("a prime-dependent vote split is reported, not averaged") {
    RunConfig cfg = quick_config();
    cfg.primes = {32003, 1000003};
    cfg.trials_per_prime = 2;
    const DegreeReport rep = run_degree(SplitVoteGeometry(), cfg);
    CHECK(rep.trials.size() == 4);
    CHECK(!rep.agreement);
    CHECK(!rep.degree);
    CHECK(!rep.any_budget_hit());
    for (const auto& t : rep.trials) {
        REQUIRE(t.value.has_value());
        CHECK(*t.value == (t.prime == 32003 ? 1 : 2));
    }
}

TEST_CASE("small projection degrees") {
    RunConfig cfg = quick_config();
    cfg.trials_per_prime = 2;

    const DegreeReport r11 = phi(Partition({1, 1}), cfg);
    REQUIRE(r11.degree.has_value());
    CHECK(*r11.degree == 1);

    const DegreeReport r2 = phi(Partition({2}), cfg);
    REQUIRE(r2.degree.has_value());
    CHECK(*r2.degree == 1);

    const DegreeReport r3 = phi(Partition({3}), cfg);
    REQUIRE(r3.degree.has_value());
    CHECK(*r3.degree == 2);

    const DegreeReport rv = veronese_degree(cfg);
    REQUIRE(rv.degree.has_value());
    CHECK(*rv.degree == 3);
    CHECK(rv.geometry == "veronese");
    CHECK(rv.partition.empty());
}

TEST_CASE("dominance comparisons of the projection degree") {
    RunConfig cfg = quick_config();
    cfg.trials_per_prime = 2;
    const auto ok = monotonicity_check(Partition({1, 3}), Partition({2, 2}), cfg);
    REQUIRE(ok.has_value());
    CHECK(*ok);

    CHECK_THROWS_AS(monotonicity_check(Partition({1, 2}), Partition({2, 2}), cfg), std::invalid_argument);
    CHECK_THROWS_AS(monotonicity_check(Partition({2, 2}), Partition({1, 3}), cfg), std::invalid_argument);

    RunConfig crippled = cfg;
    crippled.budget.max_steps = 5;
    CHECK(!monotonicity_check(Partition({1, 3}), Partition({2, 2}), crippled).has_value());
}
