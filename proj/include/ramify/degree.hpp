#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramify/fp.hpp"
#include "ramify/groebner.hpp"
#include "ramify/linalg.hpp"
#include "ramify/multipoly.hpp"
#include "ramify/rng.hpp"
#include "ramify/scroll.hpp"
#include "ramify/special.hpp"

namespace ramify {

// Shared knobs for randomized degree and rank runs. Budgets apply per
// Groebner computation; parallelism caps the trial pool.
struct RunConfig {
    std::vector<std::uint32_t> primes = {kDefaultPrimes[0], kDefaultPrimes[1]};
    int trials_per_prime = 3;
    std::uint64_t seed = 2026;
    BuchbergerBudget budget = {};
    bool record_timing = true;
    int parallelism = 4;
};

void validate_config(const RunConfig& cfg);

// Deterministic per-trial seed, independent of scheduling order.
std::uint64_t trial_seed(std::uint64_t base, std::uint32_t prime, int index);

// The coefficients of a ramification object as a function of a chart on
// the Grassmannian of projections: A (row major, rows x (cols-rows)) maps
// to the plane rowspan[I | A] g and then through the geometry's
// ramification construction to a fixed-length coefficient vector, each
// entry polynomial in A. Geometries provide a direct evaluator and the
// same map as ring elements for ideal building.
class FiberGeometry {
public:
    virtual ~FiberGeometry() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual std::vector<int> partition_tag() const { return {}; }
    [[nodiscard]] virtual int rows() const = 0;
    [[nodiscard]] virtual int cols() const = 0;
    [[nodiscard]] virtual long long slots() const = 0;
    [[nodiscard]] virtual std::vector<Fp> eval(const FpMat& g, std::span<const Fp> a) const = 0;
    // Coefficient polynomials in the first chart_dim() ring variables.
    [[nodiscard]] virtual std::vector<MultiPoly> symbolic(const FpMat& g, const RingPtr& ring) const = 0;

    [[nodiscard]] int chart_dim() const { return rows() * (cols() - rows()); }
};

// Row i of [I | A] g in an arbitrary coefficient ring; the fixed basis
// change g is lifted entrywise.
template <class R>
std::vector<std::vector<R>> chart_rows(const FpMat& g, std::span<const R> a, int rows, const R& model) {
    const int n = static_cast<int>(g.cols());
    const int w = n - rows;
    if (g.rows() != g.cols() || w < 0) throw std::invalid_argument("chart wants a square basis change, cols >= rows");
    if (static_cast<int>(a.size()) != rows * w) throw std::invalid_argument("chart point has the wrong dimension");
    std::vector<std::vector<R>> out(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        auto& row = out[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            R acc = lift_like(model, g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)));
            for (int j = 0; j < w; ++j)
                acc = acc + a[static_cast<std::size_t>(i * w + j)] *
                                lift_like(model, g.at(static_cast<std::size_t>(rows + j), static_cast<std::size_t>(c)));
            row.push_back(std::move(acc));
        }
    }
    return out;
}

template <class R>
std::vector<R> scroll_chart_eval(const Partition& p, const FpMat& g, std::span<const R> a, const R& model) {
    const auto rows = chart_rows(g, a, p.r() + 1, model);
    const FrameT<R> fr = frame_from_rows(p, rows);
    return pack_ram(ram_determinant(fr, p), p, zero_like(model));
}

template <class R>
std::vector<R> veronese_chart_eval(const FpMat& g, std::span<const R> a, const R& model) {
    const auto rows = chart_rows(g, a, 3, model);
    std::array<TernaryFormT<R>, 3> net;
    for (int i = 0; i < 3; ++i) net[static_cast<std::size_t>(i)] = TernaryFormT<R>{2, rows[static_cast<std::size_t>(i)]};
    const TernaryFormT<R> cubic = jacobian_cubic(net[0], net[1], net[2]);
    return cubic.coeff;
}

class ScrollGeometry final : public FiberGeometry {
public:
    explicit ScrollGeometry(Partition p) : p_(std::move(p)) {}

    [[nodiscard]] std::string name() const override { return "scroll " + p_.to_string(); }
    [[nodiscard]] std::vector<int> partition_tag() const override { return p_.parts(); }
    [[nodiscard]] int rows() const override { return p_.r() + 1; }
    [[nodiscard]] int cols() const override { return p_.d() + p_.r(); }
    [[nodiscard]] long long slots() const override { return ram_slot_count(p_); }
    [[nodiscard]] std::vector<Fp> eval(const FpMat& g, std::span<const Fp> a) const override;
    [[nodiscard]] std::vector<MultiPoly> symbolic(const FpMat& g, const RingPtr& ring) const override;

    [[nodiscard]] const Partition& partition() const noexcept { return p_; }

private:
    Partition p_;
};

// Nets of ternary conics: the chart is on Gr(3, 6) and the ramification
// object is the Jacobian cubic of the net.
class VeroneseGeometry final : public FiberGeometry {
public:
    [[nodiscard]] std::string name() const override { return "veronese"; }
    [[nodiscard]] int rows() const override { return 3; }
    [[nodiscard]] int cols() const override { return 6; }
    [[nodiscard]] long long slots() const override { return 10; }
    [[nodiscard]] std::vector<Fp> eval(const FpMat& g, std::span<const Fp> a) const override;
    [[nodiscard]] std::vector<MultiPoly> symbolic(const FpMat& g, const RingPtr& ring) const override;
};

// One randomized chart draw: basis change, base point, base coefficients.
// The base coefficients are nonzero by construction (degenerate draws are
// redrawn, with a structural error after repeated failures).
struct ChartSample {
    FpMat g;
    std::vector<Fp> a0;
    std::vector<Fp> r0;
};

ChartSample sample_chart(const FiberGeometry& geo, const Prime& prime, std::uint64_t seed);

// Fiber ideal of the coefficient map over the base point, in chart
// variables plus (lam, u): c_m(A) = lam (R0)_m for every slot, and
// lam u = 1 so the scale lam stays invertible.
struct FiberIdealSpec {
    std::string geometry;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    FpMat g;
    std::vector<Fp> a0;
    std::vector<Fp> r0;
    RingPtr ring;
    Ideal ideal;
};

FiberIdealSpec build_fiber_ideal(const FiberGeometry& geo, const Prime& prime, std::uint64_t seed);
FiberIdealSpec build_fiber_ideal(const Partition& p, const Prime& prime, std::uint64_t seed);

struct TrialRecord {
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    std::optional<long long> value; // empty when the budget was exhausted
    bool zero_dim = false;
    double ms = 0.0;
    bool budget_hit = false;
};

// Consensus report: degree present only when every launched trial
// completed with the same value, at least 3 trials over at least 2 primes.
// A trial that is not zero-dimensional votes 0, the degree of a
// non-dominant map.
struct DegreeReport {
    std::string geometry;
    std::vector<int> partition;
    std::optional<long long> degree;
    bool agreement = false;
    std::vector<TrialRecord> trials;

    [[nodiscard]] bool any_budget_hit() const {
        for (const auto& t : trials)
            if (t.budget_hit) return true;
        return false;
    }
};

DegreeReport run_degree(const FiberGeometry& geo, const RunConfig& cfg);
DegreeReport phi(const Partition& p, const RunConfig& cfg = {});
DegreeReport veronese_degree(const RunConfig& cfg = {});

// Exhaustive rational count of the fiber over one random draw: chart
// points whose coefficient vector is a nonzero multiple of the base one.
// Rational points only, so this lower-bounds the degree.
long long brute_force_fiber_count(const Partition& p, std::uint32_t q, std::uint64_t seed);

// phi(p) <= phi(q) for p below q in dominance order; empty when either
// side lacks consensus.
std::optional<bool> monotonicity_check(const Partition& p, const Partition& q, const RunConfig& cfg = {});

} // namespace ramify
