#include "ramify/degree.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <set>
#include <utility>

namespace ramify {

namespace {

bool all_zero(std::span<const Fp> v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<std::string> fiber_ring_vars(int chart_dim) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(chart_dim) + 2);
    for (int i = 0; i < chart_dim; ++i) names.push_back("a" + std::to_string(i));
    names.emplace_back("lam");
    names.emplace_back("u");
    return names;
}

} // namespace

void validate_config(const RunConfig& cfg) {
    if (cfg.primes.empty()) throw std::invalid_argument("config wants at least one prime");
    for (std::uint32_t p : cfg.primes) Prime check(p);
    if (cfg.trials_per_prime < 1) throw std::invalid_argument("config wants at least one trial per prime");
    if (cfg.budget.max_steps == 0 || cfg.budget.max_secs <= 0.0)
        throw std::invalid_argument("config wants positive budgets");
    if (cfg.parallelism < 1) throw std::invalid_argument("config wants positive parallelism");
}

std::uint64_t trial_seed(std::uint64_t base, std::uint32_t prime, int index) {
    SplitMix64 s(base ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(prime) + 0x100000001ULL)));
    std::uint64_t v = s.next();
    for (int i = 0; i < index; ++i) v = s.next();
    return v;
}

std::vector<Fp> ScrollGeometry::eval(const FpMat& g, std::span<const Fp> a) const {
    const Fp model = fp_of(0, Prime(g.at(0, 0).p));
    return scroll_chart_eval<Fp>(p_, g, a, model);
}

std::vector<MultiPoly> ScrollGeometry::symbolic(const FpMat& g, const RingPtr& ring) const {
    const int n = chart_dim();
    if (ring->nvars() < n) throw std::invalid_argument("ring has fewer variables than the chart");
    std::vector<MultiPoly> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a.push_back(MultiPoly::variable(ring, i));
    return scroll_chart_eval<MultiPoly>(p_, g, a, MultiPoly::zero(ring));
}

std::vector<Fp> VeroneseGeometry::eval(const FpMat& g, std::span<const Fp> a) const {
    const Fp model = fp_of(0, Prime(g.at(0, 0).p));
    return veronese_chart_eval<Fp>(g, a, model);
}

std::vector<MultiPoly> VeroneseGeometry::symbolic(const FpMat& g, const RingPtr& ring) const {
    const int n = chart_dim();
    if (ring->nvars() < n) throw std::invalid_argument("ring has fewer variables than the chart");
    std::vector<MultiPoly> a;
    a.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a.push_back(MultiPoly::variable(ring, i));
    return veronese_chart_eval<MultiPoly>(g, a, MultiPoly::zero(ring));
}

ChartSample sample_chart(const FiberGeometry& geo, const Prime& prime, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = geo.cols();
    const int dim = geo.chart_dim();
    for (int attempt = 0; attempt < 6; ++attempt) {
        FpMat g = random_invertible(rng, static_cast<std::size_t>(n), prime);
        std::vector<Fp> a0;
        a0.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) a0.push_back(rng.field_elt(prime));
        std::vector<Fp> r0 = geo.eval(g, a0);
        if (static_cast<long long>(r0.size()) != geo.slots())
            throw std::logic_error("geometry produced the wrong number of coefficient slots");
        if (!all_zero(r0)) return ChartSample{std::move(g), std::move(a0), std::move(r0)};
    }
    throw std::runtime_error("improper ramification at every sampled chart point (6 draws) for " + geo.name() +
                             " over F_" + std::to_string(prime.value()));
}

FiberIdealSpec build_fiber_ideal(const FiberGeometry& geo, const Prime& prime, std::uint64_t seed) {
    ChartSample sample = sample_chart(geo, prime, seed);
    const int dim = geo.chart_dim();
    RingPtr ring = make_ring(prime, fiber_ring_vars(dim));
    const std::vector<MultiPoly> cs = geo.symbolic(sample.g, ring);
    const MultiPoly lam = MultiPoly::variable(ring, dim);
    const MultiPoly u = MultiPoly::variable(ring, dim + 1);
    std::vector<MultiPoly> gens;
    gens.reserve(cs.size() + 1);
    for (std::size_t m = 0; m < cs.size(); ++m)
        gens.push_back(cs[m] - lam * MultiPoly::constant(ring, sample.r0[m]));
    gens.push_back(lam * u - MultiPoly::constant(ring, std::int64_t{1}));
    Ideal ideal(ring, std::move(gens));
    return FiberIdealSpec{geo.name(), prime.value(), seed,       std::move(sample.g),
                          std::move(sample.a0),      std::move(sample.r0), std::move(ring),
                          std::move(ideal)};
}

FiberIdealSpec build_fiber_ideal(const Partition& p, const Prime& prime, std::uint64_t seed) {
    return build_fiber_ideal(ScrollGeometry(p), prime, seed);
}

namespace {

TrialRecord run_trial(const FiberGeometry& geo, std::uint32_t prime, std::uint64_t seed, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.prime = prime;
    rec.seed = seed;
    try {
        const FiberIdealSpec spec = build_fiber_ideal(geo, Prime(prime), seed);
        const GroebnerBasis gb = buchberger(spec.ideal, cfg.budget);
        rec.zero_dim = is_zero_dimensional(gb);
        rec.value = rec.zero_dim ? quotient_dimension(gb) : 0;
    } catch (const budget_error&) {
        rec.budget_hit = true;
    }
    if (cfg.record_timing) {
        const auto t1 = std::chrono::steady_clock::now();
        rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return rec;
}

} // namespace

DegreeReport run_degree(const FiberGeometry& geo, const RunConfig& cfg) {
    validate_config(cfg);
    struct Job {
        std::uint32_t prime;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::uint32_t prime : cfg.primes)
        for (int j = 0; j < cfg.trials_per_prime; ++j) jobs.push_back({prime, trial_seed(cfg.seed, prime, j)});

    std::vector<TrialRecord> records(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                records[i] = run_trial(geo, jobs[i].prime, jobs[i].seed, cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(cfg.parallelism), jobs.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> futs;
        futs.reserve(pool);
        for (std::size_t k = 0; k < pool; ++k) futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    DegreeReport rep;
    rep.geometry = geo.name();
    rep.partition = geo.partition_tag();
    rep.trials = std::move(records);

    std::optional<long long> value;
    bool agree = true;
    std::size_t completed = 0;
    for (const auto& t : rep.trials) {
        if (!t.value) continue;
        ++completed;
        if (!value) value = t.value;
        else if (*value != *t.value) agree = false;
    }
    rep.agreement = completed == rep.trials.size() && completed > 0 && agree;
    std::set<std::uint32_t> primes(cfg.primes.begin(), cfg.primes.end());
    if (rep.agreement && rep.trials.size() >= 3 && primes.size() >= 2) rep.degree = value;
    return rep;
}

DegreeReport phi(const Partition& p, const RunConfig& cfg) { return run_degree(ScrollGeometry(p), cfg); }

DegreeReport veronese_degree(const RunConfig& cfg) { return run_degree(VeroneseGeometry(), cfg); }

long long brute_force_fiber_count(const Partition& p, std::uint32_t q, std::uint64_t seed) {
    const Prime prime(q);
    const ScrollGeometry geo(p);
    const int dim = geo.chart_dim();
    double total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= q;
        if (total > 1e8) throw std::invalid_argument("enumeration budget exceeded: q^N > 10^8");
    }
    const ChartSample sample = sample_chart(geo, prime, seed);
    std::size_t pivot = 0;
    while (sample.r0[pivot].is_zero()) ++pivot;
    const Fp pivot_inv = inv(sample.r0[pivot]);

    std::vector<Fp> a(static_cast<std::size_t>(dim), fp_of(0, prime));
    long long count = 0;
    for (;;) {
        const std::vector<Fp> c = geo.eval(sample.g, a);
        if (!c[pivot].is_zero()) {
            const Fp mu = c[pivot] * pivot_inv;
            bool proportional = true;
            for (std::size_t m = 0; m < c.size(); ++m) {
                if (c[m] != mu * sample.r0[m]) {
                    proportional = false;
                    break;
                }
            }
            if (proportional) ++count;
        }
        // odometer over F_q^dim
        int pos = 0;
        while (pos < dim) {
            auto& digit = a[static_cast<std::size_t>(pos)];
            digit = digit + fp_of(1, prime);
            if (!digit.is_zero()) break;
            ++pos;
        }
        if (pos == dim) break;
    }
    return count;
}

std::optional<bool> monotonicity_check(const Partition& p, const Partition& q, const RunConfig& cfg) {
    if (p.r() != q.r() || p.d() != q.d())
        throw std::invalid_argument("dominance comparison wants equal length and equal degree");
    if (!dominates(p, q)) throw std::invalid_argument("first partition must be below the second in dominance order");
    const DegreeReport rp = phi(p, cfg);
    const DegreeReport rq = phi(q, cfg);
    if (!rp.degree || !rq.degree) return std::nullopt;
    return *rp.degree <= *rq.degree;
}

} // namespace ramify
