#include "ramify/variation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>

#include "ramify/dual.hpp"

namespace ramify {

namespace {

// [L | c(A0)] at the sampled chart point; slots x (N+1).
FpMat differential_matrix(const Partition& p, const Prime& prime, const ChartSample& sample) {
    const int dim = (p.r() + 1) * (p.d() - 1);
    const auto slots = static_cast<std::size_t>(ram_slot_count(p));
    const Fp zero = fp_of(0, prime);
    const Fp one = fp_of(1, prime);
    FpMat m(slots, static_cast<std::size_t>(dim) + 1, prime);
    std::vector<Dual> a(static_cast<std::size_t>(dim));
    for (int dir = 0; dir < dim; ++dir) {
        for (int i = 0; i < dim; ++i)
            a[static_cast<std::size_t>(i)] = dual_of(sample.a0[static_cast<std::size_t>(i)], i == dir ? one : zero);
        const std::vector<Dual> c = scroll_chart_eval<Dual>(p, sample.g, a, dual_of(zero));
        for (std::size_t s = 0; s < slots; ++s) m.at(s, static_cast<std::size_t>(dir)) = c[s].b;
    }
    for (std::size_t s = 0; s < slots; ++s) m.at(s, static_cast<std::size_t>(dim)) = sample.r0[s];
    return m;
}

} // namespace

long long jacobian_rank(const Partition& p, const Prime& prime, std::uint64_t seed) {
    const ScrollGeometry geo(p);
    const ChartSample sample = sample_chart(geo, prime, seed);
    const FpMat m = differential_matrix(p, prime, sample);
    return static_cast<long long>(rank(m)) - 1;
}

RankReport is_maximal_variation(const Partition& p, const RunConfig& cfg) {
    validate_config(cfg);
    const long long dim_gr = static_cast<long long>(p.r() + 1) * (p.d() - 1);

    struct Job {
        std::uint32_t prime;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::uint32_t prime : cfg.primes)
        for (int j = 0; j < cfg.trials_per_prime; ++j) jobs.push_back({prime, trial_seed(cfg.seed, prime, j)});
    // Rank only drops at special points, so a negative answer gets five
    // extra draws before it is believed; the loop below runs them only if
    // the first batch missed full rank.
    std::vector<Job> extra;
    for (int t = 0; t < 5; ++t) {
        const std::uint32_t prime = cfg.primes[static_cast<std::size_t>(t) % cfg.primes.size()];
        extra.push_back({prime, trial_seed(cfg.seed, prime, cfg.trials_per_prime + t)});
    }

    RankReport rep;
    rep.partition = p.parts();
    rep.dim_gr = dim_gr;

    auto run_batch = [&](const std::vector<Job>& batch) {
        std::vector<RankTrial> records(batch.size());
        std::vector<std::exception_ptr> errors(batch.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= batch.size()) return;
                try {
                    const auto t0 = std::chrono::steady_clock::now();
                    RankTrial rec;
                    rec.prime = batch[i].prime;
                    rec.seed = batch[i].seed;
                    rec.rank = jacobian_rank(p, Prime(batch[i].prime), batch[i].seed);
                    if (cfg.record_timing) {
                        const auto t1 = std::chrono::steady_clock::now();
                        rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                    }
                    records[i] = rec;
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        const std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(cfg.parallelism), batch.size());
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
        for (auto& rec : records) rep.trials.push_back(rec);
    };

    run_batch(jobs);
    rep.rank = 0;
    for (const auto& t : rep.trials) rep.rank = std::max(rep.rank, t.rank);
    if (rep.rank != dim_gr) {
        run_batch(extra);
        for (const auto& t : rep.trials) rep.rank = std::max(rep.rank, t.rank);
    }
    rep.maximal_variation = rep.rank == dim_gr;
    return rep;
}

bool dual_number_consistency(const Partition& p, const Prime& prime, std::uint64_t seed) {
    const ScrollGeometry geo(p);
    const ChartSample sample = sample_chart(geo, prime, seed);
    const int dim = geo.chart_dim();
    const auto slots = static_cast<std::size_t>(geo.slots());

    RingPtr ring = make_ring(prime, [&] {
        std::vector<std::string> names;
        for (int i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i));
        return names;
    }());
    const std::vector<MultiPoly> cs = geo.symbolic(sample.g, ring);

    FpMat jac(slots, static_cast<std::size_t>(dim), prime);
    for (std::size_t m = 0; m < slots; ++m)
        for (int n = 0; n < dim; ++n)
            jac.at(m, static_cast<std::size_t>(n)) = cs[m].derivative(n).eval(sample.a0);

    const Fp zero = fp_of(0, prime);
    SplitMix64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::vector<Dual> a(static_cast<std::size_t>(dim));
    for (int round = 0; round < 10; ++round) {
        std::vector<Fp> b(static_cast<std::size_t>(dim), zero);
        for (auto& c : b) c = rng.field_elt(prime);
        for (int i = 0; i < dim; ++i) a[static_cast<std::size_t>(i)] = dual_of(sample.a0[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        const std::vector<Dual> c = scroll_chart_eval<Dual>(p, sample.g, a, dual_of(zero));
        for (std::size_t m = 0; m < slots; ++m) {
            Fp expected = zero;
            for (int n = 0; n < dim; ++n) expected += jac.at(m, static_cast<std::size_t>(n)) * b[static_cast<std::size_t>(n)];
            if (c[m].b != expected) return false;
        }
    }
    return true;
}

} // namespace ramify
