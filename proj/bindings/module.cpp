// Python bindings for the degree, rank and ramification entry points.
// Reports come back as plain dicts mirroring the CLI JSON wire form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ramify/degree.hpp"
#include "ramify/schubert.hpp"
#include "ramify/scroll.hpp"
#include "ramify/variation.hpp"

namespace py = pybind11;
using namespace ramify;

namespace {

py::int_ big_to_py(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

RunConfig make_config(const std::optional<std::vector<std::uint32_t>>& primes, int trials_per_prime,
                      std::uint64_t seed, std::optional<std::uint64_t> budget_steps,
                      std::optional<double> budget_secs, int parallelism, bool timing) {
    RunConfig cfg;
    if (primes) cfg.primes = *primes;
    cfg.trials_per_prime = trials_per_prime;
    cfg.seed = seed;
    if (budget_steps) cfg.budget.max_steps = *budget_steps;
    if (budget_secs) cfg.budget.max_secs = *budget_secs;
    cfg.parallelism = parallelism;
    cfg.record_timing = timing;
    return cfg;
}

py::dict degree_dict(const DegreeReport& rep) {
    py::dict d;
    if (rep.partition.empty()) d["geometry"] = rep.geometry;
    else d["partition"] = rep.partition;
    d["degree"] = rep.degree ? py::object(py::int_(*rep.degree)) : py::object(py::none());
    d["agreement"] = rep.agreement;
    py::list trials;
    for (const auto& t : rep.trials) {
        py::dict tr;
        tr["prime"] = t.prime;
        tr["seed"] = t.seed;
        tr["value"] = t.value ? py::object(py::int_(*t.value)) : py::object(py::none());
        tr["zero_dim"] = t.zero_dim;
        tr["ms"] = t.ms;
        tr["budget_hit"] = t.budget_hit;
        trials.append(tr);
    }
    d["trials"] = trials;
    return d;
}

py::dict rank_dict(const RankReport& rep) {
    py::dict d;
    d["partition"] = rep.partition;
    d["dim_gr"] = rep.dim_gr;
    d["rank"] = rep.rank;
    d["maximal_variation"] = rep.maximal_variation;
    py::list trials;
    for (const auto& t : rep.trials) {
        py::dict tr;
        tr["prime"] = t.prime;
        tr["seed"] = t.seed;
        tr["rank"] = t.rank;
        tr["ms"] = t.ms;
        trials.append(tr);
    }
    d["trials"] = trials;
    return d;
}

constexpr const char* kConfigArgsDoc =
    "primes: moduli for the randomized trials (default 32003, 1000003); "
    "trials_per_prime, seed, budget_steps, budget_secs, parallelism, timing "
    "mirror the CLI flags.";

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degrees and generic finiteness of ramification assignments on "
              "rational normal scrolls, plus the Veronese net of conics.";

    m.def(
        "phi",
        [](const std::vector<int>& parts, std::optional<std::vector<std::uint32_t>> primes,
           int trials_per_prime, std::uint64_t seed, std::optional<std::uint64_t> budget_steps,
           std::optional<double> budget_secs, int parallelism, bool timing) {
            const RunConfig cfg = make_config(primes, trials_per_prime, seed, budget_steps,
                                              budget_secs, parallelism, timing);
            return degree_dict(phi(Partition(parts), cfg));
        },
        py::arg("parts"), py::kw_only(), py::arg("primes") = std::nullopt,
        py::arg("trials_per_prime") = 3, py::arg("seed") = 2026,
        py::arg("budget_steps") = std::nullopt, py::arg("budget_secs") = std::nullopt,
        py::arg("parallelism") = 4, py::arg("timing") = true,
        (std::string("Consensus degree report for the splitting type `parts`. ") + kConfigArgsDoc)
            .c_str());

    m.def(
        "veronese",
        [](std::optional<std::vector<std::uint32_t>> primes, int trials_per_prime,
           std::uint64_t seed, std::optional<std::uint64_t> budget_steps,
           std::optional<double> budget_secs, int parallelism, bool timing) {
            const RunConfig cfg = make_config(primes, trials_per_prime, seed, budget_steps,
                                              budget_secs, parallelism, timing);
            return degree_dict(veronese_degree(cfg));
        },
        py::kw_only(), py::arg("primes") = std::nullopt, py::arg("trials_per_prime") = 3,
        py::arg("seed") = 2026, py::arg("budget_steps") = std::nullopt,
        py::arg("budget_secs") = std::nullopt, py::arg("parallelism") = 4,
        py::arg("timing") = true,
        (std::string("Consensus degree report for the net-of-conics geometry. ") + kConfigArgsDoc)
            .c_str());

    m.def(
        "rank",
        [](const std::vector<int>& parts, std::optional<std::vector<std::uint32_t>> primes,
           int trials_per_prime, std::uint64_t seed, std::optional<std::uint64_t> budget_steps,
           std::optional<double> budget_secs, int parallelism, bool timing) {
            const RunConfig cfg = make_config(primes, trials_per_prime, seed, budget_steps,
                                              budget_secs, parallelism, timing);
            return rank_dict(is_maximal_variation(Partition(parts), cfg));
        },
        py::arg("parts"), py::kw_only(), py::arg("primes") = std::nullopt,
        py::arg("trials_per_prime") = 3, py::arg("seed") = 2026,
        py::arg("budget_steps") = std::nullopt, py::arg("budget_secs") = std::nullopt,
        py::arg("parallelism") = 4, py::arg("timing") = true,
        (std::string("Maximal-variation verdict via randomized differential ranks. ") +
         kConfigArgsDoc)
            .c_str());

    m.def(
        "monotonicity",
        [](const std::vector<int>& p, const std::vector<int>& q,
           std::optional<std::vector<std::uint32_t>> primes, int trials_per_prime,
           std::uint64_t seed, std::optional<std::uint64_t> budget_steps,
           std::optional<double> budget_secs, int parallelism, bool timing) -> py::object {
            const RunConfig cfg = make_config(primes, trials_per_prime, seed, budget_steps,
                                              budget_secs, parallelism, timing);
            const auto v = monotonicity_check(Partition(p), Partition(q), cfg);
            return v ? py::object(py::bool_(*v)) : py::object(py::none());
        },
        py::arg("p"), py::arg("q"), py::kw_only(), py::arg("primes") = std::nullopt,
        py::arg("trials_per_prime") = 3, py::arg("seed") = 2026,
        py::arg("budget_steps") = std::nullopt, py::arg("budget_secs") = std::nullopt,
        py::arg("parallelism") = 4, py::arg("timing") = true,
        "Degree comparison along a dominance-order edge; None when either side "
        "lacks consensus. Requires p dominated by q.");

    m.def(
        "catalan",
        [](int n) { return big_to_py(catalan_closed(n)); }, py::arg("n"),
        "(2n-2)! / (n! (n-1)!), the expected count of degenerations of a "
        "rational normal curve of degree n.");

    m.def(
        "plucker_degree",
        [](int k, int n) { return big_to_py(plucker_degree(k, n)); }, py::arg("k"), py::arg("n"),
        "Top self-intersection of the hyperplane class of Gr(k, n), by "
        "iterated Pieri steps.");

    m.def(
        "h0_dim", [](const std::vector<int>& parts) { return h0_dim(Partition(parts)); },
        py::arg("parts"), "dim H^0 of the bundle with the given splitting type: d + r.");

    m.def(
        "dims",
        [](const std::vector<int>& parts) {
            const DimCheck c = dims_match(Partition(parts));
            py::dict d;
            d["dim_source"] = c.dim_source;
            d["dim_target"] = c.dim_target;
            d["match"] = c.match;
            return d;
        },
        py::arg("parts"),
        "Source Grassmannian and target projective-space dimensions, and "
        "whether they agree.");

    m.def(
        "dominates",
        [](const std::vector<int>& p, const std::vector<int>& q) {
            return dominates(Partition(p), Partition(q));
        },
        py::arg("p"), py::arg("q"),
        "Dominance order on splitting types of equal length and degree.");

    m.def("requirement_holds", &requirement_holds, py::arg("a"), py::arg("b"), py::arg("r"),
          "(r-1)(b-a+1) >= b + d - 1 for the splitting O(a)^(r-1) + O(b).");

    m.def(
        "ram_coefficients",
        [](const std::vector<int>& parts, const std::vector<std::vector<std::int64_t>>& rows,
           std::uint32_t prime) {
            const Partition p(parts);
            const Prime pr(prime);
            std::vector<std::vector<Fp>> lifted;
            lifted.reserve(rows.size());
            for (const auto& row : rows) {
                std::vector<Fp> out;
                out.reserve(row.size());
                for (std::int64_t v : row) out.push_back(fp_of(v, pr));
                lifted.push_back(std::move(out));
            }
            const Frame fr = frame_from_rows(p, lifted);
            const RamCoeffs rc = ram_determinant(fr, p);
            std::vector<std::vector<std::uint32_t>> coeffs;
            coeffs.reserve(rc.c.size());
            for (const auto& c : rc.c) {
                std::vector<std::uint32_t> one;
                one.reserve(c.coeffs().size());
                for (const auto& x : c.coeffs()) one.push_back(x.v);
                coeffs.push_back(std::move(one));
            }
            return coeffs;
        },
        py::arg("parts"), py::arg("rows"), py::arg("prime"),
        "Ramification coefficients of a frame given as an (r+1) x (d+r) "
        "integer matrix in the monomial basis (component-major, powers "
        "ascending). Returns r coefficient lists, ascending powers, reduced "
        "mod prime.");

    m.attr("DEFAULT_PRIMES") = std::vector<std::uint32_t>{kDefaultPrimes[0], kDefaultPrimes[1],
                                                          kDefaultPrimes[2]};
}
