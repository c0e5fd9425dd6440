#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramify/multipoly.hpp"

namespace ramify {

struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> gens; // zero generators dropped on construction

    Ideal(RingPtr r, std::vector<MultiPoly> g);
};

// Reduced Groebner basis: monic, pairwise tail-reduced, sorted by leading
// monomial ascending. Unique per (ideal, order), so equality of bases is
// equality of ideals.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<MultiPoly> elems;
};

struct BuchbergerBudget {
    std::uint64_t max_steps = 10'000'000; // single-term reduction steps
    double max_secs = 300.0;
};

class budget_error : public std::runtime_error {
public:
    budget_error(std::string what, std::uint64_t steps, double secs, std::size_t basis, std::size_t pending)
        : std::runtime_error(std::move(what)), steps(steps), secs(secs), basis_size(basis), pending_pairs(pending) {}

    std::uint64_t steps;
    double secs;
    std::size_t basis_size;
    std::size_t pending_pairs;
};

// Remainder of multivariate division by the (not necessarily Groebner)
// family G: no term of the result is divisible by any leading monomial.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> g);
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g);

// Buchberger with normal pair selection (smallest lcm first) and the
// coprime and chain criteria, Gebauer-Moller style bookkeeping.
GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerBudget& budget = {});

bool is_zero_dimensional(const GroebnerBasis& g);

// Number of standard monomials = dim of the quotient as a vector space.
// Structural error unless the basis is zero-dimensional.
long long quotient_dimension(const GroebnerBasis& g);

bool in_ideal(const MultiPoly& f, const GroebnerBasis& g);

} // namespace ramify
