#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ramify/fp.hpp"
#include "ramify/monomial.hpp"

namespace ramify {

// Immutable ring descriptor shared by all polynomials living in it.
// Variable priority is positional: vars[0] is most significant. For the
// fiber ideals this puts chart variables first and (lam, u) last.
struct PolyRing {
    Prime p;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex;

    [[nodiscard]] int nvars() const noexcept { return static_cast<int>(vars.size()); }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Prime p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::degrevlex);

bool same_ring(const PolyRing& a, const PolyRing& b) noexcept;

struct Term {
    Monomial m;
    Fp c;

    friend bool operator==(const Term& a, const Term& b) noexcept { return a.m == b.m && a.c == b.c; }
};

// Sparse multivariate polynomial, terms strictly descending in the ring
// order with no zero coefficients; the representation is canonical.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, Fp c);
    static MultiPoly constant(const RingPtr& ring, std::int64_t c);
    static MultiPoly variable(RingPtr ring, int i, int exp = 1);
    static MultiPoly from_term(RingPtr ring, Monomial m, Fp c);
    // Terms in any order, duplicates allowed; normalized on construction.
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

    [[nodiscard]] const RingPtr& ring() const noexcept { return ring_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return t_; }
    [[nodiscard]] bool is_zero() const noexcept { return t_.empty(); }
    [[nodiscard]] std::size_t nterms() const noexcept { return t_.size(); }
    [[nodiscard]] int total_degree() const noexcept; // -1 for zero

    [[nodiscard]] const Monomial& lm() const;
    [[nodiscard]] const Fp& lc() const;
    [[nodiscard]] bool is_constant() const noexcept {
        return t_.empty() || (t_.size() == 1 && t_[0].m.is_one());
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Fp& s, const MultiPoly& a);

    // this * (c . m)
    [[nodiscard]] MultiPoly mul_term(const Monomial& m, const Fp& c) const;
    // this - c . m . g, the single Buchberger reduction step
    [[nodiscard]] MultiPoly sub_scaled(const Fp& c, const Monomial& m, const MultiPoly& g) const;

    [[nodiscard]] MultiPoly monic() const;
    // Everything below the leading term. No tail term is divisible by the
    // own leading monomial (orders refine divisibility).
    [[nodiscard]] MultiPoly tail() const;
    [[nodiscard]] MultiPoly derivative(int var) const;

    [[nodiscard]] Fp eval(std::span<const Fp> point) const;
    // Substitute constants for the variables where assigned[i] has a value;
    // the result still lives in the same ring.
    [[nodiscard]] MultiPoly eval_partial(const std::vector<std::pair<int, Fp>>& assignments) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    friend class MultiPolyBuilder;
    RingPtr ring_;
    std::vector<Term> t_;
};

// negative / 0 / positive, a deterministic total order on normalized
// polynomials of one ring (leading terms first).
int poly_cmp(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly zero_like(const MultiPoly& a) { return MultiPoly::zero(a.ring()); }
MultiPoly one_like(const MultiPoly& a);
MultiPoly mul_small(const MultiPoly& a, std::uint64_t n);
inline MultiPoly lift_like(const MultiPoly& model, const Fp& c) { return MultiPoly::constant(model.ring(), c); }

// Canonical text form: terms descending, explicit '*' and '^', coefficients
// as canonical representatives. parse_poly accepts the same grammar plus
// leading '-' and arbitrary integer coefficients, reduced into the field.
MultiPoly parse_poly(const RingPtr& ring, const std::string& text);

void check_same_ring(const MultiPoly& a, const MultiPoly& b);

} // namespace ramify
