#include "ramify/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace ramify {

Ideal::Ideal(RingPtr r, std::vector<MultiPoly> g) : ring(std::move(r)) {
    if (!ring) throw std::invalid_argument("ideal needs a ring");
    gens.reserve(g.size());
    for (auto& f : g) {
        if (!f.ring() || !same_ring(*f.ring(), *ring))
            throw std::invalid_argument("generator from a different ring");
        if (!f.is_zero()) gens.push_back(std::move(f));
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t max_steps;
    double max_secs;
    Clock::time_point start = Clock::now();
    std::uint64_t steps = 0;

    void charge(std::size_t basis, std::size_t pending) {
        ++steps;
        if (steps > max_steps)
            throw budget_error("reduction step budget exhausted after " + std::to_string(max_steps) +
                                   " steps (basis " + std::to_string(basis) + ", pending " +
                                   std::to_string(pending) + " pairs)",
                               steps, elapsed(), basis, pending);
        if ((steps & 0x3ffu) == 0 && elapsed() > max_secs)
            throw budget_error("wall clock budget exhausted after " + std::to_string(elapsed()) +
                                   " s (basis " + std::to_string(basis) + ", pending " +
                                   std::to_string(pending) + " pairs)",
                               steps, elapsed(), basis, pending);
    }

    [[nodiscard]] double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// The intermediate polynomial of a reduction, held as O(log n) sorted chunks
// with chunk k capped at 4^(k+1) terms. Killing one leading term then costs
// O(|reducer| + amortized carry) instead of a rebuild of the whole
// intermediate. Coefficient arithmetic is exact, so the terms drained out
// match the plain one-vector representation term for term.
class Geobucket {
public:
    Geobucket(MonomialOrder ord, const MultiPoly& f) : ord_(ord) {
        if (!f.is_zero()) insert({f.terms().begin(), f.terms().end()});
    }

    // Drains the leading term into `out`; false once the accumulator is zero.
    // Equal leading monomials across chunks are combined, cancellations skipped.
    bool pop_leading(Term& out) {
        while (true) {
            Chunk* best = nullptr;
            for (auto& c : chunks_) {
                if (c.head == c.t.size()) continue;
                if (!best || cmp(c.t[c.head].m, best->t[best->head].m, ord_) > 0) best = &c;
            }
            if (!best) return false;
            Term lead = best->t[best->head];
            ++best->head;
            for (auto& c : chunks_) {
                while (c.head < c.t.size() && c.t[c.head].m == lead.m) {
                    lead.c += c.t[c.head].c;
                    ++c.head;
                }
            }
            if (!lead.c.is_zero()) {
                out = lead;
                return true;
            }
        }
    }

    // Adds c * m * tail(g); g sorted descending, so the scaled run is too.
    void add_scaled_tail(const MultiPoly& g, const Monomial& m, const Fp& c) {
        const auto& src = g.terms();
        if (src.size() <= 1) return;
        std::vector<Term> scaled;
        scaled.reserve(src.size() - 1);
        for (std::size_t i = 1; i < src.size(); ++i) {
            Fp cc = src[i].c * c;
            if (!cc.is_zero()) scaled.push_back(Term{src[i].m * m, cc});
        }
        if (!scaled.empty()) insert(std::move(scaled));
    }

private:
    struct Chunk {
        std::vector<Term> t; // strictly descending from head on
        std::size_t head = 0;

        [[nodiscard]] std::size_t size() const noexcept { return t.size() - head; }
    };

    [[nodiscard]] std::vector<Term> merged(const Chunk& a, const std::vector<Term>& b) const {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = a.head, j = 0;
        while (i < a.t.size() && j < b.size()) {
            int c = cmp(a.t[i].m, b[j].m, ord_);
            if (c > 0) {
                out.push_back(a.t[i++]);
            } else if (c < 0) {
                out.push_back(b[j++]);
            } else {
                Fp s = a.t[i].c + b[j].c;
                if (!s.is_zero()) out.push_back(Term{a.t[i].m, s});
                ++i, ++j;
            }
        }
        out.insert(out.end(), a.t.begin() + static_cast<std::ptrdiff_t>(i), a.t.end());
        out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
        return out;
    }

    void insert(std::vector<Term> src) {
        std::size_t k = 0, cap = 4;
        while (cap < src.size()) ++k, cap *= 4;
        while (true) {
            if (k >= chunks_.size()) chunks_.resize(k + 1);
            Chunk& c = chunks_[k];
            // a carried run is at most twice the lower cap, so it fits here
            if (c.size() == 0) {
                c.t = std::move(src);
                c.head = 0;
                return;
            }
            src = merged(c, src);
            c.t.clear();
            c.head = 0;
            if (src.size() <= cap) {
                c.t = std::move(src);
                return;
            }
            ++k, cap *= 4;
        }
    }

    MonomialOrder ord_;
    std::vector<Chunk> chunks_;
};

// Full reduction against g. `scan` lists the indices to try, sorted by
// leading monomial ascending so small reducers are preferred; nullptr scans
// everything in natural order.
MultiPoly reduce_full(const MultiPoly& f, std::span<const MultiPoly> g,
                      const std::vector<int>* scan, Budget* budget, std::size_t pending) {
    if (f.is_zero()) return f;
    Geobucket h(f.ring()->order, f);
    std::vector<Term> done;
    Term lead;
    while (h.pop_leading(lead)) {
        const MultiPoly* red = nullptr;
        if (scan) {
            for (int idx : *scan) {
                const MultiPoly& cand = g[static_cast<std::size_t>(idx)];
                if (divides(cand.lm(), lead.m)) { red = &cand; break; }
            }
        } else {
            for (const auto& cand : g) {
                if (divides(cand.lm(), lead.m)) { red = &cand; break; }
            }
        }
        if (!red) {
            done.push_back(lead);
            continue;
        }
        if (budget) budget->charge(g.size(), pending);
        Fp factor = lead.c * inv(red->lc());
        h.add_scaled_tail(*red, quotient(lead.m, red->lm()), -factor);
    }
    return MultiPoly::from_terms(f.ring(), std::move(done));
}

// Leading term kept, tail fully reduced. Sound against a list containing
// the polynomial itself because no tail term is divisible by the own lm.
MultiPoly tail_reduce(const MultiPoly& f, std::span<const MultiPoly> g, Budget* budget) {
    if (f.is_zero()) return f;
    MultiPoly lead = MultiPoly::from_term(f.ring(), f.lm(), f.lc());
    return lead + reduce_full(f.tail(), g, nullptr, budget, 0);
}

struct SPair {
    Monomial l; // lcm of the two leading monomials
    int i, j;   // i < j
};

struct SPairCmp {
    MonomialOrder ord;
    bool operator()(const SPair& a, const SPair& b) const {
        int c = cmp(a.l, b.l, ord);
        if (c != 0) return c < 0; // normal selection: smallest lcm first
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

using PairSet = std::multiset<SPair, SPairCmp>;

// Gebauer-Moller update for new basis element t: discard queued pairs whose
// lcm the new leading monomial properly refines (chain criterion), group the
// new pairs by lcm, drop groups containing a coprime pair (first criterion),
// keep one representative per surviving group, and drop representatives
// whose lcm is properly divisible by another candidate lcm (chain again).
void gm_update(PairSet& pairs, const std::vector<MultiPoly>& g, int t) {
    const Monomial& lt = g[static_cast<std::size_t>(t)].lm();
    for (auto it = pairs.begin(); it != pairs.end();) {
        if (divides(lt, it->l) &&
        	lcm(g[static_cast<std::size_t>(it->i)].lm(), lt) != it->l &&
        	lcm(g[static_cast<std::size_t>(it->j)].lm(), lt) != it->l) {
            it = pairs.erase(it);
        } else {
            ++it;
        }
    }

    struct Cand {
        Monomial l;
        int i;
        bool drop = false;
    };
    std::vector<Cand> cand;
    cand.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        cand.push_back(Cand{lcm(g[static_cast<std::size_t>(i)].lm(), lt), i});

    // coprime groups die entirely
    for (auto& a : cand) {
        if (coprime(g[static_cast<std::size_t>(a.i)].lm(), lt)) {
            for (auto& b : cand)
                if (b.l == a.l) b.drop = true;
        }
    }
    // one representative per equal-lcm group: the smallest index survives
    for (std::size_t a = 0; a < cand.size(); ++a) {
        if (cand[a].drop) continue;
        for (std::size_t b = 0; b < a; ++b)
            if (!cand[b].drop && cand[b].l == cand[a].l) { cand[a].drop = true; break; }
    }
    // strict divisibility by any other candidate lcm
    for (auto& a : cand) {
        if (a.drop) continue;
        for (const auto& b : cand) {
            if (b.i == a.i || b.l == a.l) continue;
            if (divides(b.l, a.l)) { a.drop = true; break; }
        }
    }
    for (const auto& c : cand)
        if (!c.drop) pairs.insert(SPair{c.l, c.i, t});
}

std::vector<MultiPoly> minimalize(std::vector<MultiPoly> g) {
    const std::size_t n = g.size();
    std::vector<char> keep(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !divides(g[j].lm(), g[i].lm())) continue;
            if (g[j].lm() != g[i].lm() || j < i) { keep[i] = 0; break; }
        }
    }
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(std::move(g[i]));
    return out;
}

} // namespace

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> g) {
    for (const auto& p : g) {
        if (!p.ring() || !f.ring() || !same_ring(*p.ring(), *f.ring()))
            throw std::invalid_argument("normal_form across different rings");
        if (p.is_zero()) throw std::invalid_argument("normal_form against a zero polynomial");
    }
    return reduce_full(f, g, nullptr, nullptr, 0);
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& g) {
    return normal_form(f, std::span<const MultiPoly>(g.elems));
}

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerBudget& budget_in) {
    const RingPtr& ring = ideal.ring;
    const MonomialOrder ord = ring->order;
    Budget budget{budget_in.max_steps, budget_in.max_secs};

    std::vector<MultiPoly> g;
    std::vector<int> scan;
    PairSet pairs{SPairCmp{ord}};

    auto append = [&](MultiPoly h) {
        g.push_back(h.monic());
        const int t = static_cast<int>(g.size()) - 1;
        gm_update(pairs, g, t);
        auto pos = std::lower_bound(scan.begin(), scan.end(), t, [&](int a, int b) {
            return cmp(g[static_cast<std::size_t>(a)].lm(), g[static_cast<std::size_t>(b)].lm(), ord) < 0;
        });
        scan.insert(pos, t);
    };

    for (const auto& f : ideal.gens) {
        MultiPoly h = reduce_full(f, g, &scan, &budget, pairs.size());
        if (!h.is_zero()) append(std::move(h));
    }

    while (!pairs.empty()) {
        SPair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const MultiPoly& gi = g[static_cast<std::size_t>(pr.i)];
        const MultiPoly& gj = g[static_cast<std::size_t>(pr.j)];
        const Fp one = fp_of(1, ring->p);
        MultiPoly s =
            gi.mul_term(quotient(pr.l, gi.lm()), one) - gj.mul_term(quotient(pr.l, gj.lm()), one);
        MultiPoly h = reduce_full(s, g, &scan, &budget, pairs.size());
        if (!h.is_zero()) append(std::move(h));
    }

    std::vector<MultiPoly> out = minimalize(std::move(g));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            MultiPoly r = tail_reduce(out[i], out, &budget);
            if (r != out[i]) {
                out[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return cmp(a.lm(), b.lm(), ord) < 0;
    });
    return GroebnerBasis{ring, std::move(out)};
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    if (gb.elems.empty()) return false; // zero ideal
    for (const auto& f : gb.elems)
        if (f.is_constant()) return true; // unit ideal, empty variety
    const int n = gb.ring->nvars();
    for (int i = 0; i < n; ++i) {
        bool pure = false;
        for (const auto& f : gb.elems) {
            const Monomial& m = f.lm();
            if (m.e[i] != 0 && m.deg == m.e[i]) { pure = true; break; }
        }
        if (!pure) return false;
    }
    return true;
}

namespace {

long long count_standard(const std::vector<Monomial>& lms, Monomial& cur, int var,
                         const std::vector<int>& bound) {
    if (var == cur.n) return 1;
    long long total = 0;
    for (int e = 0; e < bound[static_cast<std::size_t>(var)]; ++e) {
        cur.e[var] = static_cast<std::uint8_t>(e);
        bool divisible = false;
        for (const auto& m : lms) {
            bool applicable = true;
            for (int k = var + 1; k < cur.n; ++k)
                if (m.e[k] != 0) { applicable = false; break; }
            if (!applicable) continue;
            bool div = true;
            for (int k = 0; k <= var; ++k)
                if (m.e[k] > cur.e[k]) { div = false; break; }
            if (div) { divisible = true; break; }
        }
        if (!divisible) total += count_standard(lms, cur, var + 1, bound);
    }
    cur.e[var] = 0;
    return total;
}

} // namespace

long long quotient_dimension(const GroebnerBasis& gb) {
    if (!is_zero_dimensional(gb))
        throw std::invalid_argument("quotient_dimension requires a zero-dimensional basis");
    for (const auto& f : gb.elems)
        if (f.is_constant()) return 0;
    const int n = gb.ring->nvars();
    std::vector<Monomial> lms;
    lms.reserve(gb.elems.size());
    for (const auto& f : gb.elems) lms.push_back(f.lm());
    std::vector<int> bound(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (const auto& m : lms)
            if (m.e[i] != 0 && m.deg == m.e[i]) best = best < 0 ? m.e[i] : std::min(best, int(m.e[i]));
        bound[static_cast<std::size_t>(i)] = best;
    }
    Monomial cur = Monomial::one(n);
    return count_standard(lms, cur, 0, bound);
}

bool in_ideal(const MultiPoly& f, const GroebnerBasis& g) {
    return normal_form(f, g).is_zero();
}

} // namespace ramify
