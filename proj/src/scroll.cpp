#include "ramify/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ramify/linalg.hpp"

namespace ramify {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (int a : parts_)
        if (a < 1) throw std::invalid_argument("partition parts must be >= 1 (ample splitting)");
    std::sort(parts_.begin(), parts_.end());
    d_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (d_ > 200) throw std::invalid_argument("partition degree too large");
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.r() != q.r() || p.d() != q.d()) return false;
    long long sp = 0, sq = 0;
    for (int i = 0; i < p.r(); ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp > sq) return false;
    }
    return true;
}

long long h0_dim(const Partition& p) { return p.d() + p.r(); }

DimCheck dims_match(const Partition& p) {
    const long long r = p.r(), d = p.d();
    DimCheck out{};
    out.dim_source = (r + 1) * (d - 1);          // dim Gr(r+1, d+r)
    out.dim_target = r * d + d - r - 1;          // dim P H^0(E x det E x K)
    out.match = out.dim_source == out.dim_target; // the minimal-degree identity
    return out;
}

namespace {

unsigned long long binom(long long m, long long r) {
    if (r < 0 || m < 0 || r > m) return 0;
    r = std::min(r, m - r);
    unsigned long long res = 1;
    for (long long i = 1; i <= r; ++i) {
        res = res * static_cast<unsigned long long>(m - r + i);
        res /= static_cast<unsigned long long>(i);
    }
    return res;
}

} // namespace

unsigned long long kymh_lower_bound(int n, int r, int m) {
    if (r < 1 || m < r || n <= r) throw std::invalid_argument("kymh_lower_bound wants m >= r >= 1 and n > r");
    return binom(m, r) * static_cast<unsigned long long>(n - r) + binom(m - 1, r);
}

bool requirement_holds(int a, int b, int r) {
    if (a < 1 || b < a || r < 2) throw std::invalid_argument("requirement_holds wants 1 <= a <= b and r >= 2");
    const long long d = static_cast<long long>(r - 1) * a + b;
    return static_cast<long long>(r - 1) * (b - a + 1) >= b + d - 1;
}

std::vector<Fp> pack_ram(const RamCoeffs& rc, const Partition& p, const Prime& prime) {
    return pack_ram(rc, p, fp_of(0, prime));
}

long long ram_slot_count(const Partition& p) {
    return static_cast<long long>(p.r()) * p.d() + p.d() - p.r();
}

std::vector<std::pair<int, int>> h0_basis(const Partition& p) {
    std::vector<std::pair<int, int>> basis;
    basis.reserve(static_cast<std::size_t>(p.d() + p.r()));
    for (int j = 0; j < p.r(); ++j)
        for (int k = 0; k <= p.part(j); ++k) basis.emplace_back(j, k);
    return basis;
}

Partition threefold_partition(int k) {
    if (k < 0) throw std::invalid_argument("threefold twist k must be >= 0");
    return Partition({1, 1, k + 1});
}

namespace {

void check_threefold(const ThreefoldInput& in) {
    if (in.k < 0) throw std::invalid_argument("threefold twist k must be >= 0");
    for (const auto* f : {&in.a, &in.b, &in.c, &in.d})
        if (f->degree() > in.k + 1)
            throw std::invalid_argument("threefold coefficient degree exceeds k+1");
}

} // namespace

RamCoeffs ram_threefold_closed(const ThreefoldInput& in, const Prime& prime) {
    check_threefold(in);
    const UniPoly<Fp> t(std::vector<Fp>{fp_of(0, prime), fp_of(1, prime)});
    UniPoly<Fp> alpha = in.d - in.b * t;
    UniPoly<Fp> beta = in.a * t - in.c;
    UniPoly<Fp> gamma =
        alpha.derivative() * beta - beta.derivative() * alpha + alpha * in.a + beta * in.b;
    return RamCoeffs{{alpha, beta, gamma}};
}

Frame threefold_frame(const ThreefoldInput& in, const Prime& prime) {
    check_threefold(in);
    const UniPoly<Fp> one = UniPoly<Fp>::constant(fp_of(1, prime));
    const UniPoly<Fp> t(std::vector<Fp>{fp_of(0, prime), fp_of(1, prime)});
    const UniPoly<Fp> zero;
    Frame fr;
    fr.v = {
        Section{{one, zero, in.a}},
        Section{{zero, one, in.b}},
        Section{{t, zero, in.c}},
        Section{{zero, t, in.d}},
    };
    return fr;
}

namespace {

// Unknown slots of an infinitesimal bundle endomorphism: entry (to, from)
// exists when a_to >= a_from and is a polynomial of degree a_to - a_from.
struct EndSlot {
    int to, from, power;
};

std::vector<EndSlot> end_slots(const Partition& p) {
    std::vector<EndSlot> slots;
    for (int j = 0; j < p.r(); ++j)
        for (int i = 0; i < p.r(); ++i) {
            if (p.part(j) < p.part(i)) continue;
            for (int m = 0; m <= p.part(j) - p.part(i); ++m) slots.push_back({j, i, m});
        }
    return slots;
}

long long target_dim_once(const Partition& p, const Prime& prime, SplitMix64 rng) {
    const int r = p.r(), d = p.d();
    // random point of P H^0(E x det E x K)
    std::vector<std::vector<Fp>> v(r);
    bool nonzero = false;
    for (int tries = 0; tries < 4 && !nonzero; ++tries) {
        for (int j = 0; j < r; ++j) {
            v[j].assign(static_cast<std::size_t>(p.part(j) + d - 1), fp_of(0, prime));
            for (auto& x : v[j]) {
                x = rng.field_elt(prime);
                nonzero = nonzero || !x.is_zero();
            }
        }
    }
    if (!nonzero) throw std::runtime_error("degenerate random draw: zero ramification vector");

    const auto slots = end_slots(p);
    const std::size_t cols = slots.size() + 1; // + scale unknown
    std::size_t rows = 0;
    for (int j = 0; j < r; ++j) rows += static_cast<std::size_t>(p.part(j) + d - 1);

    FpMat m(rows, cols, prime);
    std::size_t row = 0;
    for (int j = 0; j < r; ++j) {
        for (int s = 0; s < p.part(j) + d - 1; ++s, ++row) {
            for (std::size_t u = 0; u < slots.size(); ++u) {
                if (slots[u].to != j) continue;
                const int k = s - slots[u].power;
                if (k >= 0 && k < static_cast<int>(v[slots[u].from].size()))
                    m.at(row, u) = v[slots[u].from][static_cast<std::size_t>(k)];
            }
            m.at(row, slots.size()) = -v[j][static_cast<std::size_t>(s)];
        }
    }
    const long long nullity = static_cast<long long>(cols) - static_cast<long long>(rank(std::move(m)));
    return nullity - 1; // scalars always stabilize
}

long long source_dim_once(const Partition& p, const Prime& prime, SplitMix64 rng) {
    const int r = p.r(), d = p.d();
    const auto basis = h0_basis(p);

    // random (r+1)-plane of sections, redrawn until honestly (r+1)-dimensional
    std::vector<std::vector<std::vector<Fp>>> sec; // sec[t][j][k]
    for (int tries = 0;; ++tries) {
        if (tries >= 8) throw std::runtime_error("degenerate random draw: rank-deficient frame");
        sec.assign(static_cast<std::size_t>(r + 1), {});
        FpMat coeffs(static_cast<std::size_t>(r + 1), basis.size(), prime);
        for (int t = 0; t <= r; ++t) {
            sec[t].resize(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) {
                sec[t][j].assign(static_cast<std::size_t>(p.part(j) + 1), fp_of(0, prime));
                for (auto& x : sec[t][j]) x = rng.field_elt(prime);
            }
            for (std::size_t b = 0; b < basis.size(); ++b)
                coeffs.at(t, b) = sec[t][basis[b].first][static_cast<std::size_t>(basis[b].second)];
        }
        if (rank(std::move(coeffs)) == static_cast<std::size_t>(r + 1)) break;
    }

    const auto slots = end_slots(p);
    const std::size_t lam0 = slots.size();
    const std::size_t cols = slots.size() + static_cast<std::size_t>((r + 1) * (r + 1));
    const std::size_t rows = static_cast<std::size_t>(r + 1) * basis.size();

    FpMat m(rows, cols, prime);
    std::size_t row = 0;
    for (int t = 0; t <= r; ++t) {
        for (int j = 0; j < r; ++j) {
            for (int k = 0; k <= p.part(j); ++k, ++row) {
                for (std::size_t u = 0; u < slots.size(); ++u) {
                    if (slots[u].to != j) continue;
                    const int kk = k - slots[u].power;
                    if (kk >= 0 && kk < static_cast<int>(sec[t][slots[u].from].size()))
                        m.at(row, u) = sec[t][slots[u].from][static_cast<std::size_t>(kk)];
                }
                for (int t2 = 0; t2 <= r; ++t2)
                    m.at(row, lam0 + static_cast<std::size_t>(t * (r + 1) + t2)) =
                        -sec[t2][j][static_cast<std::size_t>(k)];
            }
        }
    }
    const long long nullity = static_cast<long long>(cols) - static_cast<long long>(rank(std::move(m)));
    return nullity - 1;
}

} // namespace

long long stabilizer_dim_target(const Partition& p, const Prime& prime, std::uint64_t seed) {
    SplitMix64 root(seed);
    long long best = -1;
    for (int trial = 0; trial < 3; ++trial) {
        long long dim = target_dim_once(p, prime, root.split());
        best = best < 0 ? dim : std::min(best, dim); // special draws only overestimate
    }
    return best;
}

long long stabilizer_dim_source(const Partition& p, const Prime& prime, std::uint64_t seed) {
    SplitMix64 root(seed);
    long long best = -1;
    for (int trial = 0; trial < 3; ++trial) {
        long long dim = source_dim_once(p, prime, root.split());
        best = best < 0 ? dim : std::min(best, dim);
    }
    return best;
}

} // namespace ramify
