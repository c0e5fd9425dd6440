#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramify/fp.hpp"
#include "ramify/matdet.hpp"
#include "ramify/rng.hpp"
#include "ramify/unipoly.hpp"

namespace ramify {

// Splitting type (a_1 <= ... <= a_r), all parts >= 1. r is the number of
// parts and d their sum; the associated scroll sits in P^(d+r-1) with
// minimal degree d.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] int r() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int d() const noexcept { return d_; }
    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int part(int j) const { return parts_.at(static_cast<std::size_t>(j)); }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) noexcept { return !(a == b); }

private:
    std::vector<int> parts_; // ascending
    int d_ = 0;
};

// P dominated by Q: same length, same sum, ascending prefix sums of P
// pointwise at most those of Q. The more eccentric splitting is smaller.
bool dominates(const Partition& p, const Partition& q);

// dim H^0(O(a_1) + ... + O(a_r)) = d + r
long long h0_dim(const Partition& p);

struct DimCheck {
    long long dim_source; // Gr(r+1, d+r)
    long long dim_target; // P H^0(E x det E x K)
    bool match;
};
DimCheck dims_match(const Partition& p);

// C(m, r) * (n - r) + C(m - 1, r)
unsigned long long kymh_lower_bound(int n, int r, int m);

// (r-1)(b-a+1) >= b + d - 1 with d = (r-1)a + b, for O(a)^(r-1) + O(b)
bool requirement_holds(int a, int b, int r);

// A section of E in coordinates: component j is a polynomial of degree
// at most a_j. Frames are ordered (r+1)-tuples of sections.
template <class R>
struct SectionT {
    std::vector<UniPoly<R>> f;
};

template <class R>
struct FrameT {
    std::vector<SectionT<R>> v;
};

// Ramification coefficients (c_1, ..., c_r), deg c_j <= a_j + d - 2.
template <class R>
struct RamCoeffsT {
    std::vector<UniPoly<R>> c;

    friend bool operator==(const RamCoeffsT& a, const RamCoeffsT& b) { return a.c == b.c; }
    friend bool operator!=(const RamCoeffsT& a, const RamCoeffsT& b) { return !(a == b); }
};

using Section = SectionT<Fp>;
using Frame = FrameT<Fp>;
using RamCoeffs = RamCoeffsT<Fp>;

template <class R>
void validate_frame(const FrameT<R>& fr, const Partition& p) {
    if (static_cast<int>(fr.v.size()) != p.r() + 1)
        throw std::invalid_argument("frame must have r+1 sections");
    for (const auto& s : fr.v) {
        if (static_cast<int>(s.f.size()) != p.r())
            throw std::invalid_argument("section must have r components");
        for (int j = 0; j < p.r(); ++j)
            if (s.f[j].degree() > p.part(j))
                throw std::invalid_argument("section component degree exceeds splitting part");
    }
}

// Ramification coefficients as the full (r+1)x(r+1) determinant with the
// derivative column placed last: c_j = det [ m_.,1 ... m_.,r  d/dt m_.,j ].
// Top-degree terms cancel, so deg c_j <= a_j + d - 2 holds automatically.
template <class R>
RamCoeffsT<R> ram_determinant(const FrameT<R>& fr, const Partition& p) {
    validate_frame(fr, p);
    const int r = p.r();
    RamCoeffsT<R> out;
    out.c.reserve(r);
    for (int j = 0; j < r; ++j) {
        std::vector<std::vector<UniPoly<R>>> m(r + 1, std::vector<UniPoly<R>>(r + 1));
        for (int i = 0; i <= r; ++i) {
            for (int col = 0; col < r; ++col) m[i][col] = fr.v[i].f[col];
            m[i][r] = fr.v[i].f[j].derivative();
        }
        out.c.push_back(det_matrix(m));
    }
    return out;
}

// Same coefficients out of the signed maximal minors: M_l carries sign
// (-1)^(l+r), which makes the sum equal the determinant route exactly
// (for even r this is the classical (-1)^l convention).
template <class R>
RamCoeffsT<R> ram_differential(const FrameT<R>& fr, const Partition& p) {
    validate_frame(fr, p);
    const int r = p.r();
    std::vector<UniPoly<R>> minor(r + 1);
    for (int l = 0; l <= r; ++l) {
        std::vector<std::vector<UniPoly<R>>> m;
        m.reserve(r);
        for (int i = 0; i <= r; ++i) {
            if (i == l) continue;
            std::vector<UniPoly<R>> row(fr.v[i].f.begin(), fr.v[i].f.end());
            m.push_back(std::move(row));
        }
        UniPoly<R> d = det_matrix(m);
        minor[l] = ((l + r) % 2 == 0) ? d : -d;
    }
    RamCoeffsT<R> out;
    out.c.reserve(r);
    for (int j = 0; j < r; ++j) {
        UniPoly<R> acc;
        for (int i = 0; i <= r; ++i) acc = acc + minor[i] * fr.v[i].f[j].derivative();
        out.c.push_back(std::move(acc));
    }
    return out;
}

template <class R>
UniPoly<R> wronskian(const UniPoly<R>& f, const UniPoly<R>& g) {
    return f * g.derivative() - f.derivative() * g;
}

// Fixed serialization: per component j the a_j + d - 1 coefficients in
// ascending order, zero padded, concatenated for j = 1..r. Total length
// rd + d - r = (r+1)(d-1) + 1.
template <class R>
std::vector<R> pack_ram(const RamCoeffsT<R>& rc, const Partition& p, const R& zero) {
    if (static_cast<int>(rc.c.size()) != p.r())
        throw std::invalid_argument("ramification coefficients must have r components");
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(p.r()) * p.d() + p.d() - p.r());
    for (int j = 0; j < p.r(); ++j) {
        const int len = p.part(j) + p.d() - 1;
        if (rc.c[j].degree() >= len)
            throw std::invalid_argument("ramification coefficient degree exceeds bound");
        for (int k = 0; k < len; ++k) out.push_back(rc.c[j].coeff_or(k, zero));
    }
    return out;
}

std::vector<Fp> pack_ram(const RamCoeffs& rc, const Partition& p, const Prime& prime);

long long ram_slot_count(const Partition& p); // rd + d - r

// Monomial basis of H^0(E): (component j, power k), j ascending, k = 0..a_j.
std::vector<std::pair<int, int>> h0_basis(const Partition& p);

// Frame out of an (r+1) x (d+r) coefficient matrix in the h0_basis layout.
template <class R>
FrameT<R> frame_from_rows(const Partition& p, const std::vector<std::vector<R>>& rows) {
    const auto basis = h0_basis(p);
    if (static_cast<int>(rows.size()) != p.r() + 1)
        throw std::invalid_argument("need r+1 rows");
    FrameT<R> fr;
    fr.v.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != basis.size()) throw std::invalid_argument("row length must be d+r");
        std::vector<std::vector<R>> comps(p.r());
        for (int j = 0; j < p.r(); ++j) comps[j].assign(p.part(j) + 1, zero_like(rows[i][0]));
        for (std::size_t b = 0; b < basis.size(); ++b)
            comps[basis[b].first][basis[b].second] = rows[i][b];
        fr.v[i].f.reserve(p.r());
        for (int j = 0; j < p.r(); ++j) fr.v[i].f.emplace_back(std::move(comps[j]));
    }
    return fr;
}

// Eccentric threefold E = O(1) + O(1) + O(k+1), frame
// {X1 + aX3, X2 + bX3, tX1 + cX3, tX2 + dX3}.
struct ThreefoldInput {
    UniPoly<Fp> a, b, c, d; // degree <= k+1
    int k = 0;
};

// Closed-form ramification (alpha, beta, gamma) = (d - bt, at - c,
// alpha'beta - beta'alpha + alpha a + beta b). Equals the determinant route
// times kThreefoldClosedVsDetSign, uniformly in k and the inputs.
inline constexpr int kThreefoldClosedVsDetSign = -1;

RamCoeffs ram_threefold_closed(const ThreefoldInput& in, const Prime& prime);
Frame threefold_frame(const ThreefoldInput& in, const Prime& prime);
Partition threefold_partition(int k);

// Dimension of infinitesimal bundle endomorphisms fixing the line spanned
// by a random ramification vector (target side) or a random (r+1)-plane of
// sections (source side), scalars removed. Minimum over three derived
// seeds; a positive target value certifies positive-dimensional stabilizer.
long long stabilizer_dim_target(const Partition& p, const Prime& prime, std::uint64_t seed);
long long stabilizer_dim_source(const Partition& p, const Prime& prime, std::uint64_t seed);

} // namespace ramify
