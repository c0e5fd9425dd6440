#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ramify/fp.hpp"
#include "ramify/linalg.hpp"
#include "ramify/rng.hpp"
#include "ramify/unipoly.hpp"

namespace ramify {

// Monomials of fixed total degree m in x, y, z, laid out graded-lex:
// exponent of x descending, then exponent of y descending. Degree 2 is
// x^2, xy, xz, y^2, yz, z^2; the layout is part of the wire format.
inline int ternary_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

inline int ternary_index(int degree, int ex, int ey) {
    const int block = degree - ex;
    return block * (block + 1) / 2 + (block - ey);
}

// (ex, ey, ez) of slot i in degree m, inverse of ternary_index.
std::array<int, 3> ternary_exponents(int degree, int index);

template <class R>
struct TernaryFormT {
    int degree = 0;
    std::vector<R> coeff; // length ternary_count(degree)

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const TernaryFormT& a, const TernaryFormT& b) {
        return a.degree == b.degree && a.coeff == b.coeff;
    }
    friend bool operator!=(const TernaryFormT& a, const TernaryFormT& b) { return !(a == b); }
};

using TernaryForm = TernaryFormT<Fp>;

template <class R>
TernaryFormT<R> ternary_zero(int degree, const R& model) {
    return TernaryFormT<R>{degree, std::vector<R>(static_cast<std::size_t>(ternary_count(degree)), zero_like(model))};
}

template <class R>
void ternary_check(const TernaryFormT<R>& f) {
    if (f.degree < 0 || static_cast<int>(f.coeff.size()) != ternary_count(f.degree))
        throw std::invalid_argument("ternary form coefficient vector has the wrong length for its degree");
}

template <class R>
TernaryFormT<R> operator+(const TernaryFormT<R>& a, const TernaryFormT<R>& b) {
    ternary_check(a);
    ternary_check(b);
    if (a.degree != b.degree) throw std::invalid_argument("ternary forms of different degrees");
    TernaryFormT<R> out = a;
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = out.coeff[i] + b.coeff[i];
    return out;
}

template <class R>
TernaryFormT<R> operator-(const TernaryFormT<R>& a, const TernaryFormT<R>& b) {
    ternary_check(a);
    ternary_check(b);
    if (a.degree != b.degree) throw std::invalid_argument("ternary forms of different degrees");
    TernaryFormT<R> out = a;
    for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] = out.coeff[i] - b.coeff[i];
    return out;
}

template <class R>
TernaryFormT<R> operator*(const R& s, const TernaryFormT<R>& a) {
    TernaryFormT<R> out = a;
    for (auto& c : out.coeff) c = s * c;
    return out;
}

template <class R>
TernaryFormT<R> operator*(const TernaryFormT<R>& a, const TernaryFormT<R>& b) {
    ternary_check(a);
    ternary_check(b);
    if (a.coeff.empty() || b.coeff.empty()) throw std::invalid_argument("empty ternary form");
    TernaryFormT<R> out = ternary_zero(a.degree + b.degree, a.coeff[0]);
    for (int i = 0; i < static_cast<int>(a.coeff.size()); ++i) {
        if (a.coeff[static_cast<std::size_t>(i)].is_zero()) continue;
        const auto ea = ternary_exponents(a.degree, i);
        for (int j = 0; j < static_cast<int>(b.coeff.size()); ++j) {
            if (b.coeff[static_cast<std::size_t>(j)].is_zero()) continue;
            const auto eb = ternary_exponents(b.degree, j);
            const int k = ternary_index(out.degree, ea[0] + eb[0], ea[1] + eb[1]);
            out.coeff[static_cast<std::size_t>(k)] =
                out.coeff[static_cast<std::size_t>(k)] + a.coeff[static_cast<std::size_t>(i)] * b.coeff[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// d/dx, d/dy or d/dz by var index 0..2; degree drops by one.
template <class R>
TernaryFormT<R> ternary_partial(const TernaryFormT<R>& f, int var) {
    ternary_check(f);
    if (var < 0 || var > 2) throw std::invalid_argument("ternary variable index must be 0, 1 or 2");
    if (f.degree == 0) throw std::invalid_argument("cannot differentiate a degree-0 ternary form");
    TernaryFormT<R> out = ternary_zero(f.degree - 1, f.coeff[0]);
    for (int i = 0; i < static_cast<int>(f.coeff.size()); ++i) {
        auto e = ternary_exponents(f.degree, i);
        if (e[static_cast<std::size_t>(var)] == 0) continue;
        const int mult = e[static_cast<std::size_t>(var)];
        e[static_cast<std::size_t>(var)] -= 1;
        const int k = ternary_index(out.degree, e[0], e[1]);
        out.coeff[static_cast<std::size_t>(k)] =
            out.coeff[static_cast<std::size_t>(k)] + mul_small(f.coeff[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(mult));
    }
    return out;
}

template <class R>
R ternary_eval(const TernaryFormT<R>& f, const R& x, const R& y, const R& z) {
    ternary_check(f);
    R acc = zero_like(x);
    for (int i = 0; i < static_cast<int>(f.coeff.size()); ++i) {
        if (f.coeff[static_cast<std::size_t>(i)].is_zero()) continue;
        const auto e = ternary_exponents(f.degree, i);
        R t = f.coeff[static_cast<std::size_t>(i)];
        for (int k = 0; k < e[0]; ++k) t = t * x;
        for (int k = 0; k < e[1]; ++k) t = t * y;
        for (int k = 0; k < e[2]; ++k) t = t * z;
        acc = acc + t;
    }
    return acc;
}

// f(g . (x,y,z)): substitute the linear change of coordinates given by the
// rows of g. Used for the chain-rule covariance checks.
template <class R>
TernaryFormT<R> ternary_subst(const TernaryFormT<R>& f, const std::array<std::array<R, 3>, 3>& g) {
    ternary_check(f);
    if (f.coeff.empty()) throw std::invalid_argument("empty ternary form");
    std::array<TernaryFormT<R>, 3> lin;
    for (int i = 0; i < 3; ++i) {
        lin[static_cast<std::size_t>(i)] = ternary_zero(1, f.coeff[0]);
        for (int j = 0; j < 3; ++j) lin[static_cast<std::size_t>(i)].coeff[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    TernaryFormT<R> acc = ternary_zero(f.degree, f.coeff[0]);
    for (int i = 0; i < static_cast<int>(f.coeff.size()); ++i) {
        if (f.coeff[static_cast<std::size_t>(i)].is_zero()) continue;
        const auto e = ternary_exponents(f.degree, i);
        TernaryFormT<R> t = ternary_zero(0, f.coeff[0]);
        t.coeff[0] = f.coeff[static_cast<std::size_t>(i)];
        for (int k = 0; k < e[0]; ++k) t = t * lin[0];
        for (int k = 0; k < e[1]; ++k) t = t * lin[1];
        for (int k = 0; k < e[2]; ++k) t = t * lin[2];
        acc = acc + t;
    }
    return acc;
}

// Determinant of the matrix of partials (dq_i/dx_j) of three ternary
// quadrics: the cubic traced out by the nodes of the singular members of
// the net. Expansion over the first column keeps everything in ternary
// forms; entries are linear so the product depth is 3.
template <class R>
TernaryFormT<R> jacobian_cubic(const TernaryFormT<R>& q1, const TernaryFormT<R>& q2, const TernaryFormT<R>& q3) {
    for (const auto* q : {&q1, &q2, &q3}) {
        ternary_check(*q);
        if (q->degree != 2) throw std::invalid_argument("jacobian_cubic wants degree-2 ternary forms");
    }
    std::array<std::array<TernaryFormT<R>, 3>, 3> j;
    const std::array<const TernaryFormT<R>*, 3> qs = {&q1, &q2, &q3};
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col)
            j[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = ternary_partial(*qs[static_cast<std::size_t>(row)], col);
    auto minor2 = [&](int r1, int r2, int c1, int c2) {
        return j[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] * j[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -
               j[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] * j[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)];
    };
    return j[0][0] * minor2(1, 2, 1, 2) - j[1][0] * minor2(0, 2, 1, 2) + j[2][0] * minor2(0, 1, 1, 2);
}

// Gradient map of a smooth quadric: pt -> Q pt, a linear isomorphism of
// projective spaces (the factor 2 is absorbed by projective equivalence).
std::vector<Fp> quadric_polarity(const FpMat& q, std::span<const Fp> pt);

// Smooth plane conic as a symmetric 3x3 matrix; q(v) = v^T M v.
class Conic {
public:
    explicit Conic(FpMat sym);

    [[nodiscard]] const FpMat& matrix() const noexcept { return m_; }
    [[nodiscard]] const Prime& prime() const noexcept { return prime_; }

    [[nodiscard]] Fp apply(std::span<const Fp> v) const;
    [[nodiscard]] Fp bilinear(std::span<const Fp> u, std::span<const Fp> v) const;
    [[nodiscard]] Fp det() const;
    [[nodiscard]] bool smooth() const;

    // Degree-2 ternary form: diagonal entries are the square coefficients,
    // off-diagonal entries half the mixed ones, and back.
    static Conic from_form(const TernaryForm& f);
    [[nodiscard]] TernaryForm to_form() const;

private:
    FpMat m_;
    Prime prime_;
};

// Degree-2 parametrization s -> basis . (1, s, c2 s^2) of a smooth conic,
// built from a deterministic search for rational points: in the basis
// (P0, P1, P2) with P0, P2 on the conic and P1 the intersection of their
// tangents, the equation becomes alpha xz + beta y^2.
struct ConicParam {
    FpMat basis;  // columns P0, P1, P2
    Fp c2;        // -beta/alpha
    FpMat push;   // line coefficients -> pullback coefficients (1, s, s^2)

    [[nodiscard]] UniPoly<Fp> pullback(const TernaryForm& line) const;
    [[nodiscard]] std::array<Fp, 3> point_at(const Fp& s) const;
    [[nodiscard]] std::array<Fp, 3> point_at_infinity() const;
};

ConicParam parametrize(const Conic& q);

// Rational points of a line meeting a smooth conic (0, 1 or 2 of them).
std::vector<std::array<Fp, 3>> line_conic_points(const Conic& q, const TernaryForm& line);

// The line cutting the ramification divisor of the pencil spanned by two
// independent lines on a smooth conic: pull both back along a
// parametrization, take the Wronskian, solve the pullback system to land
// back in line coordinates. Result is normalized monic at its first
// nonzero coefficient; a pencil tangent at a common point has identically
// zero Wronskian and is rejected.
TernaryForm ram_line_of_pencil(const TernaryForm& li, const TernaryForm& lj, const Conic& q);

// Image of span{L1 R23, L2 R13, L3 R12} in the 5-dimensional quotient
// Sym^2 / <q>, as a reduced-echelon 2x5 basis. dropped_index is the
// graded-lex slot eliminated against q's leading coefficient; it depends
// only on q, so equal images compare bit-exactly.
struct MuImage {
    FpMat basis; // 2 x 5, reduced echelon
    int dropped_index = 0;

    friend bool operator==(const MuImage& a, const MuImage& b);
    friend bool operator!=(const MuImage& a, const MuImage& b) { return !(a == b); }
};

MuImage mu_triangle(const TernaryForm& l1, const TernaryForm& l2, const TernaryForm& l3, const Conic& q);

// Polar conjugate triangle: M_i is the polar line of the vertex L_j ^ L_k
// (cross product of coefficient vectors, then the polarity matrix). Lines
// come back monic; the construction is an involution up to scale.
std::array<TernaryForm, 3> polar_conjugate(const Conic& q, const TernaryForm& l1, const TernaryForm& l2,
                                           const TernaryForm& l3);

// First nonzero coefficient scaled to 1; zero forms are rejected.
TernaryForm monic_ternary(const TernaryForm& f);

TernaryForm random_ternary(int degree, const Prime& prime, SplitMix64& rng);

} // namespace ramify
