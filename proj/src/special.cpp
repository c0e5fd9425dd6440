#include "ramify/special.hpp"

#include <utility>

namespace ramify {

namespace {

Fp dot3(std::span<const Fp> u, std::span<const Fp> v) {
    Fp acc = zero_like(u[0]);
    for (int i = 0; i < 3; ++i) acc += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    return acc;
}

std::array<Fp, 3> cross3(std::span<const Fp> u, std::span<const Fp> v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

void check_linear(const TernaryForm& l, const char* who) {
    ternary_check(l);
    if (l.degree != 1) throw std::invalid_argument(std::string(who) + " wants degree-1 ternary forms");
    if (l.is_zero()) throw std::invalid_argument(std::string(who) + " got the zero form");
}

// Scale so that the first nonzero coordinate is 1; projective representative.
std::array<Fp, 3> normalize_point(std::array<Fp, 3> v) {
    for (const auto& c : v) {
        if (!c.is_zero()) {
            const Fp s = inv(c);
            for (auto& w : v) w = s * w;
            return v;
        }
    }
    throw std::invalid_argument("zero vector is not a projective point");
}

// Deterministic scan for rational points of a smooth conic: the vertex
// (0,0,1), then the pencil of lines x = t y through it, then the line y = 0.
// Each line meets the conic in the roots of a binary quadratic, so the scan
// only needs square roots; a smooth conic has p+1 points, so some line with
// t small works and the loop is short in practice.
class ConicPointScan {
public:
    explicit ConicPointScan(const Conic& q) : q_(q), p_(q.prime()) {}

    // Next point in the canonical order, or throws when the scan is
    // exhausted (impossible for a smooth conic).
    std::array<Fp, 3> next() {
        while (!queue_empty_) {
            if (qpos_ < queue_.size()) return queue_[qpos_++];
            queue_.clear();
            qpos_ = 0;
            advance();
        }
        throw std::runtime_error("point scan exhausted; conic is not smooth over this field");
    }

private:
    void push_line_points(const Fp& a, const Fp& b, const Fp& c, auto&& at) {
        // roots of a s^2 + b s + c, plus the s = infinity point when a = 0
        if (a.is_zero()) {
            if (!b.is_zero()) queue_.push_back(normalize_point(at(-c / b)));
            return;
        }
        const Fp disc = b * b - mul_small(a * c, 4);
        const auto root = sqrt_fp(disc);
        if (!root) return;
        const Fp twoa = mul_small(a, 2);
        queue_.push_back(normalize_point(at((-b + *root) / twoa)));
        if (!root->is_zero()) queue_.push_back(normalize_point(at((-b - *root) / twoa)));
    }

    void advance() {
        const Fp zero = fp_of(0, p_);
        const Fp one = fp_of(1, p_);
        if (stage_ == 0) {
            stage_ = 1;
            const std::array<Fp, 3> v = {zero, zero, one};
            if (q_.apply(v).is_zero()) queue_.push_back(v);
            return;
        }
        if (stage_ == 1) {
            if (t_ < p_.value()) {
                // line {x = t y}: points (t s, s, 1) and (t, 1, 0)
                const Fp t = fp_of(static_cast<std::int64_t>(t_), p_);
                ++t_;
                const std::array<Fp, 3> dir = {t, one, zero};
                const std::array<Fp, 3> base = {zero, zero, one};
                const Fp a = q_.apply(dir);
                const Fp b = mul_small(q_.bilinear(dir, base), 2);
                const Fp c = q_.apply(base);
                push_line_points(a, b, c, [&](const Fp& s) { return std::array<Fp, 3>{t * s, s, one}; });
                if (a.is_zero()) queue_.push_back(normalize_point(dir));
                return;
            }
            stage_ = 2;
            // line {y = 0}: points (s, 0, 1) and (1, 0, 0)
            const std::array<Fp, 3> dir = {one, zero, zero};
            const std::array<Fp, 3> base = {zero, zero, one};
            const Fp a = q_.apply(dir);
            const Fp b = mul_small(q_.bilinear(dir, base), 2);
            const Fp c = q_.apply(base);
            push_line_points(a, b, c, [&](const Fp& s) { return std::array<Fp, 3>{s, zero, one}; });
            if (a.is_zero()) queue_.push_back(dir);
            return;
        }
        queue_empty_ = true;
    }

    const Conic& q_;
    Prime p_;
    std::vector<std::array<Fp, 3>> queue_;
    std::size_t qpos_ = 0;
    int stage_ = 0;
    std::uint64_t t_ = 0;
    bool queue_empty_ = false;
};

} // namespace

std::array<int, 3> ternary_exponents(int degree, int index) {
    if (index < 0 || index >= ternary_count(degree)) throw std::out_of_range("ternary monomial index out of range");
    int block = 0;
    while ((block + 1) * (block + 2) / 2 <= index) ++block;
    const int inside = index - block * (block + 1) / 2;
    const int ex = degree - block;
    const int ey = block - inside;
    return {ex, ey, degree - ex - ey};
}

std::vector<Fp> quadric_polarity(const FpMat& q, std::span<const Fp> pt) {
    if (q.rows() != q.cols() || q.rows() == 0) throw std::invalid_argument("polarity wants a square matrix");
    if (pt.size() != q.rows()) throw std::invalid_argument("point dimension does not match the quadric");
    bool zero_pt = true;
    for (const auto& x : pt) zero_pt = zero_pt && x.is_zero();
    if (zero_pt) throw std::invalid_argument("the zero vector is not a projective point");
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = i + 1; j < q.cols(); ++j)
            if (q.at(i, j) != q.at(j, i)) throw std::invalid_argument("quadric matrix must be symmetric");
    if (det(q).is_zero()) throw std::invalid_argument("degenerate quadric has no polarity");
    std::vector<Fp> out;
    out.reserve(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Fp acc = zero_like(pt[0]);
        for (std::size_t j = 0; j < q.cols(); ++j) acc += q.at(i, j) * pt[j];
        out.push_back(acc);
    }
    return out;
}

Conic::Conic(FpMat sym) : m_(std::move(sym)), prime_(m_.at(0, 0).p) {
    if (m_.rows() != 3 || m_.cols() != 3) throw std::invalid_argument("conic matrix must be 3x3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (m_.at(i, j) != m_.at(j, i)) throw std::invalid_argument("conic matrix must be symmetric");
}

Fp Conic::apply(std::span<const Fp> v) const {
    if (v.size() != 3) throw std::invalid_argument("conic wants 3 coordinates");
    Fp acc = zero_like(v[0]);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) acc += m_.at(i, j) * v[i] * v[j];
    return acc;
}

Fp Conic::bilinear(std::span<const Fp> u, std::span<const Fp> v) const {
    if (u.size() != 3 || v.size() != 3) throw std::invalid_argument("conic wants 3 coordinates");
    Fp acc = zero_like(u[0]);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) acc += m_.at(i, j) * u[i] * v[j];
    return acc;
}

Fp Conic::det() const { return ramify::det(m_); }

bool Conic::smooth() const { return !det().is_zero(); }

Conic Conic::from_form(const TernaryForm& f) {
    ternary_check(f);
    if (f.degree != 2) throw std::invalid_argument("conic wants a degree-2 ternary form");
    const Prime p(f.coeff[0].p);
    const Fp half = inv(fp_of(2, p));
    FpMat m(3, 3, p);
    for (int i = 0; i < 6; ++i) {
        const auto e = ternary_exponents(2, i);
        int a = -1, b = -1;
        for (int v = 0; v < 3; ++v) {
            if (e[static_cast<std::size_t>(v)] >= 1) {
                if (a < 0) a = v;
                else b = v;
            }
            if (e[static_cast<std::size_t>(v)] == 2) b = v;
        }
        const Fp c = f.coeff[static_cast<std::size_t>(i)];
        if (a == b) {
            m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = c;
        } else {
            m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = c * half;
            m.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = c * half;
        }
    }
    return Conic(m);
}

TernaryForm Conic::to_form() const {
    TernaryForm f = ternary_zero(2, fp_of(0, prime_));
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            std::array<int, 3> e = {0, 0, 0};
            e[static_cast<std::size_t>(i)] += 1;
            e[static_cast<std::size_t>(j)] += 1;
            const int k = ternary_index(2, e[0], e[1]);
            f.coeff[static_cast<std::size_t>(k)] =
                i == j ? m_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                       : mul_small(m_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), 2);
        }
    }
    return f;
}

UniPoly<Fp> ConicParam::pullback(const TernaryForm& line) const {
    check_linear(line, "pullback");
    std::vector<Fp> c(3, zero_like(line.coeff[0]));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c[i] += push.at(i, j) * line.coeff[j];
    return UniPoly<Fp>(std::move(c));
}

std::array<Fp, 3> ConicParam::point_at(const Fp& s) const {
    const Fp one = one_like(s);
    const std::array<Fp, 3> u = {one, s, c2 * s * s};
    std::array<Fp, 3> v = {zero_like(s), zero_like(s), zero_like(s)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) v[i] += basis.at(i, j) * u[j];
    return v;
}

std::array<Fp, 3> ConicParam::point_at_infinity() const {
    return {basis.at(0, 2), basis.at(1, 2), basis.at(2, 2)};
}

ConicParam parametrize(const Conic& q) {
    if (!q.smooth()) throw std::invalid_argument("cannot parametrize a degenerate conic");
    const Prime& p = q.prime();
    ConicPointScan scan(q);
    const std::array<Fp, 3> p0 = scan.next();
    std::array<Fp, 3> p2 = p0;
    // Any second point works: the tangent at p0 meets the conic only at p0.
    while (p2 == p0) p2 = scan.next();
    const std::array<Fp, 3> t0 = cross3(quadric_polarity(q.matrix(), p0), quadric_polarity(q.matrix(), p2));
    const std::array<Fp, 3> p1 = t0; // intersection of the two tangents
    const Fp beta = q.apply(p1);
    const Fp alpha = mul_small(q.bilinear(p0, p2), 2);
    if (alpha.is_zero() || beta.is_zero())
        throw std::runtime_error("degenerate tangent triangle while parametrizing a conic");
    ConicParam out{FpMat(3, 3, p), -(beta / alpha), FpMat(3, 3, p)};
    for (std::size_t i = 0; i < 3; ++i) {
        out.basis.at(i, 0) = p0[i];
        out.basis.at(i, 1) = p1[i];
        out.basis.at(i, 2) = p2[i];
    }
    // Pullback of a line (l0,l1,l2): l . gamma(s) with gamma(s) = P0 + P1 s
    // + c2 P2 s^2, so the coefficient rows are P0, P1, c2 P2.
    for (std::size_t j = 0; j < 3; ++j) {
        out.push.at(0, j) = p0[j];
        out.push.at(1, j) = p1[j];
        out.push.at(2, j) = out.c2 * p2[j];
    }
    return out;
}

std::vector<std::array<Fp, 3>> line_conic_points(const Conic& q, const TernaryForm& line) {
    check_linear(line, "line_conic_points");
    const ConicParam par = parametrize(q);
    const UniPoly<Fp> f = par.pullback(line);
    std::vector<std::array<Fp, 3>> pts;
    if (f.degree() < 0) throw std::invalid_argument("zero line");
    if (f.degree() <= 1) pts.push_back(normalize_point(par.point_at_infinity()));
    if (f.degree() == 1) {
        pts.push_back(normalize_point(par.point_at(-f.coeff_or(0, fp_of(0, q.prime())) / f.coeff_ref(1))));
    } else if (f.degree() == 2) {
        const Fp a = f.coeff_ref(2);
        const Fp b = f.coeff_or(1, fp_of(0, q.prime()));
        const Fp c = f.coeff_or(0, fp_of(0, q.prime()));
        const Fp disc = b * b - mul_small(a * c, 4);
        if (const auto root = sqrt_fp(disc)) {
            const Fp twoa = mul_small(a, 2);
            pts.push_back(normalize_point(par.point_at((-b + *root) / twoa)));
            if (!root->is_zero()) pts.push_back(normalize_point(par.point_at((-b - *root) / twoa)));
        }
    }
    return pts;
}

TernaryForm monic_ternary(const TernaryForm& f) {
    ternary_check(f);
    for (const auto& c : f.coeff) {
        if (!c.is_zero()) {
            const Fp s = inv(c);
            TernaryForm out = f;
            for (auto& w : out.coeff) w = s * w;
            return out;
        }
    }
    throw std::invalid_argument("cannot normalize the zero form");
}

TernaryForm ram_line_of_pencil(const TernaryForm& li, const TernaryForm& lj, const Conic& q) {
    check_linear(li, "ram_line_of_pencil");
    check_linear(lj, "ram_line_of_pencil");
    if (!q.smooth()) throw std::invalid_argument("ram_line_of_pencil wants a smooth conic");
    if (cross3(li.coeff, lj.coeff) == std::array<Fp, 3>{zero_like(li.coeff[0]), zero_like(li.coeff[0]), zero_like(li.coeff[0])})
        throw std::invalid_argument("pencil is degenerate: the two lines are dependent");
    const ConicParam par = parametrize(q);
    const UniPoly<Fp> f = par.pullback(li);
    const UniPoly<Fp> g = par.pullback(lj);
    const UniPoly<Fp> w = f * g.derivative() - f.derivative() * g;
    if (w.degree() < 0)
        throw std::invalid_argument("pencil is tangent to the conic: identically zero Wronskian");
    std::vector<Fp> rhs(3, fp_of(0, q.prime()));
    for (int k = 0; k <= 2; ++k) rhs[static_cast<std::size_t>(k)] = w.coeff_or(k, fp_of(0, q.prime()));
    const auto sol = solve(par.push, std::move(rhs));
    if (!sol) throw std::runtime_error("pullback system unexpectedly singular");
    TernaryForm out = ternary_zero(1, fp_of(0, q.prime()));
    out.coeff = *sol;
    return monic_ternary(out);
}

bool operator==(const MuImage& a, const MuImage& b) {
    if (a.dropped_index != b.dropped_index) return false;
    if (a.basis.rows() != b.basis.rows() || a.basis.cols() != b.basis.cols()) return false;
    for (std::size_t i = 0; i < a.basis.rows(); ++i)
        for (std::size_t j = 0; j < a.basis.cols(); ++j)
            if (a.basis.at(i, j) != b.basis.at(i, j)) return false;
    return true;
}

MuImage mu_triangle(const TernaryForm& l1, const TernaryForm& l2, const TernaryForm& l3, const Conic& q) {
    check_linear(l1, "mu_triangle");
    check_linear(l2, "mu_triangle");
    check_linear(l3, "mu_triangle");
    const TernaryForm r23 = ram_line_of_pencil(l2, l3, q);
    const TernaryForm r13 = ram_line_of_pencil(l1, l3, q);
    const TernaryForm r12 = ram_line_of_pencil(l1, l2, q);
    const std::array<TernaryForm, 3> prods = {l1 * r23, l2 * r13, l3 * r12};
    const TernaryForm qf = q.to_form();

    // q must lie in the span of the three products (rank cannot grow when
    // q's row is appended).
    const Prime& p = q.prime();
    FpMat span(3, 6, p);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) span.at(i, j) = prods[i].coeff[j];
    FpMat with_q(4, 6, p);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 6; ++j) with_q.at(i, j) = prods[i].coeff[j];
    for (std::size_t j = 0; j < 6; ++j) with_q.at(3, j) = qf.coeff[j];
    if (rank(span) != rank(with_q))
        throw std::runtime_error("triangle is degenerate for this conic: span does not contain the conic");

    // Quotient by q: eliminate q's leading graded-lex slot from each
    // product, drop that coordinate, reduce.
    int lead = -1;
    for (int j = 0; j < 6; ++j) {
        if (!qf.coeff[static_cast<std::size_t>(j)].is_zero()) {
            lead = j;
            break;
        }
    }
    const Fp scale = inv(qf.coeff[static_cast<std::size_t>(lead)]);
    FpMat quo(3, 5, p);
    for (std::size_t i = 0; i < 3; ++i) {
        const Fp factor = prods[i].coeff[static_cast<std::size_t>(lead)] * scale;
        std::size_t col = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            if (static_cast<int>(j) == lead) continue;
            quo.at(i, col) = prods[i].coeff[j] - factor * qf.coeff[j];
            ++col;
        }
    }
    if (rref(quo) != 2)
        throw std::runtime_error("triangle is degenerate for this conic: quotient image is not a pencil");
    MuImage out{FpMat(2, 5, p), lead};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 5; ++j) out.basis.at(i, j) = quo.at(i, j);
    return out;
}

std::array<TernaryForm, 3> polar_conjugate(const Conic& q, const TernaryForm& l1, const TernaryForm& l2,
                                           const TernaryForm& l3) {
    check_linear(l1, "polar_conjugate");
    check_linear(l2, "polar_conjugate");
    check_linear(l3, "polar_conjugate");
    if (!q.smooth()) throw std::invalid_argument("polar_conjugate wants a smooth conic");
    const std::array<const TernaryForm*, 3> l = {&l1, &l2, &l3};
    std::array<TernaryForm, 3> out;
    for (int i = 0; i < 3; ++i) {
        const TernaryForm& a = *l[static_cast<std::size_t>((i + 1) % 3)];
        const TernaryForm& b = *l[static_cast<std::size_t>((i + 2) % 3)];
        const std::array<Fp, 3> vertex = cross3(a.coeff, b.coeff);
        if (vertex == std::array<Fp, 3>{zero_like(vertex[0]), zero_like(vertex[0]), zero_like(vertex[0])})
            throw std::invalid_argument("triangle has two dependent lines");
        const std::vector<Fp> polar = quadric_polarity(q.matrix(), vertex);
        TernaryForm m = ternary_zero(1, fp_of(0, q.prime()));
        for (std::size_t j = 0; j < 3; ++j) m.coeff[j] = polar[j];
        out[static_cast<std::size_t>(i)] = monic_ternary(m);
    }
    return out;
}

TernaryForm random_ternary(int degree, const Prime& prime, SplitMix64& rng) {
    TernaryForm f = ternary_zero(degree, fp_of(0, prime));
    for (auto& c : f.coeff) c = rng.field_elt(prime);
    return f;
}

} // namespace ramify
