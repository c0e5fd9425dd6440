#include "ramify/linalg.hpp"

#include <stdexcept>

namespace ramify {

namespace {

// Forward elimination; returns rank. When `reduce` is set, continues to
// reduced row echelon form. Optionally tracks the determinant sign effect
// of row swaps for square inputs.
std::size_t eliminate(FpMat& m, bool reduce, int* swap_sign = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    if (swap_sign) *swap_sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            if (swap_sign) *swap_sign = -*swap_sign;
        }
        Fp pinv = inv(m.at(r, c));
        if (reduce) {
            for (std::size_t j = c; j < cols; ++j) m.at(r, j) = m.at(r, j) * pinv;
        }
        std::size_t start = reduce ? 0 : r + 1;
        for (std::size_t i = start; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Fp f = reduce ? m.at(i, c) : m.at(i, c) * pinv;
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

bool operator==(const FpMat& a, const FpMat& b) noexcept {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

FpMat mul(const FpMat& a, const FpMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    const Prime p(a.at(0, 0).p);
    FpMat out(a.rows(), b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Fp& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += f * b.at(k, j);
        }
    return out;
}

std::size_t rank(FpMat m) { return eliminate(m, false); }

std::size_t rref(FpMat& m) { return eliminate(m, true); }

Fp det(FpMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) throw std::invalid_argument("determinant of empty matrix");
    const Prime p(m.at(0, 0).p);
    int sign = 1;
    std::size_t r = eliminate(m, false, &sign);
    if (r < m.rows()) return fp_of(0, p);
    Fp d = fp_of(sign, p);
    for (std::size_t i = 0; i < m.rows(); ++i) d *= m.at(i, i);
    return d;
}

std::optional<std::vector<Fp>> solve(FpMat a, std::vector<Fp> b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.cols();
    const Prime p(a.at(0, 0).p);
    FpMat aug(a.rows(), n + 1, p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    rref(aug);
    std::vector<Fp> x(n, fp_of(0, p));
    std::vector<bool> pivot_col(n, false);
    for (std::size_t i = 0; i < aug.rows(); ++i) {
        std::size_t lead = n + 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (!aug.at(i, j).is_zero()) { lead = j; break; }
        }
        if (lead == n) return std::nullopt; // 0 = nonzero row
        if (lead < n) { pivot_col[lead] = true; x[lead] = aug.at(i, n); }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot_col[j]) return std::nullopt; // underdetermined
    return x;
}

FpMat inverse(const FpMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const Prime p(m.at(0, 0).p);
    FpMat aug(n, 2 * n, p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = fp_of(1, p);
    }
    rref(aug);
    // pivots escape into the identity block exactly when m is singular, so
    // the left block reducing to I is the invertibility certificate
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (aug.at(i, j) != fp_of(i == j ? 1 : 0, p)) throw std::domain_error("matrix is singular");
    FpMat out(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

FpMat random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, const Prime& p) {
    FpMat m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_elt(p);
    return m;
}

FpMat random_invertible(SplitMix64& rng, std::size_t n, const Prime& p) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        FpMat m = random_matrix(rng, n, n, p);
        if (!det(m).is_zero()) return m;
    }
    throw std::runtime_error("failed to draw an invertible matrix"); // p >= 3 makes this unreachable in practice
}

} // namespace ramify
