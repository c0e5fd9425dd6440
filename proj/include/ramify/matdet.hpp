#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ramify {

namespace detail {

template <class R>
R det_cofactor_rec(const std::vector<std::vector<R>>& m, std::size_t row, unsigned colmask,
                   const R& zero) {
    const std::size_t n = m.size();
    if (row == n) {
        throw std::logic_error("empty cofactor recursion");
    }
    // find live columns
    bool first = true;
    R acc = zero;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (colmask & (1u << j)) continue;
        if (row + 1 == n) {
            return m[row][j]; // single live column left
        }
        const R& a = m[row][j];
        if (!a.is_zero()) {
            R sub = det_cofactor_rec(m, row + 1, colmask | (1u << j), zero);
            R term = a * sub;
            if (sign < 0) term = -term;
            acc = first ? term : acc + term;
            first = false;
        }
        sign = -sign;
    }
    return first ? zero : acc;
}

} // namespace detail

// Determinant over any commutative ring: Laplace cofactor expansion up to
// 5x5, Bird's division-free fraction-free elimination beyond. Both are exact
// and allocation over the ring only; no coefficient division ever happens.
template <class R>
R det_matrix(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    const R zero = zero_like(m[0][0]);
    if (n == 1) return m[0][0];
    if (n <= 5) return detail::det_cofactor_rec(m, 0, 0u, zero);

    // Bird iteration: X <- mu(X) * A, n-1 times; det = (-1)^(n-1) X[0][0].
    std::vector<std::vector<R>> x = m;
    std::vector<std::vector<R>> next(n, std::vector<R>(n, zero));
    for (std::size_t step = 0; step + 1 < n; ++step) {
        // mu(x): zero below the diagonal, diagonal entry i replaced by
        // -(x[i+1][i+1] + ... + x[n-1][n-1])
        std::vector<R> diag(n, zero);
        R run = zero;
        for (std::size_t i = n; i-- > 0;) {
            diag[i] = -run;
            run = run + x[i][i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                R acc = zero;
                // row i of mu(x) is (0,...,0, diag[i], x[i][i+1..])
                if (!diag[i].is_zero() && !m[i][j].is_zero()) acc = acc + diag[i] * m[i][j];
                for (std::size_t k = i + 1; k < n; ++k)
                    if (!x[i][k].is_zero() && !m[k][j].is_zero()) acc = acc + x[i][k] * m[k][j];
                next[i][j] = acc;
            }
        }
        std::swap(x, next);
    }
    R d = x[0][0];
    if (n % 2 == 0) d = -d;
    return d;
}

} // namespace ramify
