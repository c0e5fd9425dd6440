#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ramify/fp.hpp"
#include "ramify/rng.hpp"

namespace ramify {

// Dense matrix over F_p, row major. Exact Gaussian elimination only; the
// sizes in play (stabilizer systems, variation matrices) are tiny.
class FpMat {
public:
    FpMat(std::size_t rows, std::size_t cols, const Prime& p)
        : rows_(rows), cols_(cols), a_(rows * cols, fp_of(0, p)) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Fp& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    [[nodiscard]] const Fp& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Fp> a_;
};

bool operator==(const FpMat& a, const FpMat& b) noexcept;
inline bool operator!=(const FpMat& a, const FpMat& b) noexcept { return !(a == b); }

FpMat mul(const FpMat& a, const FpMat& b);

std::size_t rank(FpMat m);
// In-place reduced row echelon form; returns the rank.
std::size_t rref(FpMat& m);
Fp det(FpMat m);
// Unique solution of a square nonsingular system; nullopt when singular or inconsistent.
std::optional<std::vector<Fp>> solve(FpMat a, std::vector<Fp> b);
FpMat inverse(const FpMat& m);

FpMat random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, const Prime& p);
FpMat random_invertible(SplitMix64& rng, std::size_t n, const Prime& p);

} // namespace ramify
