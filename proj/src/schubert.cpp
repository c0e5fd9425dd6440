#include "ramify/schubert.hpp"

#include <stdexcept>

namespace ramify {

namespace {

void check_box(const BoxPartition& p, int k, int n) {
    if (static_cast<int>(p.size()) > k) throw std::invalid_argument("partition has more than k parts");
    int prev = n - k;
    for (int part : p) {
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
        if (part > prev) throw std::invalid_argument("partition does not fit the k x (n-k) box");
        prev = part;
    }
}

} // namespace

SchubertCycle schubert_class(const BoxPartition& p, int k, int n) {
    check_box(p, k, n);
    SchubertCycle c;
    c.coefficients[p] = 1;
    return c;
}

SchubertCycle pieri_sigma1(const SchubertCycle& c, int k, int n) {
    if (k < 1 || n <= k) throw std::invalid_argument("pieri_sigma1 wants 1 <= k < n");
    SchubertCycle out;
    for (const auto& [p, coeff] : c.coefficients) {
        check_box(p, k, n);
        // Grow each row by one box where the result is still a partition in
        // the box; one extra case appends a new row of size 1.
        for (std::size_t row = 0; row < p.size(); ++row) {
            const int grown = p[row] + 1;
            if (grown > n - k) continue;
            if (row > 0 && grown > p[row - 1]) continue;
            BoxPartition q = p;
            q[row] = grown;
            out.coefficients[q] += coeff;
        }
        if (static_cast<int>(p.size()) < k) {
            BoxPartition q = p;
            q.push_back(1);
            out.coefficients[q] += coeff;
        }
    }
    return out;
}

BigInt plucker_degree(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("plucker_degree wants 1 <= k < n");
    SchubertCycle c = schubert_class({}, k, n);
    const int steps = k * (n - k);
    for (int i = 0; i < steps; ++i) c = pieri_sigma1(c, k, n);
    BoxPartition full(static_cast<std::size_t>(k), n - k);
    auto it = c.coefficients.find(full);
    return it == c.coefficients.end() ? BigInt(0) : it->second;
}

BigInt catalan_closed(int n) {
    if (n < 2) throw std::invalid_argument("catalan_closed wants n >= 2");
    BigInt num = 1;
    for (int i = 2; i <= 2 * n - 2; ++i) num *= i;
    BigInt den = 1;
    for (int i = 2; i <= n; ++i) den *= i;
    for (int i = 2; i <= n - 1; ++i) den *= i;
    return num / den;
}

BigInt total_mass(const SchubertCycle& c) {
    BigInt s = 0;
    for (const auto& [p, coeff] : c.coefficients) s += coeff;
    return s;
}

} // namespace ramify
