#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramify {

using BigInt = boost::multiprecision::cpp_int;

// Young diagram key: weakly decreasing, positive parts, at most k parts of
// size at most n-k. The empty vector is the class of the whole Grassmannian.
using BoxPartition = std::vector<int>;

// Formal nonnegative combination of Schubert classes in Gr(k, n).
struct SchubertCycle {
    std::map<BoxPartition, BigInt> coefficients;

    friend bool operator==(const SchubertCycle& a, const SchubertCycle& b) { return a.coefficients == b.coefficients; }
};

SchubertCycle schubert_class(const BoxPartition& p, int k, int n);

// Multiply by sigma_1: every class maps to the sum of the classes obtained
// by adding one box, staying inside the k x (n-k) box.
SchubertCycle pieri_sigma1(const SchubertCycle& c, int k, int n);

// Coefficient of the full-box class in sigma_1^(k(n-k)), the top
// self-intersection of the Pluecker bundle.
BigInt plucker_degree(int k, int n);

// (2n-2)! / (n! (n-1)!)
BigInt catalan_closed(int n);

// Sum of all coefficients; after m Pieri steps from the empty class this
// counts the length-m box-addition chains.
BigInt total_mass(const SchubertCycle& c);

} // namespace ramify
