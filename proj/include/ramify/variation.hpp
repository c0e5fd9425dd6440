#pragma once

#include <cstdint>
#include <vector>

#include "ramify/degree.hpp"
#include "ramify/scroll.hpp"

namespace ramify {

struct RankTrial {
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    long long rank = 0;
    double ms = 0.0;
};

// Verdict on generic finiteness: maximal variation holds when the
// projectivized differential reaches full rank dim_gr in some trial. Rank
// can only drop at special points, so one full-rank witness decides; a
// negative verdict is re-certified with extra trials before it is
// reported.
struct RankReport {
    std::vector<int> partition;
    long long dim_gr = 0;
    long long rank = 0; // max over trials
    bool maximal_variation = false;
    std::vector<RankTrial> trials;
};

// Rank of the projectivized differential of the ramification assignment at
// a random chart point: directional derivatives in all chart directions by
// dual-number evaluation, then rank([L | c(A0)]) - 1 to quotient out the
// scaling direction.
long long jacobian_rank(const Partition& p, const Prime& prime, std::uint64_t seed);

RankReport is_maximal_variation(const Partition& p, const RunConfig& cfg = {});

// Directional derivatives through dual numbers against symbolic partial
// derivatives of the chart polynomials, on 10 random directions.
bool dual_number_consistency(const Partition& p, const Prime& prime, std::uint64_t seed);

} // namespace ramify
