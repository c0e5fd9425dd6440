#pragma once

#include <iosfwd>

namespace ramify {

struct SelftestResult {
    int passed = 0;
    int failed = 0;
};

// Fast deterministic run of the cross-cutting invariants, one line per
// suite. Meant as a smoke gate, not a replacement for the unit tests.
SelftestResult run_selftest(std::ostream& out);

} // namespace ramify
