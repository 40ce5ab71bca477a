#ifndef CUBESQ_SELFTEST_HPP
#define CUBESQ_SELFTEST_HPP

#include <string>
#include <vector>

namespace cubesq {

struct FixtureResult {
    std::string name;
    bool pass;
    std::string detail;  // what was checked / what went wrong
};

struct SelftestOptions {
    bool corrupt_gram = false;  // negative-control hook: perturbs the Gram matrix
    int solver_starts = 80;
    std::uint64_t seed = 0;
    int threads = 0;
};

// Runs the bundled reference fixtures (integer representation counts,
// intersection numbers, dual-vector enumeration, fiber classification,
// surface invariants, decomposition round trips).
std::vector<FixtureResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace cubesq

#endif
