#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relubound {

struct CheckOutcome
{
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail; ///< first counterexample when failed
};

struct SelfCheckOptions
{
    /// Smaller sizes and no LP-based enumeration beyond the three-unit example.
    bool quick = false;
    std::uint64_t seed = 1;
};

/// Runs the invariant suite: order laws, clipping and φ monotonicity, histogram vs
/// matrix evaluation, closed forms, the decomposition and exact enumeration containment.
std::vector<CheckOutcome> run_selfcheck( const SelfCheckOptions &options = {} );

} // namespace relubound
