#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pfspec::verification {

enum class Suite
{
    All,
    Oscillator,
    Hydrogen,
    Dynamics
};

struct CheckResult
{
    std::string id;
    std::string description;
    bool passed = false;
    double measured = 0;  ///< worst observed deviation
    double threshold = 0; ///< pass bound for `measured`
    std::string detail;
    bool diagnostic = false; ///< reported only, never fails the suite
};

std::vector<CheckResult> runSuite(Suite suite, std::uint64_t seed = 7);

/// True when every non-diagnostic check passed.
bool allPassed(const std::vector<CheckResult>& results);

} // namespace pfspec::verification
