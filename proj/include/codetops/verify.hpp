#pragma once

#include <string>
#include <vector>

#include <cstdint>

namespace codetops {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on success, diagnostic on failure
};

/// The five pinned worked-example checks (fixture reproductions).
std::vector<CheckResult> paper_example_checks();

/// The five property/oracle suites; random draws are driven by `seed`.
std::vector<CheckResult> property_checks(uint64_t seed);

}  // namespace codetops
