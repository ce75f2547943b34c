// Acceptance gate: one line per criterion, non-zero exit on any failure.
#include <cstdio>

#include "codetops/verify.hpp"

int main() {
    std::vector<codetops::CheckResult> results =
        codetops::paper_example_checks();
    for (codetops::CheckResult& r : codetops::property_checks(42))
        results.push_back(std::move(r));

    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const codetops::CheckResult& r = results[i];
        if (r.pass) {
            std::printf("criterion %2zu [%s] PASS\n", i + 1, r.name.c_str());
        } else {
            std::printf("criterion %2zu [%s] FAIL: %s\n", i + 1,
                        r.name.c_str(), r.detail.c_str());
            all = false;
        }
    }
    return all ? 0 : 1;
}
