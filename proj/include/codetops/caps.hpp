#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace codetops {

// Feasibility caps are configuration: every guarded operation takes an
// explicit cap parameter whose default comes from these helpers, and the
// defaults can be raised or lowered through environment variables.

constexpr uint64_t kDefaultMaxVertices = 5000;   // graph / enumeration size
constexpr uint64_t kDefaultMaxCliqueVertices = 400;  // clique enumeration
constexpr uint64_t kDefaultMaxGroup = 1000000;   // group-search work

inline uint64_t env_cap(const char* name, uint64_t fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || (end != nullptr && *end != '\0')) return fallback;
    return static_cast<uint64_t>(parsed);
}

inline uint64_t max_vertices_cap() {
    return env_cap("CODETOPS_MAX_VERTICES", kDefaultMaxVertices);
}

inline uint64_t max_group_cap() {
    return env_cap("CODETOPS_MAX_GROUP", kDefaultMaxGroup);
}

}  // namespace codetops
