#pragma once

#include <json.hpp>

#include "codetops/tops.hpp"

namespace codetops {

using Json = nlohmann::json;

/// Machine-readable form of a TopAnalysis.  Keys are emitted in sorted
/// order and all field elements use the matrix-file text syntax, so the
/// output of dump() is byte-stable across runs.  Counts that can exceed
/// 64 bits are decimal strings.  When seconds >= 0 a "timing_seconds"
/// key is added (and byte stability is deliberately given up).
Json analysis_to_json(const TopAnalysis& a, double seconds = -1.0);

/// Rebuilds the analysis record from its JSON form without re-running
/// any analysis: analysis_to_json(analysis_from_json(j)) == j for every
/// j produced by analysis_to_json (modulo the timing key).
TopAnalysis analysis_from_json(const Json& j);

}  // namespace codetops
