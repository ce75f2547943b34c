#pragma once

#include "codetops/autos.hpp"

namespace codetops {

/// Exhaustive routines kept deliberately independent of the construction
/// code: they recompute answers from first principles so the two routes
/// can be compared in tests. Everything here is exponential and guarded
/// by explicit caps.

/// All non-degenerate k-dimensional subspaces of u, found by filtering a
/// raw subspace sweep (no column bookkeeping involved).
std::vector<Subspace> brute_top_members(const Subspace& u, size_t k);

struct CliqueReport {
    bool is_clique = false;
    bool is_maximal = false;
    /// When !is_clique: a non-adjacent vertex pair from the set.
    std::optional<std::pair<size_t, size_t>> missing_edge;
    /// When is_clique && !is_maximal: a vertex adjacent to every member.
    std::optional<size_t> extension;
};

/// Checks a vertex set against the graph edge by edge.
CliqueReport check_maximal_clique(const GrassmannGraph& g,
                                  const std::vector<size_t>& members);
CliqueReport check_maximal_clique(const GrassmannGraph& g,
                                  const std::vector<Subspace>& members);

/// Every maximal clique of g (Bron-Kerbosch with pivoting), each clique
/// sorted, the list sorted. TooLargeError when g has more than
/// max_vertices vertices.
std::vector<std::vector<size_t>> all_maximal_cliques(
    const GrassmannGraph& g,
    size_t max_vertices = kDefaultMaxCliqueVertices);

/// Every monomial map on n coordinates (times Frobenius powers when
/// semilinear): n! * (q-1)^n * (m) maps. TooLargeError above cap.
std::vector<MonomialMap> all_monomial_maps(const FieldPtr& field, size_t n,
                                           bool semilinear = false,
                                           uint64_t cap = max_group_cap());

/// Stabilizer of u by sweeping every monomial map; sorted. Independent of
/// the class-correspondence search.
std::vector<MonomialMap> brute_stabilizer(const Subspace& u,
                                          bool semilinear = false,
                                          uint64_t cap = max_group_cap());

}  // namespace codetops
