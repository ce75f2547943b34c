#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <unordered_map>

#include "codetops/caps.hpp"
#include "codetops/subspace.hpp"

namespace codetops {

using BigInt = boost::multiprecision::cpp_int;

/// Gaussian binomial coefficient: the number of k-dimensional subspaces
/// of an n-dimensional space over GF(q).  Exact arbitrary precision.
BigInt gaussian_binomial(uint64_t n, uint64_t k, uint64_t q);

/// [n]_q = (q^n - 1)/(q - 1), the number of projective points of F_q^n.
BigInt gaussian_count_points(uint64_t n, uint64_t q);

/// Adjacency in the Grassmann graph on k-dimensional subspaces:
/// dim(A cap B) = k - 1.  Both arguments must share field, ambient and
/// dimension (else DimMismatchError / AmbientMismatchError).
bool adjacent(const Subspace& a, const Subspace& b);

/// The line [S, U]: all K with S < K < U where dim S = dim U - 2,
/// dim K = dim U - 1 and S < U.  Exactly q + 1 members, sorted
/// canonically.  Throws NotIncidentError on bad dimensions/incidence.
std::vector<Subspace> line(const Subspace& s, const Subspace& u);

/// The top <U]: all k-dimensional subspaces of U where dim U = k + 1.
std::vector<Subspace> top_members(const Subspace& u, size_t k);

/// Materialized Grassmann graph over the k-subspaces of F_q^n, optionally
/// restricted to non-degenerate vertices.  Meant for oracle-scale work;
/// the analytic pipeline never builds it.
class GrassmannGraph {
public:
    GrassmannGraph(FieldPtr field, size_t n, size_t k, bool restricted,
                   std::vector<Subspace> vertices);

    const FieldPtr& field() const { return field_; }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    bool restricted() const { return restricted_; }
    size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Subspace>& vertices() const { return vertices_; }
    const Subspace& vertex(size_t i) const { return vertices_.at(i); }

    std::optional<size_t> index_of(const Subspace& s) const;

    bool edge(size_t i, size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    std::span<const uint64_t> neighbor_bits(size_t i) const {
        return {bits_.data() + i * words_, words_};
    }
    size_t words_per_row() const { return words_; }
    std::vector<size_t> neighbors(size_t i) const;

private:
    FieldPtr field_;
    size_t n_, k_;
    bool restricted_;
    std::vector<Subspace> vertices_;
    std::unordered_map<Subspace, size_t, SubspaceHash> index_;
    size_t words_;
    std::vector<uint64_t> bits_;  // packed symmetric adjacency
};

/// Builds the graph, refusing when the vertex count exceeds `cap`
/// (TooLargeError).  Default cap: CODETOPS_MAX_VERTICES or 5000.
GrassmannGraph build_graph(FieldPtr field, size_t n, size_t k,
                           bool nondegenerate_only,
                           uint64_t cap = max_vertices_cap());

}  // namespace codetops
