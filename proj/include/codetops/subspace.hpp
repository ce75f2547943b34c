#pragma once

#include <compare>
#include <optional>

#include "codetops/matrix.hpp"

namespace codetops {

/// A linear subspace of F_q^n in canonical form: the stored basis is the
/// reduced row echelon form of any spanning set, so two Subspace objects
/// are equal exactly when they describe the same subspace.  The zero
/// subspace carries an empty (0 x n) basis.
class Subspace {
public:
    /// Canonicalizes the row space of an arbitrary spanning matrix.
    static Subspace from_span(const MatrixGF& m);
    static Subspace from_rows(FieldPtr field,
                              const std::vector<std::vector<uint32_t>>& rows);
    static Subspace zero(FieldPtr field, size_t n);
    static Subspace full(FieldPtr field, size_t n);

    const FieldPtr& field() const { return basis_.field(); }
    size_t ambient_dim() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    const MatrixGF& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const uint32_t> v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v against the canonical basis; nullopt when v is
    /// outside the subspace.
    std::optional<std::vector<uint32_t>> to_local(
        std::span<const uint32_t> v) const;
    std::vector<uint32_t> from_local(std::span<const uint32_t> coeffs) const;

    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }
    /// Deterministic total order (ambient, dim, basis entries).
    bool operator<(const Subspace& other) const;

    size_t hash() const;

private:
    explicit Subspace(MatrixGF basis, std::vector<size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    MatrixGF basis_;
    std::vector<size_t> pivots_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Solution space {x : M x = 0}, rows of M read as linear equations on
/// coordinates of F_q^cols.
Subspace kernel(const MatrixGF& m);

/// Orthogonal complement under the standard dot product.
Subspace orthogonal_complement(const Subspace& s);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// All k-dimensional subspaces of `ambient`, in a deterministic order:
/// RREF profiles of the k x dim(ambient) coordinate space are enumerated
/// lexicographically by pivot set and then by free entries (row-major,
/// earlier positions most significant), and mapped through the ambient
/// basis.  Throws BadDimensionError when k > dim(ambient).
std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, size_t k);

}  // namespace codetops
