#pragma once

#include "codetops/caps.hpp"
#include "codetops/tops.hpp"

namespace codetops {

/// A monomial (optionally semilinear) map of F_q^n: coordinates are first
/// hit by the Frobenius power a |-> a^(p^frob), then coordinate i is
/// scaled by scales[i] and moved to position delta[i]:
///   f(x)[delta[i]] = scales[i] * x[i]^(p^frob).
/// In particular f(e_i) = scales[i] * e_{delta[i]}.
struct MonomialMap {
    FieldPtr field;
    std::vector<size_t> delta;     // a permutation of 0..n-1
    std::vector<uint32_t> scales;  // non-zero field values
    uint32_t frob = 0;             // 0 <= frob < m

    size_t n() const { return delta.size(); }

    bool operator==(const MonomialMap& other) const {
        return *field == *other.field && delta == other.delta &&
               scales == other.scales && frob == other.frob;
    }
    /// Deterministic total order (frob, delta, scales).
    bool operator<(const MonomialMap& other) const;
};

MonomialMap identity_map(FieldPtr field, size_t n);

/// Validates permutation/scale/frobenius data (SizeMismatchError,
/// std::invalid_argument).
MonomialMap make_monomial(FieldPtr field, std::vector<size_t> delta,
                          std::vector<uint32_t> scales, uint32_t frob = 0);

std::vector<uint32_t> apply(const MonomialMap& f, std::span<const uint32_t> x);
MatrixGF apply(const MonomialMap& f, const MatrixGF& m);
Subspace apply(const MonomialMap& f, const Subspace& s);

/// compose(f, g) acts as x |-> f(g(x)):
/// apply(compose(f, g), S) == apply(f, apply(g, S)).
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);
MonomialMap inverse(const MonomialMap& f);

/// Order of the full monomial group: n! (q-1)^n, times m when semilinear
/// maps are included.
BigInt group_order(size_t n, const Field& field, bool semilinear);

/// Canonical label deciding monomial equivalence of codes: the
/// lexicographically smallest sorted list of projectively normalized
/// columns over all left GL(k+1, q) translates of the generator (and over
/// Frobenius powers when semilinear).  Two full-rank generator matrices
/// have equal labels exactly when their row spaces lie in the same orbit.
/// Throws TooLargeError when |GL(k+1, q)| exceeds cap.
using OrbitLabel = std::vector<std::vector<uint32_t>>;
OrbitLabel orbit_canonical_form(const MatrixGF& m, bool semilinear = false,
                                uint64_t cap = max_group_cap());

/// All monomial maps f with apply(f, U) = U, found by a backtracking
/// search over column-class correspondences with linear-algebra pruning.
/// Deterministically sorted.  Throws TooLargeError when the search or the
/// result exceeds cap.
std::vector<MonomialMap> stabilizer(const Subspace& u, bool semilinear = false,
                                    uint64_t cap = max_group_cap());

/// Orbit size via the orbit-stabilizer identity (exact division).
BigInt orbit_size(const Subspace& u, bool semilinear = false,
                  uint64_t cap = max_group_cap());

/// For a generator matrix M with column classes of sizes k_1..k_s:
///  - matrix_automorphisms: number of monomial maps A with M A = M,
///    which is k_1! ... k_s!;
///  - same_class_matrices: number of matrices whose columns agree with
///    M's up to order and proportionality, n!/(k_1!...k_s!) * (q-1)^n.
struct MatrixCounts {
    BigInt matrix_automorphisms;
    BigInt same_class_matrices;
};
MatrixCounts remark_counts(const MatrixGF& m);

/// True when f stabilizes U and fixes every non-degenerate hyperplane
/// member of U's top individually.  Throws NotInStabilizerError when f
/// does not stabilize U.
bool acts_identically_on_top(const MonomialMap& f, const Subspace& u, size_t k);

}  // namespace codetops
