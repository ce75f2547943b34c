#pragma once

#include <optional>

#include "codetops/codes.hpp"
#include "codetops/grassmann.hpp"

namespace codetops {

/// How the set of non-degenerate hyperplanes of a code U sits inside the
/// Grassmann graph.
enum class Classification { Empty, SinglePoint, LineContained, MaximalTop };

std::string to_string(Classification c);

/// Representatives of the admissible directions for a generator matrix M
/// of shape (k+1) x n: all projective points of F_q^{k+1} that are not
/// proportional to any column of M, each normalized (first non-zero
/// coordinate 1), in projective enumeration order.
/// Throws RankDeficientError when rank M < k+1, ZeroColumnError on a zero
/// column.
std::vector<std::vector<uint32_t>> wprime_reps(const MatrixGF& m);

/// The k-dimensional subspace C(w) = { a M : a . w = 0 } of the row space
/// of M, built from the basis { v_l - w_i^{-1} w_l v_i : l != i } where i
/// is the first non-zero coordinate of w and v_1..v_{k+1} are the rows of
/// M.  Scale-invariant: C(b w) = C(w) for b != 0.
/// Throws ZeroWError, ProportionalToColumnError.
Subspace c_of_w(const MatrixGF& m, std::span<const uint32_t> w);

/// Full analysis of a code's non-degenerate hyperplane set, carried out
/// in the row frame of a chosen generator matrix.
struct TopAnalysis {
    FieldPtr field;
    size_t n = 0;
    size_t k = 0;
    MatrixGF generator;           // the frame all coefficient data refers to
    Subspace u;                   // its row space
    bool degenerate = false;

    std::optional<ColumnClasses> classes;   // absent for degenerate input
    std::vector<std::vector<uint32_t>> wprime;  // projective representatives
    Subspace w_span;              // W, inside the coefficient space F_q^{k+1}
    Subspace w_perp;
    std::vector<Subspace> members;          // the C(w), in wprime order
    std::optional<Subspace> common;         // intersection of all members
    Classification classification = Classification::Empty;

    /// Number of lines through the unique member (SinglePoint case).
    std::optional<BigInt> line_count;
    /// The unique containing line as (S, U) (LineContained case).
    std::optional<std::pair<Subspace, Subspace>> line_pair;

    BigInt wprime_full_count() const;  // |W'| counting all scalar multiples
    BigInt top_size() const;           // [k+1]_q
};

/// Analyzes the row space of a generator matrix.  The matrix must have
/// full row rank (RankDeficientError).  A degenerate row space yields the
/// Empty classification with no member data.
TopAnalysis analyze(const MatrixGF& generator);

/// Same analysis from the subspace alone, using its canonical basis as
/// the generator (DimMismatchError unless dim U = k + 1).
TopAnalysis analyze(const Subspace& u, size_t k);

/// The non-degenerate members of the top of U, without the intersection
/// and classification extras.  Empty for degenerate U.
std::vector<Subspace> top_nondegenerate(const Subspace& u, size_t k);

/// Intersection of all members of an analysis.  Throws EmptyWPrimeError
/// when there are no members.
Subspace common_intersection(const TopAnalysis& analysis);

Classification classify(const Subspace& u, size_t k);

/// True when the admissible-direction count forces the MaximalTop
/// classification for every code with these parameters:
/// [k+1]_q > n + q + 1.
bool corollary_check(size_t n, size_t k, const Field& field);

}  // namespace codetops
