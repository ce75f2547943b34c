#pragma once

#include "codetops/autos.hpp"

/// Worked inputs with independently recorded outcomes, used as pinned
/// regression data by the test suites and as demo inputs for the CLI.
/// Expected values are stated as explicit vectors/coefficients, never
/// recomputed by the code under test.
namespace codetops::fixtures {

/// Rows of coefficients (length = generator rows) turned into the
/// subspace they span inside the row space of m.
Subspace combo_span(const MatrixGF& m,
                    const std::vector<std::vector<uint32_t>>& coeff_rows);

/// [12,3]_3 code whose 12 columns cover all but one projective point of
/// F_3^3: exactly one non-degenerate 2-dimensional subcode.
MatrixGF single_point_code();
/// The uncovered point (1,2,2).
std::vector<uint32_t> single_point_uncovered();
/// The lone member, pinned by its own generator rows.
Subspace single_point_member();

/// [360,6]_3 code listing every projective point of F_3^6 except four:
/// its 5-dimensional non-degenerate subcodes form a full line.
MatrixGF line_code();
/// The four uncovered points, normalized.
std::vector<std::vector<uint32_t>> line_code_uncovered();
/// Orthogonal complement (in F_3^6) of the span of the uncovered points.
Subspace line_code_perp();
/// All four members, via pinned coefficient rows.
std::vector<Subspace> line_code_members();
/// Their intersection, via pinned coefficient rows.
Subspace line_code_common(const MatrixGF& m);

/// [58,6]_2 code listing every non-zero point of F_2^6 except five: its
/// 5-dimensional non-degenerate subcodes form a maximal clique.
MatrixGF maximal_top_code();
std::vector<std::vector<uint32_t>> maximal_top_uncovered();
Subspace maximal_top_perp();
std::vector<Subspace> maximal_top_members();
Subspace maximal_top_common(const MatrixGF& m);

/// [5,3]_q code (q odd) with a stabilizer of 8 permutation/sign shapes.
MatrixGF five_column_code(const FieldPtr& field);
/// The full stabilizer, built from the pinned shape table: 8*(q-1) maps.
std::vector<MonomialMap> five_column_stabilizer(const FieldPtr& field);

/// [6,3]_2 code with three classes of two identical columns.
MatrixGF paired_columns_code();

}  // namespace codetops::fixtures
