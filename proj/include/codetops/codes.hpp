#pragma once

#include "codetops/caps.hpp"
#include "codetops/subspace.hpp"

namespace codetops {

/// A subspace is degenerate when it lies inside a coordinate hyperplane
/// {v : v_i = 0}, i.e. when its canonical basis has an all-zero column.
/// The zero subspace is degenerate in any positive ambient dimension.
bool is_nondegenerate(const Subspace& s);

/// Partition of the columns of a generator matrix into proportionality
/// classes.  Classes are ordered by smallest member index; every class
/// stores a projectively normalized representative (first non-zero
/// entry 1) and each column i satisfies
///   column(i) = scalars[i] * reps[class_of[i]].
struct ColumnClasses {
    std::vector<std::vector<size_t>> classes;
    std::vector<std::vector<uint32_t>> reps;
    std::vector<size_t> class_of;
    std::vector<uint32_t> scalars;

    size_t count() const { return classes.size(); }
};

/// Throws ZeroColumnError (with the first offending index) when a column
/// is zero.
ColumnClasses column_classes(const MatrixGF& m);

/// U cap {v : v_i = 0}, the part of U inside coordinate hyperplane i.
Subspace coordinate_section(const Subspace& u, size_t i);

/// All non-degenerate k-dimensional subspaces of F_q^n, in enumeration
/// order.  TooLargeError when the total count of k-subspaces exceeds cap.
std::vector<Subspace> enumerate_nondegenerate(FieldPtr field, size_t n,
                                              size_t k,
                                              uint64_t cap = max_vertices_cap());

}  // namespace codetops
