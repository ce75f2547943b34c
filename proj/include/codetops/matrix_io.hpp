#pragma once

#include <iosfwd>

#include "codetops/matrix.hpp"

namespace codetops {

/// Text format for matrices over finite fields:
///
///   q=9 poly=2,2,1
///   1 0 2 11
///   0 1 12 20
///
/// The header declares the field: `q=N` for GF(N), with an optional
/// `poly=c0,c1,...,cm` giving the modulus coefficients (constant term
/// first) when N = p^m is a proper prime power.  Without `poly=` a
/// built-in modulus is used.  Each following non-blank line is one row;
/// entries are separated by spaces and written in the element text
/// syntax: plain residues for prime fields, base-p numerals (most
/// significant digit first) for extension fields.
///
/// All parse failures throw ParseError carrying 1-based line/column.
MatrixGF parse_matrix(std::istream& in);
MatrixGF parse_matrix(const std::string& text);
MatrixGF load_matrix_file(const std::string& path);

/// Inverse of parse_matrix; parse_matrix(serialize_matrix(m)) == m.
/// Extension fields always get an explicit poly= clause.
std::string serialize_matrix(const MatrixGF& m);

}  // namespace codetops
