#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "codetops/field.hpp"

namespace codetops {

/// Dense matrix over a finite field, entries stored as canonical values.
/// Zero-row matrices are permitted (they represent empty bases); a matrix
/// always has at least one column.
class MatrixGF {
public:
    MatrixGF(FieldPtr field, size_t rows, size_t cols);
    static MatrixGF identity(FieldPtr field, size_t n);
    static MatrixGF from_rows(FieldPtr field,
                              const std::vector<std::vector<uint32_t>>& rows);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v; }

    std::span<const uint32_t> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<uint32_t> row_vec(size_t r) const {
        return {data_.begin() + static_cast<long>(r * cols_),
                data_.begin() + static_cast<long>((r + 1) * cols_)};
    }
    std::vector<uint32_t> column(size_t c) const;

    void append_row(std::span<const uint32_t> v);

    MatrixGF operator*(const MatrixGF& rhs) const;

    /// Entry-wise application of the Frobenius power a |-> a^(p^e).
    MatrixGF frobenius_map(uint32_t e) const;

    bool operator==(const MatrixGF& other) const;
    bool operator!=(const MatrixGF& other) const { return !(*this == other); }

    /// Reduced row echelon form: pivot entries 1, pivot columns cleared
    /// above and below, pivot columns strictly increasing.
    struct Rref;
    Rref rref() const;

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

struct MatrixGF::Rref {
    MatrixGF R;                  // same shape, zero rows at the bottom
    size_t rank;
    std::vector<size_t> pivots;  // pivot column of each non-zero row
};

// Row-vector helpers.  All vectors are canonical-value sequences over one
// field; sizes must agree.
uint32_t dot(const Field& f, std::span<const uint32_t> a,
             std::span<const uint32_t> b);
bool is_zero_vector(std::span<const uint32_t> v);

/// Scales a non-zero vector so its first non-zero entry is 1.  Returns the
/// normalized vector and the scalar alpha with v = alpha * normalized.
std::pair<std::vector<uint32_t>, uint32_t> normalize_projective(
    const Field& f, std::span<const uint32_t> v);

/// All normalized representatives of the projective points of F_q^d:
/// leading coordinate 1, enumerated by ascending leading index and then
/// lexicographically on the remaining coordinates (earlier positions most
/// significant).  Exactly (q^d - 1)/(q - 1) vectors.
std::vector<std::vector<uint32_t>> projective_points(const Field& f, size_t d);

}  // namespace codetops
