#include "codetops/matrix.hpp"

#include <stdexcept>

namespace codetops {

MatrixGF::MatrixGF(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(rows * cols, 0) {
    if (cols_ == 0) throw std::invalid_argument("matrix needs >= 1 column");
}

MatrixGF MatrixGF::identity(FieldPtr field, size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixGF MatrixGF::from_rows(FieldPtr field,
                             const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs >= 1 row");
    size_t cols = rows[0].size();
    MatrixGF m(std::move(field), rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw SizeMismatchError("ragged rows");
        for (size_t c = 0; c < cols; ++c) {
            if (rows[r][c] >= m.field_->q())
                throw std::invalid_argument("entry out of field range");
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

std::vector<uint32_t> MatrixGF::column(size_t c) const {
    std::vector<uint32_t> v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void MatrixGF::append_row(std::span<const uint32_t> v) {
    if (v.size() != cols_) throw SizeMismatchError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

MatrixGF MatrixGF::operator*(const MatrixGF& rhs) const {
    check_same_field(*field_, *rhs.field_);
    if (cols_ != rhs.rows_) throw SizeMismatchError("inner dimensions differ");
    MatrixGF out(field_, rows_, rhs.cols_);
    const Field& f = *field_;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                uint32_t b = rhs.at(k, j);
                if (b == 0) continue;
                out.set(i, j, f.add(out.at(i, j), f.mul(a, b)));
            }
        }
    return out;
}

MatrixGF MatrixGF::frobenius_map(uint32_t e) const {
    MatrixGF out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_->frobenius(data_[i], e);
    return out;
}

bool MatrixGF::operator==(const MatrixGF& other) const {
    return *field_ == *other.field_ && rows_ == other.rows_ &&
           cols_ == other.cols_ && data_ == other.data_;
}

MatrixGF::Rref MatrixGF::rref() const {
    MatrixGF R(*this);
    const Field& f = *field_;
    std::vector<size_t> pivots;
    size_t pr = 0;  // next pivot row
    for (size_t c = 0; c < cols_ && pr < rows_; ++c) {
        size_t sel = pr;
        while (sel < rows_ && R.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pr)
            for (size_t j = 0; j < cols_; ++j) {
                uint32_t tmp = R.at(pr, j);
                R.set(pr, j, R.at(sel, j));
                R.set(sel, j, tmp);
            }
        uint32_t s = f.inv(R.at(pr, c));
        if (s != 1)
            for (size_t j = c; j < cols_; ++j) R.set(pr, j, f.mul(s, R.at(pr, j)));
        for (size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            uint32_t v = R.at(r, c);
            if (v == 0) continue;
            for (size_t j = c; j < cols_; ++j)
                R.set(r, j, f.sub(R.at(r, j), f.mul(v, R.at(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return Rref{std::move(R), pivots.size(), std::move(pivots)};
}

uint32_t dot(const Field& f, std::span<const uint32_t> a,
             std::span<const uint32_t> b) {
    if (a.size() != b.size()) throw SizeMismatchError("dot length mismatch");
    uint32_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

bool is_zero_vector(std::span<const uint32_t> v) {
    for (uint32_t x : v)
        if (x != 0) return false;
    return true;
}

std::pair<std::vector<uint32_t>, uint32_t> normalize_projective(
    const Field& f, std::span<const uint32_t> v) {
    size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) throw ZeroWError();
    uint32_t alpha = v[lead];
    std::vector<uint32_t> out(v.begin(), v.end());
    if (alpha != 1) {
        uint32_t s = f.inv(alpha);
        for (auto& x : out) x = f.mul(s, x);
    }
    return {std::move(out), alpha};
}

std::vector<std::vector<uint32_t>> projective_points(const Field& f, size_t d) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> v(d, 0);
    for (size_t lead = 0; lead < d; ++lead) {
        std::fill(v.begin(), v.end(), 0u);
        v[lead] = 1;
        bool more = true;
        while (more) {
            out.push_back(v);
            more = false;
            for (size_t i = d; i-- > lead + 1;) {
                if (++v[i] < f.q()) {
                    more = true;
                    break;
                }
                v[i] = 0;
            }
        }
    }
    return out;
}

}  // namespace codetops
