#include "codetops/subspace.hpp"

#include <algorithm>

namespace codetops {

Subspace Subspace::from_span(const MatrixGF& m) {
    auto rr = m.rref();
    MatrixGF basis(m.field(), 0, m.cols());
    for (size_t r = 0; r < rr.rank; ++r) basis.append_row(rr.R.row(r));
    return Subspace(std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::from_rows(FieldPtr field,
                             const std::vector<std::vector<uint32_t>>& rows) {
    return from_span(MatrixGF::from_rows(std::move(field), rows));
}

Subspace Subspace::zero(FieldPtr field, size_t n) {
    return Subspace(MatrixGF(std::move(field), 0, n), {});
}

Subspace Subspace::full(FieldPtr field, size_t n) {
    std::vector<size_t> piv(n);
    for (size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(MatrixGF::identity(std::move(field), n), std::move(piv));
}

bool Subspace::contains(std::span<const uint32_t> v) const {
    if (v.size() != ambient_dim())
        throw AmbientMismatchError("vector length differs from ambient");
    const Field& f = *field();
    std::vector<uint32_t> r(v.begin(), v.end());
    for (size_t i = 0; i < dim(); ++i) {
        uint32_t c = r[pivots_[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < r.size(); ++j)
            r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw AmbientMismatchError("ambient dimensions differ");
    for (size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<uint32_t>> Subspace::to_local(
    std::span<const uint32_t> v) const {
    if (v.size() != ambient_dim())
        throw AmbientMismatchError("vector length differs from ambient");
    // Against an RREF basis the coefficient of row i is v at its pivot.
    std::vector<uint32_t> coeffs(dim());
    for (size_t i = 0; i < dim(); ++i) coeffs[i] = v[pivots_[i]];
    std::vector<uint32_t> rebuilt = from_local(coeffs);
    for (size_t j = 0; j < v.size(); ++j)
        if (rebuilt[j] != v[j]) return std::nullopt;
    return coeffs;
}

std::vector<uint32_t> Subspace::from_local(
    std::span<const uint32_t> coeffs) const {
    if (coeffs.size() != dim())
        throw SizeMismatchError("coefficient count differs from dim");
    const Field& f = *field();
    std::vector<uint32_t> v(ambient_dim(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        if (coeffs[i] == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = f.add(v[j], f.mul(coeffs[i], basis_.at(i, j)));
    }
    return v;
}

bool Subspace::operator==(const Subspace& other) const {
    return basis_ == other.basis_;
}

bool Subspace::operator<(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
        return ambient_dim() < other.ambient_dim();
    if (dim() != other.dim()) return dim() < other.dim();
    for (size_t r = 0; r < dim(); ++r)
        for (size_t c = 0; c < ambient_dim(); ++c) {
            uint32_t a = basis_.at(r, c), b = other.basis_.at(r, c);
            if (a != b) return a < b;
        }
    return false;
}

size_t Subspace::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(ambient_dim());
    mix(dim());
    for (size_t r = 0; r < dim(); ++r)
        for (size_t c = 0; c < ambient_dim(); ++c) mix(basis_.at(r, c));
    return static_cast<size_t>(h);
}

Subspace kernel(const MatrixGF& m) {
    const Field& f = *m.field();
    auto rr = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivots) is_pivot[c] = true;

    MatrixGF gens(m.field(), 0, m.cols());
    std::vector<uint32_t> v(m.cols());
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0u);
        v[free] = 1;
        for (size_t r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = f.neg(rr.R.at(r, free));
        gens.append_row(v);
    }
    if (gens.rows() == 0) return Subspace::zero(m.field(), m.cols());
    return Subspace::from_span(gens);
}

Subspace orthogonal_complement(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
    return kernel(s.basis());
}

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
    check_same_field(*a.field(), *b.field());
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatchError("ambient dimensions differ");
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.field(), a.ambient_dim());
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry an
    // intersection basis in their right half.
    size_t n = a.ambient_dim();
    MatrixGF block(a.field(), a.dim() + b.dim(), 2 * n);
    for (size_t r = 0; r < a.dim(); ++r)
        for (size_t c = 0; c < n; ++c) {
            block.set(r, c, a.basis().at(r, c));
            block.set(r, n + c, a.basis().at(r, c));
        }
    for (size_t r = 0; r < b.dim(); ++r)
        for (size_t c = 0; c < n; ++c)
            block.set(a.dim() + r, c, b.basis().at(r, c));
    auto rr = block.rref();

    MatrixGF gens(a.field(), 0, n);
    std::vector<uint32_t> right(n);
    for (size_t r = 0; r < rr.rank; ++r) {
        bool left_zero = true;
        for (size_t c = 0; c < n && left_zero; ++c)
            if (rr.R.at(r, c) != 0) left_zero = false;
        if (!left_zero) continue;
        for (size_t c = 0; c < n; ++c) right[c] = rr.R.at(r, n + c);
        if (!is_zero_vector(right)) gens.append_row(right);
    }
    if (gens.rows() == 0) return Subspace::zero(a.field(), n);
    return Subspace::from_span(gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    MatrixGF stacked(a.field(), 0, a.ambient_dim());
    for (size_t r = 0; r < a.dim(); ++r) stacked.append_row(a.basis().row(r));
    for (size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
    if (stacked.rows() == 0) return Subspace::zero(a.field(), a.ambient_dim());
    return Subspace::from_span(stacked);
}

std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, size_t k) {
    size_t d = ambient.dim();
    if (k > d)
        throw BadDimensionError("k = " + std::to_string(k) +
                                " exceeds dim(ambient) = " + std::to_string(d));
    const FieldPtr& fp = ambient.field();
    const Field& f = *fp;
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(fp, ambient.ambient_dim()));
        return out;
    }
    bool ambient_is_full = ambient.dim() == ambient.ambient_dim();

    // Pivot sets in lexicographic order.
    std::vector<size_t> piv(k);
    for (size_t i = 0; i < k; ++i) piv[i] = i;
    auto advance_combo = [&]() -> bool {
        size_t i = k;
        while (i-- > 0) {
            if (piv[i] < d - k + i) {
                ++piv[i];
                for (size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::vector<uint32_t> qvals(f.q());
    for (size_t i = 0; i < qvals.size(); ++i) qvals[i] = static_cast<uint32_t>(i);

    do {
        std::vector<bool> is_pivot(d, false);
        for (size_t c : piv) is_pivot[c] = true;
        // Free positions in row-major order.
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t r = 0; r < k; ++r)
            for (size_t c = piv[r] + 1; c < d; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        std::vector<size_t> odo(free_pos.size(), 0);
        bool more = true;
        while (more) {
            MatrixGF coord(fp, k, d);
            for (size_t r = 0; r < k; ++r) coord.set(r, piv[r], 1);
            for (size_t i = 0; i < free_pos.size(); ++i)
                coord.set(free_pos[i].first, free_pos[i].second,
                          qvals[odo[i]]);
            out.push_back(Subspace::from_span(
                ambient_is_full ? coord : coord * ambient.basis()));
            // Odometer: last position fastest, so earlier positions are
            // most significant.
            more = false;
            for (size_t i = free_pos.size(); i-- > 0;) {
                if (++odo[i] < f.q()) {
                    more = true;
                    break;
                }
                odo[i] = 0;
            }
        }
    } while (advance_combo());
    return out;
}

}  // namespace codetops
