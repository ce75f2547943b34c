#include "codetops/codes.hpp"

#include <limits>
#include <map>

#include "codetops/grassmann.hpp"

namespace codetops {

bool is_nondegenerate(const Subspace& s) {
    if (s.dim() == 0) return s.ambient_dim() == 0;
    const MatrixGF& b = s.basis();
    for (size_t c = 0; c < b.cols(); ++c) {
        bool zero = true;
        for (size_t r = 0; r < b.rows() && zero; ++r)
            if (b.at(r, c) != 0) zero = false;
        if (zero) return false;
    }
    return true;
}

ColumnClasses column_classes(const MatrixGF& m) {
    const Field& f = *m.field();
    ColumnClasses out;
    out.class_of.resize(m.cols());
    out.scalars.resize(m.cols());
    std::map<std::vector<uint32_t>, size_t> seen;
    for (size_t c = 0; c < m.cols(); ++c) {
        std::vector<uint32_t> col = m.column(c);
        if (is_zero_vector(col)) throw ZeroColumnError(c);
        auto [rep, alpha] = normalize_projective(f, col);
        auto it = seen.find(rep);
        size_t idx;
        if (it == seen.end()) {
            idx = out.classes.size();
            seen.emplace(rep, idx);
            out.classes.emplace_back();
            out.reps.push_back(std::move(rep));
        } else {
            idx = it->second;
        }
        out.classes[idx].push_back(c);
        out.class_of[c] = idx;
        out.scalars[c] = alpha;
    }
    return out;
}

Subspace coordinate_section(const Subspace& u, size_t i) {
    if (i >= u.ambient_dim())
        throw AmbientMismatchError("coordinate index out of range");
    if (u.dim() == 0) return u;
    // Local solutions of sum_r a_r * B[r][i] = 0, mapped back to ambient.
    MatrixGF eq(u.field(), 1, u.dim());
    for (size_t r = 0; r < u.dim(); ++r) eq.set(0, r, u.basis().at(r, i));
    Subspace local = kernel(eq);
    if (local.dim() == 0) return Subspace::zero(u.field(), u.ambient_dim());
    MatrixGF gens(u.field(), 0, u.ambient_dim());
    for (size_t r = 0; r < local.dim(); ++r)
        gens.append_row(u.from_local(local.basis().row(r)));
    return Subspace::from_span(gens);
}

std::vector<Subspace> enumerate_nondegenerate(FieldPtr field, size_t n,
                                              size_t k, uint64_t cap) {
    BigInt total = gaussian_binomial(n, k, field->q());
    if (total > cap)
        throw TooLargeError("k-subspace enumeration",
                            total > std::numeric_limits<uint64_t>::max()
                                ? std::numeric_limits<uint64_t>::max()
                                : static_cast<uint64_t>(total),
                            cap);
    Subspace ambient = Subspace::full(field, n);
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(ambient, k))
        if (is_nondegenerate(s)) out.push_back(std::move(s));
    return out;
}

}  // namespace codetops
