#include "codetops/grassmann.hpp"

#include <algorithm>
#include <limits>

#include "codetops/codes.hpp"

namespace codetops {

BigInt gaussian_binomial(uint64_t n, uint64_t k, uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (k > n) return 0;
    if (k == 0 || k == n) return 1;
    BigInt num = 1, den = 1, Q = q;
    for (uint64_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Q, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(Q, static_cast<unsigned>(i + 1)) - 1;
    }
    BigInt res = num / den;
    if (res * den != num)
        throw std::logic_error("gaussian binomial division not exact");
    return res;
}

BigInt gaussian_count_points(uint64_t n, uint64_t q) {
    return gaussian_binomial(n, 1, q);
}

bool adjacent(const Subspace& a, const Subspace& b) {
    check_same_field(*a.field(), *b.field());
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatchError("ambient dimensions differ");
    if (a.dim() != b.dim())
        throw DimMismatchError("subspaces must have equal dimension");
    size_t k = a.dim();
    if (k == 0) return false;
    // dim(A+B) via one elimination; dim(A cap B) = 2k - dim(A+B).
    MatrixGF stacked(a.field(), 0, a.ambient_dim());
    for (size_t r = 0; r < k; ++r) stacked.append_row(a.basis().row(r));
    for (size_t r = 0; r < k; ++r) stacked.append_row(b.basis().row(r));
    size_t dim_sum = stacked.rref().rank;
    return 2 * k - dim_sum == k - 1;
}

std::vector<Subspace> line(const Subspace& s, const Subspace& u) {
    check_same_field(*s.field(), *u.field());
    if (s.ambient_dim() != u.ambient_dim())
        throw AmbientMismatchError("ambient dimensions differ");
    if (u.dim() < 2 || s.dim() + 2 != u.dim())
        throw NotIncidentError("line needs dim S = dim U - 2");
    if (!u.contains(s)) throw NotIncidentError("S is not contained in U");

    // Extend a basis of S by two vectors u1, u2 of U.
    const Field& f = *u.field();
    MatrixGF ext(u.field(), 0, u.ambient_dim());
    for (size_t r = 0; r < s.dim(); ++r) ext.append_row(s.basis().row(r));
    std::vector<std::vector<uint32_t>> extra;
    for (size_t r = 0; r < u.dim() && extra.size() < 2; ++r) {
        MatrixGF trial = ext;
        trial.append_row(u.basis().row(r));
        if (trial.rref().rank == ext.rows() + 1) {
            ext = std::move(trial);
            extra.push_back(u.basis().row_vec(r));
        }
    }

    std::vector<Subspace> members;
    auto push_member = [&](const std::vector<uint32_t>& v) {
        MatrixGF gens(u.field(), 0, u.ambient_dim());
        for (size_t r = 0; r < s.dim(); ++r) gens.append_row(s.basis().row(r));
        gens.append_row(v);
        members.push_back(Subspace::from_span(gens));
    };
    push_member(extra[0]);
    for (uint32_t c : f.elements()) {
        std::vector<uint32_t> v(extra[1]);
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = f.add(v[j], f.mul(c, extra[0][j]));
        push_member(v);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Subspace> top_members(const Subspace& u, size_t k) {
    if (u.dim() != k + 1)
        throw DimMismatchError("top needs dim U = k + 1");
    return enumerate_subspaces(u, k);
}

GrassmannGraph::GrassmannGraph(FieldPtr field, size_t n, size_t k,
                               bool restricted, std::vector<Subspace> vertices)
    : field_(std::move(field)), n_(n), k_(k), restricted_(restricted),
      vertices_(std::move(vertices)) {
    index_.reserve(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
    size_t v = vertices_.size();
    words_ = (v + 63) / 64;
    bits_.assign(v * words_, 0);
    for (size_t i = 0; i < v; ++i)
        for (size_t j = i + 1; j < v; ++j)
            if (adjacent(vertices_[i], vertices_[j])) {
                bits_[i * words_ + j / 64] |= uint64_t{1} << (j % 64);
                bits_[j * words_ + i / 64] |= uint64_t{1} << (i % 64);
            }
}

std::optional<size_t> GrassmannGraph::index_of(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<size_t> GrassmannGraph::neighbors(size_t i) const {
    std::vector<size_t> out;
    for (size_t j = 0; j < vertices_.size(); ++j)
        if (edge(i, j)) out.push_back(j);
    return out;
}

GrassmannGraph build_graph(FieldPtr field, size_t n, size_t k,
                           bool nondegenerate_only, uint64_t cap) {
    BigInt total = gaussian_binomial(n, k, field->q());
    if (total > cap)
        throw TooLargeError("grassmann graph",
                            total > std::numeric_limits<uint64_t>::max()
                                ? std::numeric_limits<uint64_t>::max()
                                : static_cast<uint64_t>(total),
                            cap);
    std::vector<Subspace> verts;
    if (nondegenerate_only) {
        verts = enumerate_nondegenerate(field, n, k, cap);
    } else {
        verts = enumerate_subspaces(Subspace::full(field, n), k);
    }
    return GrassmannGraph(std::move(field), n, k, nondegenerate_only,
                          std::move(verts));
}

}  // namespace codetops
