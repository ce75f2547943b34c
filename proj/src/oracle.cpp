#include "codetops/oracle.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <bit>
#include <limits>
#include <numeric>

namespace codetops {

std::vector<Subspace> brute_top_members(const Subspace& u, size_t k) {
    std::vector<Subspace> out;
    for (Subspace& s : enumerate_subspaces(u, k))
        if (is_nondegenerate(s)) out.push_back(std::move(s));
    return out;
}

CliqueReport check_maximal_clique(const GrassmannGraph& g,
                                  const std::vector<size_t>& members) {
    for (size_t v : members)
        if (v >= g.vertex_count()) throw UnknownVertexError("vertex index " + std::to_string(v) +
                                 " out of range");
    CliqueReport rep;
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            if (!g.edge(members[a], members[b])) {
                rep.missing_edge = {members[a], members[b]};
                return rep;
            }
    rep.is_clique = true;
    std::vector<bool> inside(g.vertex_count(), false);
    for (size_t v : members) inside[v] = true;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (inside[v]) continue;
        bool all = true;
        for (size_t w : members)
            if (!g.edge(v, w)) {
                all = false;
                break;
            }
        if (all) {
            rep.extension = v;
            return rep;
        }
    }
    rep.is_maximal = true;
    return rep;
}

CliqueReport check_maximal_clique(const GrassmannGraph& g,
                                  const std::vector<Subspace>& members) {
    std::vector<size_t> idx;
    idx.reserve(members.size());
    for (const Subspace& s : members) {
        std::optional<size_t> i = g.index_of(s);
        if (!i) throw UnknownVertexError("subspace is not a graph vertex");
        idx.push_back(*i);
    }
    return check_maximal_clique(g, idx);
}

namespace {

using Bits = std::vector<uint64_t>;

size_t popcount(const Bits& b) {
    size_t n = 0;
    for (uint64_t w : b) n += static_cast<size_t>(std::popcount(w));
    return n;
}

bool test_bit(const Bits& b, size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1;
}

void clear_bit(Bits& b, size_t i) { b[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

Bits and_bits(const Bits& a, std::span<const uint64_t> b) {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

bool any_bits(const Bits& b) {
    for (uint64_t w : b)
        if (w) return true;
    return false;
}

void bron_kerbosch(const GrassmannGraph& g, std::vector<size_t>& r, Bits p,
                   Bits x, std::vector<std::vector<size_t>>& out) {
    if (!any_bits(p) && !any_bits(x)) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X with the most neighbours in P.
    size_t pivot = g.vertex_count();
    size_t best = 0;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (!test_bit(p, v) && !test_bit(x, v)) continue;
        size_t deg = popcount(and_bits(p, g.neighbor_bits(v)));
        if (pivot == g.vertex_count() || deg > best) {
            pivot = v;
            best = deg;
        }
    }
    Bits candidates = p;
    std::span<const uint64_t> pn = g.neighbor_bits(pivot);
    for (size_t i = 0; i < candidates.size(); ++i) candidates[i] &= ~pn[i];
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (!test_bit(candidates, v)) continue;
        r.push_back(v);
        bron_kerbosch(g, r, and_bits(p, g.neighbor_bits(v)),
                      and_bits(x, g.neighbor_bits(v)), out);
        r.pop_back();
        clear_bit(p, v);
        x[v >> 6] |= uint64_t{1} << (v & 63);
    }
}

}  // namespace

std::vector<std::vector<size_t>> all_maximal_cliques(const GrassmannGraph& g,
                                                     size_t max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw TooLargeError("maximal clique sweep", g.vertex_count(), max_vertices);
    std::vector<std::vector<size_t>> out;
    if (g.vertex_count() == 0) return out;
    size_t words = (g.vertex_count() + 63) / 64;
    Bits p(words, 0), x(words, 0);
    for (size_t v = 0; v < g.vertex_count(); ++v)
        p[v >> 6] |= uint64_t{1} << (v & 63);
    std::vector<size_t> r;
    bron_kerbosch(g, r, std::move(p), std::move(x), out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialMap> all_monomial_maps(const FieldPtr& field, size_t n,
                                           bool semilinear, uint64_t cap) {
    BigInt total = group_order(n, *field, semilinear);
    if (total > cap)
        throw TooLargeError("monomial map sweep",
                            static_cast<uint64_t>(
                                total > std::numeric_limits<uint64_t>::max()
                                    ? std::numeric_limits<uint64_t>::max()
                                    : total),
                            cap);
    std::vector<MonomialMap> out;
    out.reserve(static_cast<size_t>(total));
    uint32_t emax = semilinear ? field->m() : 1;
    std::vector<size_t> delta(n);
    std::iota(delta.begin(), delta.end(), size_t{0});
    do {
        std::vector<uint32_t> scales(n, 1);
        bool more = true;
        while (more) {
            for (uint32_t e = 0; e < emax; ++e)
                out.push_back(MonomialMap{field, delta, scales, e});
            more = false;
            for (size_t i = n; i-- > 0;) {
                if (++scales[i] < field->q()) {
                    more = true;
                    break;
                }
                scales[i] = 1;
            }
        }
    } while (std::next_permutation(delta.begin(), delta.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialMap> brute_stabilizer(const Subspace& u, bool semilinear,
                                          uint64_t cap) {
    std::vector<MonomialMap> out;
    for (MonomialMap& f : all_monomial_maps(u.field(), u.ambient_dim(),
                                            semilinear, cap))
        if (apply(f, u) == u) out.push_back(std::move(f));
    return out;
}

}  // namespace codetops
