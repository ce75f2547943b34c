#include "codetops/autos.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace codetops {

namespace {

BigInt factorial(uint64_t n) {
    BigInt r = 1;
    for (uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

// Incremental row-echelon elimination with rollback; carries the linear
// constraints of the stabilizer search.
class Elim {
public:
    Elim(const Field& f, size_t nvars) : f_(f), nvars_(nvars) {}

    size_t rank() const { return rows_.size(); }
    size_t nvars() const { return nvars_; }

    void checkpoint() { marks_.push_back(rows_.size()); }
    void rollback() {
        rows_.resize(marks_.back());
        pivs_.resize(marks_.back());
        marks_.pop_back();
    }

    void add(std::vector<uint32_t> v) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            uint32_t c = v[pivs_[i]];
            if (c == 0) continue;
            const auto& row = rows_[i];
            for (size_t j = pivs_[i]; j < nvars_; ++j)
                v[j] = f_.sub(v[j], f_.mul(c, row[j]));
        }
        size_t p = 0;
        while (p < nvars_ && v[p] == 0) ++p;
        if (p == nvars_) return;
        if (v[p] != 1) {
            uint32_t s = f_.inv(v[p]);
            for (size_t j = p; j < nvars_; ++j) v[j] = f_.mul(s, v[j]);
        }
        rows_.push_back(std::move(v));
        pivs_.push_back(p);
    }

    std::vector<std::vector<uint32_t>> kernel_basis() const {
        std::vector<bool> is_piv(nvars_, false);
        for (size_t p : pivs_) is_piv[p] = true;
        std::vector<size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivs_[a] > pivs_[b]; });
        std::vector<std::vector<uint32_t>> basis;
        for (size_t free = 0; free < nvars_; ++free) {
            if (is_piv[free]) continue;
            std::vector<uint32_t> x(nvars_, 0);
            x[free] = 1;
            for (size_t oi : order) {
                const auto& row = rows_[oi];
                size_t p = pivs_[oi];
                uint32_t acc = 0;
                for (size_t j = p + 1; j < nvars_; ++j)
                    if (row[j] != 0 && x[j] != 0)
                        acc = f_.add(acc, f_.mul(row[j], x[j]));
                x[p] = f_.neg(acc);
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    const Field& f_;
    size_t nvars_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<size_t> pivs_;
    std::vector<size_t> marks_;
};

}  // namespace

bool MonomialMap::operator<(const MonomialMap& other) const {
    if (frob != other.frob) return frob < other.frob;
    if (delta != other.delta) return delta < other.delta;
    return scales < other.scales;
}

MonomialMap identity_map(FieldPtr field, size_t n) {
    MonomialMap f{std::move(field), std::vector<size_t>(n),
                  std::vector<uint32_t>(n, 1), 0};
    std::iota(f.delta.begin(), f.delta.end(), size_t{0});
    return f;
}

MonomialMap make_monomial(FieldPtr field, std::vector<size_t> delta,
                          std::vector<uint32_t> scales, uint32_t frob) {
    if (delta.size() != scales.size())
        throw SizeMismatchError("permutation and scale lengths differ");
    std::vector<bool> seen(delta.size(), false);
    for (size_t i : delta) {
        if (i >= delta.size() || seen[i])
            throw std::invalid_argument("delta is not a permutation");
        seen[i] = true;
    }
    for (uint32_t s : scales)
        if (s == 0 || s >= field->q())
            throw std::invalid_argument("scales must be non-zero field values");
    frob %= field->m();
    return MonomialMap{std::move(field), std::move(delta), std::move(scales),
                       frob};
}

std::vector<uint32_t> apply(const MonomialMap& f, std::span<const uint32_t> x) {
    if (x.size() != f.n()) throw SizeMismatchError("vector length differs");
    const Field& fld = *f.field;
    std::vector<uint32_t> y(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i)
        y[f.delta[i]] = fld.mul(f.scales[i], fld.frobenius(x[i], f.frob));
    return y;
}

MatrixGF apply(const MonomialMap& f, const MatrixGF& m) {
    check_same_field(*f.field, *m.field());
    if (m.cols() != f.n()) throw SizeMismatchError("column count differs");
    MatrixGF out(m.field(), 0, m.cols());
    for (size_t r = 0; r < m.rows(); ++r) out.append_row(apply(f, m.row(r)));
    return out;
}

Subspace apply(const MonomialMap& f, const Subspace& s) {
    return Subspace::from_span(apply(f, s.basis()));
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
    check_same_field(*f.field, *g.field);
    if (f.n() != g.n()) throw SizeMismatchError("sizes differ");
    const Field& fld = *f.field;
    size_t n = f.n();
    MonomialMap h{f.field, std::vector<size_t>(n), std::vector<uint32_t>(n),
                  (f.frob + g.frob) % fld.m()};
    for (size_t i = 0; i < n; ++i) {
        h.delta[i] = f.delta[g.delta[i]];
        h.scales[i] =
            fld.mul(f.scales[g.delta[i]], fld.frobenius(g.scales[i], f.frob));
    }
    return h;
}

MonomialMap inverse(const MonomialMap& f) {
    const Field& fld = *f.field;
    size_t n = f.n();
    uint32_t e = static_cast<uint32_t>((fld.m() - f.frob) % fld.m());
    MonomialMap g{f.field, std::vector<size_t>(n), std::vector<uint32_t>(n), e};
    for (size_t i = 0; i < n; ++i) {
        g.delta[f.delta[i]] = i;
        g.scales[f.delta[i]] = fld.frobenius(fld.inv(f.scales[i]), e);
    }
    return g;
}

BigInt group_order(size_t n, const Field& field, bool semilinear) {
    BigInt r = factorial(n);
    r *= boost::multiprecision::pow(BigInt(field.q() - 1),
                                    static_cast<unsigned>(n));
    if (semilinear) r *= field.m();
    return r;
}

namespace {

OrbitLabel column_label(const Field& f,
                        const std::vector<std::vector<uint32_t>>& srows,
                        const std::vector<std::vector<uint32_t>>& cols) {
    OrbitLabel label;
    label.reserve(cols.size());
    size_t d = srows.size();
    std::vector<uint32_t> y(d);
    for (const auto& c : cols) {
        for (size_t r = 0; r < d; ++r) y[r] = dot(f, srows[r], c);
        label.push_back(normalize_projective(f, y).first);
    }
    std::sort(label.begin(), label.end());
    return label;
}

void enumerate_gl(const Field& f, size_t d, Elim& elim,
                  std::vector<std::vector<uint32_t>>& srows,
                  const std::function<void()>& leaf) {
    if (srows.size() == d) {
        leaf();
        return;
    }
    std::vector<uint32_t> v(d, 0);
    bool more = true;
    while (more) {
        if (!is_zero_vector(v)) {
            elim.checkpoint();
            size_t before = elim.rank();
            elim.add(v);
            if (elim.rank() == before + 1) {
                srows.push_back(v);
                enumerate_gl(f, d, elim, srows, leaf);
                srows.pop_back();
            }
            elim.rollback();
        }
        more = false;
        for (size_t i = d; i-- > 0;) {
            if (++v[i] < f.q()) {
                more = true;
                break;
            }
            v[i] = 0;
        }
    }
}

}  // namespace

OrbitLabel orbit_canonical_form(const MatrixGF& m, bool semilinear,
                                uint64_t cap) {
    const Field& f = *m.field();
    if (m.rref().rank != m.rows())
        throw RankDeficientError("generator rows are linearly dependent");
    column_classes(m);  // rejects zero columns

    size_t d = m.rows();
    BigInt gl_order = 1;
    for (size_t i = 0; i < d; ++i)
        gl_order *= boost::multiprecision::pow(BigInt(f.q()),
                                               static_cast<unsigned>(d)) -
                    boost::multiprecision::pow(BigInt(f.q()),
                                               static_cast<unsigned>(i));
    if (gl_order > cap)
        throw TooLargeError("orbit label minimization",
                            gl_order > std::numeric_limits<uint64_t>::max()
                                ? std::numeric_limits<uint64_t>::max()
                                : static_cast<uint64_t>(gl_order),
                            cap);

    std::optional<OrbitLabel> best;
    uint32_t emax = semilinear ? f.m() : 1;
    for (uint32_t e = 0; e < emax; ++e) {
        MatrixGF me = m.frobenius_map(e);
        std::vector<std::vector<uint32_t>> cols(me.cols());
        for (size_t c = 0; c < me.cols(); ++c) cols[c] = me.column(c);
        Elim elim(f, d);
        std::vector<std::vector<uint32_t>> srows;
        enumerate_gl(f, d, elim, srows, [&]() {
            OrbitLabel lab = column_label(f, srows, cols);
            if (!best || lab < *best) best = std::move(lab);
        });
    }
    return *best;
}

namespace {

struct StabSearch {
    const Field& f;
    const ColumnClasses& cls;
    size_t d, s;
    uint32_t e;
    uint64_t cap;
    uint64_t nodes = 0;

    std::vector<std::vector<uint32_t>> targets;  // frobenius image of reps
    std::vector<size_t> prefix_rank;
    Elim sys;
    Elim img;
    std::vector<size_t> pi;
    std::vector<bool> used;
    std::vector<MonomialMap>* out;
    FieldPtr field;

    StabSearch(FieldPtr fp, const ColumnClasses& c, uint32_t e_, uint64_t cap_,
               std::vector<MonomialMap>* out_)
        : f(*fp), cls(c), d(c.reps[0].size()), s(c.count()), e(e_), cap(cap_),
          sys(*fp, c.reps[0].size() * c.reps[0].size() + c.count()),
          img(*fp, c.reps[0].size()), pi(c.count()), used(c.count(), false),
          out(out_), field(std::move(fp)) {
        targets.resize(s);
        for (size_t j = 0; j < s; ++j) {
            targets[j].resize(d);
            for (size_t r = 0; r < d; ++r)
                targets[j][r] = f.frobenius(cls.reps[j][r], e);
        }
        Elim pre(f, d);
        prefix_rank.resize(s);
        for (size_t j = 0; j < s; ++j) {
            pre.add(cls.reps[j]);
            prefix_rank[j] = pre.rank();
        }
    }

    void run() { descend(0); }

    void descend(size_t j) {
        if (++nodes > cap)
            throw TooLargeError("stabilizer search", nodes, cap);
        if (j == s) {
            emit_leaf();
            return;
        }
        size_t size_j = cls.classes[j].size();
        for (size_t c = 0; c < s; ++c) {
            if (used[c] || cls.classes[c].size() != size_j) continue;
            img.checkpoint();
            img.add(cls.reps[c]);
            if (img.rank() != prefix_rank[j]) {
                img.rollback();
                continue;
            }
            sys.checkpoint();
            // S r_c = mu_j * target_j, one equation per coordinate row.
            for (size_t r = 0; r < d; ++r) {
                std::vector<uint32_t> eq(d * d + s, 0);
                for (size_t col = 0; col < d; ++col)
                    eq[r * d + col] = cls.reps[c][col];
                eq[d * d + j] = f.neg(targets[j][r]);
                sys.add(eq);
            }
            if (sys.nvars() - sys.rank() > 0) {
                pi[j] = c;
                used[c] = true;
                descend(j + 1);
                used[c] = false;
            }
            sys.rollback();
            img.rollback();
        }
    }

    void emit_leaf() {
        auto basis = sys.kernel_basis();
        size_t t = basis.size();
        // q^t kernel elements; only the mu block matters for output.
        uint64_t combos = 1;
        for (size_t i = 0; i < t; ++i) {
            combos *= f.q();
            if (combos > cap)
                throw TooLargeError("stabilizer kernel sweep", combos, cap);
        }
        std::vector<uint32_t> coeff(t, 0);
        std::vector<uint32_t> mu(s);
        for (uint64_t step = 0; step < combos; ++step) {
            bool ok = true;
            for (size_t j = 0; j < s && ok; ++j) {
                uint32_t acc = 0;
                for (size_t i = 0; i < t; ++i)
                    if (coeff[i] != 0)
                        acc = f.add(acc, f.mul(coeff[i], basis[i][d * d + j]));
                mu[j] = acc;
                if (acc == 0) ok = false;
            }
            if (ok) emit_maps(mu);
            for (size_t i = t; i-- > 0;) {
                if (++coeff[i] < f.q()) break;
                coeff[i] = 0;
            }
        }
    }

    // All internal bijections for the class assignment pi, scales fixed
    // by mu.
    void emit_maps(const std::vector<uint32_t>& mu) {
        size_t n = cls.class_of.size();
        std::vector<std::vector<size_t>> target_perm(s);
        for (size_t j = 0; j < s; ++j) target_perm[j] = cls.classes[pi[j]];
        std::vector<size_t> delta(n);
        std::vector<uint32_t> scales(n);

        std::function<void(size_t)> internal = [&](size_t j) {
            if (j == s) {
                if (out->size() >= cap)
                    throw TooLargeError("stabilizer result", out->size() + 1,
                                        cap);
                out->push_back(MonomialMap{field, delta, scales, e});
                return;
            }
            auto& perm = target_perm[j];
            std::sort(perm.begin(), perm.end());
            do {
                const auto& src = cls.classes[j];
                for (size_t idx = 0; idx < src.size(); ++idx) {
                    size_t i = src[idx];
                    size_t di = perm[idx];
                    delta[i] = di;
                    scales[i] = f.mul(
                        f.mul(cls.scalars[di], mu[j]),
                        f.inv(f.frobenius(cls.scalars[i], e)));
                }
                internal(j + 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        internal(0);
    }
};

}  // namespace

std::vector<MonomialMap> stabilizer(const Subspace& u, bool semilinear,
                                    uint64_t cap) {
    if (u.dim() == 0)
        throw DimMismatchError("stabilizer needs dim U >= 1");
    const FieldPtr& fp = u.field();
    ColumnClasses cls = column_classes(u.basis());
    std::vector<MonomialMap> out;
    uint32_t emax = semilinear ? fp->m() : 1;
    for (uint32_t e = 0; e < emax; ++e) {
        StabSearch search(fp, cls, e, cap, &out);
        search.run();
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt orbit_size(const Subspace& u, bool semilinear, uint64_t cap) {
    std::vector<MonomialMap> stab = stabilizer(u, semilinear, cap);
    BigInt order = group_order(u.ambient_dim(), *u.field(), semilinear);
    BigInt res = order / BigInt(stab.size());
    if (res * BigInt(stab.size()) != order)
        throw std::logic_error("stabilizer order does not divide group order");
    return res;
}

MatrixCounts remark_counts(const MatrixGF& m) {
    ColumnClasses cls = column_classes(m);
    BigInt autos = 1;
    for (const auto& c : cls.classes) autos *= factorial(c.size());
    BigInt arrangements = factorial(m.cols()) / autos;
    arrangements *= boost::multiprecision::pow(
        BigInt(m.field()->q() - 1), static_cast<unsigned>(m.cols()));
    return MatrixCounts{std::move(autos), std::move(arrangements)};
}

bool acts_identically_on_top(const MonomialMap& f, const Subspace& u,
                             size_t k) {
    if (apply(f, u) != u) throw NotInStabilizerError();
    for (const Subspace& member : top_nondegenerate(u, k))
        if (apply(f, member) != member) return false;
    return true;
}

}  // namespace codetops
