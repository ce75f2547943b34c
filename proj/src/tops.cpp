#include "codetops/tops.hpp"

#include <set>

namespace codetops {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Empty: return "Empty";
        case Classification::SinglePoint: return "SinglePoint";
        case Classification::LineContained: return "LineContained";
        case Classification::MaximalTop: return "MaximalTop";
    }
    return "?";
}

std::vector<std::vector<uint32_t>> wprime_reps(const MatrixGF& m) {
    if (m.rref().rank != m.rows())
        throw RankDeficientError("generator rows are linearly dependent");
    const Field& f = *m.field();
    ColumnClasses cls = column_classes(m);
    std::set<std::vector<uint32_t>> covered(cls.reps.begin(), cls.reps.end());
    std::vector<std::vector<uint32_t>> out;
    for (auto& pt : projective_points(f, m.rows()))
        if (!covered.count(pt)) out.push_back(std::move(pt));
    return out;
}

Subspace c_of_w(const MatrixGF& m, std::span<const uint32_t> w) {
    const Field& f = *m.field();
    if (w.size() != m.rows())
        throw SizeMismatchError("w length must equal the row count");
    if (is_zero_vector(w)) throw ZeroWError();

    ColumnClasses cls = column_classes(m);
    auto [wn, alpha] = normalize_projective(f, w);
    for (size_t j = 0; j < cls.reps.size(); ++j)
        if (cls.reps[j] == wn) throw ProportionalToColumnError(cls.classes[j][0]);

    size_t i = 0;
    while (w[i] == 0) ++i;
    uint32_t wi_inv = f.inv(w[i]);
    MatrixGF gens(m.field(), 0, m.cols());
    std::vector<uint32_t> row(m.cols());
    for (size_t l = 0; l < m.rows(); ++l) {
        if (l == i) continue;
        uint32_t c = f.mul(wi_inv, w[l]);
        for (size_t j = 0; j < m.cols(); ++j)
            row[j] = f.sub(m.at(l, j), f.mul(c, m.at(i, j)));
        gens.append_row(row);
    }
    return Subspace::from_span(gens);
}

namespace {

bool has_zero_column(const MatrixGF& m) {
    for (size_t c = 0; c < m.cols(); ++c) {
        bool zero = true;
        for (size_t r = 0; r < m.rows() && zero; ++r)
            if (m.at(r, c) != 0) zero = false;
        if (zero) return true;
    }
    return false;
}

}  // namespace

BigInt TopAnalysis::wprime_full_count() const {
    return BigInt(wprime.size()) * BigInt(field->q() - 1);
}

BigInt TopAnalysis::top_size() const {
    return gaussian_count_points(k + 1, field->q());
}

TopAnalysis analyze(const MatrixGF& generator) {
    if (generator.rows() == 0)
        throw RankDeficientError("generator needs >= 1 row");
    if (generator.rref().rank != generator.rows())
        throw RankDeficientError("generator rows are linearly dependent");

    const FieldPtr& fp = generator.field();
    TopAnalysis a{fp,
                  generator.cols(),
                  generator.rows() - 1,
                  generator,
                  Subspace::from_span(generator),
                  false,
                  std::nullopt,
                  {},
                  Subspace::zero(fp, generator.rows()),
                  Subspace::full(fp, generator.rows()),
                  {},
                  std::nullopt,
                  Classification::Empty,
                  std::nullopt,
                  std::nullopt};

    if (has_zero_column(generator)) {
        a.degenerate = true;
        return a;
    }

    a.classes = column_classes(generator);
    a.wprime = wprime_reps(generator);

    if (!a.wprime.empty()) {
        a.w_span = Subspace::from_rows(fp, a.wprime);
        a.w_perp = orthogonal_complement(a.w_span);
        std::set<Subspace> seen;
        for (const auto& w : a.wprime) {
            Subspace c = c_of_w(generator, w);
            if (seen.insert(c).second) a.members.push_back(std::move(c));
        }
        Subspace common = a.members[0];
        for (size_t i = 1; i < a.members.size(); ++i)
            common = intersect(common, a.members[i]);
        a.common = std::move(common);
    }

    const Field& f = *fp;
    switch (a.w_span.dim()) {
        case 0:
            a.classification = Classification::Empty;
            break;
        case 1:
            a.classification = Classification::SinglePoint;
            a.line_count = gaussian_count_points(a.k, f.q()) *
                           gaussian_count_points(a.n - a.k, f.q());
            break;
        case 2:
            a.classification = Classification::LineContained;
            a.line_pair = std::make_pair(*a.common, a.u);
            break;
        default:
            a.classification = Classification::MaximalTop;
            break;
    }
    return a;
}

TopAnalysis analyze(const Subspace& u, size_t k) {
    if (u.dim() != k + 1)
        throw DimMismatchError("analysis needs dim U = k + 1");
    return analyze(u.basis());
}

std::vector<Subspace> top_nondegenerate(const Subspace& u, size_t k) {
    if (u.dim() != k + 1)
        throw DimMismatchError("top needs dim U = k + 1");
    if (!is_nondegenerate(u)) return {};
    const MatrixGF& m = u.basis();
    std::vector<Subspace> out;
    std::set<Subspace> seen;
    for (const auto& w : wprime_reps(m)) {
        Subspace c = c_of_w(m, w);
        if (seen.insert(c).second) out.push_back(std::move(c));
    }
    return out;
}

Subspace common_intersection(const TopAnalysis& analysis) {
    if (analysis.members.empty()) throw EmptyWPrimeError();
    Subspace common = analysis.members[0];
    for (size_t i = 1; i < analysis.members.size(); ++i)
        common = intersect(common, analysis.members[i]);
    return common;
}

Classification classify(const Subspace& u, size_t k) {
    return analyze(u, k).classification;
}

bool corollary_check(size_t n, size_t k, const Field& field) {
    return gaussian_count_points(k + 1, field.q()) >
           BigInt(n) + BigInt(field.q()) + 1;
}

}  // namespace codetops
