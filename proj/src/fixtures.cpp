#include "codetops/fixtures.hpp"

#include <algorithm>
#include <set>

namespace codetops::fixtures {

namespace {

using Rows = std::vector<std::vector<uint32_t>>;

/// All projective points of F_q^d except the listed (normalized) ones,
/// laid out as matrix columns in enumeration order.
MatrixGF points_minus(const FieldPtr& field, size_t d, const Rows& skip) {
    std::set<std::vector<uint32_t>> excluded(skip.begin(), skip.end());
    std::vector<std::vector<uint32_t>> cols;
    for (auto& p : projective_points(*field, d))
        if (!excluded.count(p)) cols.push_back(std::move(p));
    MatrixGF m(field, d, cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < d; ++r) m.set(r, c, cols[c][r]);
    return m;
}

}  // namespace

Subspace combo_span(const MatrixGF& m, const Rows& coeff_rows) {
    MatrixGF coeff = MatrixGF::from_rows(m.field(), coeff_rows);
    return Subspace::from_span(coeff * m);
}

MatrixGF single_point_code() {
    return MatrixGF::from_rows(Field::make(3),
                               {{1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1},
                                {0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 1, 2},
                                {0, 0, 1, 0, 1, 1, 1, 0, 2, 2, 2, 1}});
}

std::vector<uint32_t> single_point_uncovered() { return {1, 2, 2}; }

Subspace single_point_member() {
    return Subspace::from_rows(Field::make(3),
                               {{1, 1, 0, 2, 1, 1, 2, 0, 1, 1, 2, 0},
                                {1, 0, 1, 1, 2, 1, 2, 1, 0, 2, 0, 2}});
}

MatrixGF line_code() {
    return points_minus(Field::make(3), 6, line_code_uncovered());
}

Rows line_code_uncovered() {
    return {{1, 2, 1, 2, 1, 2},
            {0, 1, 0, 1, 0, 1},
            {1, 0, 1, 0, 1, 0},
            {1, 1, 1, 1, 1, 1}};
}

Subspace line_code_perp() {
    return Subspace::from_rows(Field::make(3), {{1, 0, 0, 0, 2, 0},
                                                {0, 1, 0, 0, 0, 2},
                                                {0, 0, 1, 0, 2, 0},
                                                {0, 0, 0, 1, 0, 2}});
}

namespace {

Rows line_common_rows() {
    return {{1, 0, 0, 0, 2, 0},
            {0, 1, 0, 0, 0, 2},
            {0, 0, 1, 0, 2, 0},
            {0, 0, 0, 1, 0, 2}};
}

}  // namespace

std::vector<Subspace> line_code_members() {
    MatrixGF m = line_code();
    // Fifth generator on top of the shared four, one per member.
    Rows fifths = {{1, 1, 0, 0, 0, 0},
                   {1, 0, 0, 0, 0, 0},
                   {0, 1, 0, 0, 0, 0},
                   {1, 2, 0, 0, 0, 0}};
    std::vector<Subspace> out;
    for (const auto& extra : fifths) {
        Rows rows = line_common_rows();
        rows.push_back(extra);
        out.push_back(combo_span(m, rows));
    }
    return out;
}

Subspace line_code_common(const MatrixGF& m) {
    return combo_span(m, line_common_rows());
}

MatrixGF maximal_top_code() {
    return points_minus(Field::make(2), 6, maximal_top_uncovered());
}

Rows maximal_top_uncovered() {
    return {{1, 0, 1, 0, 1, 0},
            {0, 1, 0, 1, 0, 1},
            {1, 1, 1, 0, 0, 0},
            {1, 1, 1, 1, 1, 1},
            {0, 1, 0, 0, 1, 0}};
}

Subspace maximal_top_perp() {
    return Subspace::from_rows(
        Field::make(2),
        {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 1}, {0, 0, 0, 1, 0, 1}});
}

namespace {

Rows maximal_top_common_rows() {
    return {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 1}, {0, 0, 0, 1, 0, 1}};
}

}  // namespace

std::vector<Subspace> maximal_top_members() {
    MatrixGF m = maximal_top_code();
    // Two extra generators on top of the shared three, one pair per member.
    std::vector<Rows> extras = {
        {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}},
        {{0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}},
        {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}},
        {{0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 1, 0}},
        {{0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}}};
    std::vector<Subspace> out;
    for (const auto& pair : extras) {
        Rows rows = maximal_top_common_rows();
        rows.insert(rows.end(), pair.begin(), pair.end());
        out.push_back(combo_span(m, rows));
    }
    return out;
}

Subspace maximal_top_common(const MatrixGF& m) {
    return combo_span(m, maximal_top_common_rows());
}

MatrixGF five_column_code(const FieldPtr& field) {
    return MatrixGF::from_rows(
        field, {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}});
}

std::vector<MonomialMap> five_column_stabilizer(const FieldPtr& field) {
    const Field& f = *field;
    // Shape table: a coordinate permutation plus a +/- sign pattern, each
    // shape carrying one free non-zero scalar a.
    struct Shape {
        std::array<size_t, 5> delta;
        std::array<int, 5> sign;
    };
    const std::vector<Shape> shapes = {
        {{0, 1, 2, 3, 4}, {+1, +1, +1, +1, +1}},
        {{0, 1, 4, 3, 2}, {+1, +1, -1, +1, -1}},
        {{2, 1, 0, 4, 3}, {+1, +1, +1, +1, +1}},
        {{2, 1, 3, 4, 0}, {+1, +1, -1, +1, -1}},
        {{3, 1, 2, 0, 4}, {+1, -1, -1, +1, -1}},
        {{3, 1, 4, 0, 2}, {+1, -1, +1, +1, +1}},
        {{4, 1, 0, 2, 3}, {+1, -1, -1, +1, -1}},
        {{4, 1, 3, 2, 0}, {+1, -1, +1, +1, +1}}};
    std::vector<MonomialMap> out;
    for (const Shape& sh : shapes) {
        for (uint32_t a = 1; a < f.q(); ++a) {
            std::vector<size_t> delta(sh.delta.begin(), sh.delta.end());
            std::vector<uint32_t> scales(5);
            for (size_t i = 0; i < 5; ++i)
                scales[i] = sh.sign[i] > 0 ? a : f.neg(a);
            out.push_back(make_monomial(field, std::move(delta),
                                        std::move(scales)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MatrixGF paired_columns_code() {
    return MatrixGF::from_rows(Field::make(2), {{1, 1, 0, 0, 0, 0},
                                                {0, 0, 1, 1, 0, 0},
                                                {0, 0, 0, 0, 1, 1}});
}

}  // namespace codetops::fixtures
