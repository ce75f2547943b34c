#include <doctest.h>

#include <algorithm>

#include "codetops/tops.hpp"

using namespace codetops;

TEST_SUITE_BEGIN("tops");

TEST_CASE("admissible directions are the uncovered projective points") {
    FieldPtr f2 = Field::make(2);
    MatrixGF id2 = MatrixGF::identity(f2, 2);
    CHECK(wprime_reps(id2) ==
          std::vector<std::vector<uint32_t>>{{1, 1}});

    FieldPtr f3 = Field::make(3);
    MatrixGF id3 = MatrixGF::identity(f3, 2);
    CHECK(wprime_reps(id3) ==
          std::vector<std::vector<uint32_t>>{{1, 1}, {1, 2}});

    // scalar multiples of columns are covered too
    MatrixGF m =
        MatrixGF::from_rows(f3, {{1, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    auto reps = wprime_reps(m);
    CHECK(reps.size() == 13 - 3);  // [3]_3 points, three distinct columns
    for (const auto& w : reps) {
        size_t lead = 0;
        while (w[lead] == 0) ++lead;
        CHECK(w[lead] == 1);  // normalized representative
    }

    CHECK_THROWS_AS(wprime_reps(MatrixGF::from_rows(f3, {{1, 2}, {2, 1}})),
                    RankDeficientError);
    CHECK_THROWS_AS(wprime_reps(MatrixGF::from_rows(f3, {{1, 0, 0}, {0, 1, 0}})),
                    ZeroColumnError);
}

TEST_CASE("member construction is scale invariant in w") {
    FieldPtr f3 = Field::make(3);
    MatrixGF m = MatrixGF::from_rows(
        f3, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 2, 2}});
    for (const auto& w : wprime_reps(m)) {
        Subspace cw = c_of_w(m, w);
        CHECK(cw.dim() == 2);
        std::vector<uint32_t> w2(w);
        for (auto& x : w2) x = f3->mul(2, x);
        CHECK(c_of_w(m, w2) == cw);
        // C(w) is the part of the row space killed by the coefficient w
        const MatrixGF& b = cw.basis();
        Subspace u = Subspace::from_span(m);
        for (size_t r = 0; r < b.rows(); ++r) {
            CHECK(u.contains(b.row(r)));
            auto local = u.to_local(b.row(r));
            REQUIRE(local.has_value());
            CHECK(dot(*f3, *local, w) == 0);
        }
    }
    CHECK_THROWS_AS(c_of_w(m, std::vector<uint32_t>{0, 0, 0}), ZeroWError);
    CHECK_THROWS_AS(c_of_w(m, std::vector<uint32_t>{2, 0, 0}),
                    ProportionalToColumnError);
}

TEST_CASE("full plane over GF(2) has a single uncovered point") {
    FieldPtr f2 = Field::make(2);
    TopAnalysis a = analyze(MatrixGF::identity(f2, 2));
    CHECK_FALSE(a.degenerate);
    CHECK(a.n == 2);
    CHECK(a.k == 1);
    CHECK(a.classification == Classification::SinglePoint);
    CHECK(a.wprime == std::vector<std::vector<uint32_t>>{{1, 1}});
    CHECK(a.w_span.dim() == 1);
    CHECK(a.members.size() == 1);
    CHECK(a.members[0] == Subspace::from_rows(f2, {{1, 1}}));
    CHECK(a.top_size() == 3);
    REQUIRE(a.line_count.has_value());
    CHECK(*a.line_count == 1);  // [1]_2 * [1]_2
    CHECK_FALSE(a.line_pair.has_value());
}

TEST_CASE("two uncovered points give the line-contained case") {
    FieldPtr f3 = Field::make(3);
    TopAnalysis a = analyze(MatrixGF::identity(f3, 2));
    CHECK(a.classification == Classification::LineContained);
    CHECK(a.wprime.size() == 2);
    CHECK(a.w_span.dim() == 2);
    CHECK(a.members.size() == 2);
    CHECK(a.members[0] == Subspace::from_rows(f3, {{1, 2}}));
    CHECK(a.members[1] == Subspace::from_rows(f3, {{1, 1}}));
    REQUIRE(a.common.has_value());
    CHECK(a.common->dim() == 0);
    REQUIRE(a.line_pair.has_value());
    CHECK(a.line_pair->first == *a.common);
    CHECK(a.line_pair->second == a.u);
    CHECK_FALSE(a.line_count.has_value());
}

TEST_CASE("identity generator in dimension three spans a maximal top") {
    FieldPtr f2 = Field::make(2);
    TopAnalysis a = analyze(MatrixGF::identity(f2, 3));
    CHECK(a.classification == Classification::MaximalTop);
    CHECK(a.wprime.size() == 4);
    CHECK(a.w_span.dim() == 3);
    CHECK(a.members.size() == 4);
    CHECK(a.top_size() == 7);
    std::vector<Subspace> nd = top_nondegenerate(a.u, 2);
    std::vector<Subspace> members = a.members;
    std::sort(members.begin(), members.end());
    std::sort(nd.begin(), nd.end());
    CHECK(members == nd);
    REQUIRE(a.common.has_value());
    CHECK(a.common->dim() == 0);
}

TEST_CASE("covering every direction leaves an empty top") {
    FieldPtr f2 = Field::make(2);
    TopAnalysis a = analyze(MatrixGF::from_rows(f2, {{1, 0, 1}, {0, 1, 1}}));
    CHECK(a.classification == Classification::Empty);
    CHECK(a.wprime.empty());
    CHECK(a.members.empty());
    CHECK_FALSE(a.common.has_value());
    CHECK(a.wprime_full_count() == 0);
    CHECK_THROWS_AS(common_intersection(a), EmptyWPrimeError);
}

TEST_CASE("degenerate generators are reported, not analyzed") {
    FieldPtr f2 = Field::make(2);
    TopAnalysis a = analyze(MatrixGF::from_rows(f2, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(a.degenerate);
    CHECK(a.classification == Classification::Empty);
    CHECK_FALSE(a.classes.has_value());
    CHECK(a.members.empty());
    CHECK(top_nondegenerate(a.u, 1).empty());
    CHECK_THROWS_AS(analyze(MatrixGF::from_rows(f2, {{1, 0}, {0, 0}})),
                    RankDeficientError);
}

TEST_CASE("analysis from the subspace uses its canonical generator") {
    FieldPtr f3 = Field::make(3);
    MatrixGF m = MatrixGF::from_rows(
        f3, {{2, 1, 0, 1}, {1, 1, 1, 0}, {0, 2, 1, 2}});
    Subspace u = Subspace::from_span(m);
    TopAnalysis from_matrix = analyze(m);
    TopAnalysis from_space = analyze(u, 2);
    CHECK(from_space.generator == u.basis());
    CHECK(from_space.classification == from_matrix.classification);
    std::vector<Subspace> a = from_matrix.members;
    std::vector<Subspace> b = from_space.members;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);  // same members, frame-independent
    CHECK(classify(u, 2) == from_matrix.classification);
    CHECK_THROWS_AS(analyze(u, 1), DimMismatchError);
}

TEST_CASE("member counts follow the uncovered-direction count") {
    struct Case {
        uint64_t q;
        std::vector<std::vector<uint32_t>> rows;
    };
    // distinct directions map to distinct members, so counts line up
    std::vector<Case> cases = {
        {2, {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}},
        {3, {{1, 0, 0, 1, 2}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 0}}},
        {4, {{1, 0, 2}, {0, 1, 3}}},
    };
    for (const Case& c : cases) {
        TopAnalysis a = analyze(
            MatrixGF::from_rows(Field::from_order(c.q), c.rows));
        REQUIRE_FALSE(a.degenerate);
        CHECK(a.members.size() == a.wprime.size());
        CHECK(a.wprime_full_count() ==
              BigInt(a.wprime.size()) * BigInt(c.q - 1));
        CHECK(a.top_size() == gaussian_count_points(a.k + 1, c.q));
        // covered and uncovered directions partition the projective points
        CHECK(BigInt(a.wprime.size()) + a.classes->count() ==
              gaussian_count_points(a.k + 1, c.q));
        for (size_t i = 1; i < a.members.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                CHECK(a.members[i] != a.members[j]);
    }
}

TEST_CASE("large-alphabet forcing condition") {
    FieldPtr f2 = Field::make(2);
    FieldPtr f3 = Field::make(3);
    CHECK(corollary_check(8, 4, *f2));    // [5]_2 = 31 > 11
    CHECK_FALSE(corollary_check(12, 3, *f2));  // [4]_2 = 15 = 15
    CHECK(corollary_check(5, 2, *f3));    // [3]_3 = 13 > 9
    CHECK_FALSE(corollary_check(4, 2, *f2));   // [3]_2 = 7 = 7
}

TEST_SUITE_END();
