#include <doctest.h>

#include "codetops/grassmann.hpp"

using namespace codetops;

TEST_SUITE_BEGIN("grassmann");

TEST_CASE("gaussian binomial pinned values and identities") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(5, 2, 3) == 1210);
    CHECK(gaussian_binomial(3, 1, 4) == 21);
    CHECK(gaussian_binomial(8, 4, 2) == 200787);
    CHECK(gaussian_binomial(12, 2, 3) == BigInt("5883904390"));
    for (uint64_t n = 0; n <= 6; ++n)
        for (uint64_t k = 0; k <= n; ++k)
            for (uint64_t q : {2, 3, 5}) {
                CHECK(gaussian_binomial(n, k, q) ==
                      gaussian_binomial(n, n - k, q));
                if (k >= 1 && n >= 1) {
                    // q-Pascal recurrence
                    BigInt lhs = gaussian_binomial(n, k, q);
                    BigInt rhs = gaussian_binomial(n - 1, k - 1, q);
                    if (k <= n - 1) {
                        BigInt qk = 1;
                        for (uint64_t i = 0; i < k; ++i) qk *= q;
                        rhs += qk * gaussian_binomial(n - 1, k, q);
                    }
                    CHECK(lhs == rhs);
                }
            }
    CHECK(gaussian_binomial(4, 5, 2) == 0);
    CHECK(gaussian_count_points(3, 2) == 7);
    CHECK(gaussian_count_points(6, 2) == 63);
    CHECK(gaussian_count_points(3, 3) == 13);
    CHECK(gaussian_count_points(6, 3) == 364);
}

TEST_CASE("gaussian binomial counts enumerated subspaces") {
    for (uint64_t q : {2, 3}) {
        FieldPtr f = Field::from_order(q);
        for (size_t n = 1; n <= 4; ++n) {
            Subspace full = Subspace::full(f, n);
            for (size_t k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(n, k, q) ==
                      enumerate_subspaces(full, k).size());
        }
    }
}

TEST_CASE("adjacency means intersection in dimension k-1") {
    FieldPtr f2 = Field::make(2);
    Subspace a = Subspace::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace b = Subspace::from_rows(f2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    Subspace c = Subspace::from_rows(f2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(adjacent(a, b));
    CHECK(adjacent(b, a));
    CHECK_FALSE(adjacent(a, c));
    CHECK_FALSE(adjacent(a, a));
    Subspace line1 = Subspace::from_rows(f2, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(adjacent(a, line1), DimMismatchError);
}

TEST_CASE("lines have exactly q+1 members") {
    for (uint64_t q : {2, 3, 4}) {
        FieldPtr f = Field::from_order(q);
        Subspace s = Subspace::from_rows(f, {{1, 0, 0}});
        Subspace u = Subspace::full(f, 3);
        auto mid = line(s, u);
        CHECK(mid.size() == q + 1);
        for (size_t i = 0; i < mid.size(); ++i) {
            CHECK(mid[i].dim() == 2);
            CHECK(mid[i].contains(s));
            CHECK(u.contains(mid[i]));
            if (i) CHECK(mid[i - 1] < mid[i]);
        }
    }
    FieldPtr f2 = Field::make(2);
    Subspace bad = Subspace::from_rows(f2, {{0, 1, 0}});
    Subspace top2 = Subspace::from_rows(f2, {{1, 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(line(bad, top2), NotIncidentError);  // bad is not in top2
}

TEST_CASE("top of a (k+1)-space lists all hyperplanes of it") {
    FieldPtr f3 = Field::make(3);
    Subspace u = Subspace::from_rows(f3, {{1, 0, 0, 1}, {0, 1, 0, 2}, {0, 0, 1, 0}});
    auto t = top_members(u, 2);
    CHECK(t.size() == 13);  // [3]_3
    for (const Subspace& s : t) {
        CHECK(s.dim() == 2);
        CHECK(u.contains(s));
    }
    // pairwise adjacent: any two distinct hyperplanes of u meet in dim 1
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) CHECK(adjacent(t[i], t[j]));
}

TEST_CASE("materialized graph matches pairwise adjacency") {
    FieldPtr f2 = Field::make(2);
    GrassmannGraph g = build_graph(f2, 4, 2, false);
    CHECK(g.vertex_count() == 35);
    CHECK_FALSE(g.restricted());
    size_t edges = 0;
    for (size_t i = 0; i < g.vertex_count(); ++i)
        for (size_t j = 0; j < g.vertex_count(); ++j) {
            CHECK(g.edge(i, j) == adjacent(g.vertex(i), g.vertex(j)));
            if (g.edge(i, j)) {
                ++edges;
                CHECK(g.edge(j, i));
            }
        }
    CHECK(edges == 2 * 315);
    for (size_t i = 0; i < g.vertex_count(); ++i) {
        CHECK(g.index_of(g.vertex(i)) == i);
        CHECK_FALSE(g.edge(i, i));
    }
    CHECK_FALSE(g.index_of(Subspace::from_rows(f2, {{1, 0, 0, 0}})).has_value());

    GrassmannGraph nd = build_graph(f2, 5, 2, true);
    CHECK(nd.restricted());
    CHECK(nd.vertex_count() == 40);
}

TEST_CASE("graph construction respects the vertex cap") {
    FieldPtr f3 = Field::make(3);
    CHECK_THROWS_AS(build_graph(f3, 8, 2, false, 1000), TooLargeError);
    try {
        build_graph(f3, 8, 2, false, 1000);
    } catch (const TooLargeError& e) {
        CHECK(e.cap == 1000);
        CHECK(e.count > 1000);
    }
}

TEST_SUITE_END();
