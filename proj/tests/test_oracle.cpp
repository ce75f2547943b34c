#include <doctest.h>

#include <algorithm>

#include "codetops/fixtures.hpp"
#include "codetops/oracle.hpp"
#include "codetops/tops.hpp"

using namespace codetops;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute-force members agree with the direct construction") {
    FieldPtr f2 = Field::make(2);
    FieldPtr f3 = Field::make(3);
    std::vector<Subspace> spaces = {
        Subspace::from_span(MatrixGF::identity(f2, 3)),
        Subspace::from_span(MatrixGF::identity(f3, 2)),
        Subspace::from_rows(f2, {{1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}),
        Subspace::from_rows(f3, {{1, 0, 2, 1}, {0, 1, 1, 1}}),
    };
    for (const Subspace& u : spaces) {
        size_t k = u.dim() - 1;
        auto brute = brute_top_members(u, k);
        auto direct = top_nondegenerate(u, k);
        std::sort(brute.begin(), brute.end());
        std::sort(direct.begin(), direct.end());
        CHECK(brute == direct);
        for (const Subspace& s : brute) {
            CHECK(is_nondegenerate(s));
            CHECK(u.contains(s));
        }
    }
}

TEST_CASE("clique checking distinguishes tops from near-tops") {
    FieldPtr f2 = Field::make(2);
    GrassmannGraph g = build_graph(f2, 4, 2, false);

    // the full top of a 3-space is a maximal clique of the full graph
    Subspace u = Subspace::from_rows(
        f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    std::vector<Subspace> top = top_members(u, 2);
    CliqueReport full = check_maximal_clique(g, top);
    CHECK(full.is_clique);
    CHECK(full.is_maximal);
    CHECK_FALSE(full.missing_edge.has_value());
    CHECK_FALSE(full.extension.has_value());

    // dropping one member leaves a clique with a recorded extension
    std::vector<Subspace> partial(top.begin() + 1, top.end());
    CliqueReport part = check_maximal_clique(g, partial);
    CHECK(part.is_clique);
    CHECK_FALSE(part.is_maximal);
    REQUIRE(part.extension.has_value());
    CHECK(g.vertex(*part.extension) == top.front());

    // two disjoint planes are no clique at all
    std::vector<Subspace> apart = {
        Subspace::from_rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
        Subspace::from_rows(f2, {{0, 0, 1, 0}, {0, 0, 0, 1}})};
    CliqueReport bad = check_maximal_clique(g, apart);
    CHECK_FALSE(bad.is_clique);
    CHECK(bad.missing_edge.has_value());

    Subspace foreign = Subspace::from_rows(f2, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(check_maximal_clique(g, std::vector<Subspace>{foreign}),
                    UnknownVertexError);
}

TEST_CASE("maximal cliques of the full graph are stars and tops") {
    FieldPtr f2 = Field::make(2);
    GrassmannGraph g = build_graph(f2, 4, 2, false);
    auto cliques = all_maximal_cliques(g);
    CHECK(cliques.size() == 30);

    size_t stars = 0, tops = 0;
    for (const auto& clique : cliques) {
        CHECK(clique.size() == 7);
        CHECK(std::is_sorted(clique.begin(), clique.end()));
        Subspace join = g.vertex(clique[0]);
        Subspace meet = g.vertex(clique[0]);
        for (size_t idx : clique) {
            join = sum(join, g.vertex(idx));
            meet = intersect(meet, g.vertex(idx));
        }
        if (join.dim() == 3) {
            ++tops;  // all members inside one 3-space
            CHECK(meet.dim() == 0);
        } else {
            ++stars;  // all members through one line
            CHECK(join.dim() == 4);
            CHECK(meet.dim() == 1);
        }
        CliqueReport rep = check_maximal_clique(g, clique);
        CHECK(rep.is_clique);
        CHECK(rep.is_maximal);
    }
    CHECK(stars == 15);  // one per 1-space
    CHECK(tops == 15);   // one per 3-space
}

TEST_CASE("a complete graph is one clique") {
    FieldPtr f2 = Field::make(2);
    GrassmannGraph g = build_graph(f2, 3, 1, false);
    CHECK(g.vertex_count() == 7);
    auto cliques = all_maximal_cliques(g);
    REQUIRE(cliques.size() == 1);
    CHECK(cliques[0].size() == 7);

    CHECK_THROWS_AS(all_maximal_cliques(build_graph(f2, 4, 2, false), 10),
                    TooLargeError);
}

TEST_CASE("exhaustive monomial map enumeration") {
    FieldPtr f2 = Field::make(2);
    auto maps2 = all_monomial_maps(f2, 3);
    CHECK(maps2.size() == 6);
    CHECK(std::is_sorted(maps2.begin(), maps2.end()));
    CHECK(std::adjacent_find(maps2.begin(), maps2.end()) == maps2.end());

    FieldPtr f4 = Field::make(2, 2);
    CHECK(all_monomial_maps(f4, 2).size() == 18);        // 2! * 3^2
    CHECK(all_monomial_maps(f4, 2, true).size() == 36);  // * m
    CHECK_THROWS_AS(all_monomial_maps(Field::make(3), 8, false, 1000),
                    TooLargeError);
}

TEST_CASE("brute-force stabilizer agrees with the search") {
    FieldPtr f2 = Field::make(2);
    Subspace u = Subspace::from_rows(f2, {{1, 1, 0}, {0, 0, 1}});
    auto brute = brute_stabilizer(u);
    CHECK(brute.size() == 2);  // swap of the identical columns
    CHECK(brute == stabilizer(u));

    FieldPtr f3 = Field::make(3);
    Subspace v = Subspace::from_span(fixtures::five_column_code(f3));
    CHECK(brute_stabilizer(v) == stabilizer(v));
    CHECK(brute_stabilizer(v, true) == stabilizer(v, true));  // m = 1
}

TEST_SUITE_END();
