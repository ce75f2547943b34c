#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "codetops/analysis_json.hpp"
#include "codetops/matrix_io.hpp"

using namespace codetops;

TEST_SUITE_BEGIN("io");

TEST_CASE("matrix files parse headers and entries") {
    MatrixGF m = parse_matrix("q=9 poly=2,2,1\n1 0 2 11\n0 1 12 20\n");
    CHECK(m.field()->q() == 9);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
    CHECK(m.at(0, 2) == 2);
    CHECK(m.at(0, 3) == 4);   // "11" = 1*3 + 1
    CHECK(m.at(1, 2) == 5);   // "12" = 1*3 + 2
    CHECK(m.at(1, 3) == 6);   // "20" = 2*3 + 0

    MatrixGF d = parse_matrix("q=4\n0 1 10 11\n");
    CHECK(*d.field() == *Field::make(2, 2));  // built-in modulus
    CHECK(d.row_vec(0) == std::vector<uint32_t>{0, 1, 2, 3});

    // blank lines (and CRLF endings) are ignored
    MatrixGF b = parse_matrix("\nq=2\n\n1 0\r\n\n0 1\n\n\n");
    CHECK(b == MatrixGF::identity(Field::make(2), 2));
}

TEST_CASE("parse failures carry the offending location") {
    auto fails_at = [](const std::string& text, size_t line, size_t col) {
        try {
            parse_matrix(text);
            return false;
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column == col);
            return true;
        }
    };
    CHECK(fails_at("z=2\n1\n", 1, 1));              // no q=N
    CHECK(fails_at("q=x\n1\n", 1, 3));              // not a number
    CHECK(fails_at("q=6\n1\n", 1, 3));              // not a prime power
    CHECK(fails_at("q=1\n1\n", 1, 3));
    CHECK(fails_at("q=2\n1 0 5\n", 2, 5));          // bad entry
    CHECK(fails_at("q=2\n1 0\n1\n", 3, 1));         // ragged row
    CHECK(fails_at("q=3 poly=1,1\n1\n", 1, 5));     // poly on prime field
    CHECK(fails_at("q=4 poly=1,1\n1\n", 1, 5));     // wrong length
    CHECK(fails_at("q=4 poly=1,3,1\n1\n", 1, 5));   // coefficient >= p
    CHECK(fails_at("q=4 poly=1,0,1\n1\n", 1, 5));   // reducible
    CHECK(fails_at("q=4 poly=1,1,1 junk\n1\n", 1, 16));
    CHECK(fails_at("q=3\n", 1, 1));                 // no rows
    CHECK(fails_at("", 0, 1));                      // empty input

    try {
        load_matrix_file("/no/such/file.mat");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 0);
    }
}

TEST_CASE("serialization round-trips every field") {
    std::mt19937_64 rng(5);
    for (uint64_t q : {2, 3, 4, 5, 9, 25}) {
        FieldPtr f = Field::from_order(q);
        std::uniform_int_distribution<uint32_t> d(0, static_cast<uint32_t>(q - 1));
        MatrixGF m(f, 3, 4);
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 4; ++c) m.set(r, c, d(rng));
        MatrixGF back = parse_matrix(serialize_matrix(m));
        CHECK(back == m);
        CHECK(*back.field() == *f);
    }
    CHECK(serialize_matrix(MatrixGF::identity(Field::make(3, 2), 1)) ==
          "q=9 poly=2,2,1\n1\n");
    CHECK(serialize_matrix(MatrixGF::identity(Field::make(2), 2)) ==
          "q=2\n1 0\n0 1\n");

    // a custom modulus survives the trip
    FieldPtr alt = Field::make(3, 2, std::vector<uint32_t>{2, 1, 1});
    MatrixGF custom(alt, 1, 2);
    custom.set(0, 1, 7);
    MatrixGF reread = parse_matrix(serialize_matrix(custom));
    CHECK(*reread.field() == *alt);
    CHECK(reread.at(0, 1) == 7);
}

TEST_CASE("files on disk behave like strings") {
    std::string path = "roundtrip_tmp.mat";
    {
        std::ofstream out(path);
        out << "q=3\n1 2 0\n0 1 1\n";
    }
    MatrixGF m = load_matrix_file(path);
    CHECK(m.rows() == 2);
    CHECK(m.at(0, 1) == 2);
    std::remove(path.c_str());
}

TEST_CASE("analysis serialization round-trips losslessly") {
    FieldPtr f3 = Field::make(3);
    MatrixGF m = MatrixGF::from_rows(
        f3, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 2, 2}});
    TopAnalysis a = analyze(m);
    Json j = analysis_to_json(a);
    CHECK_FALSE(j.contains("timing_seconds"));
    CHECK(j["counts"]["top_size"].is_string());  // big counts as strings
    CHECK(j["generator"].is_array());

    TopAnalysis b = analysis_from_json(j);
    CHECK(b.classification == a.classification);
    CHECK(b.generator == a.generator);
    CHECK(b.members == a.members);
    CHECK(b.w_perp == a.w_perp);
    CHECK(analysis_to_json(b).dump() == j.dump());  // byte stable

    Json timed = analysis_to_json(a, 1.5);
    CHECK(timed["timing_seconds"] == 1.5);

    // two runs of the same analysis serialize identically
    CHECK(analysis_to_json(analyze(m)).dump() == j.dump());
}

TEST_CASE("degenerate and line-contained analyses serialize too") {
    FieldPtr f2 = Field::make(2);
    TopAnalysis deg = analyze(MatrixGF::from_rows(f2, {{1, 0, 0}, {0, 1, 0}}));
    Json jd = analysis_to_json(deg);
    CHECK(jd["degenerate"] == true);
    CHECK(jd["column_classes"].is_null());
    TopAnalysis deg2 = analysis_from_json(jd);
    CHECK(deg2.degenerate);
    CHECK(analysis_to_json(deg2).dump() == jd.dump());

    FieldPtr f3 = Field::make(3);
    TopAnalysis lc = analyze(MatrixGF::identity(f3, 2));
    Json jl = analysis_to_json(lc);
    CHECK(jl["classification"] == "LineContained");
    CHECK(jl["line"].is_object());
    TopAnalysis lc2 = analysis_from_json(jl);
    REQUIRE(lc2.line_pair.has_value());
    CHECK(lc2.line_pair->first == lc.line_pair->first);
    CHECK(lc2.line_pair->second == lc.line_pair->second);
    CHECK(analysis_to_json(lc2).dump() == jl.dump());
}

TEST_SUITE_END();
