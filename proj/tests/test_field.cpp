#include <doctest.h>

#include "codetops/field.hpp"

using namespace codetops;

TEST_SUITE_BEGIN("field");

TEST_CASE("prime field arithmetic matches modular arithmetic") {
    FieldPtr f = Field::make(7);
    CHECK(f->q() == 7);
    CHECK(f->m() == 1);
    CHECK(f->modulus().empty());
    for (uint32_t a = 0; a < 7; ++a) {
        for (uint32_t b = 0; b < 7; ++b) {
            CHECK(f->add(a, b) == (a + b) % 7);
            CHECK(f->mul(a, b) == (a * b) % 7);
            CHECK(f->sub(a, b) == (a + 7 - b) % 7);
        }
        CHECK(f->add(a, f->neg(a)) == 0);
    }
    CHECK(f->inv(3) == 5);
    CHECK(f->div(1, 3) == 5);
    CHECK(f->pow(3, 6) == 1);
    CHECK(f->pow(0, 0) == 1);
}

TEST_CASE("every non-zero element has an inverse") {
    for (uint64_t q : {2, 3, 5, 13, 4, 8, 9, 16, 25, 27, 49, 81}) {
        FieldPtr f = Field::from_order(q);
        CHECK(f->elements().size() == q);
        for (uint32_t a = 1; a < q; ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, q - 1) == 1);  // Lagrange on the unit group
        }
        CHECK_THROWS_AS(f->inv(0), DivisionByZeroError);
        CHECK_THROWS_AS(f->div(1, 0), DivisionByZeroError);
    }
}

TEST_CASE("field axioms on full element triples") {
    for (uint64_t q : {4, 5, 8, 9}) {
        FieldPtr fp = Field::from_order(q);
        const Field& f = *fp;
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (uint32_t c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) ==
                          f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    }
}

TEST_CASE("GF(4) multiplication table") {
    // x^2 + x + 1 = 0, values 0, 1, x, x+1.
    FieldPtr f = Field::make(2, 2);
    CHECK(f->modulus() == std::vector<uint32_t>{1, 1, 1});
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->mul(3, 3) == 2);
    CHECK(f->add(2, 3) == 1);
    CHECK(f->inv(2) == 3);
    CHECK(f->pow(2, 3) == 1);
    CHECK(*f == *Field::from_order(4));
}

TEST_CASE("GF(9) arithmetic against the built-in modulus") {
    // x^2 + 2x + 2 = 0, so x^2 = x + 1; the element x has value 3.
    FieldPtr f = Field::make(3, 2);
    CHECK(f->modulus() == std::vector<uint32_t>{2, 2, 1});
    CHECK(f->mul(3, 3) == 4);
    CHECK(f->digits(7) == std::vector<uint32_t>{1, 2});
    CHECK(f->from_digits({1, 2}) == 7);
}

TEST_CASE("frobenius is a field automorphism of order m") {
    for (uint64_t q : {8, 9, 27, 16}) {
        FieldPtr fp = Field::from_order(q);
        const Field& f = *fp;
        for (uint32_t a = 0; a < q; ++a) {
            CHECK(f.frobenius(a, 0) == a);
            CHECK(f.frobenius(a, f.m()) == a);  // full cycle is the identity
            uint32_t fa = f.frobenius(a, 1);
            CHECK(fa == f.pow(a, static_cast<uint64_t>(f.p())));
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(f.frobenius(f.add(a, b), 1) ==
                      f.add(fa, f.frobenius(b, 1)));
                CHECK(f.frobenius(f.mul(a, b), 1) ==
                      f.mul(fa, f.frobenius(b, 1)));
            }
        }
    }
    FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->frobenius(3, 1) == 7);  // x^3 = 2x + 1
    CHECK(f9->frobenius(7, 1) == 3);
    FieldPtr f5 = Field::make(5);
    for (uint32_t a = 0; a < 5; ++a) CHECK(f5->frobenius(a, 3) == a);
}

TEST_CASE("element text form round-trips") {
    FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->format(0) == "0");
    CHECK(f9->format(2) == "2");
    CHECK(f9->format(3) == "10");
    CHECK(f9->format(7) == "21");
    for (uint32_t a = 0; a < 9; ++a)
        CHECK(f9->parse_element(f9->format(a)) == a);
    CHECK_FALSE(f9->parse_element("221").has_value());  // out of range
    CHECK_FALSE(f9->parse_element("3").has_value());    // bad digit
    CHECK_FALSE(f9->parse_element("").has_value());
    CHECK_FALSE(f9->parse_element("-1").has_value());
    FieldPtr f13 = Field::make(13);
    CHECK(f13->format(12) == "12");
    CHECK(f13->parse_element("12") == 12);
    CHECK_FALSE(f13->parse_element("13").has_value());
}

TEST_CASE("from_order factors prime powers") {
    FieldPtr f = Field::from_order(49);
    CHECK(f->p() == 7);
    CHECK(f->m() == 2);
    CHECK(Field::from_order(13)->m() == 1);
    CHECK_THROWS_AS(Field::from_order(6), NonPrimeError);
    CHECK_THROWS_AS(Field::from_order(12), NonPrimeError);
    CHECK_THROWS_AS(Field::from_order(1), NonPrimeError);
    CHECK_THROWS_AS(Field::from_order(0), NonPrimeError);
}

TEST_CASE("constructor rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4), NonPrimeError);
    CHECK_THROWS_AS(Field::make(2, 7), NoBuiltinModulusError);
    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<uint32_t>{1, 0, 1}),
                    ReducibleModulusError);
    // x^2 + 2x + 1 = (x+1)^2 over GF(3)
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<uint32_t>{1, 2, 1}),
                    ReducibleModulusError);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<uint32_t>{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<uint32_t>{1, 1, 2}),
                    std::invalid_argument);
}

TEST_CASE("explicit modulus changes the representation, not the field size") {
    // x^2 + x + 2 is irreducible over GF(3) and differs from the default.
    FieldPtr f = Field::make(3, 2, std::vector<uint32_t>{2, 1, 1});
    CHECK(f->q() == 9);
    CHECK(*f != *Field::make(3, 2));
    CHECK(f->mul(3, 3) == 7);  // x^2 = 2x + 1 under this modulus
    for (uint32_t a = 1; a < 9; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_SUITE_END();
