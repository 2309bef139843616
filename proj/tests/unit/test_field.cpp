#include <doctest.h>

#include "helpers.hpp"
#include "orderlab/lattice.hpp"

using namespace orderlab;
using namespace orderlab::test;

TEST_SUITE("field") {

TEST_CASE("multiplication reduces by the minimal polynomial") {
    auto const& s = field_qsqrt2();
    CHECK(fe_mul(parse_element("1+a", s), parse_element("-1+a", s), s) == s.one());

    auto const& c = field_cubic();
    FieldElement al = c.gen();
    CHECK(fe_mul(al, fe_mul(al, al, c), c) == parse_element("1-4a", c));
}

TEST_CASE("multiplying by one is the identity") {
    auto const& c = field_cubic();
    Rng rng;
    for (int i = 0; i < 20; ++i) {
        FieldElement a = random_element(c, rng);
        CHECK(fe_mul(a, c.one(), c) == a);
    }
}

TEST_CASE("norms of the worked examples") {
    auto const& s = field_qsqrt2();
    CHECK(fe_norm(parse_element("1+a", s), s) == -1);

    auto const& c = field_cubic();
    CHECK(fe_norm(c.from_int(3), c) == 27);
    // |N| is also the index of the principal lattice, cross-checked here
    FieldElement pi = parse_element("2-4a+a^2", c);
    Rat n = fe_norm(pi, c);
    CHECK(n == 81);
    CHECK(lat_index(c.maximal_lattice(), lat_scale(c.maximal_lattice(), pi, c)) == 81);
}

TEST_CASE("norm is multiplicative, trace is additive") {
    auto const& c = field_cubic();
    Rng rng;
    for (int i = 0; i < 30; ++i) {
        FieldElement a = random_element(c, rng), b = random_element(c, rng);
        CHECK(fe_norm(fe_mul(a, b, c), c) == fe_norm(a, c) * fe_norm(b, c));
        CHECK(fe_trace(fe_add(a, b), c) == fe_trace(a, c) + fe_trace(b, c));
    }
}

TEST_CASE("norm of a rational scalar is its n-th power") {
    auto const& s = field_qsqrt2();
    auto const& c = field_cubic();
    CHECK(fe_norm(s.from_int(7), s) == 49);
    CHECK(fe_norm(c.from_int(-2), c) == -8);
}

TEST_CASE("inverses") {
    auto const& s = field_qsqrt2();
    CHECK(fe_inverse(parse_element("a", s), s) == parse_element("1/2a", s));
    CHECK(fe_inverse(s.one(), s) == s.one());

    auto const& c = field_cubic();
    FieldElement inv = fe_inverse(c.gen(), c);
    CHECK(inv == parse_element("4+a^2", c));
    CHECK(fe_mul(c.gen(), inv, c) == c.one());

    CHECK_THROWS_AS(fe_inverse(c.zero(), c), domain_error);

    Rng rng;
    for (int i = 0; i < 20; ++i) {
        FieldElement a = random_element(c, rng);
        if (a.is_zero()) continue;
        CHECK(fe_inverse(fe_inverse(a, c), c) == a);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    auto const& s = field_qsqrt2();
    auto const& c = field_cubic();
    CHECK_THROWS_AS(fe_mul(s.one(), c.one(), s), input_error);
}

TEST_CASE("multiplication matrix is integral exactly on the maximal order") {
    auto const& c = field_cubic();
    Rng rng;
    int integral_seen = 0, fractional_seen = 0;
    for (int i = 0; i < 50; ++i) {
        FieldElement a = (i % 2 == 0) ? random_integral(c, rng) : random_element(c, rng, 5, 7);
        bool integral_matrix = true;
        for (auto const& row : multiplication_matrix(a, c))
            for (auto const& q : row)
                if (q.get_den() != 1) integral_matrix = false;
        CHECK(integral_matrix == lat_contains(c.maximal_lattice(), a));
        (integral_matrix ? integral_seen : fractional_seen)++;
    }
    CHECK(integral_seen > 0);
    CHECK(fractional_seen > 0);
}

TEST_CASE("real root counting") {
    CHECK(count_real_roots({-2, 0, 1}) == 2);   // x^2 - 2
    CHECK(count_real_roots({1, -1, 1}) == 0);   // x^2 - x + 1
    CHECK(count_real_roots({-1, 4, 0, 1}) == 1);
    CHECK(count_real_roots({-1, -1, 0, 0, 1}) == 2);  // x^4 - x - 1
}

TEST_CASE("field validation rejects bad data") {
    std::vector<std::vector<Rat>> id2{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    // reducible: rational root
    CHECK_THROWS_AS(FieldSpec::make({-4, 0, 1}, id2, 1, {}, {{Rat(1), Rat(1)}}, 2, "x"),
                    input_error);
    // not monic
    CHECK_THROWS_AS(FieldSpec::make({-2, 0, 2}, id2, 1, {}, {{Rat(1), Rat(1)}}, 2, "x"),
                    input_error);
    // degree cap
    std::vector<std::vector<Rat>> id5(5, std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 5; ++i) id5[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK_THROWS_AS(FieldSpec::make({-2, 0, 0, 0, 0, 1}, id5, 1, {}, {}, 2, "x"),
                    unsupported_error);
    // quartic splitting into quadratics: (x^2+1)^2
    std::vector<std::vector<Rat>> id4(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i) id4[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CHECK_THROWS_AS(FieldSpec::make({1, 0, 2, 0, 1}, id4, 1, {}, {}, 2, "x"), input_error);
    // x^4 - x - 1 is irreducible but has unit rank 2: the guard names it
    CHECK_THROWS_AS(FieldSpec::make({-1, -1, 0, 0, 1}, id4, 1, {}, {}, 2, "x"), input_error);
    // basis not closed under multiplication
    std::vector<std::vector<Rat>> bad{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 3)}};
    CHECK_THROWS_AS(FieldSpec::make({-2, 0, 1}, bad, 1, {}, {{Rat(1), Rat(1)}}, 2, "x"),
                    input_error);
    // fundamental unit with the wrong norm
    CHECK_THROWS_AS(FieldSpec::make({-2, 0, 1}, id2, 1, {}, {{Rat(2), Rat(1)}}, 2, "x"),
                    input_error);
    // torsion 6 in a field with a real embedding
    CHECK_THROWS_AS(FieldSpec::make({-2, 0, 1}, id2, 1, {}, {{Rat(1), Rat(1)}}, 6, "x"),
                    input_error);
}

TEST_CASE("torsion generator of Q(sqrt(-3)) has order 6") {
    auto const& w = field_qsqrt3();
    FieldElement z = w.torsion_generator();
    FieldElement p = z;
    int order = 1;
    while (!(p == w.one())) {
        p = fe_mul(p, z, w);
        ++order;
        REQUIRE(order <= 6);
    }
    CHECK(order == 6);
}

TEST_CASE("element parsing and printing") {
    auto const& c = field_cubic();
    CHECK(parse_element("2+2a+a^2", c) == FieldElement({Rat(2), Rat(2), Rat(1)}));
    CHECK(parse_element("1-2a-4a^2", c) == FieldElement({Rat(1), Rat(-2), Rat(-4)}));
    CHECK(parse_element("-1/2", c) == FieldElement({Rat(-1, 2), Rat(0), Rat(0)}));
    CHECK(parse_element(" 3 ", c) == c.from_int(3));
    CHECK_THROWS_AS(parse_element("a^3", c), input_error);
    CHECK_THROWS_AS(parse_element("b+1", c), input_error);
    Rng rng;
    for (int i = 0; i < 10; ++i) {
        FieldElement x = random_element(c, rng);
        CHECK(parse_element(element_str(x), c) == x);
    }
}

}  // TEST_SUITE
