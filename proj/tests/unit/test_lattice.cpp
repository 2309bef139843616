#include <doctest.h>

#include "helpers.hpp"
#include "orderlab/orders.hpp"

using namespace orderlab;
using namespace orderlab::test;

TEST_SUITE("lattice") {

TEST_CASE("canonical form of the worked generator sets") {
    auto const& s = field_qsqrt2();
    CHECK(ZLattice::from_generators({s.one(), s.gen()}) == s.maximal_lattice());

    // {2, 2*sqrt2, 1+sqrt2} spans {a + b sqrt2 : a = b mod 2}
    ZLattice l = ZLattice::from_generators(
        {s.from_int(2), parse_element("2a", s), parse_element("1+a", s)});
    CHECK(l.den() == 1);
    CHECK(l.hnf() == ZMatrix{{Int(2), Int(0)}, {Int(1), Int(1)}});

    auto const& c = field_cubic();
    CHECK(ZLattice::from_generators({c.one(), c.gen(), parse_element("2-4a+a^2", c)}) ==
          c.maximal_lattice());
}

TEST_CASE("canonicity under unimodular regeneration") {
    auto const& c = field_cubic();
    Rng rng;
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<FieldElement> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_element(c, rng, 4, 2));
        ZLattice base;
        try {
            base = ZLattice::from_generators(gens);
        } catch (error const&) {
            continue;  // rank-deficient draw
        }
        // permute and mix generators unimodularly
        std::vector<FieldElement> mixed{fe_add(gens[1], fe_scale(Rat(rng.pick(-3, 3)), gens[0])),
                                        gens[2], gens[0], fe_neg(gens[1])};
        CHECK(ZLattice::from_generators(mixed) == base);
    }
}

TEST_CASE("rank-deficient generators are rejected") {
    auto const& s = field_qsqrt2();
    CHECK_THROWS_WITH_AS(ZLattice::from_generators({s.one(), s.from_int(3)}),
                         "not full rank", error);
}

TEST_CASE("colon computes conductors of the quadratic examples") {
    auto const& s = field_qsqrt2();
    ZLattice z5 = ZLattice::from_generators({s.one(), parse_element("5a", s)});
    CHECK(lat_colon(z5, s.maximal_lattice(), s) == lat_scale(s.maximal_lattice(), Rat(5)));
    ZLattice z2 = ZLattice::from_generators({s.one(), parse_element("2a", s)});
    CHECK(lat_colon(z2, s.maximal_lattice(), s) == lat_scale(s.maximal_lattice(), Rat(2)));
    // (R : R) contains R
    CHECK(lat_subset(z5, lat_colon(z5, z5, s)));
}

TEST_CASE("sum and intersection basics") {
    auto const& s = field_qsqrt2();
    ZLattice a = ZLattice::from_generators({s.one(), parse_element("5a", s)});
    ZLattice b = ZLattice::from_generators({s.from_int(2), parse_element("1+a", s)});
    CHECK(lat_sum(a, a) == a);
    CHECK(lat_intersect(a, a) == a);
    CHECK(lat_subset(lat_intersect(a, b), a));
    CHECK(lat_subset(a, lat_sum(a, b)));
    // [A+B : B] = [A : A cap B]
    CHECK(lat_index(lat_sum(a, b), b) == lat_index(a, lat_intersect(a, b)));
}

TEST_CASE("index identity on random integral lattices") {
    auto const& c = field_cubic();
    Rng rng;
    int done = 0;
    for (int trial = 0; trial < 40 && done < 10; ++trial) {
        std::vector<FieldElement> ga, gb;
        for (int i = 0; i < 3; ++i) {
            ga.push_back(random_integral(c, rng, 3));
            gb.push_back(random_integral(c, rng, 3));
        }
        ZLattice a, b;
        try {
            a = ZLattice::from_generators(ga);
            b = ZLattice::from_generators(gb);
        } catch (error const&) {
            continue;
        }
        CHECK(lat_index(lat_sum(a, b), b) == lat_index(a, lat_intersect(a, b)));
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("intersection of shifted orders matches the shifted intersection") {
    // (R+P1) cap (R+P2) = R + (P1 cap P2) for R = Z[10 sqrt2]
    auto const& s = field_qsqrt2();
    OrderRing r = z_plus_m(10, s);
    auto factors = r.conductor().factorization(s);
    REQUIRE(factors.size() == 2);
    ZLattice p1 = factors[0].first.lattice, p2 = factors[1].first.lattice;
    ZLattice lhs = lat_intersect(lat_sum(r.lattice(), p1), lat_sum(r.lattice(), p2));
    ZLattice rhs = lat_sum(r.lattice(), lat_intersect(p1, p2));
    CHECK(lhs == rhs);
}

TEST_CASE("products of ideal lattices shrink") {
    auto const& c = field_cubic();
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal i = ideal_pow(p, 2, c);
    CHECK(lat_subset(lat_product(i.lattice(), i.lattice(), c), i.lattice()));
}

TEST_CASE("membership, coordinates and index on the cubic example") {
    auto const& c = field_cubic();
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal i = ideal_pow(p, 2, c);
    CHECK(lat_index(c.maximal_lattice(), i.lattice()) == 81);
    OrderRing r = z_plus_ideal(i, c);
    CHECK(lat_index(c.maximal_lattice(), r.lattice()) == 9);
    CHECK(lat_contains(r.lattice(), c.one()));
    CHECK_FALSE(lat_contains(r.lattice(), c.gen()));
    CHECK_THROWS_AS(lat_index(i.lattice(), c.maximal_lattice()), precondition_error);
}

TEST_CASE("colon of colon grows") {
    auto const& s = field_qsqrt2();
    Rng rng;
    OrderRing r = z_plus_m(6, s);
    for (int trial = 0; trial < 8; ++trial) {
        FieldElement g = random_integral(s, rng, 4);
        if (g.is_zero()) continue;
        ZLattice b = lat_scale(s.maximal_lattice(), g, s);
        ZLattice once = lat_colon(r.lattice(), b, s);
        CHECK(lat_subset(once, lat_colon(lat_colon(once, b, s), b, s)));
    }
}

TEST_CASE("sum decomposition splits members exactly") {
    auto const& c = field_cubic();
    Rng rng;
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal q = OIdeal::from_two_gens(3, parse_element("1+a", c), c);
    for (int trial = 0; trial < 10; ++trial) {
        FieldElement x = random_integral(c, rng, 6);
        auto dec = lat_decompose_sum(p.lattice(), q.lattice(), x);
        // P + Q = O, so every integral element decomposes
        REQUIRE(dec.has_value());
        CHECK(lat_contains(p.lattice(), dec->first));
        CHECK(lat_contains(q.lattice(), dec->second));
        CHECK(fe_add(dec->first, dec->second) == x);
    }
    // and nothing outside the sum decomposes
    ZLattice nine = lat_scale(c.maximal_lattice(), Rat(9));
    CHECK_FALSE(lat_decompose_sum(nine, nine, c.one()).has_value());
}

TEST_CASE("debug dump format") {
    auto const& s = field_qsqrt2();
    ZLattice z5 = ZLattice::from_generators({s.one(), parse_element("5a", s)});
    CHECK(z5.dump() == "den=1\n1 0\n0 5\n");
    ZLattice half = ZLattice::from_generators(
        {FieldElement({Rat(1, 2), Rat(0)}), FieldElement({Rat(0), Rat(1, 2)})});
    CHECK(half.dump() == "den=2\n1 0\n0 1\n");
}

}  // TEST_SUITE
