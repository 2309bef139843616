#include <doctest.h>

#include "helpers.hpp"
#include "orderlab/corpus.hpp"

using namespace orderlab;
using namespace orderlab::test;

TEST_SUITE("orders") {

TEST_CASE("make_order validates and caches the conductor") {
    auto const& c = field_cubic();
    // Z + 9aZ + (2-4a+a^2)Z has conductor (2-4a+a^2)
    ZLattice lat = ZLattice::from_generators(
        {c.one(), parse_element("9a", c), parse_element("2-4a+a^2", c)});
    OrderRing r = OrderRing::make(lat, c);
    CHECK(r.conductor().lattice() ==
          lat_scale(c.maximal_lattice(), parse_element("2-4a+a^2", c), c));

    OrderRing o = maximal_order(c);
    CHECK(o.conductor().lattice() == c.maximal_lattice());
    CHECK(o.is_maximal());
}

TEST_CASE("make_order rejects non-rings and rings without 1") {
    auto const& s = field_qsqrt2();
    ZLattice not_integral =
        ZLattice::from_generators({s.one(), FieldElement({Rat(0), Rat(1, 2)})});
    CHECK_THROWS_WITH_AS(OrderRing::make(not_integral, s), "not a ring", input_error);
    ZLattice no_one = ZLattice::from_generators({s.from_int(2), s.gen()});
    CHECK_THROWS_WITH_AS(OrderRing::make(no_one, s), "does not contain 1", input_error);
}

TEST_CASE("prime splitting reproduces the worked factorizations") {
    auto const& c = field_cubic();
    auto threes = split_prime(3, c);
    REQUIRE(threes.size() == 2);
    CHECK(threes[0].residue_degree == 1);
    CHECK(threes[1].residue_degree == 2);
    CHECK(threes[0].lattice == OIdeal::from_two_gens(3, parse_element("1+a", c), c).lattice());
    CHECK(threes[1].lattice ==
          OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c).lattice());

    auto const& s = field_qsqrt2();
    auto fives = split_prime(5, s);
    REQUIRE(fives.size() == 1);
    CHECK(fives[0].residue_degree == 2);
    CHECK(fives[0].ramification == 1);
    auto twos = split_prime(2, s);
    REQUIRE(twos.size() == 1);
    CHECK(twos[0].residue_degree == 1);
    CHECK(twos[0].ramification == 2);
    CHECK(twos[0].lattice == lat_scale(s.maximal_lattice(), s.gen(), s));
}

TEST_CASE("splitting satisfies sum e_i f_i = n for many primes") {
    for (auto const* spec : {&field_qsqrt2(), &field_qsqrt3(), &field_cubic()}) {
        for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
            unsigned long ef = 0;
            Int norm_prod = 1;
            for (auto const& pr : split_prime(Int(p), *spec)) {
                ef += static_cast<unsigned long>(pr.residue_degree * pr.ramification);
                norm_prod *= pow_ui(pr.norm(), static_cast<unsigned long>(pr.ramification));
            }
            CHECK(ef == spec->degree());
            CHECK(norm_prod == pow_ui(Int(p), spec->degree()));
        }
    }
}

TEST_CASE("index-divisor primes are refused explicitly") {
    // Q(sqrt(-3)) presented on the power basis of x^2+3 has [O : Z[theta]] = 2
    FieldSpec awkward = FieldSpec::make(
        {3, 0, 1}, {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}}, 1, {}, {}, 6, "power basis sqrt-3");
    CHECK(awkward.power_index() == 2);
    CHECK_THROWS_AS(split_prime(2, awkward), unsupported_error);
    CHECK_NOTHROW(split_prime(5, awkward));
}

TEST_CASE("ideal factorization on the worked conductors") {
    auto const& s = field_qsqrt2();
    auto f5 = z_plus_m(5, s).conductor().factorization(s);
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].first.norm() == 25);
    CHECK(f5[0].second == 1);

    auto const& c = field_cubic();
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal i = ideal_pow(p, 2, c);
    auto fi = factor_ideal(i, c);
    REQUIRE(fi.size() == 1);
    CHECK(fi[0].first.lattice == p.lattice());
    CHECK(fi[0].second == 2);

    CHECK(factor_ideal(OIdeal::unit_ideal(c), c).empty());
}

TEST_CASE("ideal arithmetic is consistent with exponent arithmetic") {
    auto const& c = field_cubic();
    Rng rng;
    std::vector<OIdeal> smalls;
    for (long p : {2, 3, 5}) {
        for (auto const& pr : split_prime(Int(p), c))
            smalls.push_back(OIdeal::from_lattice(pr.lattice, c));
    }
    for (int trial = 0; trial < 12; ++trial) {
        OIdeal a = smalls[static_cast<std::size_t>(rng.pick(0, static_cast<long>(smalls.size()) - 1))];
        OIdeal b = smalls[static_cast<std::size_t>(rng.pick(0, static_cast<long>(smalls.size()) - 1))];
        auto fa = factor_ideal(a, c), fb = factor_ideal(b, c), fab = factor_ideal(ideal_mul(a, b, c), c);
        Int na = a.norm(c), nb = b.norm(c);
        CHECK(ideal_mul(a, b, c).norm(c) == na * nb);
        // exponents add
        for (auto const& [pr, e] : fab) {
            int ea = 0, eb = 0;
            for (auto const& [qa, e2] : fa)
                if (qa.lattice == pr.lattice) ea = e2;
            for (auto const& [qb, e2] : fb)
                if (qb.lattice == pr.lattice) eb = e2;
            CHECK(e == ea + eb);
        }
    }
}

TEST_CASE("radicality and coprimality of the worked ideals") {
    auto const& s = field_qsqrt2();
    CHECK(is_radical(OIdeal::principal(s.from_int(5), s), s));
    CHECK_FALSE(is_radical(OIdeal::principal(s.from_int(2), s), s));

    auto const& c = field_cubic();
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal q = OIdeal::from_two_gens(3, parse_element("1+a", c), c);
    CHECK(is_coprime(p, q, c));
    CHECK_FALSE(is_coprime(p, ideal_pow(p, 2, c), c));
    CHECK(ideal_inverse_within(p, ideal_pow(p, 2, c), c) == p);
    CHECK_THROWS_AS(ideal_inverse_within(ideal_pow(p, 2, c), p, c), precondition_error);
}

TEST_CASE("intermediate orders of the cubic walkthrough") {
    auto const& c = field_cubic();
    OIdeal p = OIdeal::from_two_gens(3, parse_element("2+2a+a^2", c), c);
    OIdeal i = ideal_pow(p, 2, c);
    OrderRing r = z_plus_ideal(i, c);
    OrderRing r1 = intermediate_order(r, p);
    CHECK(r1.lattice() == ZLattice::from_generators(
                              {c.one(), parse_element("3a", c), parse_element("2-4a+a^2", c)}));
    CHECK(r1.conductor() == p);
    CHECK(intermediate_order(r, OIdeal::unit_ideal(c)).is_maximal());
    CHECK(intermediate_order(r, i) == r);
}

TEST_CASE("corpus generation is broad and deduplicated") {
    std::size_t total = 0;
    for (auto const* spec : {&field_qsqrt2(), &field_qsqrt3(), &field_cubic()}) {
        auto corpus = generate_corpus(*spec);
        std::set<std::string> keys;
        for (auto const& m : corpus) keys.insert(m.order.lattice().dump());
        CHECK(keys.size() == corpus.size());
        total += corpus.size();
    }
    CHECK(total >= 20);
}

}  // TEST_SUITE
