#include "orderlab/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "orderlab/corpus.hpp"

namespace orderlab {

namespace {

/* full predicate reports only below this quotient size; larger corpus
 * members still join the lattice-level suites */
Int const kCorpusEnumCutoff = 5000;

struct Runner {
    VerificationSuite& suite;
    std::string const& only;

    void operator()(std::string const& id, int criterion, std::string const& provenance,
                    std::string const& expected, std::function<std::string()> const& fn) {
        if (!only.empty() && id.find(only) == std::string::npos) return;
        VerifyCase c;
        c.id = id;
        c.criterion = criterion;
        c.provenance = provenance;
        c.expected = expected;
        auto start = std::chrono::steady_clock::now();
        try {
            c.computed = fn();
        } catch (std::exception const& e) {
            c.computed = std::string("error: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.pass = (c.computed == c.expected);
        suite.cases.push_back(std::move(c));
    }
};

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

long balanced_exponent(long e, long modulus) {
    long r = ((e % modulus) + modulus) % modulus;
    return r > modulus / 2 ? r - modulus : r;
}

}  // namespace

VerificationSuite run_verification(std::string const& fields_dir, std::string const& only) {
    VerificationSuite suite;
    Runner run{suite, only};

    FieldSpec qs2 = load_field_spec(fields_dir + "/Q-sqrt2.json");
    FieldSpec qs3 = load_field_spec(fields_dir + "/Q-sqrt-3.json");
    FieldSpec cub = load_field_spec(fields_dir + "/cubic-x3+4x-1.json");
    ClassEngine eng_qs2(qs2), eng_qs3(qs3), eng_cub(cub);

    /* ---- the order Z[5*sqrt2]: ideal-preserving but not locally associated ---- */
    OrderRing z5 = z_plus_m(5, qs2);
    run("z5sqrt2-units-quadruple", 1, "literature", "(24,4,3)", [&] {
        auto lao = is_locally_associated(z5);
        std::ostringstream os;
        os << "(" << lao.units_maximal_mod.get_str() << "," << lao.units_order_mod.get_str()
           << "," << lao.unit_index.get_str() << ")";
        return os.str();
    });
    run("z5sqrt2-ideal-preserving", 1, "literature", "true",
        [&] { return fmt_bool(is_ideal_preserving(z5).verdict); });
    run("z5sqrt2-locally-associated", 1, "literature", "false",
        [&] { return fmt_bool(is_locally_associated(z5).verdict); });
    run("z5sqrt2-conductor", 1, "literature", "5*O", [&] {
        return z5.conductor().lattice() == lat_scale(qs2.maximal_lattice(), Rat(5)) ? "5*O"
                                                                                    : "other";
    });

    /* ---- the order Z[2*sqrt2]: locally associated but not ideal-preserving ---- */
    OrderRing z2 = z_plus_m(2, qs2);
    run("z2sqrt2-ideal-preserving", 2, "literature", "false, witness (sqrt2)^2", [&] {
        auto ipo = is_ideal_preserving(z2);
        if (ipo.verdict) return std::string("true");
        auto const& pr = ipo.conductor_factors[ipo.violation->first].first;
        bool square = ipo.violation->first == ipo.violation->second;
        bool is_sqrt2 = pr.lattice == lat_scale(qs2.maximal_lattice(), qs2.gen(), qs2);
        if (square && is_sqrt2) return std::string("false, witness (sqrt2)^2");
        return std::string("false, other witness");
    });
    run("z2sqrt2-locally-associated", 2, "literature", "true",
        [&] { return fmt_bool(is_locally_associated(z2).verdict); });
    run("z2sqrt2-units-mod-conductor", 2, "literature", "2", [&] {
        return FiniteQuotient::make(qs2.maximal_lattice(), z2.conductor().lattice(), qs2)
            .count_units(enumeration_guard())
            .get_str();
    });

    /* ---- the cubic walkthrough ---- */
    FieldElement pgen = parse_element("2+2a+a^2", cub);
    FieldElement qgen = parse_element("1+a", cub);
    FieldElement pi = parse_element("2-4a+a^2", cub);
    OIdeal P = OIdeal::from_two_gens(3, pgen, cub);
    OIdeal Q = OIdeal::from_two_gens(3, qgen, cub);
    OIdeal I = ideal_pow(P, 2, cub);
    OrderRing R = z_plus_ideal(I, cub);
    OrderRing R1 = intermediate_order(R, P);

    run("cubic-split-3", 3, "literature", "(3,1+a) f=1 e=1; (3,2+2a+a^2) f=2 e=1", [&] {
        auto primes = split_prime(3, cub);
        std::ostringstream os;
        bool first = true;
        for (auto const& pr : primes) {
            if (!first) os << "; ";
            os << "(3," << element_str(pr.second_gen) << ") f=" << pr.residue_degree
               << " e=" << pr.ramification;
            first = false;
        }
        return os.str();
    });
    run("cubic-conductor-principal", 3, "literature", "P^2 = (2-4a+a^2)",
        [&] {
            return I.lattice() == lat_scale(cub.maximal_lattice(), pi, cub)
                       ? "P^2 = (2-4a+a^2)"
                       : "lattices differ";
        });
    run("cubic-R-is-Z-plus-I", 3, "literature", "conductor(Z+I) = I",
        [&] { return R.conductor() == I ? "conductor(Z+I) = I" : "conductor differs"; });
    run("cubic-R-associated", 3, "literature", "true",
        [&] { return fmt_bool(is_associated(R).verdict); });
    run("cubic-unit-index-R1", 3, "literature", "4", [&] { return unit_index(R1).get_str(); });
    run("cubic-unit-index-R", 3, "literature", "12", [&] { return unit_index(R).get_str(); });
    run("cubic-residue-field-P", 3, "literature", "9", [&] { return P.norm(cub).get_str(); });
    run("cubic-P-nonprincipal", 3, "derived", "P, Q nonprincipal", [&] {
        bool p = eng_cub.principality(P).principal;
        bool q = eng_cub.principality(Q).principal;
        return (!p && !q) ? "P, Q nonprincipal" : "unexpected principal prime";
    });

    /* ---- association obstruction for 3 + alpha x ---- */
    run("cubic-obstruction-3-plus-alpha-x", 4, "literature",
        "certificate at degree 1; branches 0,4,8 all fail at level 1", [&] {
            auto res = association_obstruction(ts_make({cub.from_int(3), cub.gen()}), R);
            if (!std::holds_alternative<ObstructionCertificate>(res))
                return std::string("witness found");
            auto const& cert = std::get<ObstructionCertificate>(res);
            std::ostringstream os;
            os << "certificate at degree " << cert.level << "; branches ";
            bool all_level1 = true;
            for (std::size_t i = 0; i < cert.branches.size(); ++i) {
                if (i) os << ",";
                os << cert.branches[i].rep_exponent;
                if (cert.branches[i].failing_level != 1) all_level1 = false;
            }
            os << (all_level1 ? " all fail at level 1" : " fail at mixed levels");
            return os.str();
        });

    /* ---- degree-1 irreducibility certificate for f = 3*pi + (pi*alpha) x ---- */
    TruncSeries f_series = ts_mul(ts_make({cub.from_int(3), cub.gen()}),
                                  ts_constant(pi, 1, cub), cub);
    run("cubic-f-series-coefficients", 5, "literature",
        "(6-12a+3a^2) + (1-2a-4a^2)x", [&] {
            std::ostringstream os;
            os << "(" << element_str(f_series.coeffs[0]) << ") + ("
               << element_str(f_series.coeffs[1]) << ")x";
            return os.str();
        });
    run("cubic-deg1-irreducibility", 5, "literature",
        "irreducible; branch classes -1,0,1 all fail", [&] {
            auto cert = irreducibility_cert_deg1(f_series, R, eng_cub);
            if (cert.verdict != Deg1Verdict::irreducible) return std::string("inconclusive");
            std::vector<long> ks;
            for (auto const& b : cert.branches) {
                if (b.admits_linear) return std::string("a branch admits the linear term");
                auto dec = recognize_unit(fe_div(b.g0, cub.from_int(3), cub), cub, 24);
                if (!dec) return std::string("branch constant not of the shape 3*unit");
                ks.push_back(balanced_exponent(dec->fund_exp, 12) / 4);
            }
            std::sort(ks.begin(), ks.end());
            std::ostringstream os;
            os << "irreducible; branch classes ";
            for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
            os << " all fail";
            return os.str();
        });

    /* ---- half-factoriality violation witness ---- */
    run("cubic-hfd-violation-witness", 6, "literature",
        "m=3 k=12; all 37 coefficients of (3+ax)^36 lie in R", [&] {
            auto w = hfd_violation_witness(f_series, ts_constant(pi, 1, cub), cub.from_int(3),
                                           cub.gen(), P, R);
            std::ostringstream os;
            if (w.m == 3 && w.k == 12 && w.all_coefficients_in_order &&
                w.coefficients.size() == 37)
                os << "m=3 k=12; all 37 coefficients of (3+ax)^36 lie in R";
            else
                os << "m=" << w.m << " k=" << w.k << " coeffs " << w.coefficients.size()
                   << (w.all_coefficients_in_order ? " in R" : " escape R");
            return os.str();
        });

    /* ---- class-number formula ---- */
    run("class-number-z5sqrt2", 7, "derived", "2",
        [&] { return class_number_of_order(z5).get_str(); });
    run("class-number-z2sqrt2", 7, "derived", "1",
        [&] { return class_number_of_order(z2).get_str(); });
    run("class-number-cubic-R", 7, "derived", "2",
        [&] { return class_number_of_order(R).get_str(); });

    /* ---- Davenport constants ---- */
    run("davenport-cyclic", 8, "derived", "D(Z/n)=n for n=1..8", [&] {
        for (long n = 1; n <= 8; ++n)
            if (davenport(AbelianGroup{{Int(n)}}) != n) return std::string("mismatch at n=") + std::to_string(n);
        return std::string("D(Z/n)=n for n=1..8");
    });
    run("davenport-2-2", 8, "derived", "3",
        [&] { return davenport(AbelianGroup{{Int(2), Int(2)}}).get_str(); });
    run("davenport-3-3", 8, "derived", "5",
        [&] { return davenport(AbelianGroup{{Int(3), Int(3)}}).get_str(); });
    run("davenport-2-4", 8, "derived", "5",
        [&] { return davenport(AbelianGroup{{Int(2), Int(4)}}).get_str(); });
    run("elasticity-maximal-orders", 8, "derived", "rho(O)=1 for all bundled fields", [&] {
        if (elasticity_maximal(qs2) == 1 && elasticity_maximal(qs3) == 1 &&
            elasticity_maximal(cub) == 1)
            return std::string("rho(O)=1 for all bundled fields");
        return std::string("unexpected elasticity");
    });

    /* ---- supporting golden values ---- */
    run("pell-fundamental-units", 0, "derived", "1+a; 2+a; 5+2a", [&] {
        std::ostringstream os;
        os << element_str(pell_fundamental(2)) << "; " << element_str(pell_fundamental(3))
           << "; " << element_str(pell_fundamental(6));
        return os.str();
    });
    run("eisenstein-z-sqrt-3-associated", 0, "derived", "true", [&] {
        OrderRing zs3 = parse_order("basis 1,0; -1,2", qs3);
        return fmt_bool(is_associated(zs3).verdict);
    });
    run("cubic-hfd-evidence", 0, "derived", "consistent up to 3000", [&] {
        auto ev = hfd_evidence(R, Int(3000), eng_cub, 2);
        return ev.consistent ? "consistent up to 3000" : ("violation: " + ev.reason);
    });

    /* ---- theorem property suites over the generated corpus ---- */
    std::vector<std::pair<FieldSpec const*, ClassEngine*>> fields{
        {&qs2, &eng_qs2}, {&qs3, &eng_qs3}, {&cub, &eng_cub}};

    run("corpus-ao-implies-ipo-lao", 9, "derived", "no exceptions", [&] {
        long checked = 0;
        for (auto const& [spec, eng] : fields) {
            (void)eng;
            for (auto const& member : generate_corpus(*spec)) {
                Int size = lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                if (size > kCorpusEnumCutoff) continue;
                auto rep = property_report(member.order);
                ++checked;
                if (rep.associated.verdict &&
                    !(rep.ideal_preserving.verdict && rep.locally_associated.verdict))
                    return member.name + " violates the implication";
            }
        }
        if (checked < 20) return std::string("corpus too small: ") + std::to_string(checked);
        return std::string("no exceptions");
    });

    run("corpus-radical-converse", 9, "derived", "equivalence holds on radical conductors", [&] {
        for (auto const& [spec, eng] : fields) {
            (void)eng;
            for (auto const& member : generate_corpus(*spec)) {
                Int size = lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                if (size > kCorpusEnumCutoff) continue;
                if (!is_radical(member.order.conductor(), *spec)) continue;
                auto rep = property_report(member.order);
                bool both = rep.ideal_preserving.verdict && rep.locally_associated.verdict;
                if (rep.associated.verdict != both)
                    return member.name + " violates the equivalence";
            }
        }
        return std::string("equivalence holds on radical conductors");
    });

    run("corpus-open-question-probe", 9, "derived", "probe ran; candidates reported", [&] {
        std::vector<std::string> candidates;
        for (auto const& [spec, eng] : fields) {
            (void)eng;
            for (auto const& member : generate_corpus(*spec)) {
                Int size = lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                if (size > kCorpusEnumCutoff) continue;
                if (is_radical(member.order.conductor(), *spec)) continue;
                auto rep = property_report(member.order);
                if (rep.ideal_preserving.verdict && rep.locally_associated.verdict &&
                    !rep.associated.verdict)
                    candidates.push_back(spec->label() + ":" + member.name);
            }
        }
        std::ostringstream os;
        os << "probe ran; candidates reported";
        for (auto const& c : candidates) os << " " << c;
        return os.str();
    });

    run("corpus-conductor-of-sum", 9, "derived", "conductor(R+J) = I+J throughout", [&] {
        for (auto const& [spec, eng] : fields) {
            (void)eng;
            for (auto const& member : generate_corpus(*spec)) {
                if (!is_ideal_preserving(member.order).verdict) continue;
                OIdeal const& cond = member.order.conductor();
                auto factors = cond.factorization(*spec);
                std::vector<OIdeal> divisors{OIdeal::unit_ideal(*spec)};
                for (auto const& [pr, e] : factors) {
                    std::vector<OIdeal> next;
                    for (auto const& d : divisors) {
                        OIdeal cur = d;
                        for (int i = 0; i <= e; ++i) {
                            next.push_back(cur);
                            if (i < e) cur = ideal_mul(cur, OIdeal::from_lattice(pr.lattice, *spec), *spec);
                        }
                    }
                    divisors = std::move(next);
                    if (divisors.size() > 24) break;
                }
                for (auto const& j : divisors) {
                    OrderRing t = intermediate_order(member.order, j);
                    if (!(t.conductor() == ideal_sum(cond, j, *spec)))
                        return member.name + ": conductor(R+J) != I+J";
                }
            }
        }
        return std::string("conductor(R+J) = I+J throughout");
    });

    run("corpus-intersect-orders", 9, "derived", "(R+J1) cap (R+J2) = R+(J1 cap J2) throughout",
        [&] {
            for (auto const& [spec, eng] : fields) {
                (void)eng;
                for (auto const& member : generate_corpus(*spec)) {
                    if (!is_ideal_preserving(member.order).verdict) continue;
                    OIdeal const& cond = member.order.conductor();
                    auto factors = cond.factorization(*spec);
                    std::vector<OIdeal> divisors{OIdeal::unit_ideal(*spec)};
                    for (auto const& [pr, e] : factors) {
                        std::vector<OIdeal> next;
                        for (auto const& d : divisors) {
                            OIdeal cur = d;
                            for (int i = 0; i <= e; ++i) {
                                next.push_back(cur);
                                if (i < e)
                                    cur = ideal_mul(cur, OIdeal::from_lattice(pr.lattice, *spec),
                                                    *spec);
                            }
                        }
                        divisors = std::move(next);
                        if (divisors.size() > 12) break;
                    }
                    for (std::size_t a = 0; a < divisors.size(); ++a)
                        for (std::size_t b = a; b < divisors.size(); ++b) {
                            ZLattice lhs = lat_intersect(
                                intermediate_order(member.order, divisors[a]).lattice(),
                                intermediate_order(member.order, divisors[b]).lattice());
                            OrderRing rhs = z_plus_ideal(
                                ideal_intersect(divisors[a], divisors[b], *spec), *spec);
                            ZLattice rhs_lat = lat_sum(member.order.lattice(),
                                                       ideal_intersect(divisors[a], divisors[b],
                                                                       *spec)
                                                           .lattice());
                            if (!(lhs == rhs_lat))
                                return member.name + ": intersection identity fails";
                            (void)rhs;
                        }
                }
            }
            return std::string("(R+J1) cap (R+J2) = R+(J1 cap J2) throughout");
        });

    run("corpus-inheritance", 9, "derived", "all implications hold", [&] {
        for (auto const& [spec, eng] : fields) {
            (void)eng;
            for (auto const& member : generate_corpus(*spec)) {
                Int size = lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                if (size > Int(2000)) continue;
                for (auto const& [pr, e] : member.order.conductor().factorization(*spec)) {
                    (void)e;
                    auto rep = check_inheritance(member.order, OIdeal::from_lattice(pr.lattice, *spec));
                    if (!rep.implications_hold) return member.name + ": inheritance fails";
                }
            }
        }
        return std::string("all implications hold");
    });

    run("corpus-class-number-chain", 9, "derived",
        "|Cl(R)| >= |Cl(R+J)| >= |Cl(O)| throughout", [&] {
            for (auto const& [spec, eng] : fields) {
                (void)eng;
                for (auto const& member : generate_corpus(*spec)) {
                    Int size =
                        lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                    if (size > Int(2000)) continue;
                    Int cl_r = class_number_of_order(member.order);
                    for (auto const& [pr, e] : member.order.conductor().factorization(*spec)) {
                        (void)e;
                        Int cl_t = class_number_of_order(
                            intermediate_order(member.order, OIdeal::from_lattice(pr.lattice, *spec)));
                        if (!(cl_r >= cl_t && cl_t >= spec->class_number()))
                            return member.name + ": class-number chain fails";
                    }
                }
            }
            return std::string("|Cl(R)| >= |Cl(R+J)| >= |Cl(O)| throughout");
        });

    run("corpus-locally-associated-class-numbers", 7, "derived",
        "|Cl(R)| = |Cl(O)| for every locally associated member", [&] {
            for (auto const& [spec, eng] : fields) {
                (void)eng;
                for (auto const& member : generate_corpus(*spec)) {
                    Int size =
                        lat_index(spec->maximal_lattice(), member.order.conductor().lattice());
                    if (size > kCorpusEnumCutoff) continue;
                    auto lao = is_locally_associated(member.order);
                    if (lao.verdict && lao.class_number_order != spec->class_number())
                        return member.name + ": locally associated with different class number";
                }
            }
            return std::string("|Cl(R)| = |Cl(O)| for every locally associated member");
        });

    /* ---- factorization transfer at desk scale (criterion 10) ---- */
    run("cubic-R1-transfer", 10, "derived",
        "every R1-irreducible stays irreducible and length sets agree", [&] {
            FactorizationEngine in_r1(R1, eng_cub);
            FactorizationEngine in_max(maximal_order(cub), eng_cub);
            long checked = 0;
            for (auto const& x : sample_box(R1, 2, Int(3000))) {
                ++checked;
                auto lr = in_r1.lengths(x);
                auto lo = in_max.lengths(x);
                if (lr.lengths != lo.lengths)
                    return "length sets differ at " + element_str(x);
                if (in_r1.irreducible(x).irreducible && !in_max.irreducible(x).irreducible)
                    return "irreducible transfer fails at " + element_str(x);
            }
            if (checked < 25) return std::string("sample too small");
            return std::string("every R1-irreducible stays irreducible and length sets agree");
        });

    return suite;
}

nlohmann::json json_of_suite(VerificationSuite const& suite) {
    nlohmann::json cases = nlohmann::json::array();
    for (auto const& c : suite.cases)
        cases.push_back({{"id", c.id},
                         {"criterion", c.criterion},
                         {"provenance", c.provenance},
                         {"expected", c.expected},
                         {"computed", c.computed},
                         {"pass", c.pass}});
    return nlohmann::json{{"cases", std::move(cases)}, {"all_pass", suite.all_pass()}};
}

std::string table_of_suite(VerificationSuite const& suite) {
    std::ostringstream os;
    for (auto const& c : suite.cases) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
        if (c.criterion) os << "  [criterion " << c.criterion << "]";
        os << "  (" << c.provenance << ")";
        if (!c.pass) os << "\n      expected: " << c.expected << "\n      computed: " << c.computed;
        os << "\n";
    }
    os << (suite.all_pass() ? "ALL CASES PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace orderlab
