#include "orderlab/pseries.hpp"

#include <algorithm>

#include "orderlab/quotient.hpp"

namespace orderlab {

TruncSeries ts_make(std::vector<FieldElement> coeffs) {
    if (coeffs.empty()) throw input_error("empty series");
    std::size_t n = coeffs[0].degree();
    for (auto const& c : coeffs)
        if (c.degree() != n) throw input_error("series coefficients of mixed dimension");
    return TruncSeries{std::move(coeffs)};
}

TruncSeries ts_constant(FieldElement c, std::size_t degree, FieldSpec const& spec) {
    std::vector<FieldElement> coeffs(degree + 1, spec.zero());
    coeffs[0] = std::move(c);
    return TruncSeries{std::move(coeffs)};
}

TruncSeries ts_add(TruncSeries const& a, TruncSeries const& b) {
    if (a.coeffs.size() != b.coeffs.size())
        throw input_error("series truncation degrees differ");
    std::vector<FieldElement> out;
    out.reserve(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.push_back(fe_add(a.coeffs[i], b.coeffs[i]));
    return TruncSeries{std::move(out)};
}

TruncSeries ts_mul(TruncSeries const& a, TruncSeries const& b, FieldSpec const& spec) {
    if (a.coeffs.size() != b.coeffs.size())
        throw input_error("series truncation degrees differ");
    std::size_t d = a.trunc_degree();
    std::vector<FieldElement> out(d + 1, spec.zero());
    for (std::size_t i = 0; i <= d; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= d; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out[i + j] = fe_add(out[i + j], fe_mul(a.coeffs[i], b.coeffs[j], spec));
        }
    }
    return TruncSeries{std::move(out)};
}

TruncSeries ts_unit_inverse(TruncSeries const& a, OrderRing const& ambient) {
    FieldSpec const& spec = ambient.spec();
    for (auto const& c : a.coeffs)
        if (!ambient.contains(c))
            throw precondition_error("series coefficient outside the ambient order");
    FieldElement const& a0 = a.coeffs[0];
    if (a0.is_zero()) throw domain_error("non-unit constant term");
    {
        Rat n = fe_norm(a0, spec);
        if (n != 1 && n != -1) throw domain_error("non-unit constant term");
    }
    FieldElement b0 = fe_inverse(a0, spec);
    std::size_t d = a.trunc_degree();
    std::vector<FieldElement> b(d + 1, spec.zero());
    b[0] = b0;
    for (std::size_t k = 1; k <= d; ++k) {
        FieldElement acc = spec.zero();
        for (std::size_t i = 1; i <= k; ++i)
            acc = fe_add(acc, fe_mul(a.coeffs[i], b[k - i], spec));
        b[k] = fe_neg(fe_mul(b0, acc, spec));
    }
    return TruncSeries{std::move(b)};
}

bool ts_coeffs_in(TruncSeries const& a, ZLattice const& lat) {
    for (auto const& c : a.coeffs)
        if (!lat_contains(lat, c)) return false;
    return true;
}

std::pair<TruncSeries, TruncSeries> unit_split_trunc(TruncSeries const& u, OIdeal const& j1,
                                                     OIdeal const& j2, OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    if (!is_coprime(j1, j2, spec))
        throw precondition_error("unit_split_trunc: factors not coprime");
    if (!(ideal_mul(j1, j2, spec) == r.conductor()))
        throw precondition_error("unit_split_trunc: factors do not multiply to the conductor");
    if (!ts_coeffs_in(u, spec.maximal_lattice()))
        throw precondition_error("unit_split_trunc: series not over the maximal order");
    {
        Rat n = fe_norm(u.coeffs[0], spec);
        if (n != 1 && n != -1) throw precondition_error("unit_split_trunc: nonunit constant term");
    }

    OrderRing r1 = intermediate_order(r, j1);
    OrderRing r2 = intermediate_order(r, j2);

    /* constant terms: split u0 = u1 * u2 with u1 in U(R1), u2 in U(R2)
     * by finite search over unit powers (bounded by the unit indices) */
    FieldElement u1 = spec.one(), u2 = u.coeffs[0];
    {
        bool found = false;
        Int m1 = unit_index(r1), m2 = unit_index(r2);
        FieldElement base = spec.unit_rank() == 0 ? spec.torsion_generator()
                                                  : spec.fundamental_units()[0];
        FieldElement step = fe_pow(base, m1.get_si(), spec);
        Int bound = spec.unit_rank() == 0 ? divexact(spec.torsion_order(), m1) : m2;
        FieldElement cand = spec.one();
        for (Int t = 0; t < bound && !found; ++t) {
            FieldElement other = fe_div(u.coeffs[0], cand, spec);
            if (r2.contains(other)) {
                u1 = cand;
                u2 = other;
                found = true;
            }
            cand = fe_mul(cand, step, spec);
        }
        if (!found)
            throw precondition_error(
                "no split found for the constant term (order not associated?)");
    }

    std::size_t d = u.trunc_degree();
    std::vector<FieldElement> c(d + 1, spec.zero()), e(d + 1, spec.zero());
    c[0] = u1;
    e[0] = u2;
    ZLattice l1 = lat_scale(j1.lattice(), u2, spec);
    ZLattice l2 = lat_scale(j2.lattice(), u1, spec);
    FieldElement inv_u2 = fe_inverse(u2, spec);
    FieldElement inv_u1 = fe_inverse(u1, spec);
    for (std::size_t k = 1; k <= d; ++k) {
        FieldElement rhs = u.coeffs[k];
        for (std::size_t i = 1; i < k; ++i)
            rhs = fe_sub(rhs, fe_mul(c[i], e[k - i], spec));
        /* c_k u2 + e_k u1 = rhs, c_k in J1, e_k in J2: solvable since
         * u2 J1 + u1 J2 = J1 + J2 = O */
        auto dec = lat_decompose_sum(l1, l2, rhs);
        if (!dec)
            throw internal_error("unit_split_trunc: coefficient equation unsolvable");
        c[k] = fe_mul(dec->first, inv_u2, spec);
        e[k] = fe_mul(dec->second, inv_u1, spec);
    }
    TruncSeries v1{std::move(c)}, v2{std::move(e)};
    if (!(ts_mul(v1, v2, spec) == u))
        throw internal_error("unit_split_trunc: product identity failed");
    if (!ts_coeffs_in(v1, r1.lattice()) || !ts_coeffs_in(v2, r2.lattice()))
        throw internal_error("unit_split_trunc: factor escapes its order");
    return {std::move(v1), std::move(v2)};
}

namespace {

struct ObstructionSearch {
    FieldSpec const& spec;
    OrderRing const& r;
    TruncSeries const& g;
    std::size_t d;
    long guard;
    long nodes = 0;

    std::optional<LatticeQuotient> translates;  // solutions mod all-level conductor
    std::vector<FieldElement> translate_reps;
    std::vector<ObstructionBranch> log;
    std::optional<std::vector<FieldElement>> survivor;  // b_0..b_d
    ZLattice g0_module;  // g0 * O

    bool dfs(std::vector<FieldElement>& b, long rep_exp, std::vector<long>& path,
             std::size_t level) {
        if (++nodes > guard)
            throw inconclusive_error("association_obstruction: branch budget exceeded");
        if (level > d) {
            survivor = b;
            (void)rep_exp;
            (void)path;
            return true;
        }
        FieldElement acc = spec.zero();
        for (std::size_t i = 1; i <= level; ++i)
            acc = fe_add(acc, fe_mul(g.coeffs[i], b[level - i], spec));
        auto dec = lat_decompose_sum(r.lattice(), g0_module, acc);
        if (!dec) {
            ObstructionBranch dead;
            dead.rep_exponent = rep_exp;
            dead.translate_path = path;
            dead.failing_level = static_cast<long>(level);
            dead.accumulated = acc;
            log.push_back(std::move(dead));
            return false;
        }
        FieldElement particular = fe_neg(fe_div(dec->second, g.coeffs[0], spec));
        for (std::size_t t = 0; t < translate_reps.size(); ++t) {
            b.push_back(fe_add(particular, translate_reps[t]));
            path.push_back(static_cast<long>(t));
            bool hit = dfs(b, rep_exp, path, level + 1);
            path.pop_back();
            b.pop_back();
            if (hit) return true;
        }
        return false;
    }
};

}  // namespace

ObstructionResult association_obstruction(TruncSeries const& g, OrderRing const& r,
                                          long node_guard) {
    FieldSpec const& spec = r.spec();
    if (!ts_coeffs_in(g, spec.maximal_lattice()))
        throw precondition_error("association_obstruction: series not over the maximal order");
    std::size_t d = g.trunc_degree();

    if (ts_coeffs_in(g, r.lattice())) {
        TruncSeries one = ts_constant(spec.one(), d, spec);
        return AssociationWitness{g, one};
    }

    FieldElement const& g0 = g.coeffs[0];
    if (g0.is_zero())
        throw unsupported_error("association_obstruction: zero constant term not supported");

    ObstructionSearch search{spec, r, g, d, node_guard};
    search.g0_module = lat_scale(spec.maximal_lattice(), g0, spec);
    // dfs survivor bookkeeping uses aggregate members set above

    /* solution lattice of g0*b in R, and its sublattice fixing every
     * later level too; branching ranges over the finite quotient */
    ZLattice l_sol = lat_intersect(spec.maximal_lattice(),
                                   lat_scale(r.lattice(), fe_inverse(g0, spec), spec));
    ZLattice m = l_sol;
    for (std::size_t i = 1; i <= d; ++i) {
        if (g.coeffs[i].is_zero()) continue;
        m = lat_intersect(m, lat_scale(r.lattice(), fe_inverse(g.coeffs[i], spec), spec));
    }
    search.translates.emplace(LatticeQuotient::make(l_sol, m));
    if (search.translates->size() > Int(node_guard))
        throw inconclusive_error("association_obstruction: translate set exceeds the budget");
    for (Int i = 0; i < search.translates->size(); ++i)
        search.translate_reps.push_back(
            search.translates->element_of(search.translates->coords_of_index(i)));

    auto reps = coset_reps(r);
    for (std::size_t b = 0; b < reps.reps.size(); ++b) {
        /* constant-term branch: need g0 * u in R */
        FieldElement head = fe_mul(g0, reps.reps[b], spec);
        if (!r.contains(head)) continue;
        std::vector<FieldElement> chosen{reps.reps[b]};
        std::vector<long> path;
        if (search.dfs(chosen, static_cast<long>(b), path, 1)) break;
    }

    if (search.survivor) {
        TruncSeries uprime{*search.survivor};
        TruncSeries rr = ts_mul(g, uprime, spec);
        if (!ts_coeffs_in(rr, r.lattice()))
            throw internal_error("association_obstruction: survivor fails re-verification");
        TruncSeries u = ts_unit_inverse(uprime, maximal_order(spec));
        if (!(ts_mul(rr, u, spec) == g))
            throw internal_error("association_obstruction: witness product mismatch");
        return AssociationWitness{std::move(rr), std::move(u)};
    }
    ObstructionCertificate cert;
    cert.level = d;
    cert.branches = std::move(search.log);
    return cert;
}

Deg1Certificate irreducibility_cert_deg1(TruncSeries const& f, OrderRing const& r,
                                         ClassEngine& eng) {
    FieldSpec const& spec = r.spec();
    if (f.trunc_degree() < 1)
        throw precondition_error("irreducibility_cert_deg1: need at least degree 1");
    if (!ts_coeffs_in(f, r.lattice()))
        throw precondition_error("irreducibility_cert_deg1: series not over the order");
    FieldElement const& f0 = f.coeffs[0];
    FieldElement const& f1 = f.coeffs[1];
    if (f0.is_zero()) throw precondition_error("irreducibility_cert_deg1: zero constant term");
    {
        Rat n = fe_norm(f0, spec);
        if (n == 1 || n == -1) throw domain_error("unit constant term");
    }

    FactorizationEngine fac(r, eng);
    Deg1Certificate cert;
    cert.verdict = Deg1Verdict::irreducible;
    std::set<std::pair<std::string, std::string>> seen;
    for (auto const& pair : fac.divisors(f0)) {
        if (fac.is_unit(pair.divisor) || fac.is_unit(pair.cofactor)) continue;
        std::string ka = lat_scale(r.lattice(), pair.divisor, spec).dump();
        std::string kb = lat_scale(r.lattice(), pair.cofactor, spec).dump();
        if (ka > kb) std::swap(ka, kb);
        if (!seen.insert({ka, kb}).second) continue;
        Deg1Branch branch;
        branch.g0 = pair.divisor;
        branch.h0 = pair.cofactor;
        branch.module = lat_sum(lat_scale(r.lattice(), pair.divisor, spec),
                                lat_scale(r.lattice(), pair.cofactor, spec));
        branch.admits_linear = lat_contains(branch.module, f1);
        if (branch.admits_linear) {
            cert.verdict = Deg1Verdict::inconclusive;
            if (!cert.surviving) cert.surviving = cert.branches.size();
        }
        cert.branches.push_back(std::move(branch));
    }
    return cert;
}

HfdViolationWitness hfd_violation_witness(TruncSeries const& f, TruncSeries const& g,
                                          FieldElement const& a, FieldElement const& b,
                                          OIdeal const& j, OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    OIdeal const& conductor = r.conductor();
    if (!lat_contains(j.lattice(), a))
        throw precondition_error("hfd_violation_witness: a not in J");
    if (!lat_subset(ideal_mul(j, j, spec).lattice(), conductor.lattice()))
        throw precondition_error("hfd_violation_witness: J^2 does not lie in the conductor");
    if (!ts_coeffs_in(g, r.lattice()))
        throw precondition_error("hfd_violation_witness: cofactor not over the order");
    {
        Rat n = fe_norm(g.coeffs[0], spec);
        if (n == 1 || n == -1)
            throw precondition_error("hfd_violation_witness: cofactor is a unit");
    }
    {
        std::size_t d = f.trunc_degree();
        std::vector<FieldElement> lin(d + 1, spec.zero());
        lin[0] = a;
        if (d >= 1) lin[1] = b;
        if (!(ts_mul(g, TruncSeries{lin}, spec) == f))
            throw precondition_error("hfd_violation_witness: f != g * (a + b x)");
    }

    HfdViolationWitness out;
    Int quot_size = lat_index(spec.maximal_lattice(), conductor.lattice());

    /* minimal m with m*a in the conductor; the additive order of a mod I
     * divides |O/I| */
    for (Int m = 1; m <= quot_size; ++m) {
        if (lat_contains(conductor.lattice(), fe_scale(Rat(m), a))) {
            out.m = m.get_si();
            break;
        }
    }
    if (out.m == 0) throw internal_error("hfd_violation_witness: no multiple of a lies in I");
    for (long m = 1; m < out.m; ++m)
        if (lat_contains(conductor.lattice(), fe_scale(Rat(m), a)))
            throw internal_error("hfd_violation_witness: m not minimal");

    /* minimal k with b^k in R; residues of powers of b mod I cycle within
     * 2|O/I| steps */
    Int ceiling = 2 * quot_size + 2;
    FieldElement pw = b;
    for (Int k = 1; k <= ceiling; ++k) {
        if (r.contains(pw)) {
            out.k = k.get_si();
            break;
        }
        pw = fe_mul(pw, b, spec);
    }
    if (out.k == 0)
        throw guard_error("hfd_violation_witness: power search ceiling exceeded");
    {
        FieldElement check = spec.one();
        for (long k = 1; k < out.k; ++k) {
            check = fe_mul(check, b, spec);
            if (r.contains(check))
                throw internal_error("hfd_violation_witness: k not minimal");
        }
    }

    out.power = out.m * out.k;
    unsigned long mk = static_cast<unsigned long>(out.power);

    /* exact binomial expansion of (a + b x)^(mk) */
    std::vector<FieldElement> apow(mk + 1, spec.one()), bpow(mk + 1, spec.one());
    for (unsigned long i = 1; i <= mk; ++i) {
        apow[i] = fe_mul(apow[i - 1], a, spec);
        bpow[i] = fe_mul(bpow[i - 1], b, spec);
    }
    out.all_coefficients_in_order = true;
    for (unsigned long i = 0; i <= mk; ++i) {
        FieldElement coeff = fe_scale(Rat(binomial(mk, i)), fe_mul(apow[mk - i], bpow[i], spec));
        if (!r.contains(coeff)) out.all_coefficients_in_order = false;
        out.coefficients.push_back(std::move(coeff));
    }

    /* cross-check the expansion against repeated truncated products */
    {
        std::vector<FieldElement> lin(mk + 1, spec.zero());
        lin[0] = a;
        lin[1] = b;
        TruncSeries linear{lin};
        TruncSeries acc = ts_constant(spec.one(), mk, spec);
        for (unsigned long i = 0; i < mk; ++i) acc = ts_mul(acc, linear, spec);
        if (!(acc.coeffs == out.coefficients))
            throw internal_error("hfd_violation_witness: binomial identity failed");
    }

    out.left_irreducibles = out.power;
    out.right_min_irreducibles = out.power + 1;
    return out;
}

}  // namespace orderlab
