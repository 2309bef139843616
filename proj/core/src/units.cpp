#include "orderlab/units.hpp"

namespace orderlab {

FieldElement pell_fundamental(Int const& d) {
    if (d < 2) throw input_error("pell_fundamental: need d >= 2");
    if (d > 1000000) throw guard_error("pell_fundamental: d exceeds the guard 10^6");
    if (!is_squarefree(d)) throw input_error("pell_fundamental: d not squarefree");

    Int a0 = isqrt(d);
    Int m = 0, den = 1, a = a0;
    Int p_prev = 1, p_cur = a0, q_prev = 0, q_cur = 1;
    for (;;) {
        m = den * a - m;
        den = divexact(d - m * m, den);
        a = (a0 + m) / den;
        if (a == 2 * a0) break;
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    // x^2 - d y^2 = +-1 at the end of the first period
    if (p_cur * p_cur - d * q_cur * q_cur != 1 && p_cur * p_cur - d * q_cur * q_cur != -1)
        throw internal_error("pell_fundamental: convergent is not a unit");
    return FieldElement({Rat(p_cur), Rat(q_cur)});
}

namespace {

/* smallest k >= 1 with base^k in R, searching up to ceiling. */
long smallest_power_in(FieldElement const& base, OrderRing const& r, Int const& ceiling) {
    FieldSpec const& spec = r.spec();
    FieldElement pw = base;
    for (Int k = 1; k <= ceiling; ++k) {
        if (r.contains(pw)) return k.get_si();
        pw = fe_mul(pw, base, spec);
    }
    throw internal_error("unit power search exhausted its proof-backed ceiling");
}

}  // namespace

Int unit_index(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    if (spec.unit_rank() >= 2) throw unsupported_error("unsupported rank");
    if (r.is_maximal()) return 1;
    if (spec.unit_rank() == 0) {
        // torsion only: the subgroup of <zeta> landing in R
        long m = smallest_power_in(spec.torsion_generator(), r, spec.torsion_order());
        if (spec.torsion_order() % m != 0)
            throw internal_error("unit_index: torsion subgroup index does not divide");
        return Int(m);
    }
    // rank 1, torsion {+-1} (validated at ingest), so the index is the
    // least k with epsilon^k in R; k embeds into U(O/I), bounded by |O/I|.
    Int ceiling = lat_index(spec.maximal_lattice(), r.conductor().lattice());
    return Int(smallest_power_in(spec.fundamental_units()[0], r, ceiling));
}

CosetReps coset_reps(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    Int idx = unit_index(r);
    CosetReps out;
    out.index = idx;
    FieldElement base =
        spec.unit_rank() == 0 ? spec.torsion_generator() : spec.fundamental_units()[0];
    FieldElement cur = spec.one();
    for (Int b = 0; b < idx; ++b) {
        out.reps.push_back(cur);
        cur = fe_mul(cur, base, spec);
    }
    return out;
}

UnitGroupDesc unit_group_of_maximal(FieldSpec const& spec) {
    return UnitGroupDesc{spec.torsion_order(), spec.fundamental_units(), spec.maximal_lattice()};
}

UnitGroupDesc unit_group_of_order(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    UnitGroupDesc out;
    out.owner = r.lattice();
    if (spec.unit_rank() == 0) {
        Int m = unit_index(r);
        out.torsion_order = divexact(spec.torsion_order(), m);
        return out;
    }
    out.torsion_order = 2;
    Int m = unit_index(r);
    out.fundamentals.push_back(fe_pow(spec.fundamental_units()[0], m.get_si(), spec));
    return out;
}

std::optional<UnitDecomposition> recognize_unit(FieldElement const& u, FieldSpec const& spec,
                                                long ceiling) {
    long t = spec.torsion_order().get_si();
    std::vector<FieldElement> torsion;
    {
        FieldElement z = spec.one();
        for (long a = 0; a < t; ++a) {
            torsion.push_back(z);
            z = fe_mul(z, spec.torsion_generator(), spec);
        }
    }
    auto match_torsion = [&](FieldElement const& target,
                             long k) -> std::optional<UnitDecomposition> {
        for (long a = 0; a < t; ++a)
            if (torsion[static_cast<std::size_t>(a)] == target) return UnitDecomposition{a, k};
        return std::nullopt;
    };
    if (spec.unit_rank() == 0) return match_torsion(u, 0);

    FieldElement eps = spec.fundamental_units()[0];
    FieldElement eps_inv = fe_inverse(eps, spec);
    FieldElement up = u, dn = u;
    for (long k = 0; k <= ceiling; ++k) {
        if (auto hit = match_torsion(up, k)) return hit;
        if (k > 0) {
            if (auto hit = match_torsion(dn, -k)) return hit;
        }
        up = fe_mul(up, eps_inv, spec);  // testing u = zeta^a eps^k
        dn = fe_mul(dn, eps, spec);
    }
    return std::nullopt;
}

}  // namespace orderlab
