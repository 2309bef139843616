#include "orderlab/structure.hpp"

namespace orderlab {

AssociatedResult is_associated(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    AssociatedResult out;
    out.residues = lat_index(spec.maximal_lattice(), r.conductor().lattice());
    if (out.residues > enumeration_guard())
        throw guard_error("is_associated: |O/I| = " + out.residues.get_str() +
                          " exceeds the enumeration guard");
    auto reps = coset_reps(r);
    out.rep_count = reps.index;

    FiniteQuotient q = FiniteQuotient::make(spec.maximal_lattice(), r.conductor().lattice(), spec);
    std::vector<bool> in_r = q.sublattice_image(r.lattice());
    std::vector<FiniteQuotient::Res> rep_res;
    rep_res.reserve(reps.reps.size());
    for (auto const& u : reps.reps) rep_res.push_back(q.residue_of(u));

    std::int64_t size = q.size().get_si();
    out.witness.reserve(static_cast<std::size_t>(size));
    for (std::int64_t t = 0; t < size; ++t) {
        auto tres = q.residue_of_index(t);
        long found = -1;
        for (std::size_t b = 0; b < rep_res.size() && found < 0; ++b) {
            /* u(t + beta) in R for some beta in I iff u*t lands in the
             * image of R inside O/I (I sits inside R, so R is a union of
             * I-cosets). */
            if (in_r[static_cast<std::size_t>(q.linear_index(q.mul(rep_res[b], tres)))])
                found = static_cast<long>(b);
        }
        if (found < 0) {
            out.verdict = false;
            out.counterexample = q.element_of(tres);
            out.witness.clear();
            return out;
        }
        out.witness.push_back(found);
    }
    out.verdict = true;
    return out;
}

IdealPreservingResult is_ideal_preserving(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    IdealPreservingResult out;
    out.conductor_factors = r.conductor().factorization(spec);
    for (std::size_t i = 0; i < out.conductor_factors.size(); ++i) {
        auto const& pi = out.conductor_factors[i].first;
        ZLattice meet = lat_intersect(r.lattice(), pi.lattice);
        ZLattice pi_sq = lat_product(pi.lattice, pi.lattice, spec);
        if (lat_subset(meet, pi_sq)) {
            out.violation = {i, i};
            return out;
        }
        for (std::size_t j = 0; j < out.conductor_factors.size(); ++j) {
            if (j == i) continue;
            if (lat_subset(meet, out.conductor_factors[j].first.lattice)) {
                out.violation = {i, j};
                return out;
            }
        }
    }
    out.verdict = true;
    return out;
}

LocallyAssociatedResult is_locally_associated(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    LocallyAssociatedResult out;
    out.unit_index = unit_index(r);
    Int guard = enumeration_guard();
    out.units_maximal_mod =
        FiniteQuotient::make(spec.maximal_lattice(), r.conductor().lattice(), spec)
            .count_units(guard);
    out.units_order_mod =
        FiniteQuotient::make(r.lattice(), r.conductor().lattice(), spec).count_units(guard);
    out.verdict = out.unit_index * out.units_order_mod == out.units_maximal_mod;
    out.class_number_order = class_number_of_order(r);
    return out;
}

Int class_number_of_order(OrderRing const& r) {
    FieldSpec const& spec = r.spec();
    Int guard = enumeration_guard();
    Int uo = FiniteQuotient::make(spec.maximal_lattice(), r.conductor().lattice(), spec)
                 .count_units(guard);
    Int ur = FiniteQuotient::make(r.lattice(), r.conductor().lattice(), spec).count_units(guard);
    Int idx = unit_index(r);
    Int num = spec.class_number() * uo;
    Int den = ur * idx;
    if (num % den != 0)
        throw internal_error("class_number_of_order: non-integral |Cl(R)| = " + num.get_str() +
                             "/" + den.get_str());
    return divexact(num, den);
}

PropertyReport property_report(OrderRing const& r) {
    PropertyReport rep;
    rep.associated = is_associated(r);
    rep.ideal_preserving = is_ideal_preserving(r);
    rep.locally_associated = is_locally_associated(r);
    rep.conductor_radical = is_radical(r.conductor(), r.spec());
    return rep;
}

InheritanceReport check_inheritance(OrderRing const& r, OIdeal const& j) {
    InheritanceReport out;
    out.base = property_report(r);
    OrderRing t = intermediate_order(r, j);
    out.extended = property_report(t);
    out.implications_hold =
        (!out.base.associated.verdict || out.extended.associated.verdict) &&
        (!out.base.ideal_preserving.verdict || out.extended.ideal_preserving.verdict) &&
        (!out.base.locally_associated.verdict || out.extended.locally_associated.verdict);
    return out;
}

}  // namespace orderlab
