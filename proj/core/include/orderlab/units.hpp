#ifndef ORDERLAB_UNITS_HPP_
#define ORDERLAB_UNITS_HPP_

#include <optional>
#include <vector>

#include "orderlab/orders.hpp"

namespace orderlab {

/* Fundamental unit of Z[sqrt(d)] by the continued-fraction expansion of
 * sqrt(d): the smallest unit > 1 of the power-basis order. Coordinates
 * over the power basis of x^2 - d. */
FieldElement pell_fundamental(Int const& d);

struct UnitGroupDesc {
    Int torsion_order;
    std::vector<FieldElement> fundamentals;
    ZLattice owner;
};

struct CosetReps {
    std::vector<FieldElement> reps;  // one per coset of U(O)/U(R), rep 0 = 1
    Int index;
};

/* [U(O) : U(R)]. v1 supports unit rank <= 1; the power search is
 * ceilinged by |O/I|, which bounds the order of the fundamental unit in
 * U(O/I) and hence the index. */
Int unit_index(OrderRing const& r);

CosetReps coset_reps(OrderRing const& r);

UnitGroupDesc unit_group_of_maximal(FieldSpec const& spec);
UnitGroupDesc unit_group_of_order(OrderRing const& r);

/* u = torsion_generator^a * epsilon^k exactly; the bounded search gives
 * up (nullopt) past the ceiling. */
struct UnitDecomposition {
    long torsion_exp = 0;
    long fund_exp = 0;
};
std::optional<UnitDecomposition> recognize_unit(FieldElement const& u, FieldSpec const& spec,
                                                long ceiling);

}  // namespace orderlab

#endif
