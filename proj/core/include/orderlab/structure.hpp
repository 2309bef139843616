#ifndef ORDERLAB_STRUCTURE_HPP_
#define ORDERLAB_STRUCTURE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "orderlab/quotient.hpp"
#include "orderlab/units.hpp"

namespace orderlab {

/* Verdicts carry certificates, never bare booleans: the witnesses are
 * what the golden outputs and the worked examples hinge on. */

struct AssociatedResult {
    bool verdict = false;
    Int residues;   // |O/I|
    Int rep_count;  // [U(O):U(R)]
    /* witness[t] = smallest rep exponent conducting residue #t into R
     * (canonical residue enumeration); filled when verdict holds. */
    std::vector<long> witness;
    std::optional<FieldElement> counterexample;  // first residue no rep conducts
};

struct IdealPreservingResult {
    bool verdict = false;
    std::vector<std::pair<PrimeIdeal, int>> conductor_factors;
    /* violated pair: R ∩ P_i ⊆ P_j, or R ∩ P_i ⊆ P_i^2 when i == j. */
    std::optional<std::pair<std::size_t, std::size_t>> violation;
};

struct LocallyAssociatedResult {
    bool verdict = false;
    Int unit_index;          // [U(O):U(R)]
    Int units_maximal_mod;   // |U(O/I)|
    Int units_order_mod;     // |U(R/I)|
    Int class_number_order;  // |Cl(R)|
};

struct PropertyReport {
    AssociatedResult associated;
    IdealPreservingResult ideal_preserving;
    LocallyAssociatedResult locally_associated;
    bool conductor_radical = false;
};

AssociatedResult is_associated(OrderRing const& r);
IdealPreservingResult is_ideal_preserving(OrderRing const& r);
LocallyAssociatedResult is_locally_associated(OrderRing const& r);

/* |Cl(R)| = |Cl(O)| * |U(O/I)| / (|U(R/I)| * [U(O):U(R)]); the division
 * must be exact or the ingested data is inconsistent. */
Int class_number_of_order(OrderRing const& r);

PropertyReport property_report(OrderRing const& r);

struct InheritanceReport {
    PropertyReport base;
    PropertyReport extended;
    bool implications_hold = false;
};

/* Computes the three predicates for R and T = R + J and checks that each
 * property of R carries to T. */
InheritanceReport check_inheritance(OrderRing const& r, OIdeal const& j);

}  // namespace orderlab

#endif
