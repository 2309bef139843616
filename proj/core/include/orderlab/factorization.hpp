#ifndef ORDERLAB_FACTORIZATION_HPP_
#define ORDERLAB_FACTORIZATION_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orderlab/ideal_classes.hpp"
#include "orderlab/units.hpp"

namespace orderlab {

struct AbelianGroup {
    std::vector<Int> cyclic_orders;  // invariant factors, each dividing the next

    Int order() const {
        Int n = 1;
        for (auto const& d : cyclic_orders) n *= d;
        return n;
    }
};

/* Exact Davenport constant by exhaustive search over zero-sum-free
 * multisets, with capped subset-sum counters so minimality is decided
 * incrementally. Guards: |G| <= 64 and a search node budget. */
Int davenport(AbelianGroup const& g, long node_guard = 20000000);

/* rho of the maximal order from its ingested class group: 1 when |Cl|
 * is trivial, otherwise D(Cl)/2. */
Rat elasticity_maximal(FieldSpec const& spec, long node_guard = 20000000);

struct DivisorPair {
    FieldElement divisor;
    FieldElement cofactor;
    long rep_exponent = 0;  // coset rep u = base^rep_exponent used for divisor
};

struct IrreducibilityVerdict {
    bool irreducible = false;
    std::optional<DivisorPair> split;  // witness when reducible
};

struct LengthSet {
    FieldElement element;
    std::set<long> lengths;
    bool complete = true;  // false when the recursion guard bound
    std::map<long, std::vector<FieldElement>> witnesses;
};

/* Shared memoization across a sweep: divisor enumeration goes through
 * the ideal-divisor lattice of alpha*O, principality decisions through
 * the class engine, and length sets are keyed on associate classes
 * (the Hermite form of alpha*R). */
class FactorizationEngine {
  public:
    FactorizationEngine(OrderRing r, ClassEngine& classes)
        : r_(std::move(r)), classes_(classes), reps_(coset_reps(r_)) {}

    OrderRing const& order() const { return r_; }

    /* Complete list of R-divisors of alpha up to U(R)-associates, each
     * with its cofactor verified in R. Trivial splits included. */
    std::vector<DivisorPair> divisors(FieldElement const& alpha);

    IrreducibilityVerdict irreducible(FieldElement const& alpha);

    LengthSet lengths(FieldElement const& alpha, long max_len = 48);

    bool is_unit(FieldElement const& x) const;

  private:
    using LengthTable = std::map<long, std::vector<FieldElement>>;

    OrderRing r_;
    ClassEngine& classes_;
    CosetReps reps_;
    std::map<std::string, LengthTable> length_memo_;
    std::map<std::string, bool> irred_memo_;

    std::string associate_key(FieldElement const& alpha) const;
    LengthTable const& lengths_rec(FieldElement const& alpha, long depth, long max_len,
                                   bool& truncated);
};

std::vector<DivisorPair> divisors_in_order(FieldElement const& alpha, OrderRing const& r,
                                           ClassEngine& eng);
IrreducibilityVerdict is_irreducible_in(FieldElement const& alpha, OrderRing const& r,
                                        ClassEngine& eng);
LengthSet length_set(FieldElement const& alpha, OrderRing const& r, ClassEngine& eng,
                     long max_len = 48);

Rat elasticity_of(LengthSet const& ls);

/* Deterministic sample: elements sum(c_i b_i) over the order basis with
 * |c_i| <= height and 1 < |N| <= norm_bound, one representative per
 * associate class, lexicographic order. */
std::vector<FieldElement> sample_box(OrderRing const& r, long height, Int const& norm_bound);

struct HfdEvidence {
    bool consistent = false;
    std::string reason;  // which precondition failed, when inconsistent
    std::optional<FieldElement> violating_irreducible;
    long elements_checked = 0;
    Int norm_bound;
};

/* Checks the finite slice of the half-factoriality criterion: the
 * maximal order is an HFD (|Cl| <= 2), R is associated, and every
 * R-irreducible in the sample stays irreducible in the maximal order.
 * Never claims a proof; the verdict is "consistent up to the bound". */
HfdEvidence hfd_evidence(OrderRing const& r, Int const& norm_bound, ClassEngine& eng,
                         long box_height = 2);

}  // namespace orderlab

#endif
