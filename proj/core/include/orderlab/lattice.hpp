#ifndef ORDERLAB_LATTICE_HPP_
#define ORDERLAB_LATTICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "orderlab/field.hpp"
#include "orderlab/intmat.hpp"

namespace orderlab {

/* A full-rank Z-lattice in K, the common substrate for orders, ideals,
 * conductors and two-generator modules. Canonical representation:
 *   lattice = (1/den) * rowspan(hnf)
 * with hnf the lower-triangular positive-pivot Hermite form (entries
 * below each pivot reduced into [0, pivot)), columns indexed by the
 * power basis, and gcd(den, content(hnf)) = 1. Equal lattices therefore
 * have identical representations. Immutable after construction. */
class ZLattice {
  public:
    /* Default-constructed lattices are empty placeholders; every
     * operation requires one built by a factory. */
    ZLattice() = default;

    static ZLattice from_rows(ZMatrix rows, Int den);
    static ZLattice from_generators(std::vector<FieldElement> const& gens);

    Int const& den() const { return den_; }
    ZMatrix const& hnf() const { return hnf_; }
    std::size_t rank() const { return hnf_.size(); }

    FieldElement basis_element(std::size_t i) const;
    std::vector<FieldElement> basis() const;

    bool operator==(ZLattice const& o) const { return den_ == o.den_ && hnf_ == o.hnf_; }
    bool operator!=(ZLattice const& o) const { return !(*this == o); }
    bool operator<(ZLattice const& o) const;  // arbitrary total order for map keys

    /* One line "den=<d>" then one line of exact integers per basis row. */
    std::string dump() const;

  private:
    Int den_;
    ZMatrix hnf_;
};

ZLattice lat_sum(ZLattice const& a, ZLattice const& b);
ZLattice lat_intersect(ZLattice const& a, ZLattice const& b);
ZLattice lat_product(ZLattice const& a, ZLattice const& b, FieldSpec const& spec);
/* (a : b) = { x in K : x*b ⊆ a }. */
ZLattice lat_colon(ZLattice const& a, ZLattice const& b, FieldSpec const& spec);
/* c * a, c a nonzero field element. */
ZLattice lat_scale(ZLattice const& a, FieldElement const& c, FieldSpec const& spec);
ZLattice lat_scale(ZLattice const& a, Rat const& c);

bool lat_contains(ZLattice const& a, FieldElement const& x);
/* Integer coordinates of x over the basis rows of a, if x lies in a. */
std::optional<ZRow> lat_coords(ZLattice const& a, FieldElement const& x);
bool lat_subset(ZLattice const& a, ZLattice const& b);  // a ⊆ b
/* [a : b] for b ⊆ a (precondition checked). */
Int lat_index(ZLattice const& a, ZLattice const& b);

/* x = x1 + x2 with x1 in a, x2 in b, if x lies in a + b. Used for CRT
 * idempotent lifts and the truncated unit-splitting solver. */
std::optional<std::pair<FieldElement, FieldElement>> lat_decompose_sum(
    ZLattice const& a, ZLattice const& b, FieldElement const& x);

}  // namespace orderlab

#endif
