#ifndef ORDERLAB_QUOTIENT_HPP_
#define ORDERLAB_QUOTIENT_HPP_

#include <cstdint>
#include <vector>

#include "orderlab/orders.hpp"

namespace orderlab {

/* The finite abelian group ambient/modulus of two full-rank lattices,
 * in Smith coordinates: ambient has a basis b_1..b_n with modulus
 * spanned by d_1 b_1, ..., d_n b_n and d_1 | ... | d_n. Enumeration is
 * the lexicographic box over the diagonal, which fixes the canonical
 * order of residues everywhere (golden outputs depend on it). */
class LatticeQuotient {
  public:
    static LatticeQuotient make(ZLattice ambient, ZLattice modulus);

    Int const& size() const { return size_; }
    std::vector<Int> const& diagonal() const { return diag_; }
    ZLattice const& ambient() const { return ambient_; }
    ZLattice const& modulus() const { return modulus_; }
    std::vector<FieldElement> const& snf_basis() const { return snf_basis_; }

    /* coordinates over the Smith basis, reduced into [0, d_k); x must
     * lie in the ambient lattice. */
    std::vector<Int> residue_coords(FieldElement const& x) const;
    FieldElement element_of(std::vector<Int> const& coords) const;
    FieldElement reduce(FieldElement const& x) const;

    Int linear_index(std::vector<Int> const& coords) const;
    std::vector<Int> coords_of_index(Int idx) const;

  private:
    ZLattice ambient_, modulus_;
    std::vector<Int> diag_;
    std::vector<FieldElement> snf_basis_;
    ZMatrix v_;  // ambient coords -> Smith coords (right multiplication)
    Int size_;

    LatticeQuotient(ZLattice a, ZLattice m) : ambient_(std::move(a)), modulus_(std::move(m)) {}
};

/* The finite ring ambient/modulus. Ambient must be multiplicatively
 * closed and the modulus an ambient-ideal; both are validated. Residue
 * arithmetic runs on int64 Smith coordinates against a precomputed
 * basis multiplication table. */
class FiniteQuotient {
  public:
    static FiniteQuotient make(ZLattice ambient, ZLattice modulus, FieldSpec const& spec);

    LatticeQuotient const& group() const { return group_; }
    Int const& size() const { return group_.size(); }

    using Res = std::vector<std::int64_t>;
    Res one() const;
    Res zero() const;
    Res mul(Res const& x, Res const& y) const;
    Res add(Res const& x, Res const& y) const;
    bool is_one(Res const& x) const;
    Res residue_of(FieldElement const& x) const;
    FieldElement element_of(Res const& x) const;

    std::int64_t linear_index(Res const& x) const;
    Res residue_of_index(std::int64_t idx) const;

    /* Exact unit count by inverse search over the full enumeration.
     * Guarded by the enumeration cap (default 10^6, ORDERLAB_GUARD_SIZE). */
    Int count_units(Int const& guard) const;

    /* Indicator over linear indices of the image of a sublattice
     * (sub ⊆ ambient, sub ⊇ modulus not required). */
    std::vector<bool> sublattice_image(ZLattice const& sub) const;

  private:
    explicit FiniteQuotient(LatticeQuotient g) : group_(std::move(g)) {}
    LatticeQuotient group_;
    std::vector<std::int64_t> diag64_;
    std::vector<std::int64_t> stride_;
    std::vector<std::vector<std::vector<std::int64_t>>> mul_table_;  // [i][j] -> coords
    Res one_;
};

/* Enumeration guard: ORDERLAB_GUARD_SIZE env override or 10^6. */
Int enumeration_guard();

struct CrtSplit {
    bool surjective = false;
    std::vector<FieldElement> idempotents;  // alpha_i with alpha_i = 1 mod factor i, 0 mod others
    std::size_t failing_factor = 0;         // meaningful when !surjective
    std::vector<Int> component_sizes;
    Int ambient_size;
};

/* The projection R/I -> prod (R + J_i)/J_i for pairwise coprime factors
 * with product I. Surjectivity is decided constructively by solving for
 * the idempotent lifts; a "not surjective" outcome is a result, not a
 * failure. */
CrtSplit crt_split(OrderRing const& r, std::vector<OIdeal> const& factors);

}  // namespace orderlab

#endif
