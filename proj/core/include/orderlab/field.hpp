#ifndef ORDERLAB_FIELD_HPP_
#define ORDERLAB_FIELD_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "orderlab/numeric.hpp"

namespace orderlab {

/* An element of K = Q[theta]/(f), stored as canonical rational coordinates
 * over the power basis 1, theta, ..., theta^(n-1). Immutable value type. */
struct FieldElement {
    std::vector<Rat> coords;

    FieldElement() = default;
    explicit FieldElement(std::vector<Rat> c) : coords(std::move(c)) {
        for (auto& q : coords) q.canonicalize();
    }

    std::size_t degree() const { return coords.size(); }
    bool is_zero() const;
    bool operator==(FieldElement const& o) const { return coords == o.coords; }
};

class ZLattice;

/* A number field with its ingested arithmetic data: integral basis of the
 * maximal order, class group, fundamental units, torsion. The data is
 * trusted input (e.g. copied from LMFDB) and is validated for internal
 * consistency on construction, not derived from f. */
class FieldSpec {
  public:
    /* min_poly in ascending degree, monic, irreducible, 2 <= deg <= 4. */
    static FieldSpec make(std::vector<Int> min_poly,
                          std::vector<std::vector<Rat>> maximal_basis,
                          Int class_number,
                          std::vector<Int> class_group,
                          std::vector<std::vector<Rat>> fundamental_units,
                          Int torsion_order,
                          std::string label);

    std::size_t degree() const { return n_; }
    std::vector<Int> const& min_poly() const { return min_poly_; }
    std::vector<FieldElement> const& maximal_basis() const { return maximal_basis_; }
    Int const& class_number() const { return class_number_; }
    std::vector<Int> const& class_group() const { return class_group_; }
    std::vector<FieldElement> const& fundamental_units() const { return fundamental_units_; }
    Int const& torsion_order() const { return torsion_order_; }
    FieldElement const& torsion_generator() const { return torsion_generator_; }
    std::string const& label() const { return label_; }

    std::size_t unit_rank() const { return fundamental_units_.size(); }
    int real_embeddings() const { return r1_; }
    int complex_pairs() const { return r2_; }

    ZLattice const& maximal_lattice() const;
    ZLattice const& power_lattice() const;
    /* [O_K : Z[theta]]; Dedekind-Kummer splitting is refused at primes
     * dividing this. */
    Int const& power_index() const;
    /* disc(K) = det(trace form on the integral basis); sign included. */
    Int const& discriminant() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(Int const& v) const;
    FieldElement gen() const;  // theta

    ~FieldSpec();
    FieldSpec(FieldSpec&&) noexcept;
    FieldSpec& operator=(FieldSpec&&) noexcept;
    FieldSpec(FieldSpec const&) = delete;
    FieldSpec& operator=(FieldSpec const&) = delete;

    /* rows theta^n .. theta^(2n-2) over the power basis. */
    std::vector<std::vector<Int>> const& reduction_rows() const { return reduction_rows_; }

  private:
    FieldSpec() = default;

    std::size_t n_ = 0;
    std::vector<Int> min_poly_;
    std::vector<FieldElement> maximal_basis_;
    Int class_number_;
    std::vector<Int> class_group_;
    std::vector<FieldElement> fundamental_units_;
    Int torsion_order_;
    FieldElement torsion_generator_;
    std::string label_;
    int r1_ = 0, r2_ = 0;
    std::vector<std::vector<Int>> reduction_rows_;
    struct Caches;
    Caches* caches_ = nullptr;
};

FieldElement fe_add(FieldElement const& a, FieldElement const& b);
FieldElement fe_sub(FieldElement const& a, FieldElement const& b);
FieldElement fe_neg(FieldElement const& a);
FieldElement fe_scale(Rat const& c, FieldElement const& a);
FieldElement fe_mul(FieldElement const& a, FieldElement const& b, FieldSpec const& spec);
/* a^k for k in Z (k < 0 requires a != 0). */
FieldElement fe_pow(FieldElement const& a, long k, FieldSpec const& spec);
Rat fe_norm(FieldElement const& a, FieldSpec const& spec);
Rat fe_trace(FieldElement const& a, FieldSpec const& spec);
FieldElement fe_inverse(FieldElement const& a, FieldSpec const& spec);
FieldElement fe_div(FieldElement const& a, FieldElement const& b, FieldSpec const& spec);

/* Columns j = coordinates of a * theta^j; multiplication by a is
 * M(a) applied to coordinate columns. */
std::vector<std::vector<Rat>> multiplication_matrix(FieldElement const& a, FieldSpec const& spec);

/* "3", "-1/2", "a^2-4a+2", "2+2a+a^2": integer or rational polynomial in
 * the generator symbol (default 'a'). */
FieldElement parse_element(std::string const& text, FieldSpec const& spec, char var = 'a');
std::string element_str(FieldElement const& a, char var = 'a');

/* Exact real-root count of the minimal polynomial (Sturm chain). */
int count_real_roots(std::vector<Int> const& poly);

/* Deterministically finds a generator of the torsion unit group of the
 * maximal order by bounded search (order must equal torsion_order). */
FieldElement find_torsion_generator(FieldSpec const& spec);

}  // namespace orderlab

#endif
