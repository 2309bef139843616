#ifndef ORDERLAB_ORDERS_HPP_
#define ORDERLAB_ORDERS_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "orderlab/lattice.hpp"

namespace orderlab {

/* A prime ideal of the maximal order, produced by Dedekind-Kummer
 * splitting. two generators: (p, second_gen). */
struct PrimeIdeal {
    Int p;
    FieldElement second_gen;
    int residue_degree = 0;
    int ramification = 0;
    ZLattice lattice;

    Int norm() const { return pow_ui(p, static_cast<unsigned long>(residue_degree)); }
    bool operator==(PrimeIdeal const& o) const { return lattice == o.lattice; }
};

/* An ideal of the maximal order. The lattice is the source of truth;
 * the prime factorization is a lazily cached derived view, filled
 * idempotently under concurrent access. */
class OIdeal {
  public:
    static OIdeal from_lattice(ZLattice lat, FieldSpec const& spec);
    static OIdeal unit_ideal(FieldSpec const& spec);
    static OIdeal principal(FieldElement const& g, FieldSpec const& spec);
    /* p*O + g*O */
    static OIdeal from_two_gens(Int const& p, FieldElement const& g, FieldSpec const& spec);

    ZLattice const& lattice() const { return lattice_; }
    Int norm(FieldSpec const& spec) const;
    bool is_unit_ideal(FieldSpec const& spec) const;

    std::vector<std::pair<PrimeIdeal, int>> const& factorization(FieldSpec const& spec) const;

    bool operator==(OIdeal const& o) const { return lattice_ == o.lattice_; }

  private:
    OIdeal(ZLattice lat) : lattice_(std::move(lat)), cache_(std::make_shared<Cache>()) {}
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<std::pair<PrimeIdeal, int>>> factors;
    };
    ZLattice lattice_;
    std::shared_ptr<Cache> cache_;
};

/* An order R in K together with its conductor I = (R : O), computed and
 * validated at construction. */
class OrderRing {
  public:
    static OrderRing make(ZLattice lattice, FieldSpec const& spec);

    ZLattice const& lattice() const { return lattice_; }
    OIdeal const& conductor() const { return conductor_; }
    FieldSpec const& spec() const { return *spec_; }
    bool is_maximal() const;
    bool contains(FieldElement const& x) const { return lat_contains(lattice_, x); }

    bool operator==(OrderRing const& o) const { return lattice_ == o.lattice_; }

  private:
    OrderRing(ZLattice lat, OIdeal cond, FieldSpec const& spec)
        : lattice_(std::move(lat)), conductor_(std::move(cond)), spec_(&spec) {}
    ZLattice lattice_;
    OIdeal conductor_;
    FieldSpec const* spec_;
};

/* Dedekind-Kummer splitting of a rational prime by factoring the minimal
 * polynomial mod p. Refuses primes dividing [O : Z[theta]] explicitly. */
std::vector<PrimeIdeal> split_prime(Int const& p, FieldSpec const& spec);

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(OIdeal const& j, FieldSpec const& spec);

OIdeal ideal_mul(OIdeal const& a, OIdeal const& b, FieldSpec const& spec);
OIdeal ideal_sum(OIdeal const& a, OIdeal const& b, FieldSpec const& spec);
OIdeal ideal_intersect(OIdeal const& a, OIdeal const& b, FieldSpec const& spec);
OIdeal ideal_pow(OIdeal const& a, unsigned long e, FieldSpec const& spec);
/* I * J^{-1} for J | I (precondition checked; result verified). */
OIdeal ideal_inverse_within(OIdeal const& j, OIdeal const& i, FieldSpec const& spec);
bool is_radical(OIdeal const& j, FieldSpec const& spec);
bool is_coprime(OIdeal const& a, OIdeal const& b, FieldSpec const& spec);
/* Largest k with j ⊆ p^k. */
int valuation(OIdeal const& j, PrimeIdeal const& p, FieldSpec const& spec);

/* R + J, validated as an order. */
OrderRing intermediate_order(OrderRing const& r, OIdeal const& j);

OrderRing maximal_order(FieldSpec const& spec);
/* Z + J for an ideal J of the maximal order. */
OrderRing z_plus_ideal(OIdeal const& j, FieldSpec const& spec);
/* Z + m*O. */
OrderRing z_plus_m(Int const& m, FieldSpec const& spec);
/* Z[m*theta]. */
OrderRing z_adjoin_m_theta(Int const& m, FieldSpec const& spec);

}  // namespace orderlab

#endif
