#ifndef ORDERLAB_PSERIES_HPP_
#define ORDERLAB_PSERIES_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "orderlab/factorization.hpp"

namespace orderlab {

/* A power series truncated at a fixed degree; every claim made through
 * this layer is a certificate at finite truncation, except where a
 * polynomial identity makes it exact. */
struct TruncSeries {
    std::vector<FieldElement> coeffs;  // index 0..trunc_degree

    std::size_t trunc_degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    FieldElement const& at(std::size_t i) const { return coeffs[i]; }
    bool operator==(TruncSeries const& o) const { return coeffs == o.coeffs; }
};

TruncSeries ts_make(std::vector<FieldElement> coeffs);
TruncSeries ts_constant(FieldElement c, std::size_t degree, FieldSpec const& spec);
TruncSeries ts_add(TruncSeries const& a, TruncSeries const& b);
TruncSeries ts_mul(TruncSeries const& a, TruncSeries const& b, FieldSpec const& spec);
/* inverse of a modulo x^(d+1); a0 must be a unit of the ambient order. */
TruncSeries ts_unit_inverse(TruncSeries const& a, OrderRing const& ambient);

bool ts_coeffs_in(TruncSeries const& a, ZLattice const& lat);

/* u = v1 * v2 mod x^(d+1) with v1 in (R+J1)[[x]], v2 in (R+J2)[[x]],
 * both with unit constant terms. Needs J1, J2 coprime with product the
 * conductor of R and R associated; the construction is self-verifying
 * (the product identity is re-checked before returning). */
std::pair<TruncSeries, TruncSeries> unit_split_trunc(TruncSeries const& u, OIdeal const& j1,
                                                     OIdeal const& j2, OrderRing const& r);

/* ---- association obstruction: is g = r * u with r in R[[x]] and u a
 * unit of O[[x]], up to the truncation? ---- */

struct AssociationWitness {
    TruncSeries r;
    TruncSeries u;  // g = r * u mod x^(d+1), u0 a unit of O
};

struct ObstructionBranch {
    long rep_exponent;                   // constant-term coset branch
    std::vector<long> translate_path;    // chosen solution-translate at each level
    long failing_level = -1;             // level where the branch died, -1 if alive
    std::optional<FieldElement> accumulated;  // the unsatisfiable residue
};

struct ObstructionCertificate {
    std::size_t level;  // every branch fails at some level <= this
    std::vector<ObstructionBranch> branches;
};

using ObstructionResult = std::variant<AssociationWitness, ObstructionCertificate>;

/* Branches over constant-term unit cosets and, per level, over the
 * finite set of solution translates modulo the all-coefficient
 * conductor {b : g_i b in R for all i}. Deterministic branch order:
 * coset rep index, then translate index. */
ObstructionResult association_obstruction(TruncSeries const& g, OrderRing const& r,
                                          long node_guard = 10000);

/* ---- degree-1 irreducibility certificate ---- */

struct Deg1Branch {
    FieldElement g0, h0;   // constant-term split into nonunits, up to associates
    ZLattice module;       // g0*R + h0*R
    bool admits_linear;    // whether f1 lies in the module
};

enum class Deg1Verdict {
    irreducible,   // every branch fails: certificate at degree 1
    inconclusive,  // some branch survives; not a disproof
};

struct Deg1Certificate {
    Deg1Verdict verdict;
    std::vector<Deg1Branch> branches;
    std::optional<std::size_t> surviving;
};

Deg1Certificate irreducibility_cert_deg1(TruncSeries const& f, OrderRing const& r,
                                         ClassEngine& eng);

/* ---- half-factoriality violation witness ----
 * Given f = g * (a + b x) with a in J and J^2 inside the conductor,
 * finds minimal m with m*a in I and minimal k with b^k in R, expands
 * (a + b x)^(mk) as an exact polynomial, and verifies every coefficient
 * lies in R; the length bookkeeping (mk versus at least mk+1) is
 * returned with the witness. */
struct HfdViolationWitness {
    long m = 0;
    long k = 0;
    long power = 0;  // m*k
    std::vector<FieldElement> coefficients;
    bool all_coefficients_in_order = false;
    long left_irreducibles = 0;       // f^(mk)
    long right_min_irreducibles = 0;  // >= mk + 1
};

HfdViolationWitness hfd_violation_witness(TruncSeries const& f, TruncSeries const& g,
                                          FieldElement const& a, FieldElement const& b,
                                          OIdeal const& j, OrderRing const& r);

}  // namespace orderlab

#endif
