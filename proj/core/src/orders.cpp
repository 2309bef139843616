#include "orderlab/orders.hpp"

#include <algorithm>

namespace orderlab {

namespace {

/* Checks O * lat ⊆ lat, i.e. the lattice is an O-module. */
bool stable_under_maximal(ZLattice const& lat, FieldSpec const& spec) {
    for (auto const& b : spec.maximal_lattice().basis())
        for (std::size_t i = 0; i < lat.rank(); ++i)
            if (!lat_contains(lat, fe_mul(b, lat.basis_element(i), spec))) return false;
    return true;
}

/* ---- arithmetic in F_p[x] on dense ascending coefficient vectors ---- */

using PolyP = std::vector<Int>;

Int mod_p(Int const& a, Int const& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

void trim_p(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int inv_mod(Int const& a, Int const& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw internal_error("inv_mod: not invertible");
    return r;
}

/* (quotient, remainder) of f by monic g over F_p. */
std::pair<PolyP, PolyP> divmod_p(PolyP f, PolyP const& g, Int const& p) {
    PolyP q(f.size() > g.size() - 1 ? f.size() - g.size() + 1 : 0, Int(0));
    while (f.size() >= g.size() && !f.empty()) {
        Int c = f.back();
        std::size_t off = f.size() - g.size();
        q[off] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[off + i] = mod_p(f[off + i] - c * g[i], p);
        trim_p(f);
    }
    return {std::move(q), std::move(f)};
}

Int eval_p(PolyP const& f, Int const& x, Int const& p) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = mod_p(acc * x + f[i], p);
    return acc;
}

/* Monic irreducible factors with multiplicity, for deg f <= 4.
 * Roots by exhaustion over F_p, then the finitely many quadratic
 * splits of the rootless quartic case. */
std::vector<std::pair<PolyP, int>> factor_mod_p(PolyP f, Int const& p) {
    for (auto& c : f) c = mod_p(c, p);
    trim_p(f);
    if (f.size() < 2) throw internal_error("factor_mod_p: constant polynomial");
    std::vector<std::pair<PolyP, int>> out;
    // linear factors
    for (Int r = 0; r < p; ++r) {
        int mult = 0;
        while (f.size() >= 2 && eval_p(f, r, p) == 0) {
            PolyP lin{mod_p(-r, p), Int(1)};
            f = divmod_p(f, lin, p).first;
            ++mult;
        }
        if (mult) out.push_back({{mod_p(-r, p), Int(1)}, mult});
        if (f.size() < 3) break;
    }
    std::size_t deg = f.empty() ? 0 : f.size() - 1;
    if (deg == 1) {
        Int r = mod_p(-f[0] * inv_mod(f[1], p), p);
        out.push_back({{mod_p(-r, p), Int(1)}, 1});
        deg = 0;
    }
    if (deg == 2 || deg == 3) {
        out.push_back({f, 1});  // rootless quadratic/cubic over F_p is irreducible
    } else if (deg == 4) {
        Int h3 = f[3], h2 = f[2], h1 = f[1], h0 = f[0];
        std::optional<PolyP> found;
        for (Int a = 0; a < p && !found; ++a) {
            Int c = mod_p(h3 - a, p);
            Int s = mod_p(h2 - a * c, p);
            if (a != c) {
                Int d = mod_p((h1 - s * c) * inv_mod(mod_p(a - c + p, p), p), p);
                Int b = mod_p(s - d, p);
                if (mod_p(b * d - h0, p) == 0) found = PolyP{b, a, Int(1)};
            } else {
                if (mod_p(a * s - h1, p) != 0) continue;
                for (Int d = 0; d < p && !found; ++d) {
                    Int b = mod_p(s - d, p);
                    if (mod_p(b * d - h0, p) == 0) found = PolyP{b, a, Int(1)};
                }
            }
        }
        if (found) {
            auto [q, rem] = divmod_p(f, *found, p);
            trim_p(rem);
            if (!rem.empty()) throw internal_error("factor_mod_p: bad quartic split");
            if (q == *found) {
                out.push_back({*found, 2});
            } else {
                out.push_back({*found, 1});
                out.push_back({q, 1});
            }
        } else {
            out.push_back({f, 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FieldElement poly_at_theta(PolyP g, FieldSpec const& spec) {
    std::size_t n = spec.degree();
    if (g.size() == n + 1) {
        // inert case: the factor is f itself mod p; evaluate g - f instead,
        // which represents the same class since f(theta) = 0
        for (std::size_t i = 0; i <= n; ++i) g[i] -= spec.min_poly()[i];
        trim_p(g);
    }
    if (g.size() > n) throw internal_error("poly_at_theta: degree overflow");
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = Rat(g[i]);
    return FieldElement(std::move(c));
}

}  // namespace

OIdeal OIdeal::from_lattice(ZLattice lat, FieldSpec const& spec) {
    if (!lat_subset(lat, spec.maximal_lattice()))
        throw input_error("ideal lattice not inside the maximal order");
    if (!stable_under_maximal(lat, spec))
        throw input_error("lattice is not an ideal of the maximal order");
    return OIdeal(std::move(lat));
}

OIdeal OIdeal::unit_ideal(FieldSpec const& spec) { return OIdeal(spec.maximal_lattice()); }

OIdeal OIdeal::principal(FieldElement const& g, FieldSpec const& spec) {
    if (g.is_zero()) throw domain_error("principal ideal of zero");
    return OIdeal(lat_scale(spec.maximal_lattice(), g, spec));
}

OIdeal OIdeal::from_two_gens(Int const& p, FieldElement const& g, FieldSpec const& spec) {
    ZLattice a = lat_scale(spec.maximal_lattice(), Rat(p));
    ZLattice b = lat_scale(spec.maximal_lattice(), g, spec);
    return from_lattice(lat_sum(a, b), spec);
}

Int OIdeal::norm(FieldSpec const& spec) const {
    return lat_index(spec.maximal_lattice(), lattice_);
}

bool OIdeal::is_unit_ideal(FieldSpec const& spec) const {
    return lattice_ == spec.maximal_lattice();
}

std::vector<std::pair<PrimeIdeal, int>> const& OIdeal::factorization(FieldSpec const& spec) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->factors) cache_->factors = factor_ideal(*this, spec);
    return *cache_->factors;
}

std::vector<PrimeIdeal> split_prime(Int const& p, FieldSpec const& spec) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw input_error("split_prime: " + p.get_str() + " is not prime");
    if (spec.power_index() % p == 0)
        throw unsupported_error("unsupported: " + p.get_str() + " divides index [O:Z[theta]]");
    auto factors = factor_mod_p(spec.min_poly(), p);
    std::vector<PrimeIdeal> out;
    unsigned long efsum = 0;
    for (auto const& [g, e] : factors) {
        PrimeIdeal pi;
        pi.p = p;
        pi.second_gen = poly_at_theta(g, spec);
        pi.residue_degree = static_cast<int>(g.size() - 1);
        pi.ramification = e;
        ZLattice pl = lat_scale(spec.maximal_lattice(), Rat(p));
        // inert prime with f reduced mod p equal to f: the class of the
        // second generator is 0 and P = p*O
        pi.lattice = pi.second_gen.is_zero()
                         ? pl
                         : lat_sum(pl, lat_scale(spec.maximal_lattice(), pi.second_gen, spec));
        if (lat_index(spec.maximal_lattice(), pi.lattice) != pi.norm())
            throw internal_error("split_prime: norm mismatch for prime above " + p.get_str());
        if (!stable_under_maximal(pi.lattice, spec))
            throw internal_error("split_prime: prime not O-stable");
        efsum += static_cast<unsigned long>(pi.residue_degree * pi.ramification);
        out.push_back(std::move(pi));
    }
    if (efsum != spec.degree())
        throw internal_error("split_prime: sum e_i f_i != n at " + p.get_str());
    return out;
}

int valuation(OIdeal const& j, PrimeIdeal const& p, FieldSpec const& spec) {
    int k = 0;
    ZLattice pw = p.lattice;
    while (lat_subset(j.lattice(), pw)) {
        ++k;
        pw = lat_product(pw, p.lattice, spec);
    }
    return k;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(OIdeal const& j, FieldSpec const& spec) {
    Int n = j.norm(spec);
    std::vector<std::pair<PrimeIdeal, int>> out;
    if (n == 1) return out;
    auto rational = factor_integer(n);
    for (auto const& [p, e] : rational) {
        (void)e;
        for (auto const& pr : split_prime(p, spec)) {
            int v = valuation(j, pr, spec);
            if (v > 0) out.emplace_back(pr, v);
        }
    }
    // reconstruction check: the factorization must reproduce the lattice
    ZLattice prod = spec.maximal_lattice();
    Int norm_check = 1;
    for (auto const& [pr, e] : out) {
        for (int i = 0; i < e; ++i) prod = lat_product(prod, pr.lattice, spec);
        norm_check *= pow_ui(pr.norm(), static_cast<unsigned long>(e));
    }
    if (norm_check != n || !(prod == j.lattice()))
        throw internal_error("factor_ideal: reconstruction failed");
    return out;
}

OIdeal ideal_mul(OIdeal const& a, OIdeal const& b, FieldSpec const& spec) {
    return OIdeal::from_lattice(lat_product(a.lattice(), b.lattice(), spec), spec);
}

OIdeal ideal_sum(OIdeal const& a, OIdeal const& b, FieldSpec const& spec) {
    return OIdeal::from_lattice(lat_sum(a.lattice(), b.lattice()), spec);
}

OIdeal ideal_intersect(OIdeal const& a, OIdeal const& b, FieldSpec const& spec) {
    return OIdeal::from_lattice(lat_intersect(a.lattice(), b.lattice()), spec);
}

OIdeal ideal_pow(OIdeal const& a, unsigned long e, FieldSpec const& spec) {
    OIdeal acc = OIdeal::unit_ideal(spec);
    for (unsigned long i = 0; i < e; ++i) acc = ideal_mul(acc, a, spec);
    return acc;
}

OIdeal ideal_inverse_within(OIdeal const& j, OIdeal const& i, FieldSpec const& spec) {
    if (!lat_subset(i.lattice(), j.lattice()))
        throw precondition_error("ideal_inverse_within: divisor does not contain the ideal");
    OIdeal c = OIdeal::from_lattice(lat_colon(i.lattice(), j.lattice(), spec), spec);
    if (!(ideal_mul(j, c, spec) == i))
        throw internal_error("ideal_inverse_within: J * (I:J) != I");
    return c;
}

bool is_radical(OIdeal const& j, FieldSpec const& spec) {
    for (auto const& [p, e] : j.factorization(spec))
        if (e > 1) return false;
    return true;
}

bool is_coprime(OIdeal const& a, OIdeal const& b, FieldSpec const& spec) {
    return ideal_sum(a, b, spec).is_unit_ideal(spec);
}

OrderRing OrderRing::make(ZLattice lattice, FieldSpec const& spec) {
    if (!lat_contains(lattice, spec.one())) throw input_error("does not contain 1");
    auto b = lattice.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (!lat_contains(lattice, fe_mul(b[i], b[j], spec)))
                throw input_error("not a ring");
    if (!lat_subset(lattice, spec.maximal_lattice()))
        throw internal_error("ring lattice not inside the ingested maximal order");
    ZLattice cond = lat_colon(lattice, spec.maximal_lattice(), spec);
    OIdeal conductor = OIdeal::from_lattice(std::move(cond), spec);
    if (!lat_subset(conductor.lattice(), lattice))
        throw internal_error("conductor not inside the order");
    return OrderRing(std::move(lattice), std::move(conductor), spec);
}

bool OrderRing::is_maximal() const { return lattice_ == spec_->maximal_lattice(); }

OrderRing intermediate_order(OrderRing const& r, OIdeal const& j) {
    return OrderRing::make(lat_sum(r.lattice(), j.lattice()), r.spec());
}

OrderRing maximal_order(FieldSpec const& spec) {
    return OrderRing::make(spec.maximal_lattice(), spec);
}

OrderRing z_plus_ideal(OIdeal const& j, FieldSpec const& spec) {
    std::vector<FieldElement> gens = j.lattice().basis();
    gens.push_back(spec.one());
    return OrderRing::make(ZLattice::from_generators(gens), spec);
}

OrderRing z_plus_m(Int const& m, FieldSpec const& spec) {
    if (m < 1) throw input_error("Z_plus: multiplier must be positive");
    return z_plus_ideal(OIdeal::principal(spec.from_int(m), spec), spec);
}

OrderRing z_adjoin_m_theta(Int const& m, FieldSpec const& spec) {
    if (m < 1) throw input_error("Z_adjoin: multiplier must be positive");
    std::vector<FieldElement> gens{spec.one()};
    FieldElement mt = fe_scale(Rat(m), spec.gen());
    FieldElement cur = spec.one();
    for (std::size_t i = 1; i < spec.degree(); ++i) {
        cur = fe_mul(cur, mt, spec);
        gens.push_back(cur);
    }
    return OrderRing::make(ZLattice::from_generators(gens), spec);
}

}  // namespace orderlab
