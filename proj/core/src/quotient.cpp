#include "orderlab/quotient.hpp"

#include <cstdlib>

namespace orderlab {

Int enumeration_guard() {
    if (char const* env = std::getenv("ORDERLAB_GUARD_SIZE")) {
        try {
            Int g(env);
            if (g > 0) return g;
        } catch (std::invalid_argument const&) {
        }
        throw input_error("ORDERLAB_GUARD_SIZE: not a positive integer");
    }
    return Int(1000000);
}

LatticeQuotient LatticeQuotient::make(ZLattice ambient, ZLattice modulus) {
    if (!lat_subset(modulus, ambient))
        throw precondition_error("quotient: modulus not inside ambient");
    LatticeQuotient q(std::move(ambient), std::move(modulus));
    std::size_t n = q.ambient_.rank();
    ZMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = lat_coords(q.ambient_, q.modulus_.basis_element(i));
        if (!row) throw internal_error("quotient: modulus row escaped ambient");
        c[i] = std::move(*row);
    }
    auto smith = smith_normal_form(std::move(c));
    q.diag_ = std::move(smith.diag);
    q.v_ = std::move(smith.v);
    q.size_ = 1;
    for (auto const& d : q.diag_) q.size_ *= d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> acc(q.ambient_.rank(), Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            if (smith.v_inv[i][j] == 0) continue;
            auto bj = q.ambient_.basis_element(j);
            for (std::size_t k = 0; k < acc.size(); ++k)
                acc[k] += Rat(smith.v_inv[i][j]) * bj.coords[k];
        }
        q.snf_basis_.push_back(FieldElement(std::move(acc)));
    }
    return q;
}

std::vector<Int> LatticeQuotient::residue_coords(FieldElement const& x) const {
    auto t = lat_coords(ambient_, x);
    if (!t) throw precondition_error("quotient: element outside the ambient lattice");
    std::size_t n = t->size();
    std::vector<Int> s(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) s[j] += (*t)[i] * v_[i][j];
        mpz_fdiv_r(s[j].get_mpz_t(), s[j].get_mpz_t(), diag_[j].get_mpz_t());
    }
    return s;
}

FieldElement LatticeQuotient::element_of(std::vector<Int> const& coords) const {
    std::vector<Rat> acc(ambient_.rank(), Rat(0));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] += Rat(coords[i]) * snf_basis_[i].coords[k];
    }
    return FieldElement(std::move(acc));
}

FieldElement LatticeQuotient::reduce(FieldElement const& x) const {
    return element_of(residue_coords(x));
}

Int LatticeQuotient::linear_index(std::vector<Int> const& coords) const {
    Int idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) idx = idx * diag_[i] + coords[i];
    return idx;
}

std::vector<Int> LatticeQuotient::coords_of_index(Int idx) const {
    std::size_t n = diag_.size();
    std::vector<Int> c(n);
    for (std::size_t i = n; i-- > 0;) {
        Int r;
        mpz_fdiv_qr(idx.get_mpz_t(), r.get_mpz_t(), idx.get_mpz_t(), diag_[i].get_mpz_t());
        c[i] = r;
    }
    return c;
}

namespace {

std::int64_t to_i64(Int const& v, char const* what) {
    if (!v.fits_slong_p()) throw guard_error(std::string(what) + ": value exceeds the int64 fast path");
    return v.get_si();
}

}  // namespace

FiniteQuotient FiniteQuotient::make(ZLattice ambient, ZLattice modulus, FieldSpec const& spec) {
    {
        auto b = ambient.basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i; j < b.size(); ++j)
                if (!lat_contains(ambient, fe_mul(b[i], b[j], spec)))
                    throw precondition_error("quotient: ambient not multiplicatively closed");
        for (auto const& x : b)
            for (std::size_t i = 0; i < modulus.rank(); ++i)
                if (!lat_contains(modulus, fe_mul(x, modulus.basis_element(i), spec)))
                    throw precondition_error("modulus not an ideal of ambient");
    }
    FiniteQuotient q(LatticeQuotient::make(std::move(ambient), std::move(modulus)));
    std::size_t n = q.group_.diagonal().size();
    q.diag64_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.diag64_[i] = to_i64(q.group_.diagonal()[i], "quotient diagonal");
        if (q.diag64_[i] > (1LL << 30)) throw guard_error("quotient diagonal exceeds 2^30");
    }
    q.stride_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) q.stride_[i - 1] = q.stride_[i] * q.diag64_[i];
    q.mul_table_.assign(n, std::vector<std::vector<std::int64_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto prod = fe_mul(q.group_.snf_basis()[i], q.group_.snf_basis()[j], spec);
            auto coords = q.group_.residue_coords(prod);
            std::vector<std::int64_t> row(n);
            for (std::size_t k = 0; k < n; ++k) row[k] = to_i64(coords[k], "mul table");
            q.mul_table_[i][j] = std::move(row);
        }
    {
        auto c = q.group_.residue_coords(FieldElement(
            [&] {
                std::vector<Rat> one(q.group_.ambient().rank(), Rat(0));
                one[0] = 1;
                return one;
            }()));
        q.one_.resize(n);
        for (std::size_t k = 0; k < n; ++k) q.one_[k] = to_i64(c[k], "one");
    }
    return q;
}

FiniteQuotient::Res FiniteQuotient::one() const { return one_; }

FiniteQuotient::Res FiniteQuotient::zero() const { return Res(diag64_.size(), 0); }

FiniteQuotient::Res FiniteQuotient::mul(Res const& x, Res const& y) const {
    std::size_t n = diag64_.size();
    Res out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            auto const& t = mul_table_[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                if (t[k] == 0) continue;
                out[k] += ((x[i] * y[j]) % diag64_[k]) * t[k] % diag64_[k];
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] %= diag64_[k];
    return out;
}

FiniteQuotient::Res FiniteQuotient::add(Res const& x, Res const& y) const {
    Res out(x);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (out[k] + y[k]) % diag64_[k];
    return out;
}

bool FiniteQuotient::is_one(Res const& x) const { return x == one_; }

FiniteQuotient::Res FiniteQuotient::residue_of(FieldElement const& x) const {
    auto c = group_.residue_coords(x);
    Res out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = to_i64(c[k], "residue");
    return out;
}

FieldElement FiniteQuotient::element_of(Res const& x) const {
    std::vector<Int> c(x.begin(), x.end());
    return group_.element_of(c);
}

std::int64_t FiniteQuotient::linear_index(Res const& x) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) idx = idx * diag64_[i] + x[i];
    return idx;
}

FiniteQuotient::Res FiniteQuotient::residue_of_index(std::int64_t idx) const {
    std::size_t n = diag64_.size();
    Res c(n);
    for (std::size_t i = n; i-- > 0;) {
        c[i] = idx % diag64_[i];
        idx /= diag64_[i];
    }
    return c;
}

Int FiniteQuotient::count_units(Int const& guard) const {
    if (size() > guard)
        throw guard_error("count_units: quotient size " + size().get_str() +
                          " exceeds the enumeration guard " + guard.get_str());
    std::int64_t s = to_i64(size(), "count_units size");
    std::int64_t count = 0;
    for (std::int64_t xi = 0; xi < s; ++xi) {
        Res x = residue_of_index(xi);
        for (std::int64_t yi = 0; yi < s; ++yi) {
            if (is_one(mul(x, residue_of_index(yi)))) {
                ++count;
                break;
            }
        }
    }
    return Int(static_cast<long>(count));
}

std::vector<bool> FiniteQuotient::sublattice_image(ZLattice const& sub) const {
    if (!lat_subset(sub, group_.ambient()))
        throw precondition_error("sublattice_image: not a sublattice of ambient");
    ZLattice inner = lat_intersect(sub, group_.modulus());
    LatticeQuotient lq = LatticeQuotient::make(sub, inner);
    if (lq.size() > enumeration_guard())
        throw guard_error("sublattice_image: subquotient exceeds the enumeration guard");
    std::int64_t m = to_i64(lq.size(), "sublattice image size");
    std::vector<bool> image(static_cast<std::size_t>(to_i64(size(), "size")), false);
    for (std::int64_t i = 0; i < m; ++i) {
        FieldElement rep = lq.element_of(lq.coords_of_index(Int(static_cast<long>(i))));
        image[static_cast<std::size_t>(linear_index(residue_of(rep)))] = true;
    }
    return image;
}

CrtSplit crt_split(OrderRing const& r, std::vector<OIdeal> const& factors) {
    FieldSpec const& spec = r.spec();
    if (factors.empty()) throw precondition_error("crt_split: no factors");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!is_coprime(factors[i], factors[j], spec))
                throw precondition_error("crt_split: factors not pairwise coprime");
    {
        OIdeal prod = OIdeal::unit_ideal(spec);
        for (auto const& f : factors) prod = ideal_mul(prod, f, spec);
        if (!(prod == r.conductor()))
            throw precondition_error("crt_split: factors do not multiply to the conductor");
    }

    CrtSplit out;
    out.ambient_size = lat_index(r.lattice(), r.conductor().lattice());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        ZLattice comp = lat_sum(r.lattice(), factors[i].lattice());
        out.component_sizes.push_back(lat_index(comp, factors[i].lattice()));
    }

    for (std::size_t i = 0; i < factors.size(); ++i) {
        ZLattice others = spec.maximal_lattice();
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i) others = lat_product(others, factors[j].lattice(), spec);
        ZLattice li = lat_intersect(r.lattice(), others);
        auto dec = lat_decompose_sum(li, factors[i].lattice(), spec.one());
        if (!dec) {
            out.surjective = false;
            out.failing_factor = i;
            out.idempotents.clear();
            return out;
        }
        out.idempotents.push_back(dec->first);
    }
    out.surjective = true;

    Int prod_sizes = 1;
    for (auto const& s : out.component_sizes) prod_sizes *= s;
    if (prod_sizes != out.ambient_size)
        throw internal_error("crt_split: idempotents found but cardinalities disagree");
    return out;
}

}  // namespace orderlab
