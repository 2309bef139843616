#include "orderlab/lattice.hpp"

#include <sstream>

namespace orderlab {

namespace {

/* Common denominator of a set of field elements, and their integer
 * coordinate rows scaled by it. */
std::pair<ZMatrix, Int> clear_denominators(std::vector<FieldElement> const& gens) {
    Int den = 1;
    for (auto const& g : gens)
        for (auto const& q : g.coords) den = lcm(den, q.get_den());
    ZMatrix rows;
    rows.reserve(gens.size());
    for (auto const& g : gens) {
        ZRow r;
        r.reserve(g.coords.size());
        for (auto const& q : g.coords) r.push_back(Int(q.get_num() * divexact(den, q.get_den())));
        rows.push_back(std::move(r));
    }
    return {std::move(rows), std::move(den)};
}

}  // namespace

ZLattice ZLattice::from_rows(ZMatrix rows, Int den) {
    if (rows.empty()) throw internal_error("ZLattice: empty generator set");
    std::size_t n = rows[0].size();
    if (den <= 0) throw internal_error("ZLattice: nonpositive denominator");
    ZLattice l;
    l.hnf_ = hnf_lower(std::move(rows), n);
    l.den_ = std::move(den);
    Int g = l.den_;
    for (auto const& row : l.hnf_)
        for (auto const& x : row) g = gcd(g, x);
    if (g > 1) {
        l.den_ = divexact(l.den_, g);
        for (auto& row : l.hnf_)
            for (auto& x : row) x = divexact(x, g);
    }
    return l;
}

ZLattice ZLattice::from_generators(std::vector<FieldElement> const& gens) {
    auto [rows, den] = clear_denominators(gens);
    return from_rows(std::move(rows), std::move(den));
}

FieldElement ZLattice::basis_element(std::size_t i) const {
    std::vector<Rat> c;
    c.reserve(hnf_.size());
    for (auto const& x : hnf_[i]) c.emplace_back(Rat(x) / Rat(den_));
    return FieldElement(std::move(c));
}

std::vector<FieldElement> ZLattice::basis() const {
    std::vector<FieldElement> b;
    for (std::size_t i = 0; i < hnf_.size(); ++i) b.push_back(basis_element(i));
    return b;
}

bool ZLattice::operator<(ZLattice const& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return hnf_ < o.hnf_;
}

std::string ZLattice::dump() const {
    std::ostringstream os;
    os << "den=" << den_.get_str() << "\n";
    for (auto const& row : hnf_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            os << row[j].get_str();
        }
        os << "\n";
    }
    return os.str();
}

ZLattice lat_sum(ZLattice const& a, ZLattice const& b) {
    Int den = lcm(a.den(), b.den());
    Int fa = divexact(den, a.den()), fb = divexact(den, b.den());
    ZMatrix rows;
    for (auto const& r : a.hnf()) {
        ZRow s;
        for (auto const& x : r) s.push_back(x * fa);
        rows.push_back(std::move(s));
    }
    for (auto const& r : b.hnf()) {
        ZRow s;
        for (auto const& x : r) s.push_back(x * fb);
        rows.push_back(std::move(s));
    }
    return ZLattice::from_rows(std::move(rows), std::move(den));
}

ZLattice lat_intersect(ZLattice const& a, ZLattice const& b) {
    /* Kernel of the stacked system: rows (u | v) with u*A = v*B give the
     * intersection elements u*A. */
    std::size_t n = a.rank();
    Int den = lcm(a.den(), b.den());
    Int fa = divexact(den, a.den()), fb = divexact(den, b.den());
    ZMatrix stacked;
    for (auto const& r : a.hnf()) {
        ZRow s;
        for (auto const& x : r) s.push_back(x * fa);
        stacked.push_back(std::move(s));
    }
    for (auto const& r : b.hnf()) {
        ZRow s;
        for (auto const& x : r) s.push_back(-x * fb);
        stacked.push_back(std::move(s));
    }
    auto t = hnf_lower_transform(stacked, n);
    if (t.kernel.size() != n) throw internal_error("lat_intersect: unexpected kernel rank");
    ZMatrix rows;
    for (auto const& k : t.kernel) {
        ZRow s(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) s[j] += k[i] * a.hnf()[i][j] * fa;
        }
        rows.push_back(std::move(s));
    }
    return ZLattice::from_rows(std::move(rows), std::move(den));
}

ZLattice lat_product(ZLattice const& a, ZLattice const& b, FieldSpec const& spec) {
    std::vector<FieldElement> gens;
    auto ba = a.basis(), bb = b.basis();
    for (auto const& x : ba)
        for (auto const& y : bb) gens.push_back(fe_mul(x, y, spec));
    return ZLattice::from_generators(gens);
}

ZLattice lat_scale(ZLattice const& a, FieldElement const& c, FieldSpec const& spec) {
    if (c.is_zero()) throw domain_error("lat_scale: zero scalar");
    std::vector<FieldElement> gens;
    for (auto const& x : a.basis()) gens.push_back(fe_mul(x, c, spec));
    return ZLattice::from_generators(gens);
}

ZLattice lat_scale(ZLattice const& a, Rat const& c) {
    if (c == 0) throw domain_error("lat_scale: zero scalar");
    std::vector<FieldElement> gens;
    for (auto const& x : a.basis()) gens.push_back(fe_scale(c, x));
    return ZLattice::from_generators(gens);
}

std::optional<ZRow> lat_coords(ZLattice const& a, FieldElement const& x) {
    std::size_t n = a.rank();
    if (x.coords.size() != n) throw input_error("lat_coords: dimension mismatch");
    std::vector<Rat> y;
    y.reserve(n);
    for (auto const& q : x.coords) y.push_back(q * Rat(a.den()));
    auto t = solve_left_lower_triangular(a.hnf(), y);
    ZRow out;
    out.reserve(n);
    for (auto const& q : t) {
        if (q.get_den() != 1) return std::nullopt;
        out.push_back(q.get_num());
    }
    return out;
}

bool lat_contains(ZLattice const& a, FieldElement const& x) {
    return lat_coords(a, x).has_value();
}

bool lat_subset(ZLattice const& a, ZLattice const& b) {
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!lat_contains(b, a.basis_element(i))) return false;
    return true;
}

Int lat_index(ZLattice const& a, ZLattice const& b) {
    if (!lat_subset(b, a)) throw precondition_error("lat_index: second lattice not inside first");
    std::size_t n = a.rank();
    Rat idx = Rat(det_lower_triangular(b.hnf())) * pow_ui(a.den(), n) /
              (Rat(det_lower_triangular(a.hnf())) * pow_ui(b.den(), n));
    idx.canonicalize();
    if (idx.get_den() != 1) throw internal_error("lat_index: non-integral index");
    return idx.get_num();
}

ZLattice lat_colon(ZLattice const& a, ZLattice const& b, FieldSpec const& spec) {
    /* (a : b) = intersection over the basis of b of b_j^{-1} * a. */
    std::optional<ZLattice> acc;
    for (std::size_t j = 0; j < b.rank(); ++j) {
        FieldElement inv = fe_inverse(b.basis_element(j), spec);
        ZLattice part = lat_scale(a, inv, spec);
        acc = acc ? lat_intersect(*acc, part) : part;
    }
    return *acc;
}

std::optional<std::pair<FieldElement, FieldElement>> lat_decompose_sum(
    ZLattice const& a, ZLattice const& b, FieldElement const& x) {
    std::size_t n = a.rank();
    Int den = lcm(a.den(), b.den());
    Int fa = divexact(den, a.den()), fb = divexact(den, b.den());
    ZMatrix stacked;
    for (auto const& r : a.hnf()) {
        ZRow s;
        for (auto const& v : r) s.push_back(v * fa);
        stacked.push_back(std::move(s));
    }
    for (auto const& r : b.hnf()) {
        ZRow s;
        for (auto const& v : r) s.push_back(v * fb);
        stacked.push_back(std::move(s));
    }
    auto t = hnf_lower_transform(stacked, n);
    std::vector<Rat> y;
    y.reserve(n);
    for (auto const& q : x.coords) y.push_back(q * Rat(den));
    auto sol = solve_left_lower_triangular(t.hnf, y);
    ZRow coef(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (sol[i].get_den() != 1) return std::nullopt;
        for (std::size_t j = 0; j < 2 * n; ++j) coef[j] += sol[i].get_num() * t.pivot_u[i][j];
    }
    std::vector<Rat> part_a(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coef[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) part_a[j] += Rat(coef[i] * a.hnf()[i][j]) / Rat(a.den());
    }
    FieldElement xa{std::vector<Rat>(part_a)};
    FieldElement xb = fe_sub(x, xa);
    return std::make_pair(std::move(xa), std::move(xb));
}

}  // namespace orderlab
