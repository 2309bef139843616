#include "orderlab/field.hpp"

#include <algorithm>
#include <sstream>

#include "orderlab/lattice.hpp"

namespace orderlab {

bool FieldElement::is_zero() const {
    for (auto const& q : coords)
        if (q != 0) return false;
    return true;
}

struct FieldSpec::Caches {
    std::optional<ZLattice> maximal;
    std::optional<ZLattice> power;
    Int power_index;
    Int discriminant;
};

FieldSpec::~FieldSpec() { delete caches_; }
FieldSpec::FieldSpec(FieldSpec&& o) noexcept { *this = std::move(o); }
FieldSpec& FieldSpec::operator=(FieldSpec&& o) noexcept {
    if (this != &o) {
        delete caches_;
        n_ = o.n_;
        min_poly_ = std::move(o.min_poly_);
        maximal_basis_ = std::move(o.maximal_basis_);
        class_number_ = std::move(o.class_number_);
        class_group_ = std::move(o.class_group_);
        fundamental_units_ = std::move(o.fundamental_units_);
        torsion_order_ = std::move(o.torsion_order_);
        torsion_generator_ = std::move(o.torsion_generator_);
        label_ = std::move(o.label_);
        r1_ = o.r1_;
        r2_ = o.r2_;
        reduction_rows_ = std::move(o.reduction_rows_);
        caches_ = o.caches_;
        o.caches_ = nullptr;
    }
    return *this;
}

ZLattice const& FieldSpec::maximal_lattice() const { return *caches_->maximal; }
ZLattice const& FieldSpec::power_lattice() const { return *caches_->power; }
Int const& FieldSpec::power_index() const { return caches_->power_index; }
Int const& FieldSpec::discriminant() const { return caches_->discriminant; }

FieldElement FieldSpec::zero() const { return FieldElement(std::vector<Rat>(n_, Rat(0))); }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(Int const& v) const {
    std::vector<Rat> c(n_, Rat(0));
    c[0] = Rat(v);
    return FieldElement(std::move(c));
}

FieldElement FieldSpec::gen() const {
    std::vector<Rat> c(n_, Rat(0));
    c[1] = 1;
    return FieldElement(std::move(c));
}

namespace {

void check_dims(FieldElement const& a, FieldSpec const& spec) {
    if (a.coords.size() != spec.degree()) throw input_error("element dimension mismatch");
}

/* All divisors of |v|, both signs, ascending absolute value. */
std::vector<Int> signed_divisors(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        out.push_back(d);
        Int e = divexact(v, d);
        if (e != d) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    std::vector<Int> both;
    for (auto const& d : out) {
        both.push_back(d);
        both.push_back(-d);
    }
    return both;
}

Int eval_poly(std::vector<Int> const& f, Int const& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

bool has_integer_root(std::vector<Int> const& f) {
    if (f[0] == 0) return true;
    for (auto const& d : signed_divisors(f[0]))
        if (eval_poly(f, d) == 0) return true;
    return false;
}

/* Decides irreducibility over Q of a monic integer quartic with no
 * rational root: searches the finitely many splits into two monic
 * integer quadratics (x^2+ax+b)(x^2+cx+d) via b*d = f0. */
bool quartic_splits_into_quadratics(std::vector<Int> const& f) {
    Int const &f0 = f[0], &f1 = f[1], &f2 = f[2], &f3 = f[3];
    if (f0 == 0) return true;
    for (auto const& b : signed_divisors(f0)) {
        Int d = divexact(f0, b);
        if (d != b) {
            Int num = f1 - b * f3;
            Int dif = d - b;
            if (num % dif != 0) continue;
            Int a = divexact(num, dif);
            Int c = f3 - a;
            if (b + d + a * c == f2) return true;
        } else {
            // b == d: need b*(a+c) = f1, so b*f3 = f1, then a,c are the
            // roots of t^2 - f3 t + (f2 - 2b).
            if (b * f3 != f1) continue;
            Int disc = f3 * f3 - 4 * (f2 - 2 * b);
            if (disc < 0 || !is_square(disc)) continue;
            Int r = isqrt(disc);
            if ((f3 + r) % 2 == 0) return true;
        }
    }
    return false;
}

std::vector<Rat> poly_derivative(std::vector<Rat> const& f) {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rat(static_cast<long>(i)));
    return d;
}

void poly_trim(std::vector<Rat>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Rat> poly_neg_rem(std::vector<Rat> a, std::vector<Rat> const& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        poly_trim(a);
    }
    for (auto& c : a) c = -c;
    return a;
}

int sign_at_infinity(std::vector<Rat> const& f, int dir) {
    if (f.empty()) return 0;
    int s = sgn(f.back());
    if (dir < 0 && (f.size() - 1) % 2 == 1) s = -s;
    return s;
}

}  // namespace

int count_real_roots(std::vector<Int> const& poly) {
    std::vector<Rat> f;
    for (auto const& c : poly) f.emplace_back(c);
    poly_trim(f);
    std::vector<std::vector<Rat>> chain{f, poly_derivative(f)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        auto r = poly_neg_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](int dir) {
        int v = 0, prev = 0;
        for (auto const& g : chain) {
            int s = sign_at_infinity(g, dir);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(-1) - variations(+1);
}

FieldElement fe_add(FieldElement const& a, FieldElement const& b) {
    if (a.coords.size() != b.coords.size()) throw input_error("element dimension mismatch");
    std::vector<Rat> c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return FieldElement(std::move(c));
}

FieldElement fe_sub(FieldElement const& a, FieldElement const& b) {
    if (a.coords.size() != b.coords.size()) throw input_error("element dimension mismatch");
    std::vector<Rat> c(a.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
    return FieldElement(std::move(c));
}

FieldElement fe_neg(FieldElement const& a) {
    std::vector<Rat> c(a.coords);
    for (auto& q : c) q = -q;
    return FieldElement(std::move(c));
}

FieldElement fe_scale(Rat const& s, FieldElement const& a) {
    std::vector<Rat> c(a.coords);
    for (auto& q : c) q *= s;
    return FieldElement(std::move(c));
}

FieldElement fe_mul(FieldElement const& a, FieldElement const& b, FieldSpec const& spec) {
    check_dims(a, spec);
    check_dims(b, spec);
    std::size_t n = spec.degree();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords[j] == 0) continue;
            prod[i + j] += a.coords[i] * b.coords[j];
        }
    }
    std::vector<Rat> c(prod.begin(), prod.begin() + n);
    auto const& red = spec.reduction_rows();
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (prod[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c[j] += prod[k] * Rat(red[k - n][j]);
    }
    return FieldElement(std::move(c));
}

FieldElement fe_pow(FieldElement const& a, long k, FieldSpec const& spec) {
    if (k < 0) return fe_pow(fe_inverse(a, spec), -k, spec);
    FieldElement acc = spec.one();
    FieldElement base = a;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1) acc = fe_mul(acc, base, spec);
        e >>= 1;
        if (e) base = fe_mul(base, base, spec);
    }
    return acc;
}

std::vector<std::vector<Rat>> multiplication_matrix(FieldElement const& a, FieldSpec const& spec) {
    check_dims(a, spec);
    std::size_t n = spec.degree();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    FieldElement cur = a;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) m[i][j] = cur.coords[i];
        if (j + 1 < n) cur = fe_mul(cur, spec.gen(), spec);
    }
    return m;
}

namespace {

Rat rational_det(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    det.canonicalize();
    return det;
}

}  // namespace

Rat fe_norm(FieldElement const& a, FieldSpec const& spec) {
    return rational_det(multiplication_matrix(a, spec));
}

Rat fe_trace(FieldElement const& a, FieldSpec const& spec) {
    auto m = multiplication_matrix(a, spec);
    Rat t(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    t.canonicalize();
    return t;
}

FieldElement fe_inverse(FieldElement const& a, FieldSpec const& spec) {
    check_dims(a, spec);
    if (a.is_zero()) throw domain_error("fe_inverse: zero element");
    std::size_t n = spec.degree();
    auto m = multiplication_matrix(a, spec);
    // solve m * x = e_0 by Gauss-Jordan
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw internal_error("fe_inverse: singular multiplication matrix");
        std::swap(aug[p], aug[c]);
        Rat inv = 1 / aug[c][c];
        for (auto& v : aug[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            Rat f = aug[r][c];
            for (std::size_t j = c; j <= n; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return FieldElement(std::move(x));
}

FieldElement fe_div(FieldElement const& a, FieldElement const& b, FieldSpec const& spec) {
    return fe_mul(a, fe_inverse(b, spec), spec);
}

FieldElement find_torsion_generator(FieldSpec const& spec) {
    long t = spec.torsion_order().get_si();
    FieldElement minus_one = spec.from_int(-1);
    if (t == 2) return minus_one;
    // bounded search over small integral-basis combinations
    std::size_t n = spec.degree();
    auto const& basis = spec.maximal_basis();
    std::vector<long> c(n, -2);
    for (;;) {
        FieldElement u = spec.zero();
        for (std::size_t i = 0; i < n; ++i)
            u = fe_add(u, fe_scale(Rat(c[i]), basis[i]));
        if (!u.is_zero()) {
            Rat nm = fe_norm(u, spec);
            if (nm == 1 || nm == -1) {
                FieldElement p = u;
                long order = 1;
                while (order <= t && !(p == spec.one())) {
                    p = fe_mul(p, u, spec);
                    ++order;
                }
                if (order == t) return u;
            }
        }
        std::size_t i = 0;
        while (i < n && c[i] == 2) c[i++] = -2;
        if (i == n) break;
        ++c[i];
    }
    throw input_error("no torsion unit of the stated order found in the maximal order");
}

FieldSpec FieldSpec::make(std::vector<Int> min_poly,
                          std::vector<std::vector<Rat>> maximal_basis,
                          Int class_number,
                          std::vector<Int> class_group,
                          std::vector<std::vector<Rat>> fundamental_units,
                          Int torsion_order,
                          std::string label) {
    FieldSpec s;
    if (min_poly.size() < 3) throw input_error("min_poly: degree must be at least 2");
    if (min_poly.size() > 5) throw unsupported_error("min_poly: degree capped at 4");
    if (min_poly.back() != 1) throw input_error("min_poly: must be monic");
    s.n_ = min_poly.size() - 1;
    s.min_poly_ = std::move(min_poly);

    if (has_integer_root(s.min_poly_))
        throw input_error("min_poly: reducible (rational root)");
    if (s.n_ == 4 && quartic_splits_into_quadratics(s.min_poly_))
        throw input_error("min_poly: reducible (quadratic factors)");

    // theta^n, ..., theta^(2n-2) over the power basis
    std::size_t n = s.n_;
    {
        ZRow first(n);
        for (std::size_t j = 0; j < n; ++j) first[j] = -s.min_poly_[j];
        s.reduction_rows_.push_back(first);
        for (std::size_t k = 1; k + 1 < n; ++k) {
            ZRow const& prev = s.reduction_rows_.back();
            ZRow next(n, 0);
            for (std::size_t j = 0; j + 1 < n; ++j) next[j + 1] = prev[j];
            if (prev[n - 1] != 0)
                for (std::size_t j = 0; j < n; ++j) next[j] += prev[n - 1] * first[j];
            s.reduction_rows_.push_back(std::move(next));
        }
    }

    int r1 = count_real_roots(s.min_poly_);
    s.r1_ = r1;
    s.r2_ = static_cast<int>(n - r1) / 2;

    if (maximal_basis.size() != n) throw input_error("maximal_basis: need n rows");
    for (auto& row : maximal_basis) {
        if (row.size() != n) throw input_error("maximal_basis: ragged row");
        s.maximal_basis_.push_back(FieldElement(std::move(row)));
    }

    s.caches_ = new Caches{};
    s.caches_->maximal = ZLattice::from_generators(s.maximal_basis_);
    {
        ZMatrix id = identity_matrix(n);
        s.caches_->power = ZLattice::from_rows(std::move(id), Int(1));
    }

    auto const& maximal = *s.caches_->maximal;
    if (!lat_contains(maximal, s.one()))
        throw input_error("maximal_basis: lattice does not contain 1");
    if (!lat_subset(*s.caches_->power, maximal))
        throw input_error("maximal_basis: lattice does not contain Z[theta]");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!lat_contains(maximal, fe_mul(s.maximal_basis_[i], s.maximal_basis_[j], s)))
                throw input_error("maximal_basis: not closed under multiplication");
    s.caches_->power_index = lat_index(maximal, *s.caches_->power);

    {
        std::vector<std::vector<Rat>> tr(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                tr[i][j] = fe_trace(fe_mul(s.maximal_basis_[i], s.maximal_basis_[j], s), s);
        Rat d = rational_det(tr);
        if (d.get_den() != 1) throw input_error("maximal_basis: non-integral discriminant");
        s.caches_->discriminant = d.get_num();
    }

    if (class_number < 1) throw input_error("class_number must be positive");
    s.class_number_ = std::move(class_number);
    {
        Int prod = 1;
        for (std::size_t i = 0; i < class_group.size(); ++i) {
            if (class_group[i] < 2) throw input_error("class_group: invariant factors must be >= 2");
            if (i + 1 < class_group.size() && class_group[i + 1] % class_group[i] != 0)
                throw input_error("class_group: invariant factors must divide in turn");
            prod *= class_group[i];
        }
        if (prod != s.class_number_)
            throw input_error("class_group does not multiply to class_number");
    }
    s.class_group_ = std::move(class_group);

    std::size_t expected_rank = static_cast<std::size_t>(r1 + s.r2_ - 1);
    if (fundamental_units.size() != expected_rank)
        throw input_error("fundamental_units: expected rank r1+r2-1 = " +
                          std::to_string(expected_rank));
    for (auto& row : fundamental_units) {
        if (row.size() != n) throw input_error("fundamental_units: ragged row");
        FieldElement u{std::move(row)};
        Rat nm = fe_norm(u, s);
        if (nm != 1 && nm != -1) throw input_error("fundamental unit has |norm| != 1");
        if (!lat_contains(maximal, u))
            throw input_error("fundamental unit outside the maximal order");
        s.fundamental_units_.push_back(std::move(u));
    }

    if (torsion_order < 2 || torsion_order % 2 != 0)
        throw input_error("torsion_order must be even and at least 2");
    if (r1 > 0 && torsion_order != 2)
        throw input_error("torsion_order must be 2 for fields with a real embedding");
    s.torsion_order_ = std::move(torsion_order);
    s.label_ = std::move(label);
    s.torsion_generator_ = find_torsion_generator(s);
    return s;
}

FieldElement parse_element(std::string const& text, FieldSpec const& spec, char var) {
    std::size_t n = spec.degree();
    std::vector<Rat> coords(n, Rat(0));
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw input_error("empty element expression");

    std::size_t pos = 0;
    while (pos < t.size()) {
        int sign = 1;
        while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
            if (t[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= t.size()) throw input_error("dangling sign in element expression");
        std::string num;
        while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
            num += t[pos++];
        Rat coeff = num.empty() ? Rat(1) : parse_rational(num);
        if (sign < 0) coeff = -coeff;
        std::size_t power = 0;
        if (pos < t.size() && t[pos] == '*') ++pos;
        if (pos < t.size() && t[pos] == var) {
            ++pos;
            power = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                std::string exp;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                    exp += t[pos++];
                if (exp.empty()) throw input_error("missing exponent in element expression");
                power = std::stoul(exp);
            }
        } else if (num.empty()) {
            throw input_error("bad term in element expression: " + text);
        }
        if (power >= n)
            throw input_error("exponent " + std::to_string(power) + " exceeds field degree");
        coords[power] += coeff;
    }
    return FieldElement(std::move(coords));
}

std::string element_str(FieldElement const& a, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        Rat const& q = a.coords[i];
        if (q == 0) continue;
        if (!first) os << (q > 0 ? "+" : "-");
        else if (q < 0) os << "-";
        Rat absq = q > 0 ? q : Rat(-q);
        bool unit_coeff = (absq == 1);
        if (i == 0 || !unit_coeff) os << rational_str(absq);
        if (i >= 1) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace orderlab
