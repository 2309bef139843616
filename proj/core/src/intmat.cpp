#include "orderlab/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace orderlab {

ZMatrix identity_matrix(std::size_t n) {
    ZMatrix u(n, ZRow(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

ZMatrix mat_mul(ZMatrix const& a, ZMatrix const& b) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    ZMatrix c(m, ZRow(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

namespace {

int cmpabs(Int const& a, Int const& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

void sub_scaled_row(ZRow& target, ZRow const& src, Int const& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

/* Core elimination shared by the plain and transform variants. Rows of
 * `a` (and in lockstep `u`, when present) are combined until, for every
 * column c, exactly one designated pivot row has a nonzero entry there.
 * Returns pivot row index per column, or throws on rank deficiency. */
std::vector<std::size_t> eliminate(ZMatrix& a, ZMatrix* u, std::size_t n) {
    std::size_t m = a.size();
    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot(n);
    for (std::size_t ci = n; ci-- > 0;) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t r = 0; r < m; ++r) {
                if (used[r] || a[r][ci] == 0) continue;
                if (best == m || cmpabs(a[r][ci], a[best][ci]) < 0) best = r;
            }
            if (best == m) throw error("not full rank");
            bool lone = true;
            for (std::size_t r = 0; r < m && lone; ++r)
                if (r != best && !used[r] && a[r][ci] != 0) lone = false;
            if (lone) {
                if (a[best][ci] < 0) {
                    for (auto& x : a[best]) x = -x;
                    if (u)
                        for (auto& x : (*u)[best]) x = -x;
                }
                pivot[ci] = best;
                used[best] = true;
                break;
            }
            for (std::size_t r = 0; r < m; ++r) {
                if (r == best || used[r] || a[r][ci] == 0) continue;
                Int q = tdiv_q(a[r][ci], a[best][ci]);
                sub_scaled_row(a[r], a[best], q);
                if (u) sub_scaled_row((*u)[r], (*u)[best], q);
            }
        }
    }
    return pivot;
}

/* Final Hermite reduction: entries below each pivot into [0, pivot). */
void reduce_below_pivots(ZMatrix& h, ZMatrix* u, std::size_t n) {
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c-- > 0;) {
            Int q = fdiv_q(h[r][c], h[c][c]);
            sub_scaled_row(h[r], h[c], q);
            if (u) sub_scaled_row((*u)[r], (*u)[c], q);
        }
}

}  // namespace

ZMatrix hnf_lower(ZMatrix gens, std::size_t n) {
    for (auto const& row : gens)
        if (row.size() != n) throw internal_error("hnf_lower: ragged input");
    if (gens.size() < n) throw error("not full rank");
    auto pivot = eliminate(gens, nullptr, n);
    ZMatrix h(n);
    for (std::size_t c = 0; c < n; ++c) h[c] = gens[pivot[c]];
    reduce_below_pivots(h, nullptr, n);
    return h;
}

HnfTransform hnf_lower_transform(ZMatrix const& gens, std::size_t n) {
    std::size_t m = gens.size();
    ZMatrix a = gens;
    ZMatrix u = identity_matrix(m);
    auto pivot = eliminate(a, &u, n);
    HnfTransform out;
    out.hnf.resize(n);
    out.pivot_u.resize(n);
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c = 0; c < n; ++c) {
        out.hnf[c] = a[pivot[c]];
        out.pivot_u[c] = u[pivot[c]];
        is_pivot[pivot[c]] = true;
    }
    reduce_below_pivots(out.hnf, &out.pivot_u, n);
    for (std::size_t r = 0; r < m; ++r) {
        if (is_pivot[r]) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (a[r][j] != 0) throw internal_error("hnf transform: nonzero residual row");
        out.kernel.push_back(u[r]);
    }
    return out;
}

Int det_lower_triangular(ZMatrix const& h) {
    Int d = 1;
    for (std::size_t i = 0; i < h.size(); ++i) d *= h[i][i];
    return d;
}

std::vector<Rat> solve_left_lower_triangular(ZMatrix const& h, std::vector<Rat> const& y) {
    std::size_t n = h.size();
    std::vector<Rat> x(n);
    for (std::size_t c = n; c-- > 0;) {
        Rat acc = y[c];
        for (std::size_t r = c + 1; r < n; ++r) acc -= x[r] * h[r][c];
        acc /= Rat(h[c][c]);
        acc.canonicalize();
        x[c] = acc;
    }
    return x;
}

namespace {

struct SmithWork {
    ZMatrix a, v, w;  // invariant: original = (row ops applied) ... a = rows * orig * v, w = v^-1

    void col_sub(std::size_t dst, std::size_t src, Int const& q) {
        // col_dst -= q * col_src ; v tracks the same, w the inverse op
        for (auto& row : a) row[dst] -= q * row[src];
        for (auto& row : v) row[dst] -= q * row[src];
        for (std::size_t j = 0; j < w.size(); ++j) w[src][j] += q * w[dst][j];
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
        std::swap(w[i], w[j]);
    }
    void col_neg(std::size_t i) {
        for (auto& row : a) row[i] = -row[i];
        for (auto& row : v) row[i] = -row[i];
        for (auto& x : w[i]) x = -x;
    }
    void row_sub(std::size_t dst, std::size_t src, Int const& q) {
        sub_scaled_row(a[dst], a[src], q);
    }
    void row_swap(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
    void row_neg(std::size_t i) {
        for (auto& x : a[i]) x = -x;
    }
};

}  // namespace

SmithDecomposition smith_normal_form(ZMatrix a0) {
    std::size_t n = a0.size();
    SmithWork s{std::move(a0), identity_matrix(n), identity_matrix(n)};

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // move the absolutely smallest nonzero entry of the trailing block to (t,t)
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s.a[i][j] == 0) continue;
                    if (bi == n || cmpabs(s.a[i][j], s.a[bi][bj]) < 0) { bi = i; bj = j; }
                }
            if (bi == n) throw internal_error("smith_normal_form: singular matrix");
            if (bi != t) s.row_swap(bi, t);
            if (bj != t) s.col_swap(bj, t);
            if (s.a[t][t] < 0) s.row_neg(t);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (s.a[i][t] == 0) continue;
                Int q = fdiv_q(s.a[i][t], s.a[t][t]);
                s.row_sub(i, t, q);
                if (s.a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.a[t][j] == 0) continue;
                Int q = fdiv_q(s.a[t][j], s.a[t][t]);
                s.col_sub(j, t, q);
                if (s.a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (s.a[i][j] % s.a[t][t] != 0) {
                        s.row_sub(t, i, Int(-1));  // fold row i into row t, retry
                        divides = false;
                    }
            if (divides) break;
        }
    }
    SmithDecomposition out;
    out.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diag[i] = s.a[i][i];
    out.v = std::move(s.v);
    out.v_inv = std::move(s.w);
    return out;
}

}  // namespace orderlab
