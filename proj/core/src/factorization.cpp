#include "orderlab/factorization.hpp"

#include <algorithm>

#include "orderlab/structure.hpp"

namespace orderlab {

namespace {

struct DavenportSearch {
    std::size_t order;
    std::vector<std::vector<int>> add;  // addition table over element indices
    long best = 1;
    long nodes = 0;
    long guard;

    /* cnt[s] = number of nonempty subsets summing to s, capped at 2: a
     * branch dies as soon as any proper subset reaches zero, and a
     * minimal zero-sum sequence is recognized by cnt[0] == 1 with total
     * zero (the full set is then the only zero subset). */
    void dfs(std::vector<int> const& cnt, int total, int min_elem, long len) {
        if (++nodes > guard) throw guard_error("davenport: search node budget exceeded");
        for (int g = min_elem; g < static_cast<int>(order); ++g) {
            std::vector<int> next(cnt);
            for (std::size_t s = 0; s < order; ++s) {
                if (cnt[s] == 0) continue;
                std::size_t t = static_cast<std::size_t>(add[s][static_cast<std::size_t>(g)]);
                next[t] = std::min(2, next[t] + cnt[s]);
            }
            next[static_cast<std::size_t>(g)] =
                std::min(2, next[static_cast<std::size_t>(g)] + 1);
            int total_next = add[static_cast<std::size_t>(total)][static_cast<std::size_t>(g)];
            if (next[0] == 0) {
                dfs(next, total_next, g, len + 1);
            } else if (next[0] == 1 && total_next == 0) {
                best = std::max(best, len + 1);
            }
        }
    }
};

}  // namespace

Int davenport(AbelianGroup const& g, long node_guard) {
    for (std::size_t i = 0; i < g.cyclic_orders.size(); ++i) {
        if (g.cyclic_orders[i] < 1) throw input_error("davenport: bad invariant factor");
        if (i + 1 < g.cyclic_orders.size() &&
            g.cyclic_orders[i + 1] % g.cyclic_orders[i] != 0)
            throw input_error("davenport: invariant factors must divide in turn");
    }
    Int n = g.order();
    if (n > 64) throw guard_error("davenport: group order exceeds the guard 64");
    std::size_t order = static_cast<std::size_t>(n.get_si());
    if (order == 1) return 1;

    std::vector<long> radix;
    for (auto const& d : g.cyclic_orders)
        if (d > 1) radix.push_back(d.get_si());

    auto decode = [&](std::size_t idx) {
        std::vector<long> c(radix.size());
        for (std::size_t i = radix.size(); i-- > 0;) {
            c[i] = static_cast<long>(idx) % radix[i];
            idx /= static_cast<std::size_t>(radix[i]);
        }
        return c;
    };
    auto encode = [&](std::vector<long> const& c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < radix.size(); ++i)
            idx = idx * static_cast<std::size_t>(radix[i]) + static_cast<std::size_t>(c[i]);
        return idx;
    };

    DavenportSearch search;
    search.order = order;
    search.guard = node_guard;
    search.add.assign(order, std::vector<int>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            auto ca = decode(a), cb = decode(b);
            for (std::size_t i = 0; i < radix.size(); ++i) ca[i] = (ca[i] + cb[i]) % radix[i];
            search.add[a][b] = static_cast<int>(encode(ca));
        }
    std::vector<int> cnt(order, 0);
    search.dfs(cnt, 0, 1, 0);
    return Int(search.best);
}

Rat elasticity_maximal(FieldSpec const& spec, long node_guard) {
    if (spec.class_number() == 1) return Rat(1);
    AbelianGroup cl{spec.class_group()};
    return Rat(davenport(cl, node_guard)) / 2;
}

bool FactorizationEngine::is_unit(FieldElement const& x) const {
    if (!r_.contains(x)) return false;
    Rat n = fe_norm(x, r_.spec());
    return n == 1 || n == -1;
}

std::string FactorizationEngine::associate_key(FieldElement const& alpha) const {
    return lat_scale(r_.lattice(), alpha, r_.spec()).dump();
}

std::vector<DivisorPair> FactorizationEngine::divisors(FieldElement const& alpha) {
    FieldSpec const& spec = r_.spec();
    if (alpha.is_zero()) throw domain_error("divisors: zero element");
    if (!r_.contains(alpha)) throw precondition_error("divisors: element not in the order");
    if (is_unit(alpha)) throw domain_error("unit input");

    auto const& factors = classes_.factor_cached(lat_scale(spec.maximal_lattice(), alpha, spec));
    std::size_t k = factors.size();

    std::vector<std::vector<ZLattice>> powers(k);
    for (std::size_t i = 0; i < k; ++i) {
        powers[i].push_back(spec.maximal_lattice());
        for (int e = 1; e <= factors[i].second; ++e)
            powers[i].push_back(lat_product(powers[i].back(), factors[i].first.lattice, spec));
    }

    std::vector<DivisorPair> out;
    std::vector<int> expo(k, 0);
    for (;;) {
        ZLattice d_lat = spec.maximal_lattice();
        for (std::size_t i = 0; i < k; ++i)
            if (expo[i] > 0)
                d_lat = lat_product(d_lat, powers[i][static_cast<std::size_t>(expo[i])], spec);
        auto pr = classes_.principality(d_lat);
        if (pr.principal) {
            /* the set {u : u*g in R} is a union of U(R)-cosets, so coset
             * representatives cover all R-divisors generating this ideal */
            for (std::size_t b = 0; b < reps_.reps.size(); ++b) {
                FieldElement d = fe_mul(reps_.reps[b], *pr.generator, spec);
                if (!r_.contains(d)) continue;
                FieldElement cof = fe_div(alpha, d, spec);
                if (!r_.contains(cof)) continue;
                out.push_back({d, cof, static_cast<long>(b)});
            }
        }
        std::size_t i = 0;
        while (i < k && expo[i] == factors[i].second) expo[i++] = 0;
        if (i == k) break;
        ++expo[i];
    }
    return out;
}

IrreducibilityVerdict FactorizationEngine::irreducible(FieldElement const& alpha) {
    IrreducibilityVerdict out;
    std::string key = associate_key(alpha);
    auto memo = irred_memo_.find(key);
    if (memo != irred_memo_.end() && memo->second) {
        out.irreducible = true;
        return out;
    }
    for (auto const& pair : divisors(alpha)) {
        if (is_unit(pair.divisor) || is_unit(pair.cofactor)) continue;
        out.irreducible = false;
        out.split = pair;
        irred_memo_[key] = false;
        return out;
    }
    out.irreducible = true;
    irred_memo_[key] = true;
    return out;
}

FactorizationEngine::LengthTable const& FactorizationEngine::lengths_rec(FieldElement const& alpha,
                                                                         long depth, long max_len,
                                                                         bool& truncated) {
    std::string key = associate_key(alpha);
    auto memo = length_memo_.find(key);
    if (memo != length_memo_.end()) return memo->second;
    if (depth > max_len) {
        truncated = true;
        static LengthTable const empty;
        return empty;
    }

    LengthTable out;
    bool proper_split = false;
    for (auto const& pair : divisors(alpha)) {
        if (is_unit(pair.divisor) || is_unit(pair.cofactor)) continue;
        proper_split = true;
        if (!irreducible(pair.divisor).irreducible) continue;
        auto const& sub = lengths_rec(pair.cofactor, depth + 1, max_len, truncated);
        for (auto const& [l, w] : sub) {
            if (out.count(l + 1)) continue;
            std::vector<FieldElement> chain{pair.divisor};
            chain.insert(chain.end(), w.begin(), w.end());
            out.emplace(l + 1, std::move(chain));
        }
    }
    if (!proper_split) out.emplace(1, std::vector<FieldElement>{alpha});
    return length_memo_.emplace(std::move(key), std::move(out)).first->second;
}

LengthSet FactorizationEngine::lengths(FieldElement const& alpha, long max_len) {
    LengthSet out;
    out.element = alpha;
    bool truncated = false;
    auto const& table = lengths_rec(alpha, 1, max_len, truncated);
    out.complete = !truncated;
    FieldSpec const& spec = r_.spec();
    for (auto const& [l, w] : table) {
        out.lengths.insert(l);
        /* memoized witnesses belong to the associate class; rescale the
         * first factor so the chain multiplies back to alpha exactly */
        FieldElement prod = spec.one();
        for (auto const& f : w) prod = fe_mul(prod, f, spec);
        FieldElement unit = fe_div(alpha, prod, spec);
        std::vector<FieldElement> adjusted(w);
        adjusted[0] = fe_mul(adjusted[0], unit, spec);
        out.witnesses.emplace(l, std::move(adjusted));
    }
    return out;
}

std::vector<DivisorPair> divisors_in_order(FieldElement const& alpha, OrderRing const& r,
                                           ClassEngine& eng) {
    FactorizationEngine f(r, eng);
    return f.divisors(alpha);
}

IrreducibilityVerdict is_irreducible_in(FieldElement const& alpha, OrderRing const& r,
                                        ClassEngine& eng) {
    FactorizationEngine f(r, eng);
    return f.irreducible(alpha);
}

LengthSet length_set(FieldElement const& alpha, OrderRing const& r, ClassEngine& eng,
                     long max_len) {
    FactorizationEngine f(r, eng);
    return f.lengths(alpha, max_len);
}

Rat elasticity_of(LengthSet const& ls) {
    if (ls.lengths.empty()) throw domain_error("elasticity of empty length set");
    return Rat(Int(*ls.lengths.rbegin())) / Rat(Int(*ls.lengths.begin()));
}

std::vector<FieldElement> sample_box(OrderRing const& r, long height, Int const& norm_bound) {
    FieldSpec const& spec = r.spec();
    std::vector<FieldElement> out;
    std::set<std::string> seen;
    for (auto const& x : lattice_box(r.lattice(), height)) {
        Rat n = fe_norm(x, spec);
        Int an = abs(n.get_num());
        if (an <= 1 || an > norm_bound) continue;
        std::string key = lat_scale(r.lattice(), x, spec).dump();
        if (!seen.insert(key).second) continue;
        out.push_back(x);
    }
    return out;
}

HfdEvidence hfd_evidence(OrderRing const& r, Int const& norm_bound, ClassEngine& eng,
                         long box_height) {
    FieldSpec const& spec = r.spec();
    HfdEvidence out;
    out.norm_bound = norm_bound;
    if (spec.class_number() > 2) {
        out.reason = "maximal order is not an HFD (class number above 2)";
        return out;
    }
    auto assoc = is_associated(r);
    if (!assoc.verdict) {
        out.reason = "order is not associated";
        return out;
    }
    FactorizationEngine in_r(r, eng);
    FactorizationEngine in_max(maximal_order(spec), eng);
    for (auto const& x : sample_box(r, box_height, norm_bound)) {
        ++out.elements_checked;
        if (!in_r.irreducible(x).irreducible) continue;
        if (!in_max.irreducible(x).irreducible) {
            out.reason = "an irreducible of the order splits in the maximal order";
            out.violating_irreducible = x;
            return out;
        }
    }
    out.consistent = true;
    return out;
}

}  // namespace orderlab
