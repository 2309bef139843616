#include "orderlab/numeric.hpp"

#include <algorithm>

namespace orderlab {

std::vector<std::pair<Int, int>> factor_integer(Int n, Int const& trial_bound) {
    if (n < 0) n = -n;
    if (n == 0) throw domain_error("factor_integer: zero");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](Int const& p) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n = divexact(n, p);
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int p = 5; p * p <= n && p <= trial_bound; ) {
        strip(p);
        p += 2;
        if (p * p > n || p > trial_bound) break;
        strip(p);
        p += 4;
    }
    if (n > 1) {
        if (n > trial_bound * trial_bound && mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw guard_error("factor_integer: cofactor " + n.get_str() +
                              " exceeds the trial bound and is composite");
        out.emplace_back(n, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_squarefree(Int const& n) {
    auto f = factor_integer(n);
    for (auto const& [p, e] : f)
        if (e > 1) return false;
    return true;
}

Rat parse_rational(std::string const& s) {
    if (s.empty()) throw input_error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw input_error("bad rational literal: " + s);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw input_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(Rat const& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace orderlab
