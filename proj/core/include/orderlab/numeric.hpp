#ifndef ORDERLAB_NUMERIC_HPP_
#define ORDERLAB_NUMERIC_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orderlab/errors.hpp"

namespace orderlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(Int const& a, Int const& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(Int const& a, Int const& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/* Floor division quotient (sign convention matters for HNF reduction). */
inline Int fdiv_q(Int const& a, Int const& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/* Truncated-toward-zero quotient. */
inline Int tdiv_q(Int const& a, Int const& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/* Exact division; throws internal_error if b does not divide a. */
inline Int divexact(Int const& a, Int const& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw internal_error("divexact: " + b.get_str() + " does not divide " + a.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int isqrt(Int const& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_square(Int const& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int pow_ui(Int const& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/* Trial-division factorization, smallest primes first.
 * Guarded: refuses composites with a factor beyond the bound. */
std::vector<std::pair<Int, int>> factor_integer(Int n, Int const& trial_bound = Int(1000000));

bool is_squarefree(Int const& n);

/* Parses "p" or "p/q" with optional sign; canonicalizes. */
Rat parse_rational(std::string const& s);

/* Exact decimal string, "p" or "p/q". */
std::string rational_str(Rat const& q);

}  // namespace orderlab

#endif
