#ifndef ORDERLAB_TEST_HELPERS_HPP_
#define ORDERLAB_TEST_HELPERS_HPP_

#include <cstdint>

#include "orderlab/fieldspec_io.hpp"

namespace orderlab::test {

FieldSpec const& field_qsqrt2();
FieldSpec const& field_qsqrt3();   // Q(sqrt(-3)) on the basis of w = (1+sqrt(-3))/2
FieldSpec const& field_cubic();    // x^3 + 4x - 1

/* deterministic xorshift for property tests */
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long pick(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

FieldElement random_element(FieldSpec const& spec, Rng& rng, long height = 5, long den = 3);
FieldElement random_integral(FieldSpec const& spec, Rng& rng, long height = 5);

}  // namespace orderlab::test

#endif
