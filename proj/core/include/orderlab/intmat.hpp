#ifndef ORDERLAB_INTMAT_HPP_
#define ORDERLAB_INTMAT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "orderlab/numeric.hpp"

namespace orderlab {

using ZRow = std::vector<Int>;
using ZMatrix = std::vector<ZRow>;

ZMatrix identity_matrix(std::size_t n);
ZMatrix mat_mul(ZMatrix const& a, ZMatrix const& b);

/* Lower-triangular row Hermite form of the lattice spanned by the rows:
 * pivots positive on the diagonal, entries below each pivot reduced into
 * [0, pivot). Throws error("not full rank") when the rows do not span
 * rank n over Q. */
ZMatrix hnf_lower(ZMatrix gens, std::size_t n);

struct HnfTransform {
    ZMatrix hnf;      // n x n lower-triangular Hermite form
    ZMatrix kernel;   // (m - n) x m integer kernel rows k with k * gens = 0
    ZMatrix pivot_u;  // n x m rows u with u * gens = corresponding hnf row
};

/* Hermite form with the unimodular bookkeeping split into the pivot
 * combinations and the kernel of the row span. */
HnfTransform hnf_lower_transform(ZMatrix const& gens, std::size_t n);

/* det of a lower-triangular square matrix (product of the diagonal). */
Int det_lower_triangular(ZMatrix const& h);

/* Solves x * h = y for a lower-triangular invertible h over Q.
 * Returns the exact rational solution. */
std::vector<Rat> solve_left_lower_triangular(ZMatrix const& h, std::vector<Rat> const& y);

struct SmithDecomposition {
    std::vector<Int> diag;  // d_1 | d_2 | ... | d_n, nonnegative
    ZMatrix v;              // column transform: u * a * v = diag(d)
    ZMatrix v_inv;
};

/* Smith normal form of a square integer matrix. Only the column
 * transform (and its inverse) are tracked; the row transform is not
 * needed by the quotient machinery. */
SmithDecomposition smith_normal_form(ZMatrix a);

}  // namespace orderlab

#endif
