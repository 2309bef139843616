#ifndef ORDERLAB_CORPUS_HPP_
#define ORDERLAB_CORPUS_HPP_

#include <string>
#include <vector>

#include "orderlab/orders.hpp"

namespace orderlab {

struct CorpusOrder {
    std::string name;
    OrderRing order;
};

/* Test orders Z + f*O and Z[f*theta] for conductor seeds f in
 * [min_seed, max_seed], deduplicated by lattice (the two families
 * coincide in quadratic fields with a power integral basis). */
std::vector<CorpusOrder> generate_corpus(FieldSpec const& spec, long min_seed = 2,
                                         long max_seed = 12);

}  // namespace orderlab

#endif
