#include "orderlab/corpus.hpp"

#include <set>

namespace orderlab {

std::vector<CorpusOrder> generate_corpus(FieldSpec const& spec, long min_seed, long max_seed) {
    std::vector<CorpusOrder> out;
    std::set<std::string> seen;
    auto push = [&](std::string name, OrderRing order) {
        if (order.is_maximal()) return;
        if (!seen.insert(order.lattice().dump()).second) return;
        out.push_back({std::move(name), std::move(order)});
    };
    for (long f = min_seed; f <= max_seed; ++f) {
        push("Z+" + std::to_string(f) + "*O", z_plus_m(Int(f), spec));
        push("Z[" + std::to_string(f) + "*theta]", z_adjoin_m_theta(Int(f), spec));
    }
    return out;
}

}  // namespace orderlab
