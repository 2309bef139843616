#include "helpers.hpp"

namespace orderlab::test {

FieldSpec const& field_qsqrt2() {
    static FieldSpec spec = load_field_spec(std::string(ORDERLAB_FIELDS_DIR) + "/Q-sqrt2.json");
    return spec;
}

FieldSpec const& field_qsqrt3() {
    static FieldSpec spec = load_field_spec(std::string(ORDERLAB_FIELDS_DIR) + "/Q-sqrt-3.json");
    return spec;
}

FieldSpec const& field_cubic() {
    static FieldSpec spec =
        load_field_spec(std::string(ORDERLAB_FIELDS_DIR) + "/cubic-x3+4x-1.json");
    return spec;
}

FieldElement random_element(FieldSpec const& spec, Rng& rng, long height, long den) {
    std::vector<Rat> c;
    for (std::size_t i = 0; i < spec.degree(); ++i) {
        Rat q(rng.pick(-height, height), rng.pick(1, den));
        q.canonicalize();
        c.push_back(q);
    }
    return FieldElement(std::move(c));
}

FieldElement random_integral(FieldSpec const& spec, Rng& rng, long height) {
    FieldElement out = spec.zero();
    for (auto const& b : spec.maximal_basis())
        out = fe_add(out, fe_scale(Rat(rng.pick(-height, height)), b));
    return out;
}

}  // namespace orderlab::test
