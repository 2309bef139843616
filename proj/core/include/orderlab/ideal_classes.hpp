#ifndef ORDERLAB_IDEAL_CLASSES_HPP_
#define ORDERLAB_IDEAL_CLASSES_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/orders.hpp"

namespace orderlab {

struct GeneratorSearchConfig {
    /* escalation ladder of coefficient heights over the ideal basis */
    std::vector<long> heights{6, 12, 25, 50};
    /* unit twists g -> g * eps^t applied to widen the search window in
     * fields of unit rank 1 */
    long twist_range = 8;
};

/* Exact principality decisions backed by the ingested class data.
 *
 * - Generators are found by bounded coefficient search over the ideal
 *   basis, widened by unit twists; for imaginary quadratic fields the
 *   positive-definite norm form gives a complete coordinate bound, so a
 *   failed search certifies non-principality outright.
 * - For fields with class number 2, non-principality is certified by a
 *   parity character on prime classes: the primes of norm up to the
 *   Minkowski bound generate the class group, their mutual relations are
 *   harvested from factored small elements, and a nontrivial component
 *   must carry the nontrivial class (otherwise the ingested h = 2 would
 *   be contradicted). Primes of larger norm reduce to the Minkowski set
 *   through factored small members.
 * - Anything else is answered honestly with "principality inconclusive".
 *
 * All searches are deterministic; results are cached per lattice. */
class ClassEngine {
  public:
    explicit ClassEngine(FieldSpec const& spec, GeneratorSearchConfig cfg = {});

    struct Principality {
        bool principal = false;
        std::optional<FieldElement> generator;  // set when principal
    };

    Principality principality(OIdeal const& d);
    Principality principality(ZLattice const& ideal_lattice);

    /* 0 = principal class, 1 = the nontrivial class (class number 2). */
    int class_character(OIdeal const& d);

    FieldSpec const& spec() const { return spec_; }

    /* Exact floor of the Minkowski constant (n!/n^n)(4/pi)^{r2} sqrt|d|,
     * rounded up to stay a safe covering bound. */
    static Int minkowski_bound(FieldSpec const& spec);

    std::vector<std::pair<PrimeIdeal, int>> const& factor_cached(ZLattice const& lat);

  private:
    struct PrimeClassInfo {
        PrimeIdeal prime;
        int character = -1;  // -1 unknown
        std::optional<FieldElement> generator;
    };

    FieldSpec const& spec_;
    GeneratorSearchConfig cfg_;
    bool char_ready_ = false;
    bool char_available_ = false;  // h <= 2 machinery usable
    std::vector<PrimeClassInfo> minkowski_primes_;
    std::map<std::string, Principality> cache_;
    std::map<std::string, int> prime_char_cache_;
    std::map<std::string, std::vector<std::pair<PrimeIdeal, int>>> factor_cache_;

    void prepare_characters();
    int prime_character(PrimeIdeal const& p, int depth);
    std::optional<FieldElement> search_generator(ZLattice const& lat, Int const& target_norm);
    std::optional<FieldElement> search_generator_cfg(ZLattice const& lat, Int const& target_norm,
                                                     GeneratorSearchConfig const& cfg);
    std::optional<FieldElement> box_scan(ZLattice const& lat, Int const& target_norm, long height);
};

/* All elements sum(c_i b_i) of the lattice with |c_i| <= height, zero
 * excluded, in deterministic lexicographic order. */
std::vector<FieldElement> lattice_box(ZLattice const& lat, long height);

}  // namespace orderlab

#endif
