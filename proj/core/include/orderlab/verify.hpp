#ifndef ORDERLAB_VERIFY_HPP_
#define ORDERLAB_VERIFY_HPP_

#include <string>
#include <vector>

#include "orderlab/fieldspec_io.hpp"

namespace orderlab {

/* One golden check: the expected value is stored with its origin
 * ("literature" for values quoted from the source examples, "derived"
 * for values computed by an independent oracle, "direct" for immediate
 * consequences of definitions). */
struct VerifyCase {
    std::string id;
    int criterion = 0;  // acceptance criterion number, 0 = supporting case
    std::string provenance;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0.0;
};

struct VerificationSuite {
    std::vector<VerifyCase> cases;

    bool all_pass() const {
        for (auto const& c : cases)
            if (!c.pass) return false;
        return !cases.empty();
    }
};

/* Runs the whole worked-example reproduction: the two quadratic
 * examples, the cubic walkthrough with its power-series certificates,
 * the Davenport suite, the class-number formula, the theorem property
 * suites over the generated corpus, and the factorization transfer
 * sweep. `only` filters case ids by substring; empty runs everything. */
VerificationSuite run_verification(std::string const& fields_dir, std::string const& only = "");

nlohmann::json json_of_suite(VerificationSuite const& suite);
std::string table_of_suite(VerificationSuite const& suite);

}  // namespace orderlab

#endif
