#ifndef ORDERLAB_ERRORS_HPP_
#define ORDERLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace orderlab {

/* Error taxonomy. The CLI maps these onto exit codes:
 * input_error -> 3, inconclusive/unsupported/guard -> 2, everything
 * surfacing as a false verdict -> 1. internal_error means a proven
 * invariant failed and indicates a bug or inconsistent ingested data. */

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct input_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

struct unsupported_error : error {
    using error::error;
};

struct guard_error : unsupported_error {
    using unsupported_error::unsupported_error;
};

struct inconclusive_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

}  // namespace orderlab

#endif
