#pragma once

#include <stdexcept>
#include <string>

namespace tribell {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: non-square determinant input, incompatible mat_mul sizes,
// coefficient/initial length disagreement.
struct dimension_error : error {
    using error::error;
};

// Value-level preconditions: division by zero denominators, recip of a series
// with zero constant term, log away from 1, backward extension with c_l = 0,
// out-of-range orders.
struct domain_error : error {
    using error::error;
};

// Malformed textual input: rational literals, config files, range syntax.
struct parse_error : error {
    using error::error;
};

} // namespace tribell
