#pragma once

#include <stdexcept>
#include <string>

namespace regemb {

// Error family for the whole library.  Everything thrown here derives from
// regemb::error so callers can catch the library as one family; the CLI maps
// any of these to exit code 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A modulus that is required to be prime (or an odd prime) is not.
struct invalid_modulus : error {
    using error::error;
};

// A documented precondition on values already inside the domain was violated
// (mismatched presentations, parts not summing to n, unit passed to height).
struct contract_violation : error {
    using error::error;
};

// Inversion requested for an element with no inverse.
struct non_unit_error : error {
    using error::error;
};

// Input outside the domain of a theorem-backed calculator (e.g. d not a
// power of p where the statement requires it).
struct domain_error : error {
    using error::error;
};

// A range restriction under which a construction is defined fails
// (e.g. d > 2p-1 for the plain Newton recursion).
struct precondition_error : error {
    using error::error;
};

// Rejection sampling failed to produce a valid sample within its budget.
struct sampling_error : error {
    using error::error;
};

}  // namespace regemb
