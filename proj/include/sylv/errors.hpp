#ifndef SYLV_ERRORS_HPP
#define SYLV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sylv {

// Root of all library errors; subclasses let callers map failure
// categories (bad indices, bad shapes, oversized requests, ...) to
// exit codes or recovery paths.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An index fell outside the matrix / universe it addresses.
struct BoundsError : Error {
    using Error::Error;
};

// Dimensions are incompatible (non-square, unequal list lengths, ...).
struct ShapeError : Error {
    using Error::Error;
};

// A parameter is outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// The request exceeds a hard size cap (reference-determinant order,
// permutation length, power bit budget).
struct CapacityError : Error {
    using Error::Error;
};

// An identity configuration (index-list family) violates its
// cardinality constraints.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed textual input (matrix files, index lists, scalars).
struct ParseError : Error {
    using Error::Error;
};

// A required leading principal minor is singular. `order` names the
// first singular one.
struct PivotError : Error {
    int order;
    PivotError(const std::string& msg, int order_) : Error(msg), order(order_) {}
};

// An internal cross-check failed; indicates an implementation bug,
// never a data problem.
struct CertifyError : Error {
    using Error::Error;
};

}  // namespace sylv

#endif
